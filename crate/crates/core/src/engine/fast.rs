//! Polynomial shortcuts.
//!
//! * TS with `d >= 1` on a triangle-free graph: every slide between d-regular
//!   sets closes a triangle, so only the trivial sequence exists.
//! * Connected variant with `d = 0`: the set is one vertex.
//! * Connected variant with `d = 1`: the set is one edge. A jump keeps one
//!   endpoint and moves the other to a neighbour of the kept endpoint; a
//!   slide additionally needs the two moved endpoints adjacent, i.e. the old
//!   and new edge span a triangle.

use std::collections::{HashMap, VecDeque};

use super::{Decision, Instance, ReconfigSequence, Rule};
use crate::graph::{is_triangle_free, Graph, VertexSet};

/// A decision when a shortcut applies, `None` otherwise.
pub fn fast_path(inst: &Instance) -> Option<Decision> {
    let g = inst.graph();
    let (s, t) = (inst.source(), inst.target());
    if inst.rule() == Rule::TS && inst.d() >= 1 && is_triangle_free(g) {
        return Some(if s == t {
            Decision::found(ReconfigSequence::new(vec![s.clone()]), 1)
        } else {
            Decision::unreachable(1)
        });
    }
    if !inst.connected_variant() {
        return None;
    }
    match inst.d() {
        0 => Some(single_vertex(g, inst.rule(), s.min()?, t.min()?)),
        1 => Some(single_edge(g, inst.rule(), s, t)),
        _ => None,
    }
}

fn single_vertex(g: &Graph, rule: Rule, s: usize, t: usize) -> Decision {
    if s == t {
        return Decision::found(ReconfigSequence::new(vec![VertexSet::singleton(s)]), 1);
    }
    match rule {
        Rule::TJ => Decision::found(
            ReconfigSequence::new(vec![VertexSet::singleton(s), VertexSet::singleton(t)]),
            2,
        ),
        Rule::TS => {
            let (path, explored) = bfs_path(s, t, |v| g.neighbors(v).to_vec());
            match path {
                Some(p) => Decision::found(
                    p.into_iter().map(VertexSet::singleton).collect::<Vec<_>>().into(),
                    explored,
                ),
                None => Decision::unreachable(explored),
            }
        }
    }
}

fn single_edge(g: &Graph, rule: Rule, s: &VertexSet, t: &VertexSet) -> Decision {
    let edge = |set: &VertexSet| -> (usize, usize) {
        let m = set.as_slice();
        (m[0], m[1])
    };
    let step = |(a, b): (usize, usize)| -> Vec<(usize, usize)> {
        let mut next = Vec::new();
        for (keep, drop) in [(a, b), (b, a)] {
            for &w in g.neighbors(keep) {
                if w == drop || (rule == Rule::TS && !g.has_edge(drop, w)) {
                    continue;
                }
                next.push((keep.min(w), keep.max(w)));
            }
        }
        next
    };
    let (src, dst) = (edge(s), edge(t));
    if rule == Rule::TJ {
        // Every edge of a connected component reaches every other through
        // shared endpoints.
        let comp = g.components();
        if comp[src.0] != comp[dst.0] {
            return Decision::unreachable(0);
        }
    }
    let (path, explored) = bfs_path(src, dst, step);
    match path {
        Some(p) => Decision::found(
            p.into_iter()
                .map(|(a, b)| VertexSet::from([a, b]))
                .collect::<Vec<_>>()
                .into(),
            explored,
        ),
        None => Decision::unreachable(explored),
    }
}

fn bfs_path<S, F>(start: S, goal: S, mut step: F) -> (Option<Vec<S>>, usize)
where
    S: Copy + Eq + std::hash::Hash,
    F: FnMut(S) -> Vec<S>,
{
    let mut parent: HashMap<S, S> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            let mut path = vec![goal];
            while *path.last().unwrap() != start {
                path.push(parent[path.last().unwrap()]);
            }
            path.reverse();
            return (Some(path), parent.len());
        }
        for w in step(u) {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(u);
                queue.push_back(w);
            }
        }
    }
    (None, parent.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{oracle_reachable, validate_sequence};

    fn check(inst: &Instance) -> Decision {
        let dec = fast_path(inst).expect("shortcut applies");
        assert_eq!(dec.reachable, oracle_reachable(inst).unwrap().reachable);
        if let Some(w) = &dec.witness {
            assert!(validate_sequence(inst, w).is_ok());
        }
        dec
    }

    #[test]
    fn triangle_free_slides() {
        let inst = Instance::new(Graph::cycle(6), 1, Rule::TS, [0, 1].into(), [3, 4].into(), false).unwrap();
        assert!(!check(&inst).reachable);
    }

    #[test]
    fn single_token_slides_along_path() {
        let inst = Instance::new(Graph::path(3), 0, Rule::TS, [0].into(), [2].into(), true).unwrap();
        let dec = check(&inst);
        assert_eq!(dec.witness.unwrap().moves(), 2);
    }

    #[test]
    fn single_edge_jumps_along_path() {
        let inst = Instance::new(Graph::path(4), 1, Rule::TJ, [0, 1].into(), [2, 3].into(), true).unwrap();
        assert!(check(&inst).reachable);
    }

    #[test]
    fn single_edge_slides_need_triangles() {
        // Two triangles sharing vertex 2 ("bowtie"): edge {0,1} can slide within
        // its triangle but cannot cross to the other one.
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let inst = Instance::new(g.clone(), 1, Rule::TS, [0, 1].into(), [3, 4].into(), true).unwrap();
        assert!(!check(&inst).reachable);
        let inst = Instance::new(g.clone(), 1, Rule::TS, [0, 1].into(), [1, 2].into(), true).unwrap();
        assert!(check(&inst).reachable);
        let inst = Instance::new(g, 1, Rule::TJ, [0, 1].into(), [3, 4].into(), true).unwrap();
        assert!(check(&inst).reachable);
    }

    #[test]
    fn disconnected_components() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2));
        let inst = Instance::new(g.clone(), 1, Rule::TJ, [0, 1].into(), [2, 3].into(), true).unwrap();
        assert!(!check(&inst).reachable);
        let inst = Instance::new(g.clone(), 0, Rule::TS, [0].into(), [3].into(), true).unwrap();
        assert!(!check(&inst).reachable);
        let inst = Instance::new(g, 0, Rule::TJ, [0].into(), [3].into(), true).unwrap();
        assert!(check(&inst).reachable);
    }

    #[test]
    fn no_shortcut_for_general_instances() {
        let inst = crate::fixtures::eight_vertex_instance(Rule::TJ);
        assert!(fast_path(&inst).is_none());
    }
}
