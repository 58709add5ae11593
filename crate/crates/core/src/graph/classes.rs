use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, VertexSet};

/// Graph-class membership with checkable certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    /// `(A, B)` with every edge crossing; `A` holds the smallest vertex of
    /// every component.
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub triangle_free: bool,
    /// A perfect elimination ordering when the graph is chordal.
    pub elimination_ordering: Option<Vec<usize>>,
    pub split: bool,
}

impl ClassReport {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn is_chordal(&self) -> bool {
        self.elimination_ordering.is_some()
    }
}

pub fn recognize(g: &Graph) -> ClassReport {
    let bipartition = two_coloring(g);
    if let Some((a, b)) = &bipartition {
        assert!(is_bipartition(g, a, b), "2-colouring produced a bad bipartition");
    }
    let peo = maximum_cardinality_search(g);
    let elimination_ordering = is_perfect_elimination_ordering(g, &peo).then_some(peo);
    ClassReport {
        bipartition,
        triangle_free: is_triangle_free(g),
        elimination_ordering,
        split: is_split(g),
    }
}

fn two_coloring(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let b = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Some((a, b))
}

/// `(A, B)` partitions the vertex set and every edge has one endpoint on each side.
pub fn is_bipartition(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.len() + b.len() == g.vertex_count()
        && a.union(b).len() == g.vertex_count()
        && g.check_set(a).is_ok()
        && g.check_set(b).is_ok()
        && g.edges().all(|(u, v)| a.contains(u) != a.contains(v))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| {
        let (small, other) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
        g.neighbors(small).iter().all(|&w| !g.has_edge(w, other))
    })
}

/// Maximum-cardinality search; the reverse visit order is a perfect
/// elimination ordering iff the graph is chordal.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// For each vertex, its neighbours appearing later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Hammer–Simeone degree-sequence criterion.
fn is_split(g: &Graph) -> bool {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let m = deg
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}
