use super::Graph;
use crate::error::{Error, Result};

/// Largest graph `are_isomorphic` accepts by default.
pub const DEFAULT_ISO_LIMIT: usize = 64;

/// Exhaustive isomorphism test with degree pruning, capped at
/// [`DEFAULT_ISO_LIMIT`] vertices.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_bounded(g1, g2, DEFAULT_ISO_LIMIT)
}

pub fn are_isomorphic_bounded(g1: &Graph, g2: &Graph, max_vertices: usize) -> Result<bool> {
    let n = g1.vertex_count();
    if n > max_vertices || g2.vertex_count() > max_vertices {
        return Err(Error::ResourceLimit(format!(
            "isomorphism test limited to {max_vertices} vertices"
        )));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut deg1: Vec<usize> = g1.vertices().map(|v| g1.degree(v)).collect();
    let mut deg2: Vec<usize> = g2.vertices().map(|v| g2.degree(v)).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return Ok(false);
    }

    // Map g1's vertices in BFS order (highest degree first within the
    // frontier) so each new vertex is constrained by already-mapped neighbours.
    let order = search_order(g1);
    let mut state = Matcher {
        g1,
        g2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(state.extend(0))
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // Seed each component with its highest-degree vertex.
        let seed = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[seed] = true;
        let mut head = order.len();
        order.push(seed);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| std::cmp::Reverse(g.degree(w)));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    order
}

struct Matcher<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for cand in self.g2.vertices() {
            if self.used[cand] || self.g2.degree(cand) != self.g1.degree(u) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g1.has_edge(u, w) == self.g2.has_edge(cand, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}
