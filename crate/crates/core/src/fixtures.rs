//! Worked examples used by tests, the `selftest` command and the docs.
//!
//! The eight-vertex example is stated with labels `1..=8`; label `k` is
//! vertex `k - 1` here.

use crate::engine::{Instance, ReconfigSequence, Rule};
use crate::graph::{Graph, VertexSet};

const EIGHT_VERTEX_EDGES: [(usize, usize); 12] = [
    (1, 2),
    (1, 4),
    (1, 6),
    (2, 3),
    (2, 4),
    (3, 5),
    (3, 8),
    (4, 5),
    (5, 6),
    (5, 7),
    (6, 7),
    (7, 8),
];

const EIGHT_VERTEX_SETS: [[usize; 4]; 6] = [
    [1, 3, 6, 8],
    [1, 3, 4, 8],
    [1, 4, 7, 8],
    [2, 4, 7, 8],
    [2, 4, 6, 7],
    [2, 3, 6, 7],
];

/// Converts 1-based labels of the eight-vertex example to vertex ids.
pub fn eight_vertex_labels(labels: &[usize]) -> VertexSet {
    labels.iter().map(|&l| l - 1).collect()
}

/// The eight-vertex, twelve-edge example graph.
pub fn eight_vertex_graph() -> Graph {
    let edges: Vec<_> = EIGHT_VERTEX_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::new(8, &edges).expect("fixture edges are valid")
}

/// The six 1-regular sets `U_0..U_5` of the example, in sequence order.
pub fn eight_vertex_sets() -> Vec<VertexSet> {
    EIGHT_VERTEX_SETS.iter().map(|s| eight_vertex_labels(s)).collect()
}

/// `U_0 -> U_5` with `d = 1` under `rule`.
pub fn eight_vertex_instance(rule: Rule) -> Instance {
    let sets = eight_vertex_sets();
    Instance::new(eight_vertex_graph(), 1, rule, sets[0].clone(), sets[5].clone(), false)
        .expect("fixture instance is valid")
}

/// The five-jump sequence `U_0, ..., U_5`.
pub fn eight_vertex_sequence() -> ReconfigSequence {
    ReconfigSequence::new(eight_vertex_sets())
}

/// A layered shortest-path instance: `x`, six layers of four vertices, `y`.
///
/// Vertex `x` is 0, `y` is 25, and the `k`-th vertex (1-based) of the `l`-th
/// inner layer is `4(l - 1) + k`. The two outer ends follow the drawing of
/// the shortest-path reduction; the elided middle is a complete join between
/// the third and fourth inner layers.
pub struct LayeredExample {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    /// Vertex sets of two shortest `x`–`y` paths.
    pub path: VertexSet,
    pub other_path: VertexSet,
}

/// `(layer, k)` to `(layer, k)` between consecutive inner layers.
type LayerEdge = ((usize, usize), (usize, usize));

pub fn layered_example() -> LayeredExample {
    let id = |layer: usize, k: usize| 4 * (layer - 1) + k;
    let (x, y) = (0, 25);
    // (layer, k) pairs between consecutive inner layers, as drawn.
    let inner: &[LayerEdge] = &[
        ((1, 1), (2, 1)),
        ((1, 1), (2, 2)),
        ((1, 2), (2, 2)),
        ((1, 3), (2, 1)),
        ((1, 3), (2, 3)),
        ((1, 4), (2, 3)),
        ((1, 4), (2, 4)),
        ((2, 1), (3, 1)),
        ((2, 1), (3, 2)),
        ((2, 2), (3, 2)),
        ((2, 2), (3, 3)),
        ((2, 2), (3, 4)),
        ((2, 3), (3, 1)),
        ((2, 4), (3, 2)),
        ((2, 4), (3, 3)),
        ((3, 1), (4, 1)),
        ((3, 2), (4, 1)),
        ((3, 2), (4, 3)),
        ((3, 2), (4, 4)),
        ((3, 3), (4, 1)),
        ((3, 3), (4, 3)),
        ((3, 4), (4, 2)),
        ((3, 4), (4, 3)),
        ((5, 1), (6, 1)),
        ((5, 1), (6, 3)),
        ((5, 1), (6, 4)),
        ((5, 2), (6, 1)),
        ((5, 2), (6, 3)),
        ((5, 3), (6, 2)),
        ((5, 3), (6, 3)),
        ((5, 4), (6, 3)),
        ((5, 4), (6, 4)),
    ];
    // Edges of the two highlighted paths that are not in the list above.
    let highlighted: &[LayerEdge] = &[((1, 2), (2, 4)), ((2, 4), (3, 1)), ((5, 1), (6, 2))];
    let mut edges: Vec<(usize, usize)> = inner
        .iter()
        .chain(highlighted)
        .map(|&((a, i), (b, j))| (id(a, i), id(b, j)))
        .collect();
    for k in 1..=4 {
        edges.push((x, id(1, k)));
        edges.push((id(6, k), y));
        for j in 1..=4 {
            edges.push((id(4, k), id(5, j)));
        }
    }
    let graph = Graph::new(26, &edges).expect("fixture edges are valid");
    let path = [x, id(1, 1), id(2, 2), id(3, 2), id(4, 4), id(5, 1), id(6, 2), y].into();
    let other_path = [x, id(1, 2), id(2, 4), id(3, 1), id(4, 1), id(5, 2), id(6, 3), y].into();
    LayeredExample {
        graph,
        x,
        y,
        path,
        other_path,
    }
}

/// Two adjacent centres `p = 0`, `q = 1`, each with three leaves
/// (`2..=4` on `p`, `5..=7` on `q`).
pub fn double_star() -> Graph {
    Graph::new(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).expect("fixture edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_vertex_sets_are_one_regular() {
        let g = eight_vertex_graph();
        assert_eq!(g.edge_count(), 12);
        for s in eight_vertex_sets() {
            assert!(g.is_d_regular_set(&s, 1).unwrap(), "{s}");
        }
    }

    #[test]
    fn layered_example_paths_are_shortest() {
        let ex = layered_example();
        let dist = ex.graph.distances_from(ex.x);
        assert_eq!(dist[ex.y], Some(7));
        for p in [&ex.path, &ex.other_path] {
            let sub = ex.graph.induced_subgraph(p).unwrap();
            assert!(crate::graph::are_isomorphic(&sub, &Graph::path(8)).unwrap());
        }
    }
}
