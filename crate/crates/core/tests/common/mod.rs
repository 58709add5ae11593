//! Graph generators shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use risr::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |mask| from_mask(n, mask))
}

fn mask_of(edges: &[(usize, usize)], index: &[Vec<usize>], perm: &[usize]) -> u64 {
    edges.iter().fold(0u64, |m, &(u, v)| m | 1 << index[perm[u]][perm[v]])
}

/// Smallest edge mask over all relabellings; equal iff isomorphic.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut index = vec![vec![0usize; n]; n];
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let edges: Vec<_> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = mask_of(&edges, &index, &perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(mask_of(&edges, &index, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// One representative per isomorphism class, in order of first appearance.
pub fn up_to_isomorphism(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert((g.vertex_count(), canonical_mask(g))))
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && g.components().iter().all(|&c| c == 0)
}

/// All graphs on `n` vertices with both sides of a fixed 2-colouring; every
/// bipartite graph on `n` vertices is isomorphic to one of them.
pub fn bipartite_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 0..=n / 2 {
        let cross: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
        for mask in 0..1u64 << cross.len() {
            let edges: Vec<_> = cross
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::new(n, &edges).unwrap());
        }
    }
    up_to_isomorphism(out)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges).unwrap()
}

/// A random spanning tree plus independent extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    for e in pairs(n) {
        if rng.gen_bool(p) {
            edges.insert(e);
        }
    }
    Graph::new(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

/// Adds edges in random order, skipping any that would close a triangle.
pub fn random_triangle_free(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut candidates = pairs(n);
    candidates.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (u, v) in candidates {
        if rng.gen_bool(p) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Independent sets of `g` grouped by size.
pub fn independent_sets_by_size(g: &Graph) -> Vec<Vec<VertexSet>> {
    let n = g.vertex_count();
    let mut out = vec![Vec::new(); n + 1];
    for mask in 0u32..1 << n {
        let set: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_independent(&set) {
            out[set.len()].push(set);
        }
    }
    for group in &mut out {
        group.sort();
    }
    out
}

/// A layered graph: `x`, then `inner.len()` layers of the given sizes, then
/// `y`. Every vertex keeps at least one edge to each neighbouring layer, so
/// everything lies on a shortest `x`–`y` path. Also returns two random
/// shortest paths.
pub struct Layered {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    pub source: VertexSet,
    pub target: VertexSet,
}

pub fn random_layered(rng: &mut impl Rng, inner: &[usize], p: f64) -> Layered {
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    let mut next = 1;
    for &size in inner {
        layers.push((next..next + size).collect());
        next += size;
    }
    layers.push(vec![next]);
    let n = next + 1;
    let mut edges = HashSet::new();
    for w in layers.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        for &u in lo {
            for &v in hi {
                if rng.gen_bool(p) {
                    edges.insert((u, v));
                }
            }
        }
        for &u in lo {
            if !hi.iter().any(|&v| edges.contains(&(u, v))) {
                edges.insert((u, *hi.choose(rng).unwrap()));
            }
        }
        for &v in hi {
            if !lo.iter().any(|&u| edges.contains(&(u, v))) {
                edges.insert((*lo.choose(rng).unwrap(), v));
            }
        }
    }
    let graph = Graph::new(n, &edges.iter().copied().collect::<Vec<_>>()).unwrap();
    let walk = |rng: &mut dyn rand::RngCore| -> VertexSet {
        let mut path = vec![0];
        for layer in &layers[1..] {
            let last = *path.last().unwrap();
            let options: Vec<usize> = layer.iter().copied().filter(|&v| edges.contains(&(last, v))).collect();
            path.push(*options.choose(rng).unwrap());
        }
        path.into_iter().collect()
    };
    let source = walk(rng);
    let target = walk(rng);
    Layered {
        graph,
        x: 0,
        y: n - 1,
        source,
        target,
    }
}

/// Two rails of length `m` between `x` and `y`, with a diagonal from rail
/// one at layer `j` to rail two at layer `j + 1` for each `j` in `diagonals`.
/// Source is rail one, target rail two.
pub fn ladder(m: usize, diagonals: &[usize]) -> Layered {
    let one = |j: usize| 2 * j + 1;
    let two = |j: usize| 2 * j + 2;
    let y = 2 * m + 1;
    let mut edges = vec![(0, one(0)), (0, two(0)), (one(m - 1), y), (two(m - 1), y)];
    for j in 0..m - 1 {
        edges.push((one(j), one(j + 1)));
        edges.push((two(j), two(j + 1)));
    }
    for &j in diagonals {
        edges.push((one(j), two(j + 1)));
    }
    Layered {
        graph: Graph::new(y + 1, &edges).unwrap(),
        x: 0,
        y,
        source: (0..m).map(one).chain([0, y]).collect(),
        target: (0..m).map(two).chain([0, y]).collect(),
    }
}
