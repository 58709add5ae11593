//! Vertex orderings, bandwidth and sketches.
//!
//! A t-sketch of `G` is a graph `H` with a map `f: V(G) -> V(H)` such that at
//! most `t` vertices land on each vertex of `H` and every edge of `G` lands
//! on a vertex or an edge of `H`. Sorting `V(G)` by the rank of `f(u)` in an
//! ordering of `H` of width `b` yields an ordering of `G` of width at most
//! `t(b + 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reductions::{BlowupArtifact, SprArtifact, SprMode};

/// Largest graph handed to [`exact_bandwidth`] by default.
pub const DEFAULT_BANDWIDTH_LIMIT: usize = 10;

/// Below this many vertices [`exact_bandwidth`] tries every permutation.
const EXHAUSTIVE_BELOW: usize = 9;

/// A bijection from vertices to ranks `0..n`, stored as the vertex at each rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrdering {
    /// Vertices listed from first to last; must be a permutation of `0..len`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut rank = vec![usize::MAX; order.len()];
        for (i, &v) in order.iter().enumerate() {
            if v >= order.len() || rank[v] != usize::MAX {
                return Err(Error::invalid("ordering is not a permutation"));
            }
            rank[v] = i;
        }
        Ok(VertexOrdering { order, rank })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = Error;

    fn try_from(order: Vec<usize>) -> Result<Self> {
        VertexOrdering::new(order)
    }
}

impl From<VertexOrdering> for Vec<usize> {
    fn from(o: VertexOrdering) -> Self {
        o.order
    }
}

/// Largest rank difference across an edge; 0 without edges.
pub fn ordering_width(g: &Graph, pi: &VertexOrdering) -> Result<usize> {
    if pi.len() != g.vertex_count() {
        return Err(Error::invalid(format!(
            "ordering has {} vertices, graph has {}",
            pi.len(),
            g.vertex_count()
        )));
    }
    Ok(width_unchecked(g, &pi.rank))
}

fn width_unchecked(g: &Graph, rank: &[usize]) -> usize {
    g.edges().map(|(u, v)| rank[u].abs_diff(rank[v])).max().unwrap_or(0)
}

/// Bandwidth with a witnessing ordering, for graphs of at most
/// [`DEFAULT_BANDWIDTH_LIMIT`] vertices.
pub fn exact_bandwidth(g: &Graph) -> Result<(usize, VertexOrdering)> {
    exact_bandwidth_bounded(g, DEFAULT_BANDWIDTH_LIMIT)
}

pub fn exact_bandwidth_bounded(g: &Graph, max_vertices: usize) -> Result<(usize, VertexOrdering)> {
    if g.vertex_count() > max_vertices {
        return Err(Error::ResourceLimit(format!(
            "exact bandwidth limited to {max_vertices} vertices (got {})",
            g.vertex_count()
        )));
    }
    Ok(if g.vertex_count() < EXHAUSTIVE_BELOW {
        bandwidth_exhaustive(g)
    } else {
        bandwidth_branch_and_bound(g)
    })
}

/// Minimum width over all `n!` orderings (Heap's algorithm).
pub fn bandwidth_exhaustive(g: &Graph) -> (usize, VertexOrdering) {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = (0..n).collect();
    let mut best = (width_unchecked(g, &rank), perm.clone());
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(j, i);
            rank[perm[j]] = j;
            rank[perm[i]] = i;
            let w = width_unchecked(g, &rank);
            if w < best.0 {
                best = (w, perm.clone());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (best.0, VertexOrdering::new(best.1).expect("a permutation"))
}

/// Smallest `k` admitting a layout of width `k`, found by filling positions
/// left to right. A vertex placed at position `p` forces all its neighbours
/// into positions `<= p + k`; mirror images are skipped by requiring the first
/// vertex to be smaller than the last.
pub fn bandwidth_branch_and_bound(g: &Graph) -> (usize, VertexOrdering) {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return (0, VertexOrdering::identity(n));
    }
    let lower = g.vertices().map(|v| g.degree(v).div_ceil(2)).max().unwrap_or(0).max(1);
    for k in lower..n {
        let mut search = LayoutSearch {
            g,
            k,
            order: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            unplaced_neighbours: g.vertices().map(|v| g.degree(v)).collect(),
        };
        if search.place() {
            return (k, VertexOrdering::new(search.order).expect("a permutation"));
        }
    }
    unreachable!("width n - 1 is always feasible")
}

struct LayoutSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    unplaced_neighbours: Vec<usize>,
}

impl LayoutSearch<'_> {
    fn place(&mut self) -> bool {
        let n = self.g.vertex_count();
        let p = self.order.len();
        if p == n {
            return true;
        }
        // The vertex k positions back must be finished after this step.
        let due = (p >= self.k).then(|| self.order[p - self.k]);
        for v in 0..n {
            if self.pos[v] != usize::MAX {
                continue;
            }
            if p == n - 1 && n > 1 && self.order[0] > v {
                continue;
            }
            let nbrs = self.g.neighbors(v);
            if nbrs
                .iter()
                .any(|&w| self.pos[w] != usize::MAX && p - self.pos[w] > self.k)
            {
                continue;
            }
            if let Some(u) = due {
                let left = self.unplaced_neighbours[u] - usize::from(self.g.has_edge(u, v));
                if left > 0 {
                    continue;
                }
            }
            for &w in nbrs {
                if self.pos[w] != usize::MAX {
                    self.unplaced_neighbours[w] -= 1;
                }
            }
            // More unplaced neighbours than the k slots after it: hopeless.
            let own_left = nbrs.iter().filter(|&&w| self.pos[w] == usize::MAX).count();
            if own_left <= self.k {
                self.pos[v] = p;
                self.order.push(v);
                self.unplaced_neighbours[v] = own_left;
                if self.place() {
                    return true;
                }
                self.order.pop();
                self.pos[v] = usize::MAX;
            }
            for &w in nbrs {
                if self.pos[w] != usize::MAX {
                    self.unplaced_neighbours[w] += 1;
                }
            }
        }
        false
    }
}

/// A map from a big graph onto a small one, claimed to be a `t`-sketch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SketchMapping {
    pub big: Graph,
    pub small: Graph,
    /// `map[u]` is the image of vertex `u` of `big`.
    pub map: Vec<usize>,
    pub t: usize,
}

impl SketchMapping {
    /// Largest number of vertices sharing an image.
    pub fn max_multiplicity(&self) -> usize {
        let mut count = vec![0usize; self.small.vertex_count()];
        for &v in &self.map {
            if v < count.len() {
                count[v] += 1;
            }
        }
        count.into_iter().max().unwrap_or(0)
    }
}

/// Both sketch conditions: multiplicity at most `t`, and every edge collapses
/// to a vertex or an edge.
pub fn verify_sketch(s: &SketchMapping) -> bool {
    s.map.len() == s.big.vertex_count()
        && s.map.iter().all(|&v| v < s.small.vertex_count())
        && s.max_multiplicity() <= s.t
        && s.big.edges().all(|(u, v)| {
            let (a, b) = (s.map[u], s.map[v]);
            a == b || s.small.has_edge(a, b)
        })
}

/// Sorts the big graph's vertices by the rank of their image, ties by
/// identity. The result has width at most `t(width(pi_small) + 1)`.
pub fn lift_ordering(s: &SketchMapping, pi_small: &VertexOrdering) -> Result<VertexOrdering> {
    if !verify_sketch(s) {
        return Err(Error::invalid("mapping is not a sketch"));
    }
    let small_width = ordering_width(&s.small, pi_small)?;
    let mut order: Vec<usize> = s.big.vertices().collect();
    order.sort_by_key(|&u| (pi_small.rank(s.map[u]), u));
    let lifted = VertexOrdering::new(order)?;
    let width = ordering_width(&s.big, &lifted)?;
    let bound = s.t * (small_width + 1);
    if width > bound {
        return Err(Error::internal(format!("lifted width {width} exceeds {bound}")));
    }
    Ok(lifted)
}

/// A reduction artifact that comes with a natural sketch.
#[derive(Clone, Copy, Debug)]
pub enum ReductionRef<'a> {
    Blowup(&'a BlowupArtifact),
    Spr(&'a SprArtifact),
}

impl<'a> From<&'a BlowupArtifact> for ReductionRef<'a> {
    fn from(a: &'a BlowupArtifact) -> Self {
        ReductionRef::Blowup(a)
    }
}

impl<'a> From<&'a SprArtifact> for ReductionRef<'a> {
    fn from(a: &'a SprArtifact) -> Self {
        ReductionRef::Spr(a)
    }
}

/// The blow-up collapses each family onto its vertex (`t = d + 1`). The
/// clique-layer graph collapses each block `W_i` (its `2d` layers plus
/// `A_i`, `B_i`) onto vertex `i` of a cycle with `L / 2d` vertices; one or two
/// blocks give `K_1` or `K_2`.
pub fn sketch_of_reduction<'a>(art: impl Into<ReductionRef<'a>>) -> Result<SketchMapping> {
    let s = match art.into() {
        ReductionRef::Blowup(a) => {
            let g = a.instance().graph();
            SketchMapping {
                big: g.clone(),
                small: a.source_graph().clone(),
                map: g.vertices().map(|u| a.family_of(u)).collect(),
                t: a.family_size(),
            }
        }
        ReductionRef::Spr(a) => {
            if a.mode() != SprMode::TsCliqueLayers {
                return Err(Error::invalid("cycle sketch needs the clique-layer artifact"));
            }
            let g = a.instance().graph();
            let period = 2 * a.d();
            let blocks = a.length() / period;
            let mut map = vec![usize::MAX; g.vertex_count()];
            for (j, layer) in a.layer_sets().iter().enumerate() {
                for v in layer.iter() {
                    map[v] = j / period;
                }
            }
            for (i, (x, y)) in a.blocks().iter().enumerate() {
                for v in x.iter().chain(y.iter()) {
                    map[v] = i;
                }
            }
            if map.contains(&usize::MAX) {
                return Err(Error::internal("vertex outside every block"));
            }
            let mut s = SketchMapping {
                big: g.clone(),
                small: Graph::cycle(blocks),
                map,
                t: 0,
            };
            s.t = s.max_multiplicity();
            s
        }
    };
    if !verify_sketch(&s) {
        return Err(Error::internal("reduction map is not a sketch"));
    }
    Ok(s)
}

/// `(d + 1)(b0 + 1)`: width guaranteed for a blow-up of a graph of bandwidth `b0`.
pub fn blowup_width_bound(d: usize, b0: usize) -> usize {
    (d + 1) * (b0 + 1)
}

/// `2db + 2(d - 2)`: block size of the cycle sketch when layers have at most
/// `b` vertices.
pub fn spr_block_bound(d: usize, b: usize) -> usize {
    2 * d * b + 2 * (d - 2)
}

/// `2(2db + 2(d - 2))`: width guaranteed for the clique-layer graph when the
/// cycle sketch has at most two vertices.
pub fn spr_width_bound(d: usize, b: usize) -> usize {
    2 * spr_block_bound(d, b)
}
