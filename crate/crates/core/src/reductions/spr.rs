//! Shortest path reconfiguration into connected d-regular set
//! reconfiguration.
//!
//! After pruning, the source graph is a stack of independent layers
//! `D_1 = {x}, ..., D_r = {y}` and every shortest `x`–`y` path takes one vertex
//! per layer. A return path closes each such path into a cycle of length
//! `L`, a multiple of `2d`. For `d >= 3` every block of `2d` consecutive
//! layers gets two independent sets `A_i`, `B_i` of size `d - 2`, joined to the
//! odd and even layers of the block, which lifts every degree to `d`.
//!
//! Vertex numbering of the output graph: layout vertices first, then the
//! return path `v_{r+1}, ..., v_L`, then `A_1, B_1, A_2, B_2, ...`.

use std::collections::{HashMap, VecDeque};

use crate::engine::{Instance, Limits, ReconfigSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{ensure_produced_valid, require_valid};

/// A pruned shortest-path instance, relabelled so that the kept vertices are
/// `0..k` in increasing original identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredSource {
    graph: Graph,
    original: Vec<usize>,
    layers: Vec<VertexSet>,
    layer_of: Vec<usize>,
    path: VertexSet,
    other_path: VertexSet,
}

impl LayeredSource {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Original identity of each layout vertex.
    pub fn original(&self) -> &[usize] {
        &self.original
    }

    /// `D_1, ..., D_r`.
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    /// Number of layers, one more than the `x`–`y` distance.
    pub fn r(&self) -> usize {
        self.layers.len()
    }

    pub fn x(&self) -> usize {
        self.layers[0].as_slice()[0]
    }

    pub fn y(&self) -> usize {
        self.layers[self.r() - 1].as_slice()[0]
    }

    pub fn path(&self) -> &VertexSet {
        &self.path
    }

    pub fn other_path(&self) -> &VertexSet {
        &self.other_path
    }

    pub fn max_layer_size(&self) -> usize {
        self.layers.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Translates a set of original vertices into layout vertices.
    pub fn to_layout(&self, set: &VertexSet) -> Result<VertexSet> {
        set.iter()
            .map(|v| {
                self.original
                    .binary_search(&v)
                    .map_err(|_| Error::invalid(format!("vertex {v} lies on no shortest x-y path")))
            })
            .collect()
    }

    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }

    /// Whether `set` is the vertex set of a shortest `x`–`y` path.
    pub fn is_shortest_path_set(&self, set: &VertexSet) -> bool {
        let n = self.graph.vertex_count();
        if set.len() != self.r() || set.iter().any(|v| v >= n) {
            return false;
        }
        let mut by_layer = vec![usize::MAX; self.r()];
        for v in set.iter() {
            let l = self.layer_of[v];
            if by_layer[l] != usize::MAX {
                return false;
            }
            by_layer[l] = v;
        }
        by_layer.windows(2).all(|w| self.graph.has_edge(w[0], w[1]))
    }

    fn check_path_sequence(&self, seq: &[VertexSet]) -> Result<()> {
        let (Some(first), Some(last)) = (seq.first(), seq.last()) else {
            return Err(Error::invalid("path sequence is empty"));
        };
        if let Some(i) = seq.iter().position(|p| !self.is_shortest_path_set(p)) {
            return Err(Error::invalid(format!("set {i} is not a shortest x-y path")));
        }
        if let Some(i) = seq.windows(2).position(|w| w[0].single_exchange(&w[1]).is_none()) {
            return Err(Error::invalid(format!("step {i}->{} is not a single exchange", i + 1)));
        }
        if first != &self.path {
            return Err(Error::invalid("path sequence does not start at the source path"));
        }
        if last != &self.other_path {
            return Err(Error::invalid("path sequence does not end at the target path"));
        }
        Ok(())
    }
}

/// Keeps only what lies on shortest `x`–`y` paths and splits it into
/// distance layers. `path` and `other_path` are sets of original vertices.
pub fn spr_preprocess(
    h: &Graph,
    x: usize,
    y: usize,
    path: &VertexSet,
    other_path: &VertexSet,
) -> Result<LayeredSource> {
    let n = h.vertex_count();
    if x >= n || y >= n {
        return Err(Error::invalid("x or y out of range"));
    }
    if x == y {
        return Err(Error::invalid("x and y must differ"));
    }
    h.check_set(path)?;
    h.check_set(other_path)?;
    let from_x = h.distances_from(x);
    let from_y = h.distances_from(y);
    let Some(dist) = from_x[y] else {
        return Err(Error::invalid("x and y are disconnected"));
    };
    let original: Vec<usize> = h
        .vertices()
        .filter(|&v| matches!((from_x[v], from_y[v]), (Some(a), Some(b)) if a + b == dist))
        .collect();
    let index: HashMap<usize, usize> = original.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = h
        .edges()
        .filter_map(|(u, v)| {
            let (&a, &b) = (index.get(&u)?, index.get(&v)?);
            (from_x[u].unwrap().abs_diff(from_x[v].unwrap()) == 1).then_some((a, b))
        })
        .collect();
    let graph = Graph::new(original.len(), &edges)?;
    let layer_of: Vec<usize> = original.iter().map(|&v| from_x[v].unwrap()).collect();
    let mut layers = vec![VertexSet::new(); dist + 1];
    for (i, &l) in layer_of.iter().enumerate() {
        layers[l] = layers[l].with(i);
    }
    let mut layout = LayeredSource {
        graph,
        original,
        layers,
        layer_of,
        path: VertexSet::new(),
        other_path: VertexSet::new(),
    };
    for (name, set) in [("source", path), ("target", other_path)] {
        let mapped = layout
            .to_layout(set)
            .map_err(|_| Error::invalid(format!("{name} path is not a shortest x-y path")))?;
        if !layout.is_shortest_path_set(&mapped) {
            return Err(Error::invalid(format!("{name} path is not a shortest x-y path")));
        }
    }
    layout.path = layout.to_layout(path)?;
    layout.other_path = layout.to_layout(other_path)?;
    Ok(layout)
}

/// All shortest `x`–`y` path sets of a layout, lexicographically ordered.
pub fn shortest_path_sets(layout: &LayeredSource, limits: &Limits) -> Result<Vec<VertexSet>> {
    fn extend(layout: &LayeredSource, stack: &mut Vec<usize>, out: &mut Vec<VertexSet>, max: usize) -> Result<()> {
        let last = *stack.last().unwrap();
        if stack.len() == layout.r() {
            if out.len() == max {
                return Err(Error::ResourceLimit(format!("more than {max} shortest paths")));
            }
            out.push(stack.iter().copied().collect());
            return Ok(());
        }
        let next_layer = &layout.layers[stack.len()];
        for &w in layout.graph.neighbors(last) {
            if next_layer.contains(w) {
                stack.push(w);
                extend(layout, stack, out, max)?;
                stack.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(layout, &mut vec![layout.x()], &mut out, limits.max_enumerated)?;
    out.sort();
    Ok(out)
}

/// Ground truth for the shortest-path question: a shortest sequence of path
/// sets from the source path to the target path, or `None`.
pub fn spr_oracle(layout: &LayeredSource, limits: &Limits) -> Result<Option<Vec<VertexSet>>> {
    let sets = shortest_path_sets(layout, limits)?;
    let index: HashMap<&VertexSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let (s, t) = (index[layout.path()], index[layout.other_path()]);
    let mut parent = vec![usize::MAX; sets.len()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut chain = vec![t];
            while *chain.last().unwrap() != s {
                chain.push(parent[*chain.last().unwrap()]);
            }
            chain.reverse();
            return Ok(Some(chain.into_iter().map(|i| sets[i].clone()).collect()));
        }
        for w in 0..sets.len() {
            if parent[w] == usize::MAX && sets[u].single_exchange(&sets[w]).is_some() {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SprMode {
    /// Bipartite output graph, Token Jumping.
    TjBipartite,
    /// Every layer made a clique, Token Sliding.
    TsCliqueLayers,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SprArtifact {
    layout: LayeredSource,
    d: usize,
    mode: SprMode,
    length: usize,
    layer_sets: Vec<VertexSet>,
    return_path: Vec<usize>,
    blocks: Vec<(VertexSet, VertexSet)>,
    gadget: VertexSet,
    instance: Instance,
}

impl SprArtifact {
    pub fn layout(&self) -> &LayeredSource {
        &self.layout
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> SprMode {
        self.mode
    }

    /// `L`, the length of the cycle each solution induces.
    pub fn length(&self) -> usize {
        self.length
    }

    /// `V_1, ..., V_L` in output identities.
    pub fn layer_sets(&self) -> &[VertexSet] {
        &self.layer_sets
    }

    /// `v_{r+1}, ..., v_L`.
    pub fn return_path(&self) -> &[usize] {
        &self.return_path
    }

    /// `(A_i, B_i)` per block of `2d` layers; empty sets when `d = 2`.
    pub fn blocks(&self) -> &[(VertexSet, VertexSet)] {
        &self.blocks
    }

    /// `I`, the union of all `A_i` and `B_i`.
    pub fn gadget(&self) -> &VertexSet {
        &self.gadget
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    /// Vertices shared by every lifted set: the return path and `I`.
    pub fn fixed_part(&self) -> VertexSet {
        self.gadget.union(&self.return_path.iter().copied().collect())
    }

    /// The invariant every reachable set satisfies: `I ⊆ U` and `U` meets
    /// every layer `V_j` in exactly one vertex.
    pub fn claim_holds(&self, set: &VertexSet) -> bool {
        self.gadget.is_subset(set) && self.layer_sets.iter().all(|v| v.intersection(set).len() == 1)
    }
}

pub fn spr_reduce(layout: &LayeredSource, d: usize, mode: SprMode) -> Result<SprArtifact> {
    if d < 2 {
        return Err(Error::invalid("the shortest-path reduction needs d >= 2"));
    }
    let r = layout.r();
    let period = 2 * d;
    let length = r.max(6).div_ceil(period) * period;
    let h = layout.graph.vertex_count();
    let (x, y) = (layout.x(), layout.y());
    let mut edges: Vec<(usize, usize)> = layout.graph.edges().collect();
    let return_path: Vec<usize> = (h..h + length - r).collect();
    let mut cycle = vec![y];
    cycle.extend(&return_path);
    cycle.push(x);
    edges.extend(cycle.windows(2).map(|w| (w[0], w[1])));
    let mut layer_sets: Vec<VertexSet> = layout.layers.clone();
    layer_sets.extend(return_path.iter().map(|&v| VertexSet::singleton(v)));

    let mut next = h + return_path.len();
    let mut blocks = Vec::new();
    for i in 0..length / period {
        let a: VertexSet = (next..next + d - 2).collect();
        let b: VertexSet = (next + d - 2..next + 2 * (d - 2)).collect();
        next += 2 * (d - 2);
        for j in 0..d {
            for (side, layer) in [(&a, period * i + 2 * j), (&b, period * i + 2 * j + 1)] {
                for s in side.iter() {
                    edges.extend(layer_sets[layer].iter().map(|v| (s, v)));
                }
            }
        }
        blocks.push((a, b));
    }
    let gadget: VertexSet = (h + return_path.len()..next).collect();
    let rule = match mode {
        SprMode::TjBipartite => Rule::TJ,
        SprMode::TsCliqueLayers => {
            for layer in &layer_sets {
                let m = layer.as_slice();
                for (k, &u) in m.iter().enumerate() {
                    edges.extend(m[k + 1..].iter().map(|&v| (u, v)));
                }
            }
            Rule::TS
        }
    };
    let graph = Graph::new(next, &edges)?;
    let fixed: VertexSet = gadget.union(&return_path.iter().copied().collect());
    let instance = Instance::new(
        graph,
        d,
        rule,
        layout.path.union(&fixed),
        layout.other_path.union(&fixed),
        true,
    )
    .map_err(|e| Error::internal(format!("constructed endpoints rejected: {e}")))?;
    Ok(SprArtifact {
        layout: layout.clone(),
        d,
        mode,
        length,
        layer_sets,
        return_path,
        blocks,
        gadget,
        instance,
    })
}

/// `U_i = P_i ∪ {v_{r+1}, ..., v_L} ∪ I`. Paths are in layout identities.
pub fn spr_lift(art: &SprArtifact, paths: &[VertexSet]) -> Result<ReconfigSequence> {
    art.layout.check_path_sequence(paths)?;
    let fixed = art.fixed_part();
    let lifted = ReconfigSequence::new(paths.iter().map(|p| p.union(&fixed)).collect());
    ensure_produced_valid(&art.instance, &lifted, "shortest-path lift")?;
    Ok(lifted)
}

/// Strips the fixed part from every set, checking the reachability
/// invariant along the way.
pub fn spr_project(art: &SprArtifact, gseq: &ReconfigSequence) -> Result<Vec<VertexSet>> {
    require_valid(&art.instance, gseq)?;
    let fixed = art.fixed_part();
    let mut out = Vec::with_capacity(gseq.sets.len());
    for (i, set) in gseq.sets.iter().enumerate() {
        if !art.claim_holds(set) {
            return Err(Error::internal(format!("set {i} misses a gadget vertex or a layer")));
        }
        let path: VertexSet = set.iter().filter(|&v| !fixed.contains(v)).collect();
        if !art.layout.is_shortest_path_set(&path) {
            return Err(Error::internal(format!("set {i} does not project to a shortest path")));
        }
        out.push(path);
    }
    art.layout
        .check_path_sequence(&out)
        .map_err(|e| Error::internal(format!("projection: {e}")))?;
    Ok(out)
}
