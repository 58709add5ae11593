//! Pendant reduction from independent set reconfiguration under TS on a
//! bipartite graph to 1-regular set reconfiguration under TJ.
//!
//! Every vertex `v` of `H` gets a pendant `v' = v + n`. An independent set
//! `S` becomes the perfect matching `S ∪ S'`, and one slide `p -> q` becomes
//! the two jumps `p' -> q` and `p -> q'`.

use crate::engine::{Instance, ReconfigSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{recognize, Graph, VertexSet};

use super::{ensure_produced_valid, require_valid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantArtifact {
    source_graph: Graph,
    bipartition: (VertexSet, VertexSet),
    source: VertexSet,
    target: VertexSet,
    instance: Instance,
}

impl PendantArtifact {
    pub fn source_graph(&self) -> &Graph {
        &self.source_graph
    }

    /// `(A, B)`; `A` holds the smallest vertex of every component.
    pub fn bipartition(&self) -> &(VertexSet, VertexSet) {
        &self.bipartition
    }

    /// The 1-regular TJ instance on the graph with pendants.
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    /// The independent set reconfiguration instance on `H` (d = 0, TS).
    pub fn source_instance(&self) -> Instance {
        Instance::new(
            self.source_graph.clone(),
            0,
            Rule::TS,
            self.source.clone(),
            self.target.clone(),
            false,
        )
        .expect("checked at construction")
    }

    pub fn pendant(&self, v: usize) -> usize {
        v + self.source_graph.vertex_count()
    }

    /// `S ∪ S'`.
    pub fn expand(&self, set: &VertexSet) -> VertexSet {
        set.iter().flat_map(|v| [v, self.pendant(v)]).collect()
    }

    /// Vertices of `H` whose pendant pair is in `set`, plus the `A`-side end of
    /// every `H`-edge inside `set`.
    pub fn collapse(&self, set: &VertexSet) -> VertexSet {
        let n = self.source_graph.vertex_count();
        let a = &self.bipartition.0;
        set.iter()
            .filter(|&v| v < n)
            .filter(|&v| {
                set.contains(v + n)
                    || (a.contains(v) && self.source_graph.neighbors(v).iter().any(|&w| set.contains(w)))
            })
            .collect()
    }
}

pub fn pendant_reduce(h: &Graph, source: &VertexSet, target: &VertexSet) -> Result<PendantArtifact> {
    let bipartition = recognize(h)
        .bipartition
        .ok_or_else(|| Error::invalid("graph is not bipartite"))?;
    h.check_set(source)?;
    h.check_set(target)?;
    for (name, set) in [("source", source), ("target", target)] {
        if !h.is_independent(set) {
            return Err(Error::invalid(format!("{name} is not an independent set")));
        }
    }
    if source.len() != target.len() {
        return Err(Error::invalid("source and target differ in cardinality"));
    }
    let n = h.vertex_count();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.extend(h.vertices().map(|v| (v, v + n)));
    let g = Graph::new(2 * n, &edges)?;
    let expand = |set: &VertexSet| -> VertexSet { set.iter().flat_map(|v| [v, v + n]).collect() };
    let instance = Instance::new(g, 1, Rule::TJ, expand(source), expand(target), false)?;
    Ok(PendantArtifact {
        source_graph: h.clone(),
        bipartition,
        source: source.clone(),
        target: target.clone(),
        instance,
    })
}

pub fn pendant_lift(art: &PendantArtifact, hseq: &ReconfigSequence) -> Result<ReconfigSequence> {
    require_valid(&art.source_instance(), hseq)?;
    let mut current = art.expand(&hseq.sets[0]);
    let mut out = vec![current.clone()];
    for pair in hseq.sets.windows(2) {
        let (p, q) = pair[0].single_exchange(&pair[1]).expect("validated");
        current = current.exchange(art.pendant(p), q);
        out.push(current.clone());
        current = current.exchange(p, art.pendant(q));
        out.push(current.clone());
    }
    let lifted = ReconfigSequence::new(out);
    ensure_produced_valid(art.instance(), &lifted, "pendant lift")?;
    Ok(lifted)
}

/// Collapses every set onto `H`; a change between non-adjacent vertices is
/// routed through the smallest common neighbour that keeps the set independent.
pub fn pendant_project(art: &PendantArtifact, gseq: &ReconfigSequence) -> Result<ReconfigSequence> {
    require_valid(art.instance(), gseq)?;
    let h = &art.source_graph;
    let size = art.source.len();
    let collapsed: Vec<VertexSet> = gseq.sets.iter().map(|s| art.collapse(s)).collect();
    if let Some(i) = collapsed.iter().position(|r| r.len() != size) {
        return Err(Error::internal(format!("set {i} collapses to the wrong size")));
    }
    let mut out = vec![collapsed[0].clone()];
    for (i, pair) in collapsed.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        if prev == next {
            continue;
        }
        let (u, v) = prev
            .single_exchange(next)
            .ok_or_else(|| Error::internal(format!("step {i}: collapsed sets differ in more than one vertex")))?;
        if !h.has_edge(u, v) {
            let occupied = prev.union(next);
            let mid = h
                .neighbors(u)
                .iter()
                .filter(|&&w| h.has_edge(v, w) && !occupied.contains(w))
                .map(|&w| prev.exchange(u, w))
                .find(|m| h.is_independent(m))
                .ok_or_else(|| {
                    Error::internal(format!("step {i}: no common neighbour of {u} and {v} to pass through"))
                })?;
            out.push(mid);
        }
        out.push(next.clone());
    }
    let projected = ReconfigSequence::new(out);
    ensure_produced_valid(&art.source_instance(), &projected, "pendant projection")?;
    Ok(projected)
}
