//! Blow-up of independent set reconfiguration into d-regular set
//! reconfiguration.
//!
//! Every vertex `v` of the source graph `H` becomes a clique
//! `X_v = {v(d+1), ..., v(d+1) + d}` of true twins, and `X_u`, `X_v` are
//! completely joined whenever `uv` is an edge of `H`. An independent set `I`
//! corresponds to the d-regular set `⋃_{v ∈ I} X_v`. Chordality survives the
//! construction, and sliding a token of `H` becomes `d + 1` slides in `G`.

use crate::engine::{Instance, ReconfigSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{ensure_produced_valid, require_valid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupArtifact {
    source_graph: Graph,
    source: VertexSet,
    target: VertexSet,
    d: usize,
    instance: Instance,
}

impl BlowupArtifact {
    pub fn source_graph(&self) -> &Graph {
        &self.source_graph
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The blown-up instance, under TS.
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn instance_with_rule(&self, rule: Rule) -> Instance {
        self.instance.with_rule(rule)
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

    /// Size of every family.
    pub fn family_size(&self) -> usize {
        self.d + 1
    }

    /// `X_v`, the `d + 1` vertices standing in for `v`.
    pub fn family(&self, v: usize) -> VertexSet {
        let k = self.family_size();
        (v * k..(v + 1) * k).collect()
    }

    /// The vertex of `H` whose family contains `u`.
    pub fn family_of(&self, u: usize) -> usize {
        u / self.family_size()
    }

    /// `⋃_{v ∈ set} X_v`.
    pub fn expand(&self, set: &VertexSet) -> VertexSet {
        set.iter().flat_map(|v| self.family(v).into_vec()).collect()
    }

    /// `{ f(u) : u ∈ set }`.
    pub fn collapse(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|u| self.family_of(u)).collect()
    }
}

pub fn blowup_reduce(h: &Graph, source: &VertexSet, target: &VertexSet, d: usize) -> Result<BlowupArtifact> {
    if d == 0 {
        return Err(Error::invalid("blow-up needs d >= 1"));
    }
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
    if source.is_empty() {
        return Err(Error::invalid("source and target must be nonempty"));
    }
    let k = d + 1;
    let mut edges = Vec::new();
    for v in h.vertices() {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((v * k + i, v * k + j));
            }
        }
    }
    for (u, v) in h.edges() {
        for i in 0..k {
            for j in 0..k {
                edges.push((u * k + i, v * k + j));
            }
        }
    }
    let g = Graph::new(h.vertex_count() * k, &edges)?;
    let expand = |set: &VertexSet| -> VertexSet { set.iter().flat_map(|v| v * k..(v + 1) * k).collect() };
    let instance = Instance::new(g, d, Rule::TS, expand(source), expand(target), false)?;
    Ok(BlowupArtifact {
        source_graph: h.clone(),
        source: source.clone(),
        target: target.clone(),
        d,
        instance,
    })
}

/// Each slide `p -> q` of `H` becomes the `d + 1` slides `p_j -> q_j`, members
/// paired by ascending index.
pub fn blowup_lift(art: &BlowupArtifact, hseq: &ReconfigSequence) -> Result<ReconfigSequence> {
    require_valid(&art.source_instance(), hseq)?;
    let mut current = art.expand(&hseq.sets[0]);
    let mut out = vec![current.clone()];
    for pair in hseq.sets.windows(2) {
        let (p, q) = pair[0].single_exchange(&pair[1]).expect("validated");
        for (pj, qj) in art.family(p).iter().zip(art.family(q).iter()) {
            current = current.exchange(pj, qj);
            out.push(current.clone());
        }
    }
    let lifted = ReconfigSequence::new(out);
    ensure_produced_valid(art.instance(), &lifted, "blow-up lift")?;
    Ok(lifted)
}

/// Replaces every jump between non-adjacent vertices by two slides through
/// a spare twin of a common neighbour.
///
/// Accepts any valid TJ-sequence of d-regular sets in the blown-up graph;
/// the endpoints are kept.
pub fn blowup_tj_to_ts(art: &BlowupArtifact, gseq: &ReconfigSequence) -> Result<ReconfigSequence> {
    let (first, last) = match (gseq.first(), gseq.last()) {
        (Some(f), Some(l)) => (f.clone(), l.clone()),
        _ => return Err(Error::InvalidSequence(crate::engine::Violation::Empty)),
    };
    let tj = art.instance_with_rule(Rule::TJ);
    let tj = tj.with_endpoints(first.clone(), last.clone())?;
    require_valid(&tj, gseq)?;
    let g = tj.graph();
    let mut out = vec![first];
    for (i, pair) in gseq.sets.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let (u, v) = prev.single_exchange(next).expect("validated");
        if !g.has_edge(u, v) {
            let kept = prev.intersection(next);
            let w = kept
                .iter()
                .find(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                .ok_or_else(|| Error::internal(format!("step {i}: no common neighbour of {u} and {v} in the set")))?;
            let occupied = prev.union(next);
            let spare = art
                .family(art.family_of(w))
                .iter()
                .find(|&x| !occupied.contains(x))
                .ok_or_else(|| Error::internal(format!("step {i}: family of {w} has no free member")))?;
            out.push(prev.exchange(u, spare));
        }
        out.push(next.clone());
    }
    let repaired = ReconfigSequence::new(out);
    ensure_produced_valid(&tj.with_rule(Rule::TS), &repaired, "TJ-to-TS repair")?;
    Ok(repaired)
}

/// Follows one representative token per family and reads off which
/// families they sit in.
pub fn blowup_project(art: &BlowupArtifact, gseq: &ReconfigSequence) -> Result<ReconfigSequence> {
    require_valid(art.instance(), gseq)?;
    let mut reps: VertexSet = art.source.iter().map(|v| v * art.family_size()).collect();
    let mut out = vec![art.collapse(&reps)];
    for pair in gseq.sets.windows(2) {
        let (u, v) = pair[0].single_exchange(&pair[1]).expect("validated");
        if reps.contains(u) {
            reps = reps.exchange(u, v);
            out.push(art.collapse(&reps));
        }
    }
    let projected = ReconfigSequence::new(out).dedup();
    ensure_produced_valid(&art.source_instance(), &projected, "blow-up projection")?;
    Ok(projected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{oracle_reachable, oracle_reachable_with, validate_sequence, Limits};
    use crate::graph::recognize;

    fn k2_artifact() -> BlowupArtifact {
        blowup_reduce(&Graph::path(2), &[0].into(), &[1].into(), 1).unwrap()
    }

    #[test]
    fn k2_blows_up_to_k4() {
        let art = k2_artifact();
        let g = art.instance().graph();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(art.instance().source(), &VertexSet::from([0, 1]));
        assert_eq!(art.instance().target(), &VertexSet::from([2, 3]));
    }

    #[test]
    fn structure_of_p3_blowup() {
        let h = Graph::path(3);
        let art = blowup_reduce(&h, &[0, 2].into(), &[0, 2].into(), 1).unwrap();
        let g = art.instance().graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(art.instance().source().len(), 4);
        for v in h.vertices() {
            let x = art.family(v);
            for a in x.iter() {
                for b in x.iter().filter(|&b| b > a) {
                    assert!(g.has_edge(a, b));
                    assert!(g.are_true_twins(a, b));
                }
            }
        }
        assert!(recognize(g).is_chordal());
    }

    #[test]
    fn rejects_dependent_sets() {
        let err = blowup_reduce(&Graph::path(3), &[0, 1].into(), &[0, 2].into(), 1);
        assert!(matches!(err, Err(Error::InvalidInput(_))));
        assert!(blowup_reduce(&Graph::path(2), &[0].into(), &[1].into(), 0).is_err());
    }

    #[test]
    fn p3_endpoints_agree_under_all_three_oracles() {
        let art = blowup_reduce(&Graph::path(3), &[0].into(), &[2].into(), 1).unwrap();
        let h_answer = oracle_reachable(&art.source_instance()).unwrap().reachable;
        let tj = oracle_reachable(&art.instance_with_rule(Rule::TJ)).unwrap().reachable;
        let ts = oracle_reachable(&art.instance_with_rule(Rule::TS)).unwrap().reachable;
        assert_eq!(h_answer, tj);
        assert_eq!(tj, ts);
        // a -> b -> c slides the single token along the path.
        assert!(h_answer);
    }

    #[test]
    fn lift_of_single_slide() {
        let art = k2_artifact();
        let lifted = blowup_lift(&art, &vec![[0].into(), [1].into()].into()).unwrap();
        assert_eq!(lifted.sets, vec![VertexSet::from([0, 1]), [2, 1].into(), [2, 3].into()]);
        assert_eq!(
            blowup_project(&art, &lifted).unwrap().sets,
            vec![[0].into(), [1].into()]
        );
    }

    #[test]
    fn lift_of_empty_sequence() {
        let art = blowup_reduce(&Graph::path(2), &[0].into(), &[0].into(), 2).unwrap();
        let lifted = blowup_lift(&art, &vec![[0].into()].into()).unwrap();
        assert_eq!(lifted.moves(), 0);
    }

    #[test]
    fn lift_length_is_d_plus_one_per_slide() {
        let h = Graph::path(4);
        for d in 1..=3 {
            let art = blowup_reduce(&h, &[0].into(), &[3].into(), d).unwrap();
            let hseq: ReconfigSequence = vec![[0].into(), [1].into(), [2].into(), [3].into()].into();
            let lifted = blowup_lift(&art, &hseq).unwrap();
            assert_eq!(lifted.moves(), (d + 1) * 3);
            assert_eq!(blowup_project(&art, &lifted).unwrap(), hseq);
        }
    }

    #[test]
    fn repair_through_spare_twin() {
        // a=0, b=1, c=2; X_a={0,1}, X_b={2,3}, X_c={4,5}.
        let art = blowup_reduce(&Graph::path(3), &[0].into(), &[2].into(), 1).unwrap();
        let jump: ReconfigSequence = vec![[0, 2].into(), [2, 4].into()].into();
        let repaired = blowup_tj_to_ts(&art, &jump).unwrap();
        assert_eq!(
            repaired.sets,
            vec![VertexSet::from([0, 2]), [2, 3].into(), [2, 4].into()]
        );
        let slide: ReconfigSequence = vec![[0, 2].into(), [0, 3].into()].into();
        assert_eq!(blowup_tj_to_ts(&art, &slide).unwrap(), slide);
    }

    #[test]
    fn repaired_oracle_paths_are_slides() {
        let h = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let art = blowup_reduce(&h, &[0, 2].into(), &[0, 4].into(), 1).unwrap();
        let limits = Limits::default();
        let tj = oracle_reachable_with(&art.instance_with_rule(Rule::TJ), &limits).unwrap();
        let w = tj.witness.expect("reachable");
        let ts = blowup_tj_to_ts(&art, &w).unwrap();
        assert!(validate_sequence(art.instance(), &ts).is_ok());
        let back = blowup_project(&art, &ts).unwrap();
        assert!(validate_sequence(&art.source_instance(), &back).is_ok());
    }

    #[test]
    fn shuffling_inside_a_family_projects_to_a_constant() {
        // H = K2 plus an isolated vertex; d = 2 so X_v has three members.
        let h = Graph::new(3, &[(0, 1)]).unwrap();
        let art = blowup_reduce(&h, &[2].into(), &[2].into(), 2).unwrap();
        // X_2 = {6,7,8} is the whole set; nothing moves, so the sequence is ⟨X_2⟩.
        let seq: ReconfigSequence = vec![[6, 7, 8].into()].into();
        assert_eq!(blowup_project(&art, &seq).unwrap().sets, vec![[2].into()]);
        // Only the non-representative token of X_0 = {0,1} wanders off and back.
        let art = blowup_reduce(&Graph::path(2), &[0].into(), &[0].into(), 1).unwrap();
        let wobble: ReconfigSequence = vec![[0, 1].into(), [0, 2].into(), [0, 1].into()].into();
        assert!(validate_sequence(art.instance(), &wobble).is_ok());
        assert_eq!(blowup_project(&art, &wobble).unwrap().sets, vec![[0].into()]);
    }

    #[test]
    fn size_bookkeeping() {
        let h = Graph::path(5);
        for d in 1..=3 {
            let art = blowup_reduce(&h, &[0, 2, 4].into(), &[0, 2, 4].into(), d).unwrap();
            assert_eq!(art.instance().source().len(), (d + 1) * 3);
        }
    }
}
