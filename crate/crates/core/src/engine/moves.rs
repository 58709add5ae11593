use super::Rule;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Whether two d-regular sets are one move apart under `rule`.
pub fn adjacent_under(g: &Graph, d: usize, rule: Rule, u: &VertexSet, u2: &VertexSet) -> Result<bool> {
    for (name, set) in [("first", u), ("second", u2)] {
        if !g.is_d_regular_set(set, d)? {
            return Err(Error::invalid(format!("{name} set {set} is not {d}-regular")));
        }
    }
    Ok(exchange_allowed(g, rule, u, u2))
}

/// Move test without regularity checks.
pub(crate) fn exchange_allowed(g: &Graph, rule: Rule, u: &VertexSet, u2: &VertexSet) -> bool {
    match u.single_exchange(u2) {
        None => false,
        Some((out, into)) => rule == Rule::TJ || g.has_edge(out, into),
    }
}

/// All d-regular sets one move away from `u`, in lexicographic order.
///
/// Candidates are the exchanges `u \ {out} ∪ {into}`; under TS `into` ranges
/// over the neighbours of `out`. `u` is expected to be d-regular; every
/// returned set is d-regular regardless.
pub fn neighbors(g: &Graph, d: usize, rule: Rule, u: &VertexSet) -> Vec<VertexSet> {
    let members = u.as_slice();
    let inner: Vec<usize> = members.iter().map(|&w| g.degree_into(w, u)).collect();
    let mut out = Vec::new();
    for (i, &removed) in members.iter().enumerate() {
        let candidates: Box<dyn Iterator<Item = usize>> = match rule {
            Rule::TJ => Box::new(g.vertices()),
            Rule::TS => Box::new(g.neighbors(removed).iter().copied()),
        };
        for added in candidates {
            if u.contains(added) {
                continue;
            }
            // Degrees after the exchange, for the survivors and the newcomer.
            let survivors_ok = members.iter().enumerate().all(|(j, &w)| {
                j == i || inner[j] - usize::from(g.has_edge(w, removed)) + usize::from(g.has_edge(w, added)) == d
            });
            if !survivors_ok {
                continue;
            }
            let newcomer = members
                .iter()
                .filter(|&&w| w != removed && g.has_edge(w, added))
                .count();
            if newcomer == d {
                out.push(u.exchange(removed, added));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn eight_vertex_ts_adjacency_only_between_u2_and_u3() {
        let g = fixtures::eight_vertex_graph();
        let sets = fixtures::eight_vertex_sets();
        assert!(adjacent_under(&g, 1, Rule::TS, &sets[2], &sets[3]).unwrap());
        assert!(!adjacent_under(&g, 1, Rule::TS, &sets[0], &sets[1]).unwrap());
        assert!(adjacent_under(&g, 1, Rule::TJ, &sets[0], &sets[1]).unwrap());
    }

    #[test]
    fn adjacency_rejects_non_regular_sets() {
        let g = fixtures::eight_vertex_graph();
        let tri = fixtures::eight_vertex_labels(&[1, 2, 4]);
        assert!(adjacent_under(&g, 1, Rule::TJ, &tri, &tri).is_err());
    }

    #[test]
    fn k2_single_token_jumps() {
        let g = Graph::path(2);
        assert_eq!(neighbors(&g, 0, Rule::TJ, &[0].into()), vec![VertexSet::from([1])]);
    }

    #[test]
    fn eight_vertex_u0_has_no_slides_and_one_jump() {
        let g = fixtures::eight_vertex_graph();
        let sets = fixtures::eight_vertex_sets();
        assert!(neighbors(&g, 1, Rule::TS, &sets[0]).is_empty());
        // Exhaustive check over all sixteen (removed, added) slide pairs, by definition.
        for out in sets[0].iter() {
            for &into in g.neighbors(out) {
                if sets[0].contains(into) {
                    continue;
                }
                assert!(!g.is_d_regular_set(&sets[0].exchange(out, into), 1).unwrap());
            }
        }
        assert_eq!(neighbors(&g, 1, Rule::TJ, &sets[0]), vec![sets[1].clone()]);
    }

    #[test]
    fn neighbors_are_sorted_and_match_filter_definition() {
        let g = fixtures::eight_vertex_graph();
        for rule in [Rule::TJ, Rule::TS] {
            for set in fixtures::eight_vertex_sets() {
                let got = neighbors(&g, 1, rule, &set);
                let mut want = Vec::new();
                for out in set.iter() {
                    for into in g.vertices() {
                        let cand = set.exchange(out, into);
                        if set.contains(into)
                            || (rule == Rule::TS && !g.has_edge(out, into))
                            || !g.is_d_regular_set(&cand, 1).unwrap()
                        {
                            continue;
                        }
                        want.push(cand);
                    }
                }
                want.sort();
                assert_eq!(got, want);
            }
        }
    }
}
