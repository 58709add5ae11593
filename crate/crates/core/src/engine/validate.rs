use std::fmt;

use super::{moves, Instance, ReconfigSequence, Rule};
use crate::graph::VertexSet;

/// First reason a sequence fails to be a reconfiguration sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    /// Set at `index` contains a vertex outside the graph.
    OutOfRange {
        index: usize,
    },
    WrongStart,
    WrongEnd,
    NotRegular {
        index: usize,
    },
    /// Step from `index` to `index + 1` is not a single exchange.
    NotSingleExchange {
        index: usize,
    },
    /// Step from `index` to `index + 1` exchanges non-adjacent vertices under TS.
    NotASlide {
        index: usize,
        removed: usize,
        added: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "sequence is empty"),
            Violation::OutOfRange { index } => write!(f, "set {index} has a vertex outside the graph"),
            Violation::WrongStart => write!(f, "wrong start: first set is not the source"),
            Violation::WrongEnd => write!(f, "wrong end: last set is not the target"),
            Violation::NotRegular { index } => write!(f, "set {index} is not d-regular"),
            Violation::NotSingleExchange { index } => {
                write!(f, "step {index}->{} is not a single exchange", index + 1)
            }
            Violation::NotASlide { index, removed, added } => write!(
                f,
                "step {index}->{}: exchanged vertices {removed},{added} nonadjacent",
                index + 1
            ),
        }
    }
}

impl Violation {
    /// Index of the offending set, or of the first set of the offending step.
    pub fn index(&self) -> Option<usize> {
        match *self {
            Violation::Empty | Violation::WrongEnd => None,
            Violation::WrongStart => Some(0),
            Violation::OutOfRange { index }
            | Violation::NotRegular { index }
            | Violation::NotSingleExchange { index }
            | Violation::NotASlide { index, .. } => Some(index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceVerdict {
    pub violation: Option<Violation>,
    /// For the connected variant: whether every set of the sequence is
    /// connected. Informational; always expected to hold for valid sequences.
    pub all_connected: Option<bool>,
}

impl SequenceVerdict {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn validate_sequence(inst: &Instance, seq: &ReconfigSequence) -> SequenceVerdict {
    let violation = first_violation(inst, &seq.sets);
    let all_connected = inst.connected_variant().then(|| {
        seq.sets
            .iter()
            .all(|s| inst.graph().is_connected_set(s).unwrap_or(false))
    });
    SequenceVerdict {
        violation,
        all_connected,
    }
}

fn first_violation(inst: &Instance, sets: &[VertexSet]) -> Option<Violation> {
    let g = inst.graph();
    let Some(first) = sets.first() else {
        return Some(Violation::Empty);
    };
    if first != inst.source() {
        return Some(Violation::WrongStart);
    }
    for (index, set) in sets.iter().enumerate() {
        match g.is_d_regular_set(set, inst.d()) {
            Err(_) => return Some(Violation::OutOfRange { index }),
            Ok(false) => return Some(Violation::NotRegular { index }),
            Ok(true) => {}
        }
        if index > 0 {
            let prev = &sets[index - 1];
            match prev.single_exchange(set) {
                None => return Some(Violation::NotSingleExchange { index: index - 1 }),
                Some((removed, added)) => {
                    if !moves::exchange_allowed(g, inst.rule(), prev, set) {
                        debug_assert_eq!(inst.rule(), Rule::TS);
                        return Some(Violation::NotASlide {
                            index: index - 1,
                            removed,
                            added,
                        });
                    }
                }
            }
        }
    }
    if sets.last() != Some(inst.target()) {
        return Some(Violation::WrongEnd);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn eight_vertex_sequence_is_a_tj_sequence() {
        let inst = fixtures::eight_vertex_instance(Rule::TJ);
        let verdict = validate_sequence(&inst, &fixtures::eight_vertex_sequence());
        assert!(verdict.is_ok(), "{verdict:?}");
        assert_eq!(verdict.all_connected, None);
    }

    #[test]
    fn eight_vertex_sequence_fails_ts_at_first_step() {
        let inst = fixtures::eight_vertex_instance(Rule::TS);
        let verdict = validate_sequence(&inst, &fixtures::eight_vertex_sequence());
        // Labels 6 and 4 are vertices 5 and 3.
        assert_eq!(
            verdict.violation,
            Some(Violation::NotASlide {
                index: 0,
                removed: 5,
                added: 3
            })
        );
    }

    #[test]
    fn reversed_endpoints_fail_at_start() {
        let inst = fixtures::eight_vertex_instance(Rule::TJ);
        let s = fixtures::eight_vertex_sets();
        let seq = ReconfigSequence::new(vec![s[5].clone(), s[0].clone()]);
        assert_eq!(validate_sequence(&inst, &seq).violation, Some(Violation::WrongStart));
    }

    #[test]
    fn other_failures() {
        let inst = fixtures::eight_vertex_instance(Rule::TJ);
        let s = fixtures::eight_vertex_sets();
        let v = |sets: Vec<VertexSet>| validate_sequence(&inst, &ReconfigSequence::new(sets)).violation;
        assert_eq!(v(vec![]), Some(Violation::Empty));
        assert_eq!(v(vec![s[0].clone()]), Some(Violation::WrongEnd));
        assert_eq!(
            v(vec![s[0].clone(), s[2].clone()]),
            Some(Violation::NotSingleExchange { index: 0 })
        );
        assert_eq!(
            v(vec![s[0].clone(), s[0].clone()]),
            Some(Violation::NotSingleExchange { index: 0 })
        );
        assert_eq!(
            v(vec![s[0].clone(), fixtures::eight_vertex_labels(&[1, 2, 4, 6])]),
            Some(Violation::NotRegular { index: 1 })
        );
        assert_eq!(
            v(vec![s[0].clone(), [0, 99].into()]),
            Some(Violation::OutOfRange { index: 1 })
        );
    }

    #[test]
    fn connected_variant_reports_connectivity() {
        let g = crate::Graph::path(4);
        let inst = Instance::new(g, 1, Rule::TJ, [0, 1].into(), [2, 3].into(), true).unwrap();
        let seq = ReconfigSequence::new(vec![[0, 1].into(), [1, 2].into(), [2, 3].into()]);
        let verdict = validate_sequence(&inst, &seq);
        assert!(verdict.is_ok());
        assert_eq!(verdict.all_connected, Some(true));
    }
}
