use indexmap::map::Entry;
use indexmap::IndexMap;

use super::{fast_path, moves, Decision, Instance, Limits, ReconfigSequence};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Exact breadth-first solver.
#[derive(Clone, Copy, Debug)]
pub struct Solver {
    pub limits: Limits,
    /// Try the polynomial shortcuts before searching.
    pub fast_paths: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            limits: Limits::default(),
            fast_paths: true,
        }
    }
}

impl Solver {
    pub fn new(limits: Limits) -> Self {
        Solver {
            limits,
            fast_paths: true,
        }
    }

    /// Decides reachability; the witness, when present, is a shortest sequence.
    pub fn solve(&self, inst: &Instance) -> Result<Decision> {
        if self.fast_paths {
            if let Some(decision) = fast_path(inst) {
                return Ok(decision);
            }
        }
        self.search(inst)
    }

    fn search(&self, inst: &Instance) -> Result<Decision> {
        let (g, d, rule) = (inst.graph(), inst.d(), inst.rule());
        // State -> index of the state it was discovered from. Insertion order
        // is BFS order, so the map doubles as the queue.
        let mut parent: IndexMap<VertexSet, usize> = IndexMap::new();
        parent.insert(inst.source().clone(), usize::MAX);
        let mut head = 0;
        let mut goal = (inst.source() == inst.target()).then_some(0);
        while goal.is_none() && head < parent.len() {
            let (current, _) = parent.get_index(head).unwrap();
            for next in moves::neighbors(g, d, rule, current) {
                let is_target = &next == inst.target();
                if let Entry::Vacant(slot) = parent.entry(next) {
                    let idx = slot.index();
                    slot.insert(head);
                    if is_target {
                        goal = Some(idx);
                        break;
                    }
                    if parent.len() > self.limits.max_states {
                        return Err(Error::ResourceLimit(format!(
                            "solver state budget of {} exhausted",
                            self.limits.max_states
                        )));
                    }
                }
            }
            head += 1;
        }
        let explored = parent.len();
        let Some(goal) = goal else {
            return Ok(Decision::unreachable(explored));
        };
        let mut chain = vec![goal];
        loop {
            let (_, &p) = parent.get_index(*chain.last().unwrap()).unwrap();
            if p == usize::MAX {
                break;
            }
            chain.push(p);
        }
        chain.reverse();
        let sets = chain
            .into_iter()
            .map(|i| parent.get_index(i).unwrap().0.clone())
            .collect();
        Ok(Decision::found(ReconfigSequence::new(sets), explored))
    }
}

/// [`Solver::solve`] with default limits and fast paths enabled.
pub fn solve(inst: &Instance) -> Result<Decision> {
    Solver::default().solve(inst)
}
