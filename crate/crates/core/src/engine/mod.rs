//! Move semantics, validation and exact decision procedures.

mod fast;
mod moves;
mod oracle;
mod solver;
mod validate;

pub use fast::fast_path;
pub use moves::{adjacent_under, neighbors};
pub use oracle::{
    enumerate_d_regular_sets, enumerate_d_regular_sets_with, oracle_reachable, oracle_reachable_with, MoveGraph,
};
pub use solver::{solve, Solver};
pub use validate::{validate_sequence, SequenceVerdict, Violation};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Reconfiguration rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// Token Jumping: exchange any one vertex.
    TJ,
    /// Token Sliding: exchange one vertex for a neighbour of it.
    TS,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::TJ => "TJ",
            Rule::TS => "TS",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "TJ" => Ok(Rule::TJ),
            "TS" => Ok(Rule::TS),
            other => Err(Error::invalid(format!("unknown rule {other:?} (expected TJ or TS)"))),
        }
    }
}

/// One reachability question between two d-regular sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    d: usize,
    rule: Rule,
    source: VertexSet,
    target: VertexSet,
    connected: bool,
}

impl Instance {
    /// Validates and builds an instance. `connected` selects the variant
    /// that requires nonempty connected endpoints.
    pub fn new(
        graph: Graph,
        d: usize,
        rule: Rule,
        source: VertexSet,
        target: VertexSet,
        connected: bool,
    ) -> Result<Self> {
        graph.check_set(&source)?;
        graph.check_set(&target)?;
        if !graph.is_d_regular_set(&source, d)? {
            return Err(Error::invalid("source not d-regular"));
        }
        if !graph.is_d_regular_set(&target, d)? {
            return Err(Error::invalid("target not d-regular"));
        }
        if source.len() != target.len() {
            return Err(Error::invalid("source and target differ in cardinality"));
        }
        if connected {
            if !graph.is_connected_set(&source)? {
                return Err(Error::invalid("source not connected"));
            }
            if !graph.is_connected_set(&target)? {
                return Err(Error::invalid("target not connected"));
            }
        }
        Ok(Instance {
            graph,
            d,
            rule,
            source,
            target,
            connected,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn source(&self) -> &VertexSet {
        &self.source
    }

    pub fn target(&self) -> &VertexSet {
        &self.target
    }

    pub fn connected_variant(&self) -> bool {
        self.connected
    }

    /// Same question under another rule.
    pub fn with_rule(&self, rule: Rule) -> Instance {
        Instance { rule, ..self.clone() }
    }

    /// Same graph and parameters, new endpoints.
    pub fn with_endpoints(&self, source: VertexSet, target: VertexSet) -> Result<Instance> {
        Instance::new(self.graph.clone(), self.d, self.rule, source, target, self.connected)
    }

    /// Source and target swapped.
    pub fn reversed(&self) -> Instance {
        Instance {
            source: self.target.clone(),
            target: self.source.clone(),
            ..self.clone()
        }
    }
}

/// An ordered list of vertex sets claimed to form a reconfiguration sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconfigSequence {
    pub sets: Vec<VertexSet>,
}

impl ReconfigSequence {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        ReconfigSequence { sets }
    }

    /// Number of moves (one less than the number of sets).
    pub fn moves(&self) -> usize {
        self.sets.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<&VertexSet> {
        self.sets.first()
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.sets.last()
    }

    /// Drops consecutive repeated sets.
    pub fn dedup(mut self) -> Self {
        self.sets.dedup();
        self
    }
}

impl From<Vec<VertexSet>> for ReconfigSequence {
    fn from(sets: Vec<VertexSet>) -> Self {
        ReconfigSequence { sets }
    }
}

/// Outcome of a reachability decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub reachable: bool,
    /// A validated reconfiguration sequence when one was constructed.
    pub witness: Option<ReconfigSequence>,
    /// Number of states (or auxiliary nodes) the procedure visited.
    pub explored: usize,
}

impl Decision {
    pub(crate) fn unreachable(explored: usize) -> Self {
        Decision {
            reachable: false,
            witness: None,
            explored,
        }
    }

    pub(crate) fn found(witness: ReconfigSequence, explored: usize) -> Self {
        Decision {
            reachable: true,
            witness: Some(witness),
            explored,
        }
    }
}

/// Explicit budgets. Running out is reported as [`Error::ResourceLimit`],
/// never as an unreachable answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Distinct states the BFS solver may store.
    pub max_states: usize,
    /// Largest graph the brute-force oracle and set enumeration accept.
    pub oracle_max_vertices: usize,
    /// Largest number of d-regular sets enumeration may produce.
    pub max_enumerated: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 2_000_000,
            oracle_max_vertices: 16,
            max_enumerated: 200_000,
        }
    }
}

impl Limits {
    pub fn with_oracle_vertices(mut self, n: usize) -> Self {
        self.oracle_max_vertices = n;
        self
    }

    pub fn with_max_states(mut self, n: usize) -> Self {
        self.max_states = n;
        self
    }
}
