//! JSON file formats, DOT export and the command-line front end.
//!
//! Every document is a single JSON object; field order is irrelevant and
//! unknown fields are rejected.

pub mod cli;
mod maps;

pub use maps::{reduce_paths, Artifact, MapFile};

use std::fmt::Write as _;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::engine::{Instance, ReconfigSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One reachability question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub d: usize,
    pub rule: Rule,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    #[serde(default)]
    pub connected: bool,
}

/// A graph, optionally carrying the rest of an instance, which is ignored.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub d: Option<usize>,
    #[serde(default)]
    pub rule: Option<Rule>,
    #[serde(default)]
    pub source: Option<Vec<usize>>,
    #[serde(default)]
    pub target: Option<Vec<usize>>,
    #[serde(default)]
    pub connected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub sets: Vec<Vec<usize>>,
}

/// A shortest-path reconfiguration question: two shortest `x`–`y` paths,
/// given as vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathInstanceFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub x: usize,
    pub y: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

pub(crate) fn parse_document<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

pub(crate) fn to_document<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub(crate) fn graph_from_edges(n: usize, edges: &[[usize; 2]]) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::new(n, &pairs)
}

pub(crate) fn edges_of(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

/// Builds a set, rejecting repeated members.
pub(crate) fn strict_set(name: &str, members: &[usize]) -> Result<VertexSet> {
    let set = VertexSet::from(members.to_vec());
    if set.len() != members.len() {
        return Err(Error::invalid(format!("{name} lists a vertex twice")));
    }
    Ok(set)
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<Instance> {
        let graph = graph_from_edges(self.n, &self.edges)?;
        let source = strict_set("source", &self.source)?;
        let target = strict_set("target", &self.target)?;
        Instance::new(graph, self.d, self.rule, source, target, self.connected)
    }

    pub fn from_instance(inst: &Instance) -> Self {
        InstanceFile {
            n: inst.graph().vertex_count(),
            edges: edges_of(inst.graph()),
            d: inst.d(),
            rule: inst.rule(),
            source: inst.source().as_slice().to_vec(),
            target: inst.target().as_slice().to_vec(),
            connected: inst.connected_variant(),
        }
    }
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        graph_from_edges(self.n, &self.edges)
    }
}

impl SequenceFile {
    pub fn into_sequence(self) -> Result<ReconfigSequence> {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, s)| strict_set(&format!("set {i}"), s))
            .collect::<Result<Vec<_>>>()
            .map(ReconfigSequence::new)
    }

    pub fn from_sequence(seq: &ReconfigSequence) -> Self {
        SequenceFile {
            sets: seq.sets.iter().map(|s| s.as_slice().to_vec()).collect(),
        }
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_document::<InstanceFile>(text)?.into_instance()
}

pub fn instance_to_document(inst: &Instance) -> String {
    to_document(&InstanceFile::from_instance(inst))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_document::<GraphFile>(text)?.into_graph()
}

pub fn parse_sequence(text: &str) -> Result<ReconfigSequence> {
    parse_document::<SequenceFile>(text)?.into_sequence()
}

pub fn sequence_to_document(seq: &ReconfigSequence) -> String {
    to_document(&SequenceFile::from_sequence(seq))
}

/// Graphviz text. Without a sequence: one graph. With one: a graph per set,
/// members filled.
pub fn export_dot(g: &Graph, seq: Option<&ReconfigSequence>) -> String {
    let mut out = String::new();
    match seq {
        None => write_dot_graph(&mut out, "G", g, None),
        Some(seq) => {
            for (i, set) in seq.sets.iter().enumerate() {
                write_dot_graph(&mut out, &format!("step_{i}"), g, Some(set));
            }
        }
    }
    out
}

fn write_dot_graph(out: &mut String, name: &str, g: &Graph, marked: Option<&VertexSet>) {
    writeln!(out, "graph {name} {{").unwrap();
    for v in g.vertices() {
        if marked.is_some_and(|m| m.contains(v)) {
            writeln!(out, "  {v} [style=filled, fillcolor=black, fontcolor=white];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    use std::io::Write;
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
