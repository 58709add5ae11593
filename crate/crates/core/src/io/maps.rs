//! Sidecar map files written next to reduced instances.
//!
//! A map stores the source problem together with the correspondence tables
//! of the construction. Loading rebuilds the reduction from the source and
//! rejects the file unless every stored table matches.

use serde::{Deserialize, Serialize};

use super::{edges_of, graph_from_edges, strict_set, PathInstanceFile};
use crate::engine::{Instance, ReconfigSequence};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::reductions::{
    blowup_lift, blowup_project, blowup_reduce, pendant_lift, pendant_project, pendant_reduce, spr_lift,
    spr_preprocess, spr_project, spr_reduce, BlowupArtifact, PendantArtifact, SprArtifact, SprMode,
};

/// An independent set reconfiguration source: graph plus two sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetPairSource {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlowupMap {
    pub d: usize,
    pub input: SetPairSource,
    /// `families[v]` lists the output vertices standing in for `v`.
    pub families: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetBlock {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SprMap {
    pub d: usize,
    pub input: PathInstanceFile,
    /// Input identity of each kept vertex; output vertex `i < original.len()`
    /// is `original[i]`.
    pub original: Vec<usize>,
    pub r: usize,
    pub length: usize,
    /// `V_1, ..., V_L` in output identities.
    pub layers: Vec<Vec<usize>>,
    pub return_path: Vec<usize>,
    pub blocks: Vec<GadgetBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PendantMap {
    pub input: SetPairSource,
    /// `pendants[v]` is the pendant attached to `v`.
    pub pendants: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MapFile {
    Blowup(BlowupMap),
    Spr(SprMap),
    SprTs(SprMap),
    Pendant(PendantMap),
}

/// A reduction artifact of any kind.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Blowup(BlowupArtifact),
    /// The shortest-path artifact keeps its unpruned input for the map file.
    Spr(SprArtifact, PathInstanceFile),
    Pendant(PendantArtifact),
}

fn set_pair(g: &crate::graph::Graph, s: &VertexSet, t: &VertexSet) -> SetPairSource {
    SetPairSource {
        n: g.vertex_count(),
        edges: edges_of(g),
        source: s.as_slice().to_vec(),
        target: t.as_slice().to_vec(),
    }
}

impl Artifact {
    pub fn instance(&self) -> &Instance {
        match self {
            Artifact::Blowup(a) => a.instance(),
            Artifact::Spr(a, _) => a.instance(),
            Artifact::Pendant(a) => a.instance(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Blowup(_) => "blowup",
            Artifact::Spr(a, _) if a.mode() == SprMode::TjBipartite => "spr",
            Artifact::Spr(..) => "spr-ts",
            Artifact::Pendant(_) => "pendant",
        }
    }

    pub fn to_map(&self) -> MapFile {
        match self {
            Artifact::Blowup(a) => {
                let src = a.source_instance();
                MapFile::Blowup(BlowupMap {
                    d: a.d(),
                    input: set_pair(src.graph(), src.source(), src.target()),
                    families: src.graph().vertices().map(|v| a.family(v).into_vec()).collect(),
                })
            }
            Artifact::Pendant(a) => {
                let src = a.source_instance();
                let (side_a, side_b) = a.bipartition();
                MapFile::Pendant(PendantMap {
                    input: set_pair(src.graph(), src.source(), src.target()),
                    pendants: src.graph().vertices().map(|v| a.pendant(v)).collect(),
                    side_a: side_a.as_slice().to_vec(),
                    side_b: side_b.as_slice().to_vec(),
                })
            }
            Artifact::Spr(a, input) => {
                let layout = a.layout();
                let map = SprMap {
                    d: a.d(),
                    input: input.clone(),
                    original: layout.original().to_vec(),
                    r: layout.r(),
                    length: a.length(),
                    layers: a.layer_sets().iter().map(|s| s.as_slice().to_vec()).collect(),
                    return_path: a.return_path().to_vec(),
                    blocks: a
                        .blocks()
                        .iter()
                        .map(|(x, y)| GadgetBlock {
                            a: x.as_slice().to_vec(),
                            b: y.as_slice().to_vec(),
                        })
                        .collect(),
                };
                match a.mode() {
                    SprMode::TjBipartite => MapFile::Spr(map),
                    SprMode::TsCliqueLayers => MapFile::SprTs(map),
                }
            }
        }
    }

    /// Rebuilds the artifact and checks it against the stored tables.
    pub fn from_map(map: &MapFile) -> Result<Artifact> {
        let rebuilt = match map {
            MapFile::Blowup(m) => {
                let h = graph_from_edges(m.input.n, &m.input.edges)?;
                let (s, t) = (
                    strict_set("source", &m.input.source)?,
                    strict_set("target", &m.input.target)?,
                );
                Artifact::Blowup(blowup_reduce(&h, &s, &t, m.d)?)
            }
            MapFile::Pendant(m) => {
                let h = graph_from_edges(m.input.n, &m.input.edges)?;
                let (s, t) = (
                    strict_set("source", &m.input.source)?,
                    strict_set("target", &m.input.target)?,
                );
                Artifact::Pendant(pendant_reduce(&h, &s, &t)?)
            }
            MapFile::Spr(m) => reduce_paths(&m.input, m.d, SprMode::TjBipartite)?,
            MapFile::SprTs(m) => reduce_paths(&m.input, m.d, SprMode::TsCliqueLayers)?,
        };
        if &rebuilt.to_map() != map {
            return Err(Error::invalid(
                "map tables do not match the reduction of the stored input",
            ));
        }
        Ok(rebuilt)
    }

    /// Source-side sequence to reduced-side sequence. Shortest-path
    /// sequences use input identities.
    pub fn lift(&self, seq: &ReconfigSequence) -> Result<ReconfigSequence> {
        match self {
            Artifact::Blowup(a) => blowup_lift(a, seq),
            Artifact::Pendant(a) => pendant_lift(a, seq),
            Artifact::Spr(a, _) => {
                let paths = seq
                    .sets
                    .iter()
                    .map(|p| a.layout().to_layout(p))
                    .collect::<Result<Vec<_>>>()?;
                spr_lift(a, &paths)
            }
        }
    }

    pub fn project(&self, seq: &ReconfigSequence) -> Result<ReconfigSequence> {
        match self {
            Artifact::Blowup(a) => blowup_project(a, seq),
            Artifact::Pendant(a) => pendant_project(a, seq),
            Artifact::Spr(a, _) => {
                let paths = spr_project(a, seq)?;
                Ok(ReconfigSequence::new(
                    paths.iter().map(|p| a.layout().to_original(p)).collect(),
                ))
            }
        }
    }
}

/// Preprocesses and reduces a shortest-path instance file.
pub fn reduce_paths(input: &PathInstanceFile, d: usize, mode: SprMode) -> Result<Artifact> {
    let h = graph_from_edges(input.n, &input.edges)?;
    let (s, t) = (
        strict_set("source", &input.source)?,
        strict_set("target", &input.target)?,
    );
    let layout = spr_preprocess(&h, input.x, input.y, &s, &t)?;
    Ok(Artifact::Spr(spr_reduce(&layout, d, mode)?, input.clone()))
}
