//! Hardness reductions as executable constructions.
//!
//! Each family builds an instance from a source problem and carries the
//! vertex correspondence needed to lift source sequences forward and to
//! project target sequences back.

pub mod blowup;
pub mod pendant;
pub mod spr;

pub use blowup::{blowup_lift, blowup_project, blowup_reduce, blowup_tj_to_ts, BlowupArtifact};
pub use pendant::{pendant_lift, pendant_project, pendant_reduce, PendantArtifact};
pub use spr::{
    shortest_path_sets, spr_lift, spr_oracle, spr_preprocess, spr_project, spr_reduce, LayeredSource, SprArtifact,
    SprMode,
};

use crate::engine::{validate_sequence, Instance, ReconfigSequence};
use crate::error::{Error, Result};

/// Rejects sequences that are not valid on `inst`.
fn require_valid(inst: &Instance, seq: &ReconfigSequence) -> Result<()> {
    match validate_sequence(inst, seq).violation {
        None => Ok(()),
        Some(v) => Err(Error::InvalidSequence(v)),
    }
}

/// A sequence produced by a construction must validate; anything else is a bug.
fn ensure_produced_valid(inst: &Instance, seq: &ReconfigSequence, what: &str) -> Result<()> {
    match validate_sequence(inst, seq).violation {
        None => Ok(()),
        Some(v) => Err(Error::internal(format!("{what} produced an invalid sequence: {v}"))),
    }
}
