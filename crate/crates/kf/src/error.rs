//! Error and falsification-report types shared across the crate.

use serde::Serialize;

/// A runtime-checked mathematical contract was violated.
///
/// The graph and involution constructions rest on theorems (and two
/// computer-tested conjectures). Rather than silently producing garbage when
/// one of them fails on an instance, the construction emits a replayable
/// witness: the instance parameters, what kind of contract broke, and the
/// offending data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Falsification {
    /// Instance parameters, e.g. `lambda=(2,2,0,0) mu=(1,1,1,1) n=4`.
    pub instance: String,
    /// Which contract broke, e.g. `psi-not-involution`.
    pub kind: String,
    /// Replayable witness data.
    pub witness: String,
}

impl std::fmt::Display for Falsification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] instance {} witness {}",
            self.kind, self.instance, self.witness
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid rank n={0}: need n >= 2")]
    InvalidRank(usize),
    #[error("weight {0} is not dominant")]
    NonDominant(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("size mismatch: |lambda| = {0} but |mu| = {1}")]
    SizeMismatch(i64, i64),
    #[error("content {0} is not a partition")]
    NonPartitionContent(String),
    #[error("cannot parse weight '{0}': expected comma-separated integers")]
    ParseWeight(String),
    /// A theorem-level contract failed on a concrete instance. Not a usage
    /// error: callers should surface the witness (the CLI exits with code 2).
    #[error("falsification: {0}")]
    Falsified(Falsification),
}

pub type Result<T> = std::result::Result<T, Error>;
