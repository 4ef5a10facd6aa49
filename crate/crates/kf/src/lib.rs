//! Kostka-Foulkes polynomials in type A, computed exactly over the integers
//! by three independent routes:
//!
//! 1. the alternating sum of the t-analogue Kostant partition function over
//!    the Weyl group ([`kostant::kf_alternating`]),
//! 2. a positive formula: the fixed points of a sign-reversing involution on
//!    the signed terms, with statistic the number of parts
//!    ([`phi_graph::kf_positive`]),
//! 3. a direct combinatorial characterization of those fixed points by an
//!    admissibility scan on sign words ([`phi_graph::kf_admissible`]),
//!
//! validated against the classical charge statistic on semistandard Young
//! tableaux ([`oracles::kf_charge`]). The [`verify`] module checks the
//! crystal axioms, braid relations, and graph structure exhaustively at
//! small rank, reporting any counterexample as a replayable witness.

pub mod cli;
pub mod crystal_ops;
pub mod error;
pub mod kostant;
pub mod oracles;
pub mod phi_graph;
pub mod root_system;
pub mod verify;

pub use error::{Error, Falsification, Result};
