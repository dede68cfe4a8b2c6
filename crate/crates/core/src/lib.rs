//! Minimal separating graphs of closed orientable surfaces.
//!
//! A graph embedded in a surface is a minimal separating set exactly when the
//! rotation system of the embedding is *two-sided*: its boundary walks split
//! into two families and every edge borders both families. This crate
//! enumerates multigraphs and rotation systems, traces faces, certifies
//! two-sidedness and computes the resulting separating genera. On top of that
//! it classifies the connected minimal separating graphs of genus `g <= 3`
//! and checks the published witness tables.
//!
//! Module map:
//!
//! - [`multigraph`]: loops and parallel edges as dart pairs, canonical codes,
//!   Eulerian circuits, the plain-text graph format.
//! - [`embedding`]: rotation systems, face tracing, enumeration with loop
//!   parity pruning, the rotation text format.
//! - [`separation`]: two-sided certificates, separating genus, least and
//!   largest separated genus, cellular genus range.
//! - [`classify`]: candidate generation, the `I_g` pipeline and the `L_g` and
//!   `G_g` roll-ups.
//! - [`tables`]: embedded witness tables and their verification.
//! - [`cli`]: the command-line front end used by the `minsep` binary.

pub mod classify;
pub mod cli;
pub mod embedding;
mod error;
pub mod multigraph;
pub mod separation;
pub mod tables;

pub use classify::{ClassificationReport, CountMode};
pub use embedding::{FaceDecomposition, RotationSystem};
pub use error::{Error, Result};
pub use multigraph::{CanonicalCode, Dart, Multigraph};
pub use separation::{SeparatedGenus, TwoSidedCertificate};
