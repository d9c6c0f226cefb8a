//! Genus-two Heegaard splittings as R-R diagrams.
//!
//! An R-R diagram encodes a genus-two Heegaard diagram as two labeled
//! hexagons (the handles, separated by a curve Γ) joined by non-crossing
//! strands in an annulus. This crate provides:
//!
//! - exact arithmetic on words and cyclic words in small free groups,
//!   Whitehead automorphisms, and primitivity / proper-power tests
//!   ([`words`], [`whitehead`]);
//! - finite presentations with a Tietze engine (generator elimination,
//!   relabeling, relator inversion) and syllable statistics
//!   ([`presentation`]);
//! - the R-R diagram data model with a canonical JSON file format,
//!   validation, relator extraction, complexity, synthesis from a minimal
//!   presentation, dual words, and diagram graphs ([`diagram`]);
//! - machine-checkable certificates: rectangle/SUMS witnesses, (SF,PP) pair
//!   witnesses, distance brackets, and the non-homeomorphism comparison
//!   ([`certify`]);
//! - batch reports used by the `heegaard-rr` command-line tool ([`report`]).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod abelian;
pub mod certify;
pub mod christoffel;
pub mod diagram;
pub mod presentation;
pub mod report;
pub mod whitehead;
pub mod words;

pub use words::{BasisMap, CyclicWord, Generator, Letter, Word};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {0} is not mapped by the substitution")]
    UnmappedGenerator(char),
    #[error("{0}")]
    Presentation(String),
    /// A diagram file violated the schema; the path names the offending field.
    #[error("schema violation at {path}: {detail}")]
    Schema { path: String, detail: String },
    /// A structurally well-formed diagram violated a named invariant.
    #[error("invariant `{name}` violated: {detail}")]
    Invariant { name: &'static str, detail: String },
    #[error("{0}")]
    Certify(String),
    #[error("search exceeded cap of {cap} visited states")]
    SearchCapExceeded { cap: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
