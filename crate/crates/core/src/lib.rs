//! Strong central 2-trees with tail degrees in {2,3}.
//!
//! * [`graph`]: small immutable graphs, stacking, 2-tree recognition.
//! * [`degseq`]: graphicality, 2-tree sequences and the closed-form tail
//!   parameters `(x, y)` of a strong `r`-central 2-tree.
//! * [`constructors`]: the fan, book, bicentral and tricentral families.
//! * [`iso`]: canonical forms, σ, and central classification.
//! * [`enumerate`]: isomorph-free generation, census tables and the
//!   theorem audit.

pub mod constructors;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;

pub use degseq::{CentralProfile, CoreSize, DegreeSequence};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, StackingTrace, MAX_VERTICES};
pub use iso::{
    canonical_form, classify_central, is_isomorphic, sigma, CanonicalForm, CentralClassification,
};
