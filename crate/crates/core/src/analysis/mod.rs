//! Decision procedures and bounded searches for the standing hypotheses on a
//! mixed system.

mod degeneracy;
mod primitivity;
mod recognizability;
mod self_correction;

use thiserror::Error;

use crate::symbolic::SymbolicError;

pub use degeneracy::{degeneracy, is_primitive_matrix, Degeneracy, DegeneracyReport};
pub use primitivity::{chacon_product_table, primitivity, Mode, PrimitivityReport, Verdict};
pub use recognizability::{recognizability_radius, RecognizabilityReport, WitnessEntry};
pub use self_correction::{
    self_correction, ComparisonLevel, Junction, LevelCorrection, SelfCorrectionReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error("window must be at least 1")]
    EmptyWindow,
    #[error("length-{length} language at level {level} is only a lower bound at depth {depth}")]
    LanguageInexact {
        level: usize,
        length: usize,
        depth: usize,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
}
