//! Towers of Barge-Diamond complexes, their direct limits as unions of
//! rational lattices, the inverse limit of the vertex subcomplexes, and the
//! assembled first cohomology.

mod assemble;
mod lattice;
mod tower;
mod xi;

use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::complex::ComplexError;
use crate::symbolic::SymbolicError;

pub use assemble::{assemble_h1, Assembly, ChaconLimit, H1Report, SplitCheck};
pub use lattice::{
    lattice_membership, limit_descriptor, DirectLimitDescriptor, LatticeLevel, LimitClass,
    RationalLattice,
};
pub use tower::{build_tower, Connecting, Stage, StageTower, TowerOptions};
pub use xi::{xi_analysis, XiComplex, XiMethod, XiReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitsError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("two-letter language at level {level} is only a lower bound at depth {depth}")]
    LanguageInexact { level: usize, depth: usize },
    #[error("not weakly primitive: level {level} has no positive product")]
    NotPrimitive { level: usize },
    #[error("weak primitivity undecided within window {window}; pass a waiver to proceed")]
    PrimitivityUnknown { window: usize },
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("lattice operations need an invertible tower")]
    NotInvertible,
    #[error("invariant violated: {0}")]
    Invariant(String),
}
