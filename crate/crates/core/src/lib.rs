//! Cohomology of one-dimensional mixed substitution tiling spaces, computed
//! through towers of Barge-Diamond complexes, with exact integer and 3-adic
//! arithmetic throughout.

pub mod analysis;
pub mod catalog;
pub mod complex;
pub mod format;
pub mod homology;
pub mod limits;
pub mod padic;
pub mod symbolic;
