//! Exact integer linear algebra and cohomology of 1-complexes.

mod cohomology;
mod exact;
mod matrix;
mod presentation;
mod snf;

pub use cohomology::{
    coboundary, cohomology, induced_h1, pullback0, pullback1, relative_induced, CohomologyData,
    H1Group, RelativeGroup,
};
pub use exact::{
    euler_bound_check, naturality, EulerReport, ExactnessReport, NaturalityReport, PairData,
};
pub use matrix::{characteristic_polynomial, polynomial_product, IntMatrix, RatMatrix};
pub(crate) use matrix::{ser_bigint, ser_opt_bigint};
pub use presentation::AbelianPresentation;
pub use snf::{smith_normal_form, SmithDecomposition};

use crate::complex::{BDComplex, CellularMap};

/// `g^*` on `H^1(K, S)` in the tile-edge basis; `g` must come from a substitution.
/// The caller compares this with the transposed substitution matrix.
pub fn relative_h1_map(g: &CellularMap, dom: &BDComplex, cod: &BDComplex) -> IntMatrix {
    let up = PairData::of_bd(dom);
    let low = PairData::of_bd(cod);
    relative_induced(g, &up.relative, &low.relative)
}
