//! Cellular cohomology of finite 1-complexes.
//!
//! With coboundary `D` (edges x vertices) and Smith form `U D V = diag`, rank
//! `r`, the rows `r..` of `U` are coordinate functionals on `H^1 = coker D` and
//! the columns `r..` of `U^{-1}` are cocycle representatives of a free basis.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, SmithDecomposition};
use crate::complex::{CellComplex, CellularMap};

/// `D[e][v] = +1` at the head, `-1` at the tail (zero for loops).
pub fn coboundary(k: &CellComplex) -> IntMatrix {
    let mut d = IntMatrix::zeros(k.edge_count(), k.vertex_count());
    for (i, e) in k.edges.iter().enumerate() {
        d[(i, e.head)] += BigInt::one();
        d[(i, e.tail)] -= BigInt::one();
    }
    d
}

/// A free group `coker(D)` for a coboundary-type matrix `D`, with explicit
/// coordinates and representatives.
#[derive(Clone, Debug, Serialize)]
pub struct H1Group {
    pub rank: usize,
    /// `rank x cochains`: class coordinates of a cochain.
    pub coordinates: IntMatrix,
    /// `cochains x rank`: representative cochains, one per column.
    pub basis: IntMatrix,
    pub snf: SmithDecomposition,
    pub certificate: bool,
}

impl H1Group {
    /// `coker(d)`; panics if the cokernel has torsion (never for graphs).
    pub fn cokernel(d: &IntMatrix) -> Self {
        let snf = smith_normal_form(d);
        let r = snf.rank();
        assert!(snf.is_saturated(), "coboundary cokernel has torsion");
        let n = d.rows();
        let rows: Vec<usize> = (r..n).collect();
        let all_cols: Vec<usize> = (0..n).collect();
        let coordinates = snf.u.select(&rows, &all_cols);
        let basis = snf.u_inv.select(&all_cols, &rows);
        let rank = n - r;
        let certificate = (&coordinates * d).is_zero()
            && &coordinates * &basis == IntMatrix::identity(rank)
            && snf.verify(d);
        assert!(certificate, "cohomology basis certificate failed");
        Self {
            rank,
            coordinates,
            basis,
            snf,
            certificate,
        }
    }

    pub fn coords(&self, cochain: &[BigInt]) -> Vec<BigInt> {
        self.coordinates.mul_vec(cochain)
    }

    pub fn representative(&self, j: usize) -> Vec<BigInt> {
        self.basis.column(j)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyData {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub h0_rank: usize,
    pub reduced_h0_rank: usize,
    pub h1_rank: usize,
    pub h1: H1Group,
}

pub fn cohomology(k: &CellComplex) -> CohomologyData {
    let d = coboundary(k);
    let h1 = H1Group::cokernel(&d);
    let components = k.component_count();
    let h0_rank = k.vertex_count() - h1.snf.rank();
    assert_eq!(h0_rank, components, "H^0 rank differs from component count");
    assert_eq!(
        h1.rank + k.vertex_count(),
        k.edge_count() + components,
        "rank law"
    );
    CohomologyData {
        vertices: k.vertex_count(),
        edges: k.edge_count(),
        components,
        h0_rank,
        reduced_h0_rank: components.saturating_sub(1),
        h1_rank: h1.rank,
        h1,
    }
}

/// Cochain pullback `C^1(codomain) -> C^1(domain)`, `edges(dom) x edges(cod)`.
pub fn pullback1(g: &CellularMap) -> IntMatrix {
    let counts = g.traversal_counts();
    IntMatrix::from_fn(g.domain.edge_count(), g.codomain.edge_count(), |e, f| {
        BigInt::from(counts[e][f])
    })
}

/// Cochain pullback `C^0(codomain) -> C^0(domain)`.
pub fn pullback0(g: &CellularMap) -> IntMatrix {
    IntMatrix::from_fn(
        g.domain.vertex_count(),
        g.codomain.vertex_count(),
        |v, w| {
            if g.vertex_images[v] == w {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        },
    )
}

/// Matrix of `g^*: H^1(cod) -> H^1(dom)` in the chosen bases.
pub fn induced_h1(g: &CellularMap, dom: &H1Group, cod: &H1Group) -> IntMatrix {
    &(&dom.coordinates * &pullback1(g)) * &cod.basis
}

/// `H^1(K, S)` for a subcomplex given by its cells.
#[derive(Clone, Debug, Serialize)]
pub struct RelativeGroup {
    /// Ambient cells outside the subcomplex, which index relative cochains.
    pub free_vertices: Vec<usize>,
    pub free_edges: Vec<usize>,
    pub group: H1Group,
}

impl RelativeGroup {
    pub fn new(k: &CellComplex, s_vertices: &BTreeSet<usize>, s_edges: &BTreeSet<usize>) -> Self {
        let free_vertices: Vec<usize> = (0..k.vertex_count())
            .filter(|v| !s_vertices.contains(v))
            .collect();
        let free_edges: Vec<usize> = (0..k.edge_count())
            .filter(|e| !s_edges.contains(e))
            .collect();
        let d = coboundary(k).select(&free_edges, &free_vertices);
        Self {
            group: H1Group::cokernel(&d),
            free_vertices,
            free_edges,
        }
    }

    /// True when the relative classes are the free-edge indicator cochains.
    pub fn is_canonical(&self) -> bool {
        self.free_vertices.is_empty()
    }
}

/// `g^*` on relative groups; `g` must carry the subcomplexes into each other.
pub fn relative_induced(g: &CellularMap, dom: &RelativeGroup, cod: &RelativeGroup) -> IntMatrix {
    let p = pullback1(g).select(&dom.free_edges, &cod.free_edges);
    &(&dom.group.coordinates * &p) * &cod.group.basis
}
