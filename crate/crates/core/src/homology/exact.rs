//! The four-term sequence `0 → H̃^0(S) → H^1(K,S) → H^1(K) → H^1(S) → 0` of a
//! pair, its integral exactness, and naturality under cellular maps.
//!
//! The left term is taken as `coker(H^0(K) → H^0(S))`, which is `H̃^0(S)` when
//! `K` is connected and `S` nonempty, and zero when `S` is empty.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::cohomology::{
    coboundary, cohomology, induced_h1, relative_induced, CohomologyData, RelativeGroup,
};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::complex::{BDComplex, CellComplex, CellularMap, Subcomplex};

/// Cohomology of `K`, of its vertex-edge subcomplex `S`, of the pair, and the
/// three maps of the sequence.
#[derive(Clone, Debug, Serialize)]
pub struct PairData {
    pub k: CohomologyData,
    pub s: CohomologyData,
    pub relative: RelativeGroup,
    /// `S`-component of each `S` vertex
    #[serde(skip)]
    s_components: Vec<usize>,
    /// For each `S` component: its `K` component
    #[serde(skip)]
    k_of_s: Vec<usize>,
    /// `S` components indexing the left term (all but the first in each `K` component)
    pub left_basis: Vec<usize>,
    /// `S` component chosen as the reference in each `K` component meeting `S`
    #[serde(skip)]
    anchors: Vec<Option<usize>>,
    #[serde(skip)]
    subcomplex: Subcomplex,
    /// `H̃^0(S) → H^1(K,S)`
    pub a: IntMatrix,
    /// `H^1(K,S) → H^1(K)`
    pub b: IntMatrix,
    /// `H^1(K) → H^1(S)`
    pub c: IntMatrix,
}

fn vertex_edge_subcomplex(k: &CellComplex) -> Subcomplex {
    let edges = (0..k.edge_count())
        .filter(|&e| k.edges[e].label.is_vertex_edge())
        .collect();
    k.edge_subcomplex(&edges)
}

impl PairData {
    pub fn of_bd(k: &BDComplex) -> Self {
        Self::new(k.cells())
    }

    pub fn new(k: &CellComplex) -> Self {
        let sub = vertex_edge_subcomplex(k);
        let kd = cohomology(k);
        let sd = cohomology(&sub.complex);
        let s_vertices: BTreeSet<usize> = sub.vertex_map.iter().copied().collect();
        let s_edges: BTreeSet<usize> = sub.edge_map.iter().copied().collect();
        let relative = RelativeGroup::new(k, &s_vertices, &s_edges);

        let s_components = sub.complex.components();
        let k_components = k.components();
        let ns = sd.components;
        let mut k_of_s = vec![0; ns];
        for (local, &amb) in sub.vertex_map.iter().enumerate() {
            k_of_s[s_components[local]] = k_components[amb];
        }
        let mut anchors = vec![None; kd.components];
        let mut left_basis = Vec::new();
        for c in 0..ns {
            match anchors[k_of_s[c]] {
                None => anchors[k_of_s[c]] = Some(c),
                Some(_) => left_basis.push(c),
            }
        }

        let d = coboundary(k);
        // A: indicator of an S component, extended by zero, then δ_K on free edges
        let a_cols: Vec<Vec<BigInt>> = left_basis
            .iter()
            .map(|&c| {
                let f: Vec<BigInt> = (0..k.vertex_count())
                    .map(|v| match sub.vertex_map.binary_search(&v) {
                        Ok(local) if s_components[local] == c => BigInt::one(),
                        _ => BigInt::zero(),
                    })
                    .collect();
                let df = d.mul_vec(&f);
                let rel: Vec<BigInt> = relative.free_edges.iter().map(|&e| df[e].clone()).collect();
                relative.group.coords(&rel)
            })
            .collect();
        let a = columns(relative.group.rank, &a_cols);

        let b_cols: Vec<Vec<BigInt>> = (0..relative.group.rank)
            .map(|j| {
                let rep = relative.group.representative(j);
                let mut full = vec![BigInt::zero(); k.edge_count()];
                for (i, &e) in relative.free_edges.iter().enumerate() {
                    full[e] = rep[i].clone();
                }
                kd.h1.coords(&full)
            })
            .collect();
        let b = columns(kd.h1_rank, &b_cols);

        let c_cols: Vec<Vec<BigInt>> = (0..kd.h1_rank)
            .map(|j| {
                let rep = kd.h1.representative(j);
                let restricted: Vec<BigInt> =
                    sub.edge_map.iter().map(|&e| rep[e].clone()).collect();
                sd.h1.coords(&restricted)
            })
            .collect();
        let c = columns(sd.h1_rank, &c_cols);

        Self {
            k: kd,
            s: sd,
            relative,
            s_components,
            k_of_s,
            left_basis,
            anchors,
            subcomplex: sub,
            a,
            b,
            c,
        }
    }

    pub fn left_rank(&self) -> usize {
        self.left_basis.len()
    }

    /// Coordinates in the left term of a function on `S` components.
    fn left_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.left_basis
            .iter()
            .map(|&c| {
                let anchor = self.anchors[self.k_of_s[c]].expect("anchored");
                &x[c] - &x[anchor]
            })
            .collect()
    }

    pub fn subcomplex(&self) -> &Subcomplex {
        &self.subcomplex
    }

    pub fn exactness(&self) -> ExactnessReport {
        exactness_of(self)
    }
}

fn columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    /// `[H̃^0(S), H^1(K,S), H^1(K), H^1(S)]`
    pub dimensions: [usize; 4],
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_c: usize,
    pub a_injective: bool,
    pub exact_at_relative: bool,
    pub exact_at_k: bool,
    pub c_surjective: bool,
    pub compositions_vanish: bool,
    pub passed: bool,
}

fn rank_and_saturation(m: &IntMatrix) -> (usize, bool) {
    let snf = smith_normal_form(m);
    (snf.rank(), snf.is_saturated())
}

fn exactness_of(p: &PairData) -> ExactnessReport {
    let dims = [
        p.left_rank(),
        p.relative.group.rank,
        p.k.h1_rank,
        p.s.h1_rank,
    ];
    let (ra, sat_a) = rank_and_saturation(&p.a);
    let (rb, sat_b) = rank_and_saturation(&p.b);
    let (rc, sat_c) = rank_and_saturation(&p.c);
    let compositions_vanish = (&p.b * &p.a).is_zero() && (&p.c * &p.b).is_zero();
    // with the compositions zero, a saturated image of full kernel rank is the kernel
    let exact_at_relative = compositions_vanish && sat_a && ra + rb == dims[1];
    let exact_at_k = compositions_vanish && sat_b && rb + rc == dims[2];
    let a_injective = ra == dims[0];
    let c_surjective = rc == dims[3] && sat_c;
    ExactnessReport {
        dimensions: dims,
        rank_a: ra,
        rank_b: rb,
        rank_c: rc,
        a_injective,
        exact_at_relative,
        exact_at_k,
        c_surjective,
        compositions_vanish,
        passed: a_injective && exact_at_relative && exact_at_k && c_surjective,
    }
}

/// Vertical maps induced by `g: K' → K` (contravariant, `K → K'`) and the
/// commutation of the three squares.
#[derive(Clone, Debug, Serialize)]
pub struct NaturalityReport {
    pub left: IntMatrix,
    pub relative: IntMatrix,
    pub absolute: IntMatrix,
    pub restricted: IntMatrix,
    pub square_a: bool,
    pub square_b: bool,
    pub square_c: bool,
    pub passed: bool,
}

/// `g` maps `upper`'s complex to `lower`'s; `g_s` is its restriction to the
/// vertex subcomplexes.
pub fn naturality(
    g: &CellularMap,
    g_s: &CellularMap,
    upper: &PairData,
    lower: &PairData,
) -> NaturalityReport {
    // left term: a component indicator pulls back to the sum of the components mapping into it
    let up_sub = upper.subcomplex();
    let low_sub = lower.subcomplex();
    let ns_up = upper.s.components;
    let left_cols: Vec<Vec<BigInt>> = lower
        .left_basis
        .iter()
        .map(|&c| {
            let mut x = vec![BigInt::zero(); ns_up];
            let mut hit = vec![false; ns_up];
            for (local, &v) in up_sub.vertex_map.iter().enumerate() {
                let comp = upper.s_components[local];
                if hit[comp] {
                    continue;
                }
                hit[comp] = true;
                let image = g.vertex_images[v];
                let low_local = low_sub
                    .vertex_map
                    .binary_search(&image)
                    .expect("g maps S into S");
                if lower.s_components[low_local] == c {
                    x[comp] = BigInt::one();
                }
            }
            upper.left_coords(&x)
        })
        .collect();
    let left = columns(upper.left_rank(), &left_cols);
    let relative = relative_induced(g, &upper.relative, &lower.relative);
    let absolute = induced_h1(g, &upper.k.h1, &lower.k.h1);
    let restricted = induced_h1(g_s, &upper.s.h1, &lower.s.h1);
    let square_a = &upper.a * &left == &relative * &lower.a;
    let square_b = &upper.b * &relative == &absolute * &lower.b;
    let square_c = &upper.c * &absolute == &restricted * &lower.c;
    NaturalityReport {
        left,
        relative,
        absolute,
        restricted,
        passed: square_a && square_b && square_c,
        square_a,
        square_b,
        square_c,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub d: usize,
    pub rank: usize,
    pub bound: usize,
    pub euler_characteristic: i64,
    pub euler_lower_bound: i64,
    pub holds: bool,
}

/// `rank H^1(K) <= d^2 - d + 1` and `V - E >= d - d^2`.
pub fn euler_bound_check(k: &BDComplex) -> EulerReport {
    let d = k.alphabet().size();
    let data = cohomology(k.cells());
    let bound = d * d - d + 1;
    let chi = data.vertices as i64 - data.edges as i64;
    let lower = d as i64 - (d * d) as i64;
    EulerReport {
        d,
        rank: data.h1_rank,
        bound,
        euler_characteristic: chi,
        euler_lower_bound: lower,
        holds: data.h1_rank <= bound && chi >= lower,
    }
}
