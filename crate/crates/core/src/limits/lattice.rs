use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{LimitsError, StageTower};
use crate::homology::{smith_normal_form, IntMatrix, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitClass {
    AllUnimodular,
    RationalInvertible,
    StagewiseOnly,
}

/// The lattice `C(Z^l)` spanned by the columns of an invertible rational matrix.
#[derive(Clone, Debug, Serialize)]
pub struct RationalLattice {
    pub dimension: usize,
    pub basis: RatMatrix,
    #[serde(skip)]
    inverse: RatMatrix,
}

impl RationalLattice {
    pub fn new(basis: RatMatrix) -> Option<Self> {
        let inverse = basis.inverse()?;
        Some(Self {
            dimension: basis.rows(),
            basis,
            inverse,
        })
    }

    pub fn coordinates(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.inverse.mul_vec(v)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coordinates(v).iter().all(BigRational::is_integer)
    }

    pub fn contains_lattice(&self, other: &RationalLattice) -> bool {
        (0..other.dimension).all(|j| self.contains(&other.basis.column(j)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeLevel {
    pub n: usize,
    pub lattice: RationalLattice,
    /// `[C_n(Z^l) : C_{n-1}(Z^l)]` from the Smith form of the inclusion matrix.
    #[serde(serialize_with = "crate::homology::ser_opt_bigint")]
    pub index_from_previous: Option<BigInt>,
}

/// `lim->(Z^l, A_n)` for connecting matrices `A_n: Z^l -> Z^l` (column convention),
/// realized inside `Q^l` as the union of `C_n(Z^l)` with `C_0 = I`,
/// `C_{n+1} = C_n A_n^{-1}`.
#[derive(Clone, Debug, Serialize)]
pub struct DirectLimitDescriptor {
    pub dimension: usize,
    pub connecting: Vec<IntMatrix>,
    pub class: LimitClass,
    pub window: usize,
    pub lattices: Vec<LatticeLevel>,
    pub nested: bool,
    pub indices_match_determinants: bool,
    /// `(preperiod, period)` when the connecting sequence is known to repeat
    /// beyond the window, which makes structural conclusions exact.
    pub periodic: Option<(usize, usize)>,
    pub isomorphism_type: Option<String>,
    pub semantics: String,
}

impl DirectLimitDescriptor {
    pub fn from_matrices(
        connecting: Vec<IntMatrix>,
        dimension: usize,
        periodic: Option<(usize, usize)>,
    ) -> Result<Self, LimitsError> {
        if let Some(m) = connecting
            .iter()
            .find(|m| m.rows() != dimension || m.cols() != dimension)
        {
            return Err(LimitsError::Dimension {
                expected: dimension,
                found: if m.rows() != dimension {
                    m.rows()
                } else {
                    m.cols()
                },
            });
        }
        let dets: Vec<BigInt> = connecting.iter().map(IntMatrix::determinant).collect();
        let class = if dets.iter().all(|d| d.abs().is_one()) {
            LimitClass::AllUnimodular
        } else if dets.iter().all(|d| !d.is_zero()) {
            LimitClass::RationalInvertible
        } else {
            LimitClass::StagewiseOnly
        };
        let window = connecting.len();
        let mut lattices = Vec::new();
        let mut nested = true;
        let mut indices_match = true;
        if class != LimitClass::StagewiseOnly {
            let mut c = RatMatrix::identity(dimension);
            lattices.push(LatticeLevel {
                n: 0,
                lattice: RationalLattice::new(c.clone()).expect("identity"),
                index_from_previous: None,
            });
            for (n, a) in connecting.iter().enumerate() {
                let inv = a.to_rational().inverse().expect("nonzero determinant");
                c = &c * &inv;
                let next = RationalLattice::new(c.clone()).expect("invertible");
                let prev = &lattices[n].lattice;
                nested &= next.contains_lattice(prev);
                // C_n = C_{n+1} T with T integral exactly when the lattices nest
                let index = (&next.inverse * &prev.basis).to_integer().map(|t| {
                    smith_normal_form(&t)
                        .invariant_factors()
                        .iter()
                        .fold(BigInt::one(), |acc, x| acc * x)
                });
                indices_match &= index.as_ref() == Some(&dets[n].abs());
                lattices.push(LatticeLevel {
                    n: n + 1,
                    lattice: next,
                    index_from_previous: index,
                });
            }
        }
        let exact = periodic.is_some_and(|(pre, per)| per > 0 && pre + per <= window);
        let periodic = periodic.filter(|_| exact);
        let isomorphism_type = match class {
            LimitClass::AllUnimodular if exact => Some(free(dimension)),
            LimitClass::RationalInvertible if exact => {
                diagonal_type(&connecting, dimension, periodic.expect("exact"))
            }
            _ => None,
        };
        let semantics = if exact {
            "exact: connecting sequence repeats past the window".to_string()
        } else {
            format!("verified to depth {window}")
        };
        Ok(Self {
            dimension,
            connecting,
            class,
            window,
            lattices,
            nested,
            indices_match_determinants: indices_match,
            periodic,
            isomorphism_type,
            semantics,
        })
    }

    /// Image of `x` at level `n` in `Q^l`.
    pub fn embed(&self, n: usize, x: &[BigInt]) -> Result<Vec<BigRational>, LimitsError> {
        if self.class == LimitClass::StagewiseOnly {
            return Err(LimitsError::NotInvertible);
        }
        if x.len() != self.dimension {
            return Err(LimitsError::Dimension {
                expected: self.dimension,
                found: x.len(),
            });
        }
        let level = self.lattices.get(n).ok_or(LimitsError::Invariant(format!(
            "level {n} is past the window {}",
            self.window
        )))?;
        let xr: Vec<BigRational> = x.iter().cloned().map(BigRational::from_integer).collect();
        Ok(level.lattice.basis.mul_vec(&xr))
    }

    /// Equality in the limit of `x` at level `n` and `y` at level `m`.
    pub fn equal_in_limit(
        &self,
        (n, x): (usize, &[BigInt]),
        (m, y): (usize, &[BigInt]),
    ) -> Result<bool, LimitsError> {
        Ok(self.embed(n, x)? == self.embed(m, y)?)
    }

    /// Generators of `C_n(Z^l)`, rendered.
    pub fn generators(&self, n: usize) -> Vec<Vec<String>> {
        let Some(level) = self.lattices.get(n) else {
            return Vec::new();
        };
        (0..self.dimension)
            .map(|j| {
                level
                    .lattice
                    .basis
                    .column(j)
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            })
            .collect()
    }
}

fn free(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        1 => "Z".into(),
        r => format!("Z^{r}"),
    }
}

fn primes(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            out.insert(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

/// Coordinatewise `Z[1/N]` when every connecting matrix is diagonal; only the
/// primes recurring in the period block count.
fn diagonal_type(
    connecting: &[IntMatrix],
    dimension: usize,
    (pre, per): (usize, usize),
) -> Option<String> {
    if !connecting.iter().all(IntMatrix::is_diagonal) {
        return None;
    }
    let mut free_rank = 0;
    let mut localized = Vec::new();
    for j in 0..dimension {
        let mut ps = BTreeSet::new();
        for a in &connecting[pre..pre + per] {
            ps.extend(primes(a[(j, j)].abs().to_u64()?));
        }
        if ps.is_empty() {
            free_rank += 1;
        } else {
            let n = ps.iter().product::<u64>();
            localized.push(format!("Z[1/{n}]"));
        }
    }
    let mut parts = Vec::new();
    if free_rank > 0 {
        parts.push(free(free_rank));
    }
    parts.extend(localized);
    Some(parts.join(" ⊕ "))
}

/// The descriptor of `lim->(H^1(K_i, S_i), g_i^*) = lim->(Z^l, M_{s_i}^T)`.
pub fn limit_descriptor(tower: &StageTower) -> DirectLimitDescriptor {
    let periodic = tower
        .system
        .directive()
        .periodic_form()
        .map(|(pre, per)| (pre.len(), per.len()));
    DirectLimitDescriptor::from_matrices(tower.relative_matrices(), tower.dimension(), periodic)
        .expect("relative matrices are l x l")
}

/// Least `n` within the window with `v` in `C_n(Z^l)`.
pub fn lattice_membership(
    desc: &DirectLimitDescriptor,
    v: &[BigRational],
) -> Result<Option<usize>, LimitsError> {
    if desc.class == LimitClass::StagewiseOnly {
        return Err(LimitsError::NotInvertible);
    }
    if v.len() != desc.dimension {
        return Err(LimitsError::Dimension {
            expected: desc.dimension,
            found: v.len(),
        });
    }
    Ok(desc
        .lattices
        .iter()
        .find(|l| l.lattice.contains(v))
        .map(|l| l.n))
}
