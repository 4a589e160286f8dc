use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{partial_expansion, PadicError, PadicInteger};
use crate::homology::{smith_normal_form, IntMatrix, RatMatrix};

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn pow3(n: usize) -> BigInt {
    BigInt::from(3).pow(n as u32)
}

/// `(w_n, z_n)` with `w_n = (1,0)` and `z_n = 3^{-n}((0,1) - alpha_{n-1}(1,0))`.
pub fn gr_generators(
    alpha: &PadicInteger,
    n: usize,
) -> Result<(Vec<BigRational>, Vec<BigRational>), PadicError> {
    if n > alpha.precision() {
        return Err(PadicError::PrecisionExceeded {
            requested: n,
            precision: alpha.precision(),
        });
    }
    let prev = partial_expansion(alpha, n as i64 - 1)?;
    let scale = pow3(n);
    let w = vec![BigRational::one(), BigRational::zero()];
    let z = vec![
        BigRational::new(-prev, scale.clone()),
        BigRational::new(BigInt::one(), scale),
    ];
    Ok((w, z))
}

/// Least `n <= depth` with `v` in `A_{alpha,n}`.
pub fn gr_lattice_membership(
    alpha: &PadicInteger,
    v: &[BigRational; 2],
    depth: usize,
) -> Result<Option<usize>, PadicError> {
    if depth > alpha.precision() {
        return Err(PadicError::PrecisionExceeded {
            requested: depth,
            precision: alpha.precision(),
        });
    }
    for n in 0..=depth {
        // v = x w_n + y z_n  =>  y = 3^n v_2,  x = v_1 + v_2 alpha_{n-1}
        let y = &v[1] * rat(pow3(n));
        let x = &v[0] + &v[1] * rat(partial_expansion(alpha, n as i64 - 1)?);
        if x.is_integer() && y.is_integer() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct GrLevel {
    pub n: usize,
    pub w: Vec<String>,
    pub z: Vec<String>,
    /// columns `w_n | z_n`
    #[serde(skip)]
    pub basis: RatMatrix,
}

/// The nested lattices `A_{alpha,0} ⊆ ... ⊆ A_{alpha,depth}`.
#[derive(Clone, Debug, Serialize)]
pub struct GrTower {
    pub alpha: PadicInteger,
    pub levels: Vec<GrLevel>,
}

impl GrTower {
    pub fn build(alpha: &PadicInteger, depth: usize) -> Result<Self, PadicError> {
        let mut levels = Vec::with_capacity(depth + 1);
        for n in 0..=depth {
            let (w, z) = gr_generators(alpha, n)?;
            let basis = RatMatrix::from_fn(
                2,
                2,
                |i, j| if j == 0 { w[i].clone() } else { z[i].clone() },
            );
            levels.push(GrLevel {
                n,
                w: w.iter().map(ToString::to_string).collect(),
                z: z.iter().map(ToString::to_string).collect(),
                basis,
            });
        }
        Ok(Self {
            alpha: alpha.clone(),
            levels,
        })
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn generators(&self, n: usize) -> (Vec<BigRational>, Vec<BigRational>) {
        let b = &self.levels[n].basis;
        (b.column(0), b.column(1))
    }

    /// Checks `z_n = 3 z_{n+1} + eps_n w_{n+1}` for `n < depth`.
    pub fn recurrence_holds(&self, n: usize) -> bool {
        let Ok(eps) = self.alpha.digit(n) else {
            return false;
        };
        let (_, z) = self.generators(n);
        let (w1, z1) = self.generators(n + 1);
        let eps = rat(BigInt::from(eps));
        (0..2).all(|k| z[k] == rat(BigInt::from(3)) * &z1[k] + &eps * &w1[k])
    }

    /// Integer matrix `T` with `C_n = C_{n+1} T`, or `None` if `A_n ⊄ A_{n+1}`.
    pub fn inclusion_matrix(&self, n: usize) -> Option<IntMatrix> {
        let next_inv = self.levels[n + 1].basis.inverse()?;
        (&next_inv * &self.levels[n].basis).to_integer()
    }

    /// `[A_{n+1} : A_n]`, from the Smith form of the inclusion matrix.
    pub fn inclusion_index(&self, n: usize) -> Option<BigInt> {
        let t = self.inclusion_matrix(n)?;
        let dec = smith_normal_form(&t);
        if dec.rank() < 2 {
            return None;
        }
        Some(
            dec.invariant_factors()
                .iter()
                .fold(BigInt::one(), |a, b| a * b),
        )
    }

    /// Every element of `A_n` has second coordinate with denominator dividing `3^n`.
    pub fn projection_denominators_ok(&self, n: usize) -> bool {
        let (w, z) = self.generators(n);
        let bound = pow3(n);
        [&w[1], &z[1]]
            .iter()
            .all(|x| bound.is_multiple_of(x.denom()) && x.denom().is_positive())
    }
}
