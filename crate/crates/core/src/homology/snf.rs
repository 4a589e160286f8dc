//! Smith normal form with unimodular transforms.
//!
//! Pivot rule: within the active submatrix pick the entry of smallest nonzero
//! absolute value, ties broken by lowest row then lowest column.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::IntMatrix;

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
///
/// The inverses of both transforms are carried along so callers can move between
/// coordinates and representatives without a separate inversion.
#[derive(Clone, Debug, Serialize)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    #[serde(skip)]
    pub u_inv: IntMatrix,
    #[serde(skip)]
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// True when every nonzero invariant factor is 1, i.e. the image is a saturated sublattice.
    pub fn is_saturated(&self) -> bool {
        self.invariant_factors().iter().all(One::is_one)
    }

    /// Checks the full certificate against `m`: the product identity, the
    /// divisibility chain, and `|det U| = |det V| = 1`.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let prod = &(&self.u * m) * &self.v;
        if prod != self.d || !self.d.is_diagonal() {
            return false;
        }
        let f = self.invariant_factors();
        let n = self.d.rows().min(self.d.cols());
        if (f.len()..n).any(|i| !self.d[(i, i)].is_zero()) {
            return false;
        }
        if f.iter().any(|x| !x.is_positive()) || f.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return false;
        }
        self.u.determinant().abs().is_one() && self.v.determinant().abs().is_one()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let t = m[(i, c)].clone();
                m[(i, c)] = m[(j, c)].clone();
                m[(j, c)] = t;
            }
        }
        let ui = &mut self.u_inv;
        for r in 0..ui.rows() {
            let t = ui[(r, i)].clone();
            ui[(r, i)] = ui[(r, j)].clone();
            ui[(r, j)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows() {
                let t = m[(r, i)].clone();
                m[(r, i)] = m[(r, j)].clone();
                m[(r, j)] = t;
            }
        }
        let vi = &mut self.v_inv;
        for c in 0..vi.cols() {
            let t = vi[(i, c)].clone();
            vi[(i, c)] = vi[(j, c)].clone();
            vi[(j, c)] = t;
        }
    }

    /// row_target += q * row_src
    fn add_row(&mut self, target: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let t = &m[(src, c)] * q;
                m[(target, c)] += t;
            }
        }
        // inverse: col_src -= q * col_target
        let ui = &mut self.u_inv;
        for r in 0..ui.rows() {
            let t = &ui[(r, target)] * q;
            ui[(r, src)] -= t;
        }
    }

    /// col_target += q * col_src
    fn add_col(&mut self, target: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows() {
                let t = &m[(r, src)] * q;
                m[(r, target)] += t;
            }
        }
        // inverse: row_src -= q * row_target
        let vi = &mut self.v_inv;
        for c in 0..vi.cols() {
            let t = &vi[(target, c)] * q;
            vi[(src, c)] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols() {
                let t = -m[(i, c)].clone();
                m[(i, c)] = t;
            }
        }
        let ui = &mut self.u_inv;
        for r in 0..ui.rows() {
            let t = -ui[(r, i)].clone();
            ui[(r, i)] = t;
        }
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Computes the Smith normal form of `m`. The certificate is checked before returning.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    'outer: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = w.pivot(t) else {
                break 'outer;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = w.a[(i, t)].div_rem(&p);
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = w.a[(t, j)].div_rem(&p);
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&w.a[(i, j)] % &p).is_zero());
            match offender {
                Some((i, _)) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    let dec = SmithDecomposition {
        u: w.u,
        d: w.a,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    };
    assert!(
        &(&dec.u * m) * &dec.v == dec.d
            && &dec.u * &dec.u_inv == IntMatrix::identity(rows)
            && &dec.v * &dec.v_inv == IntMatrix::identity(cols),
        "Smith normal form certificate failed for {m}"
    );
    dec
}
