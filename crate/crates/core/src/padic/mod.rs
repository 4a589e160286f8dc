//! Exact 3-adic arithmetic on rationals and finite digit streams, the
//! Goodearl-Rushing lattice tower, and the countable family of candidate
//! isomorphs of a tower.

mod candidates;
mod conjugation;
mod gr;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub use candidates::{candidate_isomorphs, Candidate, CandidateReport, MoebiusParams};
pub use conjugation::{
    chacon_conjugation_check, chacon_conjugator, chacon_conjugator_inverse, gr_matrix,
    ConjugationIdentity, ConjugationReport,
};
pub use gr::{gr_generators, gr_lattice_membership, GrLevel, GrTower};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    #[error("{value} is not a 3-adic integer (valuation {valuation})")]
    NegativeValuation { value: String, valuation: i64 },
    #[error("digit {requested} requested but only {precision} digits are known")]
    PrecisionExceeded { requested: usize, precision: usize },
    #[error("digit {0} is not in {{0,1,2}}")]
    InvalidDigit(u8),
}

fn three() -> BigInt {
    BigInt::from(3)
}

/// 3-adic valuation; `None` stands for +infinity (x = 0).
pub fn valuation3(x: &BigRational) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let count = |n: &BigInt| {
        let mut n = n.abs();
        let mut v = 0i64;
        let t = three();
        while (&n % &t).is_zero() {
            n /= &t;
            v += 1;
        }
        v
    };
    Some(count(x.numer()) - count(x.denom()))
}

/// `|x|_3 = 3^{-v_3(x)}`, with `|0|_3 = 0`.
pub fn abs3(x: &BigRational) -> BigRational {
    match valuation3(x) {
        None => BigRational::zero(),
        Some(v) if v >= 0 => BigRational::new(BigInt::one(), three().pow(v as u32)),
        Some(v) => BigRational::from_integer(three().pow((-v) as u32)),
    }
}

pub fn dist3(x: &BigRational, y: &BigRational) -> BigRational {
    abs3(&(x - y))
}

/// One 3-adic digit step on `a/q`: returns `(digit, next numerator)` for
/// `a/q = digit + 3 * (next/q)`. Requires `gcd(q, 3) = 1`, `q > 0`.
fn digit_step(a: &BigInt, q: &BigInt) -> (u8, BigInt) {
    // q^{-1} mod 3 equals q mod 3 since 1*1 = 2*2 = 1 mod 3
    let qinv = q.mod_floor(&three());
    let eps = (a * &qinv).mod_floor(&three());
    let next = (a - &eps * q) / three();
    (eps.to_u8().expect("digit"), next)
}

fn check_integral(value: &BigRational) -> Result<(), PadicError> {
    match valuation3(value) {
        Some(v) if v < 0 => Err(PadicError::NegativeValuation {
            value: value.to_string(),
            valuation: v,
        }),
        _ => Ok(()),
    }
}

/// The eventually periodic digit expansion of a rational 3-adic integer, as
/// (preperiod, period). Zero gives `([], [0])`.
pub fn digit_cycle(value: &BigRational) -> Result<(Vec<u8>, Vec<u8>), PadicError> {
    check_integral(value)?;
    let q = value.denom().clone();
    let mut a = value.numer().clone();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&start) = seen.get(&a) {
            let period = digits.split_off(start);
            return Ok((digits, period));
        }
        seen.insert(a.clone(), digits.len());
        let (eps, next) = digit_step(&a, &q);
        digits.push(eps);
        a = next;
    }
}

/// A 3-adic integer known to finite precision, least significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicInteger {
    digits: Vec<u8>,
    exact: Option<BigRational>,
}

impl PadicInteger {
    /// A bare digit prefix; precision equals its length.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, PadicError> {
        if let Some(&d) = digits.iter().find(|&&d| d > 2) {
            return Err(PadicError::InvalidDigit(d));
        }
        Ok(Self {
            digits,
            exact: None,
        })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn digit(&self, k: usize) -> Result<u8, PadicError> {
        self.digits
            .get(k)
            .copied()
            .ok_or(PadicError::PrecisionExceeded {
                requested: k,
                precision: self.digits.len(),
            })
    }

    /// The representative `sum eps_k 3^k` of the known digits, in `[0, 3^N)`.
    pub fn residue(&self) -> BigInt {
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * three() + BigInt::from(d))
    }

    /// Same value at lower precision.
    pub fn truncate(&self, n: usize) -> Self {
        Self {
            digits: self.digits[..n.min(self.digits.len())].to_vec(),
            exact: self.exact.clone(),
        }
    }
}

impl fmt::Display for PadicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.digits.iter().map(u8::to_string).collect();
        write!(f, "({},…)@N={}", body.join(","), self.digits.len())
    }
}

impl Serialize for PadicInteger {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PadicInteger", 4)?;
        st.serialize_field("digits", &self.digits)?;
        st.serialize_field("precision", &self.digits.len())?;
        st.serialize_field("exact_value", &self.exact.as_ref().map(ToString::to_string))?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

/// First `n` digits of the rational `value`.
pub fn digits_of_rational(value: &BigRational, n: usize) -> Result<PadicInteger, PadicError> {
    check_integral(value)?;
    let q = value.denom().clone();
    let mut a = value.numer().clone();
    let mut digits = Vec::with_capacity(n);
    for _ in 0..n {
        let (eps, next) = digit_step(&a, &q);
        digits.push(eps);
        a = next;
    }
    Ok(PadicInteger {
        digits,
        exact: Some(value.clone()),
    })
}

/// `alpha_n = sum_{k <= n} eps_k 3^k`. Negative `n` gives the empty sum.
pub fn partial_expansion(alpha: &PadicInteger, n: i64) -> Result<BigInt, PadicError> {
    if n < 0 {
        return Ok(BigInt::zero());
    }
    let n = n as usize;
    if n >= alpha.precision() {
        return Err(PadicError::PrecisionExceeded {
            requested: n,
            precision: alpha.precision(),
        });
    }
    Ok(alpha.truncate(n + 1).residue())
}
