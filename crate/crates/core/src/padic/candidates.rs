//! Candidate isomorphs `alpha' = (r_z - alpha r_w) / (alpha s_w - s_z)`.
//!
//! The scalar `t` of the rational change of basis cancels and is not carried.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{digits_of_rational, valuation3, PadicInteger};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MoebiusParams {
    pub r_w: i64,
    pub r_z: i64,
    pub s_w: i64,
    pub s_z: i64,
}

impl MoebiusParams {
    pub const IDENTITY: MoebiusParams = MoebiusParams {
        r_w: 1,
        r_z: 0,
        s_w: 0,
        s_z: 1,
    };

    pub fn is_singular(&self) -> bool {
        self.r_w * self.s_z == self.r_z * self.s_w
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    /// First tuple (in enumeration order) producing this digit prefix.
    pub params: MoebiusParams,
    pub alpha: PadicInteger,
    /// Number of further tuples giving the same prefix.
    pub duplicates: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub params: MoebiusParams,
    pub reason: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateReport {
    pub alpha: PadicInteger,
    pub bound: i64,
    pub precision: usize,
    pub semantics: &'static str,
    pub candidates: Vec<Candidate>,
    pub skipped: Vec<Skipped>,
}

pub const CANDIDATE_SEMANTICS: &str =
    "candidate: every beta with G_beta isomorphic to G_alpha has this \
     form for some parameter bound; membership is necessary, not sufficient";

impl CandidateReport {
    /// Whether a candidate agrees with `beta` on the common digit prefix.
    pub fn contains(&self, beta: &PadicInteger) -> bool {
        self.candidates.iter().any(|c| {
            let n = c.alpha.precision().min(beta.precision());
            n > 0 && c.alpha.digits()[..n] == beta.digits()[..n]
        })
    }

    /// "candidate at bound B" / "non-candidate at bound B".
    pub fn label_for(&self, beta: &PadicInteger) -> String {
        let word = if self.contains(beta) {
            "candidate"
        } else {
            "non-candidate"
        };
        format!("{word} at bound {}", self.bound)
    }
}

const ZERO_DENOMINATOR: &str = "denominator alpha*s_w - s_z vanishes";
const TRUNCATED_DENOMINATOR: &str = "denominator vanishes to working precision";
const NEGATIVE_VALUATION: &str = "alpha' has negative 3-adic valuation (not in Z_3)";

fn modulus(p: usize) -> BigInt {
    BigInt::from(3).pow(p as u32)
}

fn v3_int(x: &BigInt, cap: usize) -> usize {
    let three = BigInt::from(3);
    let mut x = x.clone();
    let mut v = 0;
    while v < cap && !x.is_zero() && (&x % &three).is_zero() {
        x /= &three;
        v += 1;
    }
    if x.is_zero() {
        cap
    } else {
        v
    }
}

fn digits_of_residue(mut x: BigInt, n: usize) -> Vec<u8> {
    let three = BigInt::from(3);
    (0..n)
        .map(|_| {
            let d = x.mod_floor(&three);
            x = (&x - &d) / &three;
            d.to_u8().expect("digit")
        })
        .collect()
}

enum Outcome {
    Value(PadicInteger),
    Skip(&'static str),
}

fn evaluate_exact(alpha: &BigRational, p: &MoebiusParams, n: usize) -> Outcome {
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    let num = int(p.r_z) - alpha * int(p.r_w);
    let den = alpha * int(p.s_w) - int(p.s_z);
    if den.is_zero() {
        return Outcome::Skip(ZERO_DENOMINATOR);
    }
    let value = num / den;
    if valuation3(&value).is_some_and(|v| v < 0) {
        return Outcome::Skip(NEGATIVE_VALUATION);
    }
    Outcome::Value(digits_of_rational(&value, n).expect("valuation checked"))
}

/// Works modulo `3^P`, `P = alpha.precision()`; dividing by `3^v` costs `v` digits.
fn evaluate_truncated(alpha: &PadicInteger, p: &MoebiusParams, n: usize) -> Outcome {
    let prec = alpha.precision();
    let m = modulus(prec);
    let a = alpha.residue();
    let num = (BigInt::from(p.r_z) - &a * p.r_w).mod_floor(&m);
    let den = (&a * p.s_w - BigInt::from(p.s_z)).mod_floor(&m);
    let vd = v3_int(&den, prec);
    if vd == prec {
        return Outcome::Skip(TRUNCATED_DENOMINATOR);
    }
    if v3_int(&num, prec) < vd {
        return Outcome::Skip(NEGATIVE_VALUATION);
    }
    let pow = modulus(vd);
    let reduced = prec - vd;
    let m2 = modulus(reduced);
    let (num, den) = (num / &pow, den / &pow);
    let inv = den.extended_gcd(&m2).x.mod_floor(&m2);
    let value = (num * inv).mod_floor(&m2);
    Outcome::Value(
        PadicInteger::from_digits(digits_of_residue(value, n.min(reduced))).expect("digits"),
    )
}

/// Enumerates all tuples in `[-B, B]^4` in lexicographic order.
pub fn candidate_isomorphs(alpha: &PadicInteger, bound: i64, precision: usize) -> CandidateReport {
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut skipped = Vec::new();
    let range = || -bound..=bound;
    for r_w in range() {
        for r_z in range() {
            for s_w in range() {
                for s_z in range() {
                    let params = MoebiusParams { r_w, r_z, s_w, s_z };
                    let outcome = match alpha.exact_value() {
                        Some(v) => evaluate_exact(v, &params, precision),
                        None => evaluate_truncated(alpha, &params, precision),
                    };
                    match outcome {
                        Outcome::Skip(reason) => skipped.push(Skipped { params, reason }),
                        Outcome::Value(value) => {
                            let key = value.digits().to_vec();
                            match index.get(&key) {
                                Some(&k) => candidates[k].duplicates += 1,
                                None => {
                                    index.insert(key, candidates.len());
                                    candidates.push(Candidate {
                                        params,
                                        alpha: value,
                                        duplicates: 0,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CandidateReport {
        alpha: alpha.clone(),
        bound,
        precision,
        semantics: CANDIDATE_SEMANTICS,
        candidates,
        skipped,
    }
}
