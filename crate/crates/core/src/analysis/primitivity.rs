use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::AnalysisError;
use crate::symbolic::{MixedSystem, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Weak,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    UnknownAtDepth,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityReport {
    pub mode: Mode,
    pub verdict: Verdict,
    /// level n -> least k with `M_{s[n,n+k]}` strictly positive
    pub witnesses: BTreeMap<usize, usize>,
    pub window: usize,
    /// Decided for the whole sequence, not just the window.
    pub exact: bool,
    /// A level with no witness, when the verdict is not `holds`.
    pub failing_level: Option<usize>,
    pub uniform_k: Option<usize>,
}

fn patterns(sys: &MixedSystem) -> Vec<Pattern> {
    sys.family()
        .members()
        .iter()
        .map(|m| Pattern::of(&m.transition_matrix()))
        .collect()
}

/// Least `k` for level `n` of an eventually periodic directive, or `None` when
/// the (pattern, phase) states cycle without reaching positivity.
fn periodic_witness(pats: &[Pattern], pre: &[usize], per: &[usize], n: usize) -> Option<usize> {
    let at = |i: usize| {
        if i < pre.len() {
            pre[i]
        } else {
            per[(i - pre.len()) % per.len()]
        }
    };
    let phase = |i: usize| {
        if i < pre.len() {
            i
        } else {
            pre.len() + (i - pre.len()) % per.len()
        }
    };
    let mut seen = HashSet::new();
    let mut acc = pats[at(n)].clone();
    let mut k = 0;
    loop {
        if acc.is_positive() {
            return Some(k);
        }
        if !seen.insert((acc.clone(), phase(n + k + 1))) {
            return None;
        }
        k += 1;
        acc = acc.mul(&pats[at(n + k)]);
    }
}

/// Weak mode looks for a witness at every level; strong mode also needs one
/// `k` for all levels. Positivity is monotone in `k` (no zero columns), so a
/// finite set of witnesses is uniform at its maximum.
pub fn primitivity(
    sys: &MixedSystem,
    mode: Mode,
    window: usize,
) -> Result<PrimitivityReport, AnalysisError> {
    if window == 0 {
        return Err(AnalysisError::EmptyWindow);
    }
    let mut witnesses = BTreeMap::new();
    if let Some((pre, per)) = sys.directive().periodic_form() {
        // every level past pre + per repeats the phase of an earlier one
        let pats = patterns(sys);
        let levels = pre.len() + per.len();
        let mut failing = None;
        for n in 0..levels {
            match periodic_witness(&pats, &pre, &per, n) {
                Some(k) => {
                    witnesses.insert(n, k);
                }
                None => {
                    failing = Some(n);
                    break;
                }
            }
        }
        let holds = failing.is_none();
        return Ok(PrimitivityReport {
            mode,
            verdict: if holds {
                Verdict::Holds
            } else {
                Verdict::Fails
            },
            uniform_k: holds.then(|| witnesses.values().copied().max().unwrap_or(0)),
            witnesses,
            window,
            exact: true,
            failing_level: failing,
        });
    }
    let mut failing = None;
    for n in 0..window {
        match sys.positivity_witness(n, window) {
            crate::symbolic::PositivityWitness::Found(k) => {
                witnesses.insert(n, k);
            }
            crate::symbolic::PositivityWitness::NotWithin(_) => {
                failing = Some(n);
                break;
            }
            crate::symbolic::PositivityWitness::Exhausted(k) => {
                return Err(AnalysisError::Symbolic(
                    crate::symbolic::SymbolicError::DirectiveExhausted {
                        requested: n + k,
                        available: sys.directive().available().unwrap_or(0),
                    },
                ));
            }
        }
    }
    let holds = failing.is_none();
    Ok(PrimitivityReport {
        mode,
        verdict: if holds {
            Verdict::Holds
        } else {
            Verdict::UnknownAtDepth
        },
        uniform_k: holds.then(|| witnesses.values().copied().max().unwrap_or(0)),
        witnesses,
        window,
        exact: false,
        failing_level: failing,
    })
}

/// `(i, j, M_i M_j > 0)` over all ordered pairs of family members.
pub fn chacon_product_table(sys: &MixedSystem) -> Vec<(usize, usize, bool)> {
    let mats: Vec<_> = sys
        .family()
        .members()
        .iter()
        .map(|m| m.transition_matrix())
        .collect();
    let mut out = Vec::new();
    for i in 0..mats.len() {
        for j in 0..mats.len() {
            out.push((i, j, (&mats[i] * &mats[j]).is_positive()));
        }
    }
    out
}
