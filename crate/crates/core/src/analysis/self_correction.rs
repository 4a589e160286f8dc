use std::collections::{BTreeSet, HashSet};
use std::ops::Range;

use serde::Serialize;

use crate::symbolic::{admitted_words, MixedSystem, Word};

/// Where junctions of an `m`-fold composite starting at level `i` must land.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonLevel {
    /// `L^2` at level `i`.
    #[default]
    Definition,
    /// `L^2` at level `i + m - 1`, the level of the last substitution applied.
    Proof,
}

#[derive(Clone, Debug, Serialize)]
pub struct Junction {
    pub pair: String,
    pub junction: String,
    pub admitted: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum LevelCorrection {
    Corrected {
        level: usize,
        /// Number of composed substitutions.
        m: usize,
        junctions: Vec<Junction>,
    },
    Failed {
        level: usize,
        pair: String,
        junction: String,
        reason: String,
    },
    Inconclusive {
        level: usize,
        reason: String,
    },
}

impl LevelCorrection {
    pub fn m(&self) -> Option<usize> {
        match self {
            LevelCorrection::Corrected { m, .. } => Some(*m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfCorrectionReport {
    pub levels: Vec<LevelCorrection>,
    pub n_max: usize,
    pub depth: usize,
    pub comparison: ComparisonLevel,
    /// Some level failed outright; inconclusive levels leave this false.
    pub fails: bool,
    pub all_corrected: bool,
}

/// For each level, the least `m` such that every `r(phi_{s[i,i+m-1]}(a)) l(phi_{s[i,i+m-1]}(b))`
/// is admitted. Only the letter maps `r` and `l` of the composite are needed,
/// so images are never built.
pub fn self_correction(
    sys: &MixedSystem,
    levels: Range<usize>,
    n_max: usize,
    depth: usize,
    comparison: ComparisonLevel,
) -> SelfCorrectionReport {
    let out: Vec<LevelCorrection> = levels
        .map(|i| level_correction(sys, i, n_max, depth, comparison))
        .collect();
    SelfCorrectionReport {
        fails: out
            .iter()
            .any(|r| matches!(r, LevelCorrection::Failed { .. })),
        all_corrected: out.iter().all(|r| r.m().is_some()),
        levels: out,
        n_max,
        depth,
        comparison,
    }
}

fn level_correction(
    sys: &MixedSystem,
    i: usize,
    n_max: usize,
    depth: usize,
    comparison: ComparisonLevel,
) -> LevelCorrection {
    let alphabet = sys.alphabet();
    let l = alphabet.size();
    let pair_name = |a: usize, b: usize| alphabet.render(&Word(vec![a, b]));
    let inconclusive = |reason: String| LevelCorrection::Inconclusive { level: i, reason };
    let language = |level: usize| -> Result<BTreeSet<Word>, String> {
        let r = admitted_words(sys, level, 2, depth).map_err(|e| e.to_string())?;
        if r.is_exact() {
            Ok(r.words)
        } else {
            Err(format!(
                "two-letter language at level {level} is only a lower bound at depth {depth}"
            ))
        }
    };
    let fixed_language = match comparison {
        ComparisonLevel::Definition => match language(i) {
            Ok(w) => Some(w),
            Err(e) => return inconclusive(e),
        },
        ComparisonLevel::Proof => None,
    };
    let Ok(indices) = sys.directive().prefix(i + n_max) else {
        return inconclusive(format!("directive is shorter than level {}", i + n_max));
    };
    let members = sys.family().members();
    // a pair fixed by r and l of every member in use keeps its junction forever
    let used: BTreeSet<usize> = indices[i..].iter().copied().collect();
    let periodic = sys.directive().periodic_form().is_some();

    // right[a] = r(phi(a)) and left[a] = l(phi(a)) for the running composite
    let mut right: Vec<usize> = (0..l).collect();
    let mut left: Vec<usize> = (0..l).collect();
    let mut seen = HashSet::new();
    for m in 1..=n_max {
        let phi = &members[indices[i + m - 1]];
        // the innermost substitution acts first
        right = (0..l).map(|a| right[phi.right(a)]).collect();
        left = (0..l).map(|a| left[phi.left(a)]).collect();
        let admitted = match &fixed_language {
            Some(w) => w.clone(),
            None => match language(i + m - 1) {
                Ok(w) => w,
                Err(e) => return inconclusive(e),
            },
        };
        let junctions: Vec<Junction> = (0..l)
            .flat_map(|a| (0..l).map(move |b| (a, b)))
            .map(|(a, b)| {
                let j = Word(vec![right[a], left[b]]);
                Junction {
                    pair: pair_name(a, b),
                    junction: alphabet.render(&j),
                    admitted: admitted.contains(&j),
                }
            })
            .collect();
        if junctions.iter().all(|j| j.admitted) {
            return LevelCorrection::Corrected {
                level: i,
                m,
                junctions,
            };
        }
        if comparison == ComparisonLevel::Definition {
            for (a, b) in (0..l).flat_map(|a| (0..l).map(move |b| (a, b))) {
                let fixed = used
                    .iter()
                    .all(|&k| members[k].right(a) == a && members[k].left(b) == b);
                if fixed && !admitted.contains(&Word(vec![a, b])) {
                    return LevelCorrection::Failed {
                        level: i,
                        pair: pair_name(a, b),
                        junction: pair_name(a, b),
                        reason: "pair is fixed by every junction map in use and is not admitted"
                            .into(),
                    };
                }
            }
            if periodic {
                let phase = sys
                    .directive()
                    .shift(i + m)
                    .ok()
                    .and_then(|d| d.periodic_form());
                if !seen.insert((right.clone(), left.clone(), phase)) {
                    let bad = junctions
                        .iter()
                        .find(|j| !j.admitted)
                        .expect("some pair fails");
                    return LevelCorrection::Failed {
                        level: i,
                        pair: bad.pair.clone(),
                        junction: bad.junction.clone(),
                        reason: "junction maps entered a cycle without correcting every pair"
                            .into(),
                    };
                }
            }
        }
    }
    inconclusive(format!("no correcting composite with m <= {n_max}"))
}
