use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::AnalysisError;
use crate::symbolic::{admitted_words, run_lengths, MixedSystem, Word};

pub const RECOGNIZABILITY_SEMANTICS: &str = "bounded-radius certificate: every admitted (2R+1)-word \
     has a unique (cut offset, covering letter) for its centre; absence up to R_max is inconclusive";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub word: String,
    /// Position of the centre inside the image of the covering letter.
    pub offset: usize,
    pub letter: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecognizabilityReport {
    pub level: usize,
    pub radius: Option<usize>,
    pub r_max: usize,
    pub witnesses: Vec<WitnessEntry>,
    /// Interior run lengths of each letter in the longest language consulted.
    pub run_census: BTreeMap<String, BTreeSet<usize>>,
    pub census_length: usize,
    pub depth_used: usize,
    pub semantics: &'static str,
}

/// Every word seen through a window centred inside `phi(u[R])`, for level-(i+1)
/// words `u` of length `2R+1`, with the assignment it forces.
fn overlay(
    sys: &MixedSystem,
    level: usize,
    upper: &BTreeSet<Word>,
    r: usize,
) -> Result<BTreeMap<Word, BTreeSet<(usize, usize)>>, AnalysisError> {
    let phi = sys.substitution_at(level)?;
    let mut out: BTreeMap<Word, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for u in upper {
        let start: usize = u.0[..r].iter().map(|&a| phi.image(a).len()).sum();
        let image = phi.apply(u)?;
        for t in 0..phi.image(u.0[r]).len() {
            let p = start + t;
            // each image has length >= 1, so r letters exist on each side
            let window = Word(image.0[p - r..=p + r].to_vec());
            out.entry(window).or_default().insert((t, u.0[r]));
        }
    }
    Ok(out)
}

pub fn recognizability_radius(
    sys: &MixedSystem,
    level: usize,
    r_max: usize,
    depth: usize,
) -> Result<RecognizabilityReport, AnalysisError> {
    let alphabet = sys.alphabet();
    let exact = |lvl: usize, n: usize| -> Result<_, AnalysisError> {
        let res = admitted_words(sys, lvl, n, depth)?;
        if !res.is_exact() {
            return Err(AnalysisError::LanguageInexact {
                level: lvl,
                length: n,
                depth,
            });
        }
        Ok(res)
    };
    let mut report = RecognizabilityReport {
        level,
        radius: None,
        r_max,
        witnesses: Vec::new(),
        run_census: BTreeMap::new(),
        census_length: 0,
        depth_used: 0,
        semantics: RECOGNIZABILITY_SEMANTICS,
    };
    let mut longest = BTreeSet::new();
    for r in 0..=r_max {
        let n = 2 * r + 1;
        let here = exact(level, n)?;
        let upper = exact(level + 1, n)?;
        report.depth_used = report.depth_used.max(here.depth_used).max(upper.depth_used);
        let seen = overlay(sys, level, &upper.words, r)?;
        if let Some(w) = seen.keys().find(|w| !here.words.contains(w)) {
            return Err(AnalysisError::Invariant(format!(
                "overlay produced {} which is not admitted",
                alphabet.render(w)
            )));
        }
        if let Some(w) = here.words.iter().find(|w| !seen.contains_key(w)) {
            return Err(AnalysisError::Invariant(format!(
                "admitted word {} has no desubstitution",
                alphabet.render(w)
            )));
        }
        report.census_length = n;
        longest = here.words;
        if seen.values().all(|a| a.len() == 1) {
            report.radius = Some(r);
            report.witnesses = seen
                .iter()
                .map(|(w, a)| {
                    let &(offset, letter) = a.first().expect("one assignment");
                    WitnessEntry {
                        word: alphabet.render(w),
                        offset,
                        letter: alphabet.symbol(letter).to_string(),
                    }
                })
                .collect();
            break;
        }
    }
    report.run_census = (0..alphabet.size())
        .map(|a| (alphabet.symbol(a).to_string(), run_lengths(&longest, a)))
        .collect();
    Ok(report)
}
