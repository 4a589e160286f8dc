//! Admitted words of a fixed length.
//!
//! Images `phi_{s[i,i+k]}(a)` grow exponentially in `k`, so they are never
//! materialized: each letter carries a summary holding its length-`n`
//! factors plus the first and last `n-1` letters, and
//! `W_{k+1}(a) = prod_{b in phi_{s_{i+k+1}}(a)} W_k(b)` is evaluated on summaries.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{MixedSystem, PositivityWitness, SymbolicError, Word};

pub const LANGUAGE_CONVENTION: &str =
    "level-i language uses phi_{s[i,i+k]}, k >= 0 (equivalently the level-0 language of sigma^i(s))";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LanguageStatus {
    Exact,
    LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct LanguageResult {
    pub level: usize,
    pub length: usize,
    pub words: BTreeSet<Word>,
    pub status: LanguageStatus,
    pub requested_depth: usize,
    pub depth_used: usize,
    /// Least depth from which the union no longer grew, if it stopped growing.
    pub stabilization_witness: Option<usize>,
    /// The positivity witness `k` and the window `k + 1` the certificate used.
    pub positivity: PositivityWitness,
    pub window: Option<usize>,
    /// First depth at which every image has length at least `n`.
    pub full_length_depth: Option<usize>,
    /// Size of the union after each depth `0..=depth_used`.
    pub growth: Vec<usize>,
    pub convention: &'static str,
}

impl LanguageResult {
    pub fn is_exact(&self) -> bool {
        self.status == LanguageStatus::Exact
    }

    pub fn contains(&self, w: &[usize]) -> bool {
        self.words.contains(&Word(w.to_vec()))
    }
}

/// Length-`n` factors of `w`.
pub fn factors(w: &[usize], n: usize) -> BTreeSet<Word> {
    if n == 0 || w.len() < n {
        return BTreeSet::new();
    }
    w.windows(n).map(|x| Word(x.to_vec())).collect()
}

#[derive(Clone, Debug)]
enum Summary {
    /// The whole word, kept while shorter than `2n`.
    Explicit(Vec<usize>),
    Compressed {
        head: Vec<usize>,
        tail: Vec<usize>,
        factors: BTreeSet<Word>,
    },
}

impl Summary {
    fn head(&self) -> &[usize] {
        match self {
            Summary::Explicit(w) => w,
            Summary::Compressed { head, .. } => head,
        }
    }

    fn tail(&self) -> &[usize] {
        match self {
            Summary::Explicit(w) => w,
            Summary::Compressed { tail, .. } => tail,
        }
    }

    fn long_enough(&self, n: usize) -> bool {
        match self {
            Summary::Explicit(w) => w.len() >= n,
            Summary::Compressed { .. } => true,
        }
    }

    fn extend_factors(&self, n: usize, into: &mut BTreeSet<Word>) {
        match self {
            Summary::Explicit(w) => into.extend(factors(w, n)),
            Summary::Compressed { factors, .. } => into.extend(factors.iter().cloned()),
        }
    }

    /// Concatenation of summaries for fixed `n`.
    fn concat<'a>(parts: impl IntoIterator<Item = &'a Summary>, n: usize) -> Summary {
        let keep = n.saturating_sub(1);
        let mut acc = Summary::Explicit(Vec::new());
        for x in parts {
            acc = match (acc, x) {
                (Summary::Explicit(mut a), Summary::Explicit(b)) if a.len() + b.len() < 2 * n => {
                    a.extend_from_slice(b);
                    Summary::Explicit(a)
                }
                (a, x) => {
                    let mut fs = BTreeSet::new();
                    a.extend_factors(n, &mut fs);
                    x.extend_factors(n, &mut fs);
                    let mut seam = a.tail().to_vec();
                    seam.extend_from_slice(x.head());
                    fs.extend(factors(&seam, n));
                    let mut head = a.head().to_vec();
                    head.extend_from_slice(x.head());
                    head.truncate(keep);
                    let mut tail = a.tail().to_vec();
                    tail.extend_from_slice(x.tail());
                    let tail = tail[tail.len().saturating_sub(keep)..].to_vec();
                    Summary::Compressed {
                        head,
                        tail,
                        factors: fs,
                    }
                }
            };
        }
        acc
    }
}

/// The ascending union `⋃_{k <= K} Fact_n(phi_{s[i,i+k]}(a))` over all letters.
///
/// Status is exact when the union is unchanged across a window `[K-w, K]`,
/// `w = k* + 1` for the least `k*` making `M_{s[i,i+k*]}` positive, and every
/// image already had length at least `n` at depth `K - w`.
pub fn admitted_words(
    sys: &MixedSystem,
    level: usize,
    n: usize,
    depth: usize,
) -> Result<LanguageResult, SymbolicError> {
    if n == 0 {
        return Err(SymbolicError::ZeroLength);
    }
    let depth_used = match sys.available_from(level) {
        Some(0) => {
            return Err(SymbolicError::DirectiveExhausted {
                requested: level,
                available: sys.directive().available().unwrap_or(0),
            })
        }
        Some(a) => depth.min(a - 1),
        None => depth,
    };
    let indices = sys.directive().prefix(level + depth_used + 1)?;
    let members = sys.family().members();
    let l = sys.alphabet().size();

    let first = &members[indices[level]];
    let mut current: Vec<Summary> = (0..l)
        .map(|a| Summary::concat([&Summary::Explicit(first.image(a).0.clone())], n))
        .collect();
    let mut words = BTreeSet::new();
    let mut growth = Vec::with_capacity(depth_used + 1);
    let mut full_length_depth = None;
    for k in 0..=depth_used {
        if k > 0 {
            let phi = &members[indices[level + k]];
            current = (0..l)
                .map(|a| Summary::concat(phi.image(a).0.iter().map(|&b| &current[b]), n))
                .collect();
        }
        for s in &current {
            s.extend_factors(n, &mut words);
        }
        if full_length_depth.is_none() && current.iter().all(|s| s.long_enough(n)) {
            full_length_depth = Some(k);
        }
        growth.push(words.len());
    }

    let last = growth[depth_used];
    let first_stable = growth.iter().position(|&g| g == last).expect("last entry");
    let stabilization_witness = (first_stable < depth_used).then_some(first_stable);

    let positivity = sys.positivity_witness(level, depth_used);
    let window = match positivity {
        PositivityWitness::Found(k) => Some(k + 1),
        _ => None,
    };
    let exact = depth_used == depth
        && match (window, full_length_depth) {
            (Some(w), Some(d)) => depth_used >= d + w && growth[depth_used - w] == last,
            _ => false,
        };
    Ok(LanguageResult {
        level,
        length: n,
        words,
        status: if exact {
            LanguageStatus::Exact
        } else {
            LanguageStatus::LowerBound
        },
        requested_depth: depth,
        depth_used,
        stabilization_witness,
        positivity,
        window,
        full_length_depth,
        growth,
        convention: LANGUAGE_CONVENTION,
    })
}

/// Descending over-approximation: start from all `n`-words at level
/// `level + steps` and repeatedly take `n`-factors of images.
///
/// For `n = 2` one step is exactly interior pairs plus junctions
/// `r(phi(c)) l(phi(d))` for each pair `cd`.
pub fn descending_closure(
    sys: &MixedSystem,
    level: usize,
    n: usize,
    steps: usize,
) -> Result<BTreeSet<Word>, SymbolicError> {
    if n == 0 {
        return Err(SymbolicError::ZeroLength);
    }
    let l = sys.alphabet().size();
    let mut set: BTreeSet<Word> = BTreeSet::new();
    let total = l.pow(n as u32);
    for mut code in 0..total {
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = code % l;
            code /= l;
        }
        set.insert(Word(w));
    }
    for j in (level..level + steps).rev() {
        let phi = sys.substitution_at(j)?;
        let mut next = BTreeSet::new();
        for u in &set {
            next.extend(factors(&phi.apply(u)?.0, n));
        }
        set = next;
    }
    Ok(set)
}

/// Lengths of maximal runs of `letter` bounded on both sides by other letters.
pub fn run_lengths<'a>(
    words: impl IntoIterator<Item = &'a Word>,
    letter: usize,
) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for w in words {
        let w = &w.0;
        let mut i = 0;
        while i < w.len() {
            if w[i] != letter {
                i += 1;
                continue;
            }
            let start = i;
            while i < w.len() && w[i] == letter {
                i += 1;
            }
            if start > 0 && i < w.len() {
                out.insert(i - start);
            }
        }
    }
    out
}
