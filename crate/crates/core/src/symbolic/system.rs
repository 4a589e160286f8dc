use serde::Serialize;

use super::{Alphabet, DirectiveSequence, Substitution, SubstitutionFamily, SymbolicError};
use crate::homology::IntMatrix;

/// Zero pattern of a nonnegative matrix; enough to decide positivity of products.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    size: usize,
    bits: Vec<bool>,
}

impl Pattern {
    pub fn of(m: &IntMatrix) -> Self {
        let size = m.rows();
        let bits = m.support().into_iter().flatten().collect();
        Self { size, bits }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn mul(&self, other: &Pattern) -> Pattern {
        let n = self.size;
        let bits = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..n).any(|k| self.get(i, k) && other.get(k, j))
            })
            .collect();
        Pattern { size: n, bits }
    }

    pub fn is_positive(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }
}

/// Outcome of the search for the least `k` with `M_{s[n,n+k]}` strictly positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "k", rename_all = "kebab-case")]
pub enum PositivityWitness {
    Found(usize),
    NotWithin(usize),
    /// The directive ended before a witness or the search bound.
    Exhausted(usize),
}

/// A substitution family together with a directive sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MixedSystem {
    family: SubstitutionFamily,
    directive: DirectiveSequence,
}

impl MixedSystem {
    pub fn new(
        family: SubstitutionFamily,
        directive: DirectiveSequence,
    ) -> Result<Self, SymbolicError> {
        directive.validate(family.len())?;
        Ok(Self { family, directive })
    }

    pub fn family(&self) -> &SubstitutionFamily {
        &self.family
    }

    pub fn directive(&self) -> &DirectiveSequence {
        &self.directive
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.family.alphabet()
    }

    pub fn with_directive(&self, directive: DirectiveSequence) -> Result<Self, SymbolicError> {
        Self::new(self.family.clone(), directive)
    }

    /// `(F, sigma^i(s))`.
    pub fn shifted(&self, i: usize) -> Result<Self, SymbolicError> {
        Ok(Self {
            family: self.family.clone(),
            directive: self.directive.shift(i)?,
        })
    }

    /// Positions `>= level` that the directive defines; `None` if unbounded.
    pub fn available_from(&self, level: usize) -> Option<usize> {
        self.directive.available().map(|n| n.saturating_sub(level))
    }

    /// `phi_{s_i}`.
    pub fn substitution_at(&self, i: usize) -> Result<&Substitution, SymbolicError> {
        Ok(&self.family.members()[self.directive.get(i)?])
    }

    fn indices(&self, i: usize, j: usize) -> Result<Vec<usize>, SymbolicError> {
        if i > j {
            return Err(SymbolicError::InvalidRange(i, j));
        }
        Ok(self.directive.prefix(j + 1)?[i..].to_vec())
    }

    /// `phi_{s[i,j]} = phi_{s_i} ∘ ... ∘ phi_{s_j}`: `phi_{s_j}` acts first.
    pub fn compose_range(&self, i: usize, j: usize) -> Result<Substitution, SymbolicError> {
        let idx = self.indices(i, j)?;
        let members = self.family.members();
        let mut acc = members[idx[idx.len() - 1]].clone();
        for &k in idx.iter().rev().skip(1) {
            acc = members[k].compose(&acc)?;
        }
        Ok(acc)
    }

    /// `M_{s_i} ⋯ M_{s_j}`.
    pub fn range_matrix(&self, i: usize, j: usize) -> Result<IntMatrix, SymbolicError> {
        let idx = self.indices(i, j)?;
        let members = self.family.members();
        let mut acc = members[idx[0]].transition_matrix();
        for &k in &idx[1..] {
            acc = &acc * &members[k].transition_matrix();
        }
        Ok(acc)
    }

    /// Least `k <= max_k` with `M_{s[level,level+k]}` strictly positive.
    pub fn positivity_witness(&self, level: usize, max_k: usize) -> PositivityWitness {
        let patterns: Vec<Pattern> = self
            .family
            .members()
            .iter()
            .map(|m| Pattern::of(&m.transition_matrix()))
            .collect();
        let mut acc: Option<Pattern> = None;
        for k in 0..=max_k {
            let Ok(s) = self.directive.get(level + k) else {
                return PositivityWitness::Exhausted(k);
            };
            let p = match acc {
                None => patterns[s].clone(),
                Some(a) => a.mul(&patterns[s]),
            };
            if p.is_positive() {
                return PositivityWitness::Found(k);
            }
            acc = Some(p);
        }
        PositivityWitness::NotWithin(max_k)
    }
}
