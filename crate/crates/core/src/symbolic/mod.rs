//! Alphabets, words, substitutions, directive sequences and mixed systems.

mod directive;
mod language;
mod system;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::IntMatrix;

pub use directive::DirectiveSequence;
pub use language::{
    admitted_words, descending_closure, factors, run_lengths, LanguageResult, LanguageStatus,
    LANGUAGE_CONVENTION,
};
pub use system::{MixedSystem, Pattern, PositivityWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet symbol {0} is empty or contains whitespace")]
    BadSymbol(usize),
    #[error("alphabet symbol {0:?} appears twice")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("image of letter {0} is empty")]
    EmptyImage(usize),
    #[error("substitution has {found} images, alphabet has {expected} letters")]
    ArityMismatch { expected: usize, found: usize },
    #[error("substitution family is empty")]
    EmptyFamily,
    #[error("the empty word has no edge letters")]
    EmptyWord,
    #[error("directive period is empty")]
    EmptyPeriod,
    #[error("directive index {index} out of range for a family of {size}")]
    DirectiveIndexOutOfRange { index: usize, size: usize },
    #[error("directive position {requested} is beyond the explicit prefix of length {available}")]
    DirectiveExhausted { requested: usize, available: usize },
    #[error("p-adic directives need at least 3 family members, found {0}")]
    PadicArity(usize),
    #[error("p-adic directive value {0} is not a 3-adic integer")]
    PadicValuation(String),
    #[error("a seeded directive needs arity at least 1")]
    SeededArity,
    #[error("invalid range [{0}, {1}]")]
    InvalidRange(usize, usize),
    #[error("word length must be at least 1")]
    ZeroLength,
}

pub type Letter = usize;

/// A finite word over an alphabet, stored as letter indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(l(w), r(w))`.
    pub fn edge_letters(&self) -> Result<(Letter, Letter), SymbolicError> {
        match (self.0.first(), self.0.last()) {
            (Some(&l), Some(&r)) => Ok((l, r)),
            _ => Err(SymbolicError::EmptyWord),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&x| x == letter).count()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        symbols: impl IntoIterator<Item = S>,
    ) -> Result<Self, SymbolicError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(SymbolicError::EmptyAlphabet);
        }
        let mut seen = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || "()#=".contains(c)) {
                return Err(SymbolicError::BadSymbol(i));
            }
            if seen.insert(s.clone(), i).is_some() {
                return Err(SymbolicError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Self { symbols })
    }

    /// `a, b, c, ...` (then `x26, x27, ...`).
    pub fn standard(size: usize) -> Self {
        let symbols: Vec<String> = (0..size)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{i}")
                }
            })
            .collect();
        Self::new(symbols).expect("standard alphabet is valid")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, i: Letter) -> &str {
        &self.symbols[i]
    }

    pub fn index(&self, s: &str) -> Option<Letter> {
        self.symbols.iter().position(|x| x == s)
    }

    /// Whether words can be written without separators.
    pub fn is_compact(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word written contiguously (single-character alphabets) or with
    /// whitespace-separated symbols.
    pub fn parse_word(&self, text: &str) -> Result<Word, SymbolicError> {
        let text = text.trim();
        let tokens: Vec<String> = if text.contains(char::is_whitespace) || !self.is_compact() {
            text.split_whitespace().map(str::to_string).collect()
        } else {
            text.chars().map(|c| c.to_string()).collect()
        };
        tokens
            .iter()
            .map(|t| {
                self.index(t)
                    .ok_or_else(|| SymbolicError::UnknownSymbol(t.clone()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn render(&self, w: &Word) -> String {
        let parts: Vec<&str> = w.0.iter().map(|&i| self.symbol(i)).collect();
        if self.is_compact() {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

/// A substitution on letters `0..size`, every image nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Substitution {
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(images: Vec<Word>) -> Result<Self, SymbolicError> {
        let size = images.len();
        if size == 0 {
            return Err(SymbolicError::EmptyAlphabet);
        }
        for (a, w) in images.iter().enumerate() {
            if w.is_empty() {
                return Err(SymbolicError::EmptyImage(a));
            }
            if let Some(&index) = w.0.iter().find(|&&x| x >= size) {
                return Err(SymbolicError::LetterOutOfRange { index, size });
            }
        }
        Ok(Self { images })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).map(|a| Word(vec![a])).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a]
    }

    /// `l(phi(a))`
    pub fn left(&self, a: Letter) -> Letter {
        self.images[a].0[0]
    }

    /// `r(phi(a))`
    pub fn right(&self, a: Letter) -> Letter {
        *self.images[a].0.last().expect("nonempty image")
    }

    pub fn apply(&self, w: &Word) -> Result<Word, SymbolicError> {
        let mut out = Vec::new();
        for &a in &w.0 {
            let img = self.images.get(a).ok_or(SymbolicError::LetterOutOfRange {
                index: a,
                size: self.size(),
            })?;
            out.extend_from_slice(&img.0);
        }
        Ok(Word(out))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Substitution) -> Result<Substitution, SymbolicError> {
        if inner.size() != self.size() {
            return Err(SymbolicError::ArityMismatch {
                expected: self.size(),
                found: inner.size(),
            });
        }
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { images })
    }

    /// `m_ij` = number of occurrences of letter `i` in the image of letter `j`.
    pub fn transition_matrix(&self) -> IntMatrix {
        let l = self.size();
        IntMatrix::from_fn(l, l, |i, j| self.images[j].count(i).into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubstitutionFamily {
    alphabet: Alphabet,
    members: Vec<Substitution>,
}

impl SubstitutionFamily {
    pub fn new(alphabet: Alphabet, members: Vec<Substitution>) -> Result<Self, SymbolicError> {
        if members.is_empty() {
            return Err(SymbolicError::EmptyFamily);
        }
        for m in &members {
            if m.size() != alphabet.size() {
                return Err(SymbolicError::ArityMismatch {
                    expected: alphabet.size(),
                    found: m.size(),
                });
            }
        }
        Ok(Self { alphabet, members })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn members(&self) -> &[Substitution] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(alpha: &Alphabet, images: &[&str]) -> Substitution {
        Substitution::new(
            images
                .iter()
                .map(|s| alpha.parse_word(s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn apply_and_matrix() {
        let ab = Alphabet::standard(2);
        let psi0 = sub(&ab, &["aabba", "b"]);
        let a = ab.parse_word("a").unwrap();
        assert_eq!(ab.render(&psi0.apply(&a).unwrap()), "aabba");
        assert!(psi0.apply(&Word::empty()).unwrap().is_empty());
        let fib = sub(&ab, &["b", "ba"]);
        assert_eq!(
            ab.render(&fib.apply(&ab.parse_word("ab").unwrap()).unwrap()),
            "bba"
        );
        let psi1 = sub(&ab, &["aab", "abb"]);
        assert_eq!(
            psi1.transition_matrix(),
            IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]])
        );
        assert_eq!(
            Substitution::identity(3).transition_matrix(),
            IntMatrix::identity(3)
        );
    }

    #[test]
    fn arnoux_rauzy_matrix() {
        let abc = Alphabet::standard(3);
        let mu1 = sub(&abc, &["a", "ba", "ca"]);
        assert_eq!(
            mu1.transition_matrix(),
            IntMatrix::from_rows(&[vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]])
        );
    }

    #[test]
    fn edge_letters() {
        let ab = Alphabet::standard(2);
        let w = |s| ab.parse_word(s).unwrap();
        assert_eq!(w("aabba").edge_letters().unwrap(), (0, 0));
        assert_eq!(w("aab").edge_letters().unwrap(), (0, 1));
        assert_eq!(w("b").edge_letters().unwrap(), (1, 1));
        assert_eq!(Word::empty().edge_letters(), Err(SymbolicError::EmptyWord));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Substitution::new(vec![Word(vec![0]), Word(vec![])]),
            Err(SymbolicError::EmptyImage(1))
        );
        assert!(matches!(
            Substitution::new(vec![Word(vec![2])]),
            Err(SymbolicError::LetterOutOfRange { index: 2, size: 1 })
        ));
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        let ab = Alphabet::standard(2);
        assert!(ab.parse_word("abc").is_err());
    }

    #[test]
    fn multi_character_symbols() {
        let alpha = Alphabet::new(["a1", "a2"]).unwrap();
        let w = alpha.parse_word("a1 a2 a1").unwrap();
        assert_eq!(w, Word(vec![0, 1, 0]));
        assert_eq!(alpha.render(&w), "a1 a2 a1");
    }
}
