//! The plain-text system description.
//!
//! ```text
//! # comments run to the end of the line
//! alphabet = a b
//! member 0
//! a -> aabba
//! b -> b
//! member 1
//! a -> aab
//! b -> bba
//! directive = prefix (1) period (0 2)
//! ```
//!
//! Symbol order on the `alphabet` line fixes the row and column order of every
//! matrix. Each `member` block gives one rule per symbol, in any order; words
//! are written contiguously when every symbol is one character, otherwise as
//! space-separated symbols. Member numbers are optional but must count up from 0.

use std::fmt::Write;

use thiserror::Error;

use crate::symbolic::{
    Alphabet, DirectiveSequence, MixedSystem, Substitution, SubstitutionFamily, Word,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Member {
    line: usize,
    images: Vec<Option<Word>>,
}

pub fn parse_system(text: &str) -> Result<MixedSystem, FormatError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut members: Vec<Member> = Vec::new();
    let mut directive: Option<(usize, usize, String)> = None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let err = |offset: usize, message: String| FormatError {
            line: line_no,
            column: indent + offset + 1,
            message,
        };
        if let Some(rest) = keyword(trimmed, "alphabet") {
            if alphabet.is_some() {
                return Err(err(0, "alphabet given twice".into()));
            }
            let rest =
                assignment(rest).ok_or_else(|| err(8, "expected '=' after alphabet".into()))?;
            let a = Alphabet::new(rest.split_whitespace()).map_err(|e| err(0, e.to_string()))?;
            alphabet = Some(a);
        } else if let Some(rest) = keyword(trimmed, "directive") {
            if directive.is_some() {
                return Err(err(0, "directive given twice".into()));
            }
            let body =
                assignment(rest).ok_or_else(|| err(9, "expected '=' after directive".into()))?;
            let col = trimmed.len() - body.trim_start().len();
            directive = Some((line_no, indent + col + 1, body.trim().to_string()));
        } else if let Some(rest) = keyword(trimmed, "member") {
            let Some(a) = &alphabet else {
                return Err(err(0, "member before alphabet".into()));
            };
            let rest = rest.trim();
            if !rest.is_empty() && rest.parse::<usize>().ok() != Some(members.len()) {
                return Err(err(7, format!("expected member number {}", members.len())));
            }
            members.push(Member {
                line: line_no,
                images: vec![None; a.size()],
            });
        } else if let Some((lhs, rhs)) = trimmed.split_once("->") {
            let Some(a) = &alphabet else {
                return Err(err(0, "rule before alphabet".into()));
            };
            let Some(member) = members.last_mut() else {
                return Err(err(0, "rule outside a member block".into()));
            };
            let symbol = lhs.trim();
            let letter = a
                .index(symbol)
                .ok_or_else(|| err(0, format!("unknown symbol {symbol:?}")))?;
            let rhs_col = lhs.len() + 2 + (rhs.len() - rhs.trim_start().len());
            let image = a.parse_word(rhs).map_err(|e| err(rhs_col, e.to_string()))?;
            if image.is_empty() {
                return Err(err(rhs_col, format!("empty image for {symbol:?}")));
            }
            if member.images[letter].replace(image).is_some() {
                return Err(err(0, format!("second rule for {symbol:?}")));
            }
        } else {
            return Err(err(
                0,
                "expected 'alphabet =', 'member', 'directive =' or a rule 'x -> word'".into(),
            ));
        }
    }
    let end = FormatError {
        line: text.lines().count().max(1),
        column: 1,
        message: String::new(),
    };
    let alphabet = alphabet.ok_or_else(|| FormatError {
        message: "missing alphabet line".into(),
        ..end.clone()
    })?;
    if members.is_empty() {
        return Err(FormatError {
            message: "no member blocks".into(),
            ..end
        });
    }
    let mut subs = Vec::with_capacity(members.len());
    for (k, m) in members.into_iter().enumerate() {
        let images = m
            .images
            .into_iter()
            .enumerate()
            .map(|(a, w)| {
                w.ok_or_else(|| FormatError {
                    line: m.line,
                    column: 1,
                    message: format!("member {k} has no rule for {:?}", alphabet.symbol(a)),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        subs.push(Substitution::new(images).map_err(|e| FormatError {
            line: m.line,
            column: 1,
            message: e.to_string(),
        })?);
    }
    let family = SubstitutionFamily::new(alphabet, subs).map_err(|e| FormatError {
        message: e.to_string(),
        ..end.clone()
    })?;
    let (line, column, body) = directive.ok_or_else(|| FormatError {
        message: "missing directive line".into(),
        ..end
    })?;
    let at = |message: String| FormatError {
        line,
        column,
        message,
    };
    let d = DirectiveSequence::parse(&body, family.len()).map_err(at)?;
    MixedSystem::new(family, d).map_err(|e| at(e.to_string()))
}

fn keyword<'a>(line: &'a str, word: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(word)?;
    (rest.is_empty() || rest.starts_with(|c: char| c.is_whitespace() || c == '=')).then_some(rest)
}

fn assignment(rest: &str) -> Option<&str> {
    rest.trim_start().strip_prefix('=')
}

pub fn print_system(sys: &MixedSystem) -> String {
    let a = sys.alphabet();
    let mut out = String::new();
    writeln!(out, "alphabet = {}", a.symbols().join(" ")).unwrap();
    for (k, sub) in sys.family().members().iter().enumerate() {
        writeln!(out, "member {k}").unwrap();
        for (letter, image) in sub.images().iter().enumerate() {
            writeln!(out, "{} -> {}", a.symbol(letter), a.render(image)).unwrap();
        }
    }
    writeln!(out, "directive = {}", sys.directive()).unwrap();
    out
}
