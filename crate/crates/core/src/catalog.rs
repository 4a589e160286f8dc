//! Named systems used throughout the tests and the CLI.

use serde::Serialize;
use thiserror::Error;

use crate::symbolic::{
    Alphabet, DirectiveSequence, MixedSystem, Substitution, SubstitutionFamily, SymbolicError,
};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog system {0:?}")]
    Unknown(String),
    #[error("bad directive for {name}: {message}")]
    Directive { name: String, message: String },
    #[error("parameter d must be at least 2, got {0}")]
    Dimension(usize),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static str,
    pub description: &'static str,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "chacon",
            parameters: "--alpha (directive or rational), default period (0 1 2)",
            description: "mixed Chacon family psi_0, psi_1, psi_2 on {a,b}",
        },
        CatalogEntry {
            name: "fibonacci",
            parameters: "",
            description: "a -> b, b -> ba iterated",
        },
        CatalogEntry {
            name: "thue-morse-fibonacci",
            parameters: "--directive, default prefix (1) period (0)",
            description: "family {Fibonacci, Thue-Morse}",
        },
        CatalogEntry {
            name: "arnoux-rauzy",
            parameters: "--d (default 3), --directive (default period (0 .. d-1))",
            description: "mu_i: a_i -> a_i, a_j -> a_j a_i",
        },
        CatalogEntry {
            name: "barge-diamond-4letter",
            parameters: "",
            description: "a -> abcda, b -> ab, c -> cdbc, d -> db",
        },
        CatalogEntry {
            name: "non-self-correcting",
            parameters: "",
            description: "a -> aaba, b -> bab",
        },
        CatalogEntry {
            name: "doubling",
            parameters: "",
            description: "a -> aa on one letter",
        },
    ]
}

fn family(alphabet: Alphabet, rules: &[&[&str]]) -> SubstitutionFamily {
    let members = rules
        .iter()
        .map(|images| {
            let words = images
                .iter()
                .map(|s| alphabet.parse_word(s).expect("catalog word"))
                .collect();
            Substitution::new(words).expect("catalog substitution")
        })
        .collect();
    SubstitutionFamily::new(alphabet, members).expect("catalog family")
}

pub fn chacon_family() -> SubstitutionFamily {
    family(
        Alphabet::standard(2),
        &[&["aabba", "b"], &["aab", "bba"], &["a", "bbaab"]],
    )
}

pub fn chacon(directive: DirectiveSequence) -> Result<MixedSystem, SymbolicError> {
    MixedSystem::new(chacon_family(), directive)
}

pub fn fibonacci() -> MixedSystem {
    let f = family(Alphabet::standard(2), &[&["b", "ba"]]);
    MixedSystem::new(f, DirectiveSequence::constant(0)).expect("valid")
}

/// Members: 0 = Fibonacci, 1 = Thue-Morse.
pub fn thue_morse_fibonacci_family() -> SubstitutionFamily {
    family(Alphabet::standard(2), &[&["b", "ba"], &["ab", "ba"]])
}

pub fn thue_morse_fibonacci() -> MixedSystem {
    let d = DirectiveSequence::eventually_periodic(vec![1], vec![0]).expect("valid");
    MixedSystem::new(thue_morse_fibonacci_family(), d).expect("valid")
}

pub fn arnoux_rauzy_family(d: usize) -> SubstitutionFamily {
    let alphabet = Alphabet::standard(d);
    let members = (0..d)
        .map(|i| {
            let images = (0..d)
                .map(|j| {
                    if j == i {
                        vec![i].into()
                    } else {
                        vec![j, i].into()
                    }
                })
                .collect();
            Substitution::new(images).expect("valid")
        })
        .collect();
    SubstitutionFamily::new(alphabet, members).expect("valid")
}

/// Directive defaults to the fair period `(0 1 ... d-1)`.
pub fn arnoux_rauzy(
    d: usize,
    directive: Option<DirectiveSequence>,
) -> Result<MixedSystem, CatalogError> {
    if d < 2 {
        return Err(CatalogError::Dimension(d));
    }
    let directive = match directive {
        Some(x) => x,
        None => DirectiveSequence::periodic((0..d).collect())?,
    };
    Ok(MixedSystem::new(arnoux_rauzy_family(d), directive)?)
}

pub fn barge_diamond_4letter() -> MixedSystem {
    let f = family(Alphabet::standard(4), &[&["abcda", "ab", "cdbc", "db"]]);
    MixedSystem::new(f, DirectiveSequence::constant(0)).expect("valid")
}

pub fn non_self_correcting() -> MixedSystem {
    let f = family(Alphabet::standard(2), &[&["aaba", "bab"]]);
    MixedSystem::new(f, DirectiveSequence::constant(0)).expect("valid")
}

pub fn doubling() -> MixedSystem {
    let f = family(Alphabet::standard(1), &[&["aa"]]);
    MixedSystem::new(f, DirectiveSequence::constant(0)).expect("valid")
}

/// Optional parameters accepted by [`build`].
#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    pub directive: Option<String>,
    pub alpha: Option<String>,
    pub d: Option<usize>,
}

fn parse_directive(
    name: &str,
    text: &str,
    arity: usize,
) -> Result<DirectiveSequence, CatalogError> {
    let text = text.trim();
    // a bare rational is read as its 3-adic digits
    let looks_rational = text
        .chars()
        .all(|c| c.is_ascii_digit() || c == '/' || c == '-');
    let spec = if looks_rational && !text.is_empty() {
        format!("padic {text}")
    } else {
        text.to_string()
    };
    DirectiveSequence::parse(&spec, arity).map_err(|message| CatalogError::Directive {
        name: name.to_string(),
        message,
    })
}

pub fn build(name: &str, params: &CatalogParams) -> Result<MixedSystem, CatalogError> {
    let with_override = |sys: MixedSystem| -> Result<MixedSystem, CatalogError> {
        match &params.directive {
            Some(text) => {
                let d = parse_directive(name, text, sys.family().len())?;
                Ok(sys.with_directive(d)?)
            }
            None => Ok(sys),
        }
    };
    match name {
        "chacon" => {
            let text = params
                .alpha
                .as_deref()
                .or(params.directive.as_deref())
                .unwrap_or("period (0 1 2)");
            Ok(chacon(parse_directive(name, text, 3)?)?)
        }
        "fibonacci" => with_override(fibonacci()),
        "thue-morse-fibonacci" => with_override(thue_morse_fibonacci()),
        "arnoux-rauzy" => {
            let d = params.d.unwrap_or(3);
            let directive = match &params.directive {
                Some(t) => Some(parse_directive(name, t, d)?),
                None => None,
            };
            arnoux_rauzy(d, directive)
        }
        "barge-diamond-4letter" => with_override(barge_diamond_4letter()),
        "non-self-correcting" => with_override(non_self_correcting()),
        "doubling" => with_override(doubling()),
        other => Err(CatalogError::Unknown(other.to_string())),
    }
}
