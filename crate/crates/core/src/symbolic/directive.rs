use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::SymbolicError;
use crate::padic::{digit_cycle, valuation3};

/// The index sequence `s = (s_0, s_1, ...)` choosing a family member per level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DirectiveSequence {
    EventuallyPeriodic {
        preperiod: Vec<usize>,
        period: Vec<usize>,
    },
    /// Finite; reading past the end is an error.
    ExplicitPrefix(Vec<usize>),
    /// The 3-adic digits of a rational of nonnegative valuation.
    PadicDigits(BigRational),
    /// Pseudo-random indices in `0..arity`, skipping the first `offset` draws.
    Seeded {
        seed: u64,
        arity: usize,
        offset: usize,
    },
}

impl DirectiveSequence {
    pub fn eventually_periodic(
        preperiod: Vec<usize>,
        period: Vec<usize>,
    ) -> Result<Self, SymbolicError> {
        if period.is_empty() {
            return Err(SymbolicError::EmptyPeriod);
        }
        Ok(Self::EventuallyPeriodic { preperiod, period })
    }

    pub fn periodic(period: Vec<usize>) -> Result<Self, SymbolicError> {
        Self::eventually_periodic(Vec::new(), period)
    }

    pub fn constant(index: usize) -> Self {
        Self::EventuallyPeriodic {
            preperiod: Vec::new(),
            period: vec![index],
        }
    }

    pub fn padic(value: BigRational) -> Result<Self, SymbolicError> {
        if valuation3(&value).is_some_and(|v| v < 0) {
            return Err(SymbolicError::PadicValuation(value.to_string()));
        }
        Ok(Self::PadicDigits(value))
    }

    pub fn seeded(seed: u64, arity: usize) -> Result<Self, SymbolicError> {
        if arity == 0 {
            return Err(SymbolicError::SeededArity);
        }
        Ok(Self::Seeded {
            seed,
            arity,
            offset: 0,
        })
    }

    /// `(preperiod, period)` when the sequence is known to be eventually periodic.
    pub fn periodic_form(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        match self {
            Self::EventuallyPeriodic { preperiod, period } => {
                Some((preperiod.clone(), period.clone()))
            }
            Self::PadicDigits(v) => {
                let (pre, per) = digit_cycle(v).expect("valuation checked at construction");
                Some((
                    pre.into_iter().map(usize::from).collect(),
                    per.into_iter().map(usize::from).collect(),
                ))
            }
            _ => None,
        }
    }

    /// Number of defined positions; `None` for infinite sequences.
    pub fn available(&self) -> Option<usize> {
        match self {
            Self::ExplicitPrefix(p) => Some(p.len()),
            _ => None,
        }
    }

    /// Largest index the sequence can produce, for validation against a family.
    pub fn max_index(&self) -> Option<usize> {
        match self {
            Self::EventuallyPeriodic { preperiod, period } => {
                preperiod.iter().chain(period).copied().max()
            }
            Self::ExplicitPrefix(p) => p.iter().copied().max(),
            Self::PadicDigits(_) => Some(2),
            Self::Seeded { arity, .. } => Some(arity - 1),
        }
    }

    pub fn validate(&self, family_size: usize) -> Result<(), SymbolicError> {
        if let Self::PadicDigits(_) = self {
            if family_size < 3 {
                return Err(SymbolicError::PadicArity(family_size));
            }
        }
        match self.max_index() {
            Some(index) if index >= family_size => Err(SymbolicError::DirectiveIndexOutOfRange {
                index,
                size: family_size,
            }),
            _ => Ok(()),
        }
    }

    pub fn get(&self, i: usize) -> Result<usize, SymbolicError> {
        Ok(*self.prefix(i + 1)?.last().expect("nonempty prefix"))
    }

    /// `(s_0, ..., s_{n-1})`.
    pub fn prefix(&self, n: usize) -> Result<Vec<usize>, SymbolicError> {
        match self {
            Self::EventuallyPeriodic { preperiod, period } => Ok((0..n)
                .map(|i| {
                    if i < preperiod.len() {
                        preperiod[i]
                    } else {
                        period[(i - preperiod.len()) % period.len()]
                    }
                })
                .collect()),
            Self::ExplicitPrefix(p) => {
                if n > p.len() {
                    Err(SymbolicError::DirectiveExhausted {
                        requested: n - 1,
                        available: p.len(),
                    })
                } else {
                    Ok(p[..n].to_vec())
                }
            }
            Self::PadicDigits(_) => {
                let (pre, per) = self.periodic_form().expect("rational digits are periodic");
                Self::EventuallyPeriodic {
                    preperiod: pre,
                    period: per,
                }
                .prefix(n)
            }
            Self::Seeded {
                seed,
                arity,
                offset,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                for _ in 0..*offset {
                    rng.gen_range(0..*arity);
                }
                Ok((0..n).map(|_| rng.gen_range(0..*arity)).collect())
            }
        }
    }

    /// `sigma^i(s)`.
    pub fn shift(&self, i: usize) -> Result<Self, SymbolicError> {
        if i == 0 {
            return Ok(self.clone());
        }
        match self {
            Self::ExplicitPrefix(p) => {
                if i > p.len() {
                    Err(SymbolicError::DirectiveExhausted {
                        requested: i,
                        available: p.len(),
                    })
                } else {
                    Ok(Self::ExplicitPrefix(p[i..].to_vec()))
                }
            }
            Self::Seeded {
                seed,
                arity,
                offset,
            } => Ok(Self::Seeded {
                seed: *seed,
                arity: *arity,
                offset: offset + i,
            }),
            _ => {
                let (pre, per) = self.periodic_form().expect("periodic");
                if i < pre.len() {
                    Ok(Self::EventuallyPeriodic {
                        preperiod: pre[i..].to_vec(),
                        period: per,
                    })
                } else {
                    let r = (i - pre.len()) % per.len();
                    let mut period = per[r..].to_vec();
                    period.extend_from_slice(&per[..r]);
                    Ok(Self::EventuallyPeriodic {
                        preperiod: Vec::new(),
                        period,
                    })
                }
            }
        }
    }

    /// Parses the text forms written by `Display`. `family_size` fills in the
    /// arity of a seeded directive when it is not given.
    pub fn parse(text: &str, family_size: usize) -> Result<Self, String> {
        let text = text.trim();
        let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match head {
            "padic" => {
                let value: BigRational = parse_rational(rest)?;
                Self::padic(value).map_err(|e| e.to_string())
            }
            "explicit" => Ok(Self::ExplicitPrefix(parse_list(rest)?)),
            "period" => Self::periodic(parse_list(rest)?).map_err(|e| e.to_string()),
            "prefix" => {
                let (pre, tail) = rest
                    .split_once(')')
                    .ok_or_else(|| "expected ')' after prefix list".to_string())?;
                let pre = parse_list(&format!("{pre})"))?;
                let tail = tail.trim();
                let per = tail
                    .strip_prefix("period")
                    .ok_or_else(|| "expected 'period' after prefix".to_string())?;
                Self::eventually_periodic(pre, parse_list(per)?).map_err(|e| e.to_string())
            }
            "seeded" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let num = |s: &str| s.parse::<u64>().map_err(|_| format!("bad integer {s:?}"));
                let seed = num(toks.first().ok_or("seeded needs a seed")?)?;
                let mut arity = family_size;
                let mut offset = 0;
                let mut k = 1;
                while k < toks.len() {
                    let value = toks
                        .get(k + 1)
                        .ok_or(format!("{} needs a value", toks[k]))?;
                    match toks[k] {
                        "arity" => arity = num(value)? as usize,
                        "offset" => offset = num(value)? as usize,
                        other => return Err(format!("unexpected {other:?} in seeded directive")),
                    }
                    k += 2;
                }
                if arity == 0 {
                    return Err(SymbolicError::SeededArity.to_string());
                }
                Ok(Self::Seeded {
                    seed,
                    arity,
                    offset,
                })
            }
            _ => Err(format!(
                "unknown directive {head:?}; expected prefix, period, padic, explicit or seeded"
            )),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("bad rational {s:?}");
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == 0.into() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `(0 1 2)` or `()`.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("expected a parenthesized index list, found {s:?}"))?;
    inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad index {t:?}")))
        .collect()
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(" "))
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EventuallyPeriodic { preperiod, period } if preperiod.is_empty() => {
                write!(f, "period {}", list(period))
            }
            Self::EventuallyPeriodic { preperiod, period } => {
                write!(f, "prefix {} period {}", list(preperiod), list(period))
            }
            Self::ExplicitPrefix(p) => write!(f, "explicit {}", list(p)),
            Self::PadicDigits(v) => write!(f, "padic {v}"),
            Self::Seeded {
                seed,
                arity,
                offset: 0,
            } => write!(f, "seeded {seed} arity {arity}"),
            Self::Seeded {
                seed,
                arity,
                offset,
            } => write!(f, "seeded {seed} arity {arity} offset {offset}"),
        }
    }
}

impl Serialize for DirectiveSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let kind = match self {
            Self::EventuallyPeriodic { .. } => "eventually-periodic",
            Self::ExplicitPrefix(_) => "explicit-prefix",
            Self::PadicDigits(_) => "padic-digits",
            Self::Seeded { .. } => "seeded",
        };
        let mut st = serializer.serialize_struct("DirectiveSequence", 3)?;
        st.serialize_field("kind", kind)?;
        st.serialize_field("spec", &self.to_string())?;
        st.serialize_field("periodic_form", &self.periodic_form())?;
        st.end()
    }
}
