//! Command implementations behind the `sadic` binary. Each command returns a
//! [`Report`]; the binary only parses flags, prints and picks the exit code.

use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use sadic::analysis::{degeneracy, primitivity, Mode};
use sadic::catalog::{self, CatalogParams};
use sadic::complex::{export_dot, induced_cell_map, BDComplex};
use sadic::format::{parse_system, print_system};
use sadic::limits::{assemble_h1, build_tower, xi_analysis, Assembly, LimitsError, TowerOptions};
use sadic::padic::{
    candidate_isomorphs, chacon_conjugation_check, digits_of_rational, PadicInteger,
};
use sadic::symbolic::{admitted_words, MixedSystem, LANGUAGE_CONVENTION};

pub const SCHEMA: &str = "sadic-report/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Inconclusive(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<LimitsError> for CliError {
    fn from(e: LimitsError) -> Self {
        match e {
            LimitsError::Invariant(m) => CliError::Internal(m),
            e @ (LimitsError::LanguageInexact { .. } | LimitsError::PrimitivityUnknown { .. }) => {
                CliError::Inconclusive(e.to_string())
            }
            e => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub conventions: Value,
    /// Set by the caller; excluded when comparing runs.
    pub timing_ms: Option<u64>,
    /// Some part of the result is a lower bound or undetermined.
    pub inconclusive: bool,
    pub summary: Vec<(String, String)>,
    pub payload: Value,
}

impl Report {
    fn new(command: Vec<String>, payload: Value) -> Self {
        Self {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command,
            conventions: json!({ "language": LANGUAGE_CONVENTION }),
            timing_ms: None,
            inconclusive: false,
            summary: Vec::new(),
            payload,
        }
    }

    fn line(&mut self, key: &str, value: impl Into<String>) {
        self.summary.push((key.to_string(), value.into()));
    }

    /// Fails with exit code 2 when `strict` and the report is inconclusive.
    pub fn check_strict(&self, strict: bool) -> Result<(), CliError> {
        if strict && self.inconclusive {
            let why = self
                .summary
                .iter()
                .find(|(k, _)| k == "status")
                .map_or("see report".to_string(), |(_, v)| v.clone());
            return Err(CliError::Inconclusive(why));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Two-column text view of the summary.
    pub fn render_table(&self) -> String {
        let width = self.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.summary {
            let mut lines = v.lines();
            out.push_str(&format!("{k:<width$}  {}\n", lines.next().unwrap_or("")));
            for rest in lines {
                out.push_str(&format!("{:<width$}  {rest}\n", ""));
            }
        }
        out
    }
}

/// A catalog name or a path to a system file.
#[derive(Clone, Debug, Default)]
pub struct Source {
    pub name: String,
    pub alpha: Option<String>,
    pub directive: Option<String>,
    pub d: Option<usize>,
}

impl Source {
    pub fn catalog(name: &str) -> Self {
        Self {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn load(&self) -> Result<MixedSystem, CliError> {
        if Path::new(&self.name).is_file() {
            let text = std::fs::read_to_string(&self.name)
                .map_err(|e| CliError::Input(format!("{}: {e}", self.name)))?;
            let sys =
                parse_system(&text).map_err(|e| CliError::Input(format!("{}: {e}", self.name)))?;
            return match &self.directive {
                Some(d) => {
                    let d = sadic::symbolic::DirectiveSequence::parse(d, sys.family().len())
                        .map_err(CliError::Input)?;
                    sys.with_directive(d)
                        .map_err(|e| CliError::Input(e.to_string()))
                }
                None => Ok(sys),
            };
        }
        let params = CatalogParams {
            directive: self.directive.clone(),
            alpha: self.alpha.clone(),
            d: self.d,
        };
        catalog::build(&self.name, &params).map_err(|e| CliError::Input(e.to_string()))
    }

    fn echo(&self) -> Vec<String> {
        let mut out = vec![self.name.clone()];
        if let Some(a) = &self.alpha {
            out.extend(["--alpha".into(), a.clone()]);
        }
        if let Some(d) = &self.directive {
            out.extend(["--directive".into(), d.clone()]);
        }
        if let Some(d) = self.d {
            out.extend(["--d".into(), d.to_string()]);
        }
        out
    }
}

fn command(name: &str, src: &Source, extra: &[String]) -> Vec<String> {
    let mut out = vec![name.to_string()];
    out.extend(src.echo());
    out.extend_from_slice(extra);
    out
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn cmd_info(src: &Source, window: usize) -> Result<Report, CliError> {
    let sys = src.load()?;
    let alphabet = sys.alphabet();
    let members: Vec<Value> = sys
        .family()
        .members()
        .iter()
        .map(|s| {
            json!({
                "rules": s.images().iter().enumerate()
                    .map(|(a, w)| format!("{} -> {}", alphabet.symbol(a), alphabet.render(w)))
                    .collect::<Vec<_>>(),
                "matrix": s.transition_matrix(),
            })
        })
        .collect();
    let prim = primitivity(&sys, Mode::Weak, window).map_err(|e| CliError::Input(e.to_string()))?;
    let degen = degeneracy(sys.family(), sys.directive());
    let mut r = Report::new(
        command("info", src, &[]),
        json!({
            "alphabet": alphabet.symbols(),
            "members": members,
            "directive": sys.directive(),
            "primitivity": prim,
            "degeneracy": degen,
            "text": print_system(&sys),
        }),
    );
    r.line("alphabet", alphabet.symbols().join(" "));
    for (k, s) in sys.family().members().iter().enumerate() {
        let rules: Vec<String> = s
            .images()
            .iter()
            .enumerate()
            .map(|(a, w)| format!("{} -> {}", alphabet.symbol(a), alphabet.render(w)))
            .collect();
        r.line(&format!("member {k}"), rules.join(", "));
        r.line(&format!("M_{k}"), s.transition_matrix().to_string());
    }
    r.line("directive", sys.directive().to_string());
    r.line("weak primitivity", format!("{:?}", prim.verdict));
    r.line("degeneracy", format!("{:?}", degen.verdict));
    Ok(r)
}

pub fn cmd_language(
    src: &Source,
    level: usize,
    length: usize,
    depth: usize,
) -> Result<Report, CliError> {
    let sys = src.load()?;
    let res =
        admitted_words(&sys, level, length, depth).map_err(|e| CliError::Input(e.to_string()))?;
    let words: Vec<String> = res.words.iter().map(|w| sys.alphabet().render(w)).collect();
    let extra = [
        "--level".into(),
        level.to_string(),
        "--length".into(),
        length.to_string(),
        "--depth".into(),
        depth.to_string(),
    ];
    let mut r = Report::new(
        command("language", src, &extra),
        json!({ "words": words, "result": res }),
    );
    r.inconclusive = !res.is_exact();
    r.line("words", words.join(" "));
    r.line("count", words.len().to_string());
    r.line(
        "status",
        if res.is_exact() {
            format!("exact (depth used {})", res.depth_used)
        } else {
            format!("lower-bound at depth {}", res.depth_used)
        },
    );
    Ok(r)
}

/// Returns the report and, when asked, the DOT text.
pub fn cmd_complex(
    src: &Source,
    level: usize,
    depth: usize,
    universal: bool,
    dot: bool,
) -> Result<(Report, Option<String>), CliError> {
    let sys = src.load()?;
    let (k, exact) = if universal {
        (BDComplex::universal(sys.alphabet()), true)
    } else {
        let res =
            admitted_words(&sys, level, 2, depth).map_err(|e| CliError::Input(e.to_string()))?;
        let k = BDComplex::from_words(sys.alphabet(), &res.words)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        (k, res.is_exact())
    };
    let census = k.census();
    let pairs: Vec<String> = k
        .pairs()
        .iter()
        .map(|&(a, b)| format!("{}{}", sys.alphabet().symbol(a), sys.alphabet().symbol(b)))
        .collect();
    let mut extra = vec!["--level".into(), level.to_string()];
    if universal {
        extra.push("--universal".into());
    }
    let mut r = Report::new(
        command("complex", src, &extra),
        json!({ "census": census, "pairs": pairs, "language_exact": exact, "cells": k.cells() }),
    );
    r.inconclusive = !exact;
    r.line("pairs", pairs.join(" "));
    r.line("V", census.vertices.to_string());
    r.line("E", census.edges.to_string());
    r.line("components", census.components.to_string());
    r.line("S components", census.s_components.to_string());
    r.line(
        "status",
        if exact {
            "exact"
        } else {
            "lower-bound language"
        },
    );
    let dot = dot.then(|| {
        let g = (!universal)
            .then(|| sys.substitution_at(level).ok())
            .flatten()
            .and_then(|phi| induced_cell_map(phi, &k, &k).ok());
        export_dot(&k, g.as_ref())
    });
    Ok((r, dot))
}

pub fn cmd_cohomology(
    src: &Source,
    depth: usize,
    language_depth: usize,
    waive_primitivity: bool,
) -> Result<Report, CliError> {
    let sys = src.load()?;
    let options = TowerOptions {
        language_depth,
        waive_primitivity,
        ..TowerOptions::default()
    };
    let tower = build_tower(&sys, depth, options)?;
    let xi = xi_analysis(&tower);
    let h1 = assemble_h1(&tower, &xi);
    let stages: Vec<Value> = tower
        .stages
        .iter()
        .map(|s| {
            json!({
                "level": s.level,
                "language": s.language,
                "census": s.census,
                "h1_rank": s.pair.k.h1_rank,
                "exact_sequence": s.exactness,
                "euler": s.euler,
            })
        })
        .collect();
    let maps: Vec<Value> = tower
        .maps
        .iter()
        .map(|c| {
            json!({
                "level": c.level,
                "member": c.member,
                "induced_h1": c.induced_h1,
                "relative": c.relative,
                "relative_is_transpose": c.relative_is_transpose,
                "restricted_bijective": c.restricted_bijective,
                "naturality": c.naturality.passed,
            })
        })
        .collect();
    let extra = [
        "--depth".into(),
        depth.to_string(),
        "--language-depth".into(),
        language_depth.to_string(),
    ];
    let mut r = Report::new(
        command("cohomology", src, &extra),
        json!({ "h1": h1, "stages": stages, "maps": maps }),
    );
    r.line("H1", h1.isomorphism_type.clone());
    r.line("semantics", h1.semantics.clone());
    r.line("Xi method", format!("{:?}", xi.method));
    if let Some(c) = &xi.complex {
        r.line(
            "Xi",
            format!(
                "components {}, H1 rank {}, edges {}",
                c.components,
                c.h1_rank,
                c.edges.join(" ")
            ),
        );
    }
    r.line("limit class", format!("{:?}", h1.limit.class));
    if let Some(c) = &h1.chacon {
        r.line(
            "lattice indices",
            c.indices
                .iter()
                .map(|x| x.clone().unwrap_or("-".into()))
                .collect::<Vec<_>>()
                .join(" "),
        );
        r.line("GR lattices agree", c.matches_gr_lattices.to_string());
    }
    r.line("stages exact", tower.all_exact().to_string());
    r.line("naturality", tower.all_natural().to_string());
    r.inconclusive = matches!(h1.assembly, Assembly::StagewiseOnly { .. });
    r.line(
        "status",
        if r.inconclusive {
            "Ξ undetermined; stagewise data only"
        } else {
            "conclusive"
        },
    );
    Ok(r)
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Input(format!("bad rational {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == 0.into() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => BigRational::from_str(text.trim()).map_err(|_| bad()),
    }
}

/// A rational, or a digit prefix written `digits 2 1 1`.
fn parse_padic(text: &str, n: usize) -> Result<PadicInteger, CliError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("digits") {
        let digits = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| CliError::Input(format!("bad digit {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return PadicInteger::from_digits(digits).map_err(|e| CliError::Input(e.to_string()));
    }
    digits_of_rational(&parse_rational(text)?, n).map_err(|e| CliError::Input(e.to_string()))
}

pub fn cmd_padic_digits(value: &str, n: usize) -> Result<Report, CliError> {
    let x = parse_padic(value, n)?;
    let mut r = Report::new(
        vec![
            "padic".into(),
            "digits".into(),
            value.into(),
            "--n".into(),
            n.to_string(),
        ],
        json!({ "value": x }),
    );
    r.line("digits", x.to_string());
    Ok(r)
}

pub fn cmd_padic_candidates(value: &str, bound: i64, n: usize) -> Result<Report, CliError> {
    if bound < 1 {
        return Err(CliError::Input("bound must be at least 1".into()));
    }
    let alpha = parse_padic(value, n)?;
    let rep = candidate_isomorphs(&alpha, bound, n);
    let mut r = Report::new(
        vec![
            "padic".into(),
            "candidates".into(),
            value.into(),
            "--bound".into(),
            bound.to_string(),
            "--n".into(),
            n.to_string(),
        ],
        to_value(&rep),
    );
    r.line("alpha", alpha.to_string());
    r.line("candidates", rep.candidates.len().to_string());
    r.line("skipped", rep.skipped.len().to_string());
    let listing: Vec<String> = rep
        .candidates
        .iter()
        .map(|c| {
            let p = &c.params;
            format!(
                "({}, {}, {}, {}) -> {}",
                p.r_w, p.r_z, p.s_w, p.s_z, c.alpha
            )
        })
        .collect();
    r.line("list", listing.join("\n"));
    r.line("semantics", rep.semantics.to_string());
    Ok(r)
}

pub fn cmd_padic_check_chacon() -> Result<Report, CliError> {
    let rep = chacon_conjugation_check();
    if !rep.all_hold {
        return Err(CliError::Internal("conjugation identities fail".into()));
    }
    let mut r = Report::new(vec!["padic".into(), "check-chacon".into()], to_value(&rep));
    for c in &rep.identities {
        r.line(
            &format!("L M_{}^T L^-1", c.index),
            format!(
                "{} ({})",
                c.conjugated,
                if c.holds { "holds" } else { "fails" }
            ),
        );
    }
    r.line("det L", rep.det_l.to_string());
    Ok(r)
}

pub fn cmd_catalog() -> Report {
    let entries = catalog::entries();
    let mut r = Report::new(vec!["catalog".into()], to_value(&entries));
    for e in &entries {
        r.line(e.name, e.description);
    }
    r
}
