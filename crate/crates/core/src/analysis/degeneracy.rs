use std::collections::HashSet;

use serde::Serialize;

use crate::catalog;
use crate::homology::IntMatrix;
use crate::symbolic::{DirectiveSequence, Pattern, SubstitutionFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    Degenerate,
    NonDegenerate,
    /// Eventually constant at a member whose matrix has a zero in every power.
    GeneralizedDegenerate,
    UndecidableRepresentation,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyReport {
    pub verdict: Degeneracy,
    /// "chacon" for the {0, 2} rule, "generalized" otherwise.
    pub rule: &'static str,
    /// The index the sequence is eventually constant at, if any.
    pub constant_tail: Option<usize>,
}

/// Some power of the matrix is strictly positive (powers of the zero pattern cycle).
pub fn is_primitive_matrix(m: &IntMatrix) -> bool {
    let p = Pattern::of(m);
    let mut acc = p.clone();
    let mut seen = HashSet::new();
    loop {
        if acc.is_positive() {
            return true;
        }
        if !seen.insert(acc.clone()) {
            return false;
        }
        acc = acc.mul(&p);
    }
}

pub fn degeneracy(family: &SubstitutionFamily, d: &DirectiveSequence) -> DegeneracyReport {
    let chacon = *family == catalog::chacon_family();
    let rule = if chacon { "chacon" } else { "generalized" };
    let Some((_, period)) = d.periodic_form() else {
        return DegeneracyReport {
            verdict: Degeneracy::UndecidableRepresentation,
            rule,
            constant_tail: None,
        };
    };
    let tail = period.iter().all(|&x| x == period[0]).then_some(period[0]);
    let verdict = match tail {
        Some(t) if chacon && (t == 0 || t == 2) => Degeneracy::Degenerate,
        Some(t) if !chacon && !is_primitive_matrix(&family.members()[t].transition_matrix()) => {
            Degeneracy::GeneralizedDegenerate
        }
        _ => Degeneracy::NonDegenerate,
    };
    DegeneracyReport {
        verdict,
        rule,
        constant_tail: tail,
    }
}
