use num_bigint::BigInt;
use serde::Serialize;

use super::{limit_descriptor, DirectLimitDescriptor, StageTower, XiReport};
use crate::catalog;
use crate::homology::{characteristic_polynomial, polynomial_product, IntMatrix, RatMatrix};
use crate::padic::{chacon_conjugator, chacon_conjugator_inverse, GrTower, PadicInteger};

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Assembly {
    /// `lim-> ⊕ Z^m`, Ξ connected.
    Split {
        m: usize,
    },
    /// `0 -> Z^{k-1} -> lim-> -> H^1 -> Z^m -> 0`; the injection is shown at stage 0.
    ExactSequence {
        k: usize,
        m: usize,
        connecting_map_stage0: IntMatrix,
    },
    StagewiseOnly {
        reason: String,
    },
}

/// The Chacon middle term conjugated into the Goodearl-Rushing form.
#[derive(Clone, Debug, Serialize)]
pub struct ChaconLimit {
    pub digits: Vec<u8>,
    /// `C^B_n = L C_n L^{-1}`, with `C^B_{n+1} = C^B_n B_{s_n}^{-1}`.
    pub b_tower: Vec<RatMatrix>,
    /// `C^B_n L = L C_n` at every stage.
    pub coherent: bool,
    /// `C^B_n` has columns `w_n, z_n` of the lattice `A_{alpha,n}`.
    pub matches_gr_lattices: bool,
    pub indices: Vec<Option<String>>,
    pub all_indices_three: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitCheck {
    pub level: usize,
    /// Consecutive complexes coincide, so the stage maps are endomorphisms.
    pub applicable: bool,
    /// `chi(abs) chi(left) = chi(rel) chi(restricted)`.
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct H1Report {
    pub system_depth: usize,
    pub limit: DirectLimitDescriptor,
    pub xi: XiReport,
    pub assembly: Assembly,
    pub isomorphism_type: String,
    pub chacon: Option<ChaconLimit>,
    pub split_checks: Vec<SplitCheck>,
    pub semantics: String,
}

fn chacon_limit(tower: &StageTower, limit: &DirectLimitDescriptor) -> Option<ChaconLimit> {
    if tower.system.family() != &catalog::chacon_family() || limit.lattices.is_empty() {
        return None;
    }
    let l = chacon_conjugator().to_rational();
    let l_inv = chacon_conjugator_inverse().to_rational();
    let b_tower: Vec<RatMatrix> = limit
        .lattices
        .iter()
        .map(|lv| &(&l * &lv.lattice.basis) * &l_inv)
        .collect();
    let coherent = b_tower
        .iter()
        .zip(&limit.lattices)
        .all(|(b, lv)| &*b * &l == &l * &lv.lattice.basis);
    let digits: Vec<u8> = tower.maps.iter().map(|c| c.member as u8).collect();
    let alpha = PadicInteger::from_digits(digits.clone()).ok()?;
    let matches_gr_lattices = GrTower::build(&alpha, digits.len())
        .map(|gr| {
            gr.levels
                .iter()
                .zip(&b_tower)
                .all(|(level, b)| &level.basis == b)
        })
        .unwrap_or(false);
    let indices: Vec<Option<String>> = limit
        .lattices
        .iter()
        .skip(1)
        .map(|lv| lv.index_from_previous.as_ref().map(BigInt::to_string))
        .collect();
    let all_indices_three = indices.iter().all(|x| x.as_deref() == Some("3"));
    Some(ChaconLimit {
        digits,
        b_tower,
        coherent,
        matches_gr_lattices,
        indices,
        all_indices_three,
    })
}

fn split_checks(tower: &StageTower) -> Vec<SplitCheck> {
    tower
        .maps
        .iter()
        .map(|c| {
            let (lower, upper) = (&tower.stages[c.level], &tower.stages[c.level + 1]);
            let applicable = lower.complex.pairs() == upper.complex.pairs();
            let nat = &c.naturality;
            let chi = |m: &IntMatrix| characteristic_polynomial(m);
            let holds = applicable
                && polynomial_product(&chi(&nat.absolute), &chi(&nat.left))
                    == polynomial_product(&chi(&nat.relative), &chi(&nat.restricted));
            SplitCheck {
                level: c.level,
                applicable,
                holds,
            }
        })
        .collect()
}

fn free(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        1 => "Z".into(),
        r => format!("Z^{r}"),
    }
}

fn free_rank_of(s: &str) -> Option<usize> {
    match s {
        "0" => Some(0),
        "Z" => Some(1),
        _ => s.strip_prefix("Z^")?.parse().ok(),
    }
}

/// `Ȟ^1(Ω)` from the limit descriptor and the Ξ analysis.
pub fn assemble_h1(tower: &StageTower, xi: &XiReport) -> H1Report {
    let limit = limit_descriptor(tower);
    let chacon = chacon_limit(tower, &limit);
    let limit_name = if chacon.is_some() {
        "G_α".to_string()
    } else {
        limit.isomorphism_type.clone().unwrap_or_else(|| {
            format!(
                "lim->(Z^{}, M^T) [generators to depth {}]",
                limit.dimension, limit.window
            )
        })
    };
    let (assembly, isomorphism_type) = match xi.complex.as_ref() {
        Some(c) if c.components == 1 => {
            let m = c.h1_rank;
            let name = match free_rank_of(&limit_name) {
                Some(r) => free(r + m),
                None if m == 0 => limit_name.clone(),
                None => format!("{limit_name} ⊕ {}", free(m)),
            };
            (Assembly::Split { m }, name)
        }
        Some(c) => {
            let stage0 = &tower.stages[0].pair;
            let name = format!(
                "extension 0 -> Z^{} -> {limit_name} -> H^1 -> {} -> 0",
                c.components - 1,
                free(c.h1_rank)
            );
            (
                Assembly::ExactSequence {
                    k: c.components,
                    m: c.h1_rank,
                    connecting_map_stage0: stage0.a.clone(),
                },
                name,
            )
        }
        None => (
            Assembly::StagewiseOnly {
                reason: xi.semantics.clone(),
            },
            format!("stagewise only (depth {})", tower.depth),
        ),
    };
    let semantics = if limit.periodic.is_some() && xi.exact {
        "exact".to_string()
    } else {
        format!("verified to depth {}", tower.depth)
    };
    H1Report {
        system_depth: tower.depth,
        split_checks: split_checks(tower),
        limit,
        xi: xi.clone(),
        assembly,
        isomorphism_type,
        chacon,
        semantics,
    }
}
