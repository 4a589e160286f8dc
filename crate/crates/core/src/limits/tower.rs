use serde::Serialize;

use super::LimitsError;
use crate::analysis::{primitivity, Mode, PrimitivityReport, Verdict};
use crate::complex::{induced_cell_map, BDComplex, CellularMap, Census};
use crate::homology::{
    euler_bound_check, induced_h1, naturality, relative_induced, EulerReport, ExactnessReport,
    IntMatrix, NaturalityReport, PairData,
};
use crate::symbolic::{admitted_words, LanguageStatus, MixedSystem};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TowerOptions {
    pub language_depth: usize,
    pub primitivity_window: usize,
    pub waive_primitivity: bool,
}

impl Default for TowerOptions {
    fn default() -> Self {
        Self {
            language_depth: 12,
            primitivity_window: 16,
            waive_primitivity: false,
        }
    }
}

/// One complex `K_i` with its pair data.
#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub level: usize,
    /// Words of the two-letter language, rendered.
    pub language: Vec<String>,
    pub language_status: LanguageStatus,
    pub language_depth_used: usize,
    pub complex: BDComplex,
    pub census: Census,
    pub pair: PairData,
    pub exactness: ExactnessReport,
    pub euler: EulerReport,
}

/// `g_i: K_{i+1} -> K_i` and everything it induces.
#[derive(Clone, Debug, Serialize)]
pub struct Connecting {
    pub level: usize,
    pub member: usize,
    #[serde(skip)]
    pub map: CellularMap,
    #[serde(skip)]
    pub restricted: CellularMap,
    /// `g_i^*: H^1(K_i) -> H^1(K_{i+1})` in the certified bases (columns act on coordinates).
    pub induced_h1: IntMatrix,
    /// `g_i^*` on `H^1(K, S)` in the tile-edge basis.
    pub relative: IntMatrix,
    pub relative_is_transpose: bool,
    pub restricted_bijective: bool,
    pub naturality: NaturalityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageTower {
    #[serde(skip)]
    pub system: MixedSystem,
    pub depth: usize,
    pub options: TowerOptions,
    pub primitivity: Option<PrimitivityReport>,
    /// `K_0, ..., K_depth`.
    pub stages: Vec<Stage>,
    /// `g_0, ..., g_{depth-1}`.
    pub maps: Vec<Connecting>,
}

impl StageTower {
    pub fn dimension(&self) -> usize {
        self.system.alphabet().size()
    }

    pub fn relative_matrices(&self) -> Vec<IntMatrix> {
        self.maps.iter().map(|c| c.relative.clone()).collect()
    }

    pub fn all_exact(&self) -> bool {
        self.stages.iter().all(|s| s.exactness.passed)
    }

    pub fn all_natural(&self) -> bool {
        self.maps.iter().all(|c| c.naturality.passed)
    }

    pub fn euler_holds(&self) -> bool {
        self.stages.iter().all(|s| s.euler.holds)
    }
}

fn stage(sys: &MixedSystem, level: usize, depth: usize) -> Result<Stage, LimitsError> {
    let lang = admitted_words(sys, level, 2, depth)?;
    if !lang.is_exact() {
        return Err(LimitsError::LanguageInexact { level, depth });
    }
    let complex = BDComplex::from_words(sys.alphabet(), &lang.words)?;
    let pair = PairData::of_bd(&complex);
    let exactness = pair.exactness();
    Ok(Stage {
        level,
        language: lang
            .words
            .iter()
            .map(|w| sys.alphabet().render(w))
            .collect(),
        language_status: lang.status,
        language_depth_used: lang.depth_used,
        census: complex.census(),
        euler: euler_bound_check(&complex),
        exactness,
        pair,
        complex,
    })
}

/// Builds `K_0 <- K_1 <- ... <- K_depth` from exact two-letter languages and
/// runs every stage check. A failed check is an error, not a flag.
pub fn build_tower(
    sys: &MixedSystem,
    depth: usize,
    options: TowerOptions,
) -> Result<StageTower, LimitsError> {
    let prim = if options.waive_primitivity {
        None
    } else {
        let rep = primitivity(sys, Mode::Weak, options.primitivity_window)?;
        match rep.verdict {
            Verdict::Holds => {}
            Verdict::Fails => {
                return Err(LimitsError::NotPrimitive {
                    level: rep.failing_level.unwrap_or(0),
                })
            }
            Verdict::UnknownAtDepth => {
                return Err(LimitsError::PrimitivityUnknown {
                    window: options.primitivity_window,
                })
            }
        }
        Some(rep)
    };
    let stages = (0..=depth)
        .map(|i| stage(sys, i, options.language_depth))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(bad) = stages.iter().find(|s| !s.exactness.passed) {
        return Err(LimitsError::Invariant(format!(
            "four-term sequence not exact at stage {}",
            bad.level
        )));
    }
    let mut maps = Vec::with_capacity(depth);
    for i in 0..depth {
        let member = sys.directive().get(i)?;
        let phi = sys.substitution_at(i)?;
        let (lower, upper) = (&stages[i], &stages[i + 1]);
        let map = induced_cell_map(phi, &upper.complex, &lower.complex)?;
        map.check().map_err(LimitsError::Invariant)?;
        let restricted = map.restrict_to_vertex_subcomplex();
        let relative = relative_induced(&map, &upper.pair.relative, &lower.pair.relative);
        let relative_is_transpose = relative == phi.transition_matrix().transpose();
        if !relative_is_transpose {
            return Err(LimitsError::Invariant(format!(
                "relative map at stage {i} differs from the transposed matrix"
            )));
        }
        let nat = naturality(&map, &restricted, &upper.pair, &lower.pair);
        if !nat.passed {
            return Err(LimitsError::Invariant(format!(
                "naturality fails at stage {i}"
            )));
        }
        maps.push(Connecting {
            level: i,
            member,
            induced_h1: induced_h1(&map, &upper.pair.k.h1, &lower.pair.k.h1),
            relative,
            relative_is_transpose,
            restricted_bijective: restricted.is_cell_bijection(),
            naturality: nat,
            map,
            restricted,
        });
    }
    Ok(StageTower {
        system: sys.clone(),
        depth,
        options,
        primitivity: prim,
        stages,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::symbolic::DirectiveSequence;

    #[test]
    fn chacon_stages() {
        let sys = catalog::chacon(DirectiveSequence::periodic(vec![0, 1, 2]).unwrap()).unwrap();
        let t = build_tower(&sys, 6, TowerOptions::default()).unwrap();
        for s in &t.stages {
            assert_eq!((s.census.vertices, s.census.edges), (4, 6));
            assert_eq!(s.pair.k.h1_rank, 3);
        }
        assert!(t.all_exact() && t.all_natural() && t.euler_holds());
        assert!(t.maps.iter().all(|c| c.restricted_bijective));
    }

    #[test]
    fn fibonacci_thue_morse_first_stage_differs() {
        let t = build_tower(&catalog::thue_morse_fibonacci(), 3, TowerOptions::default()).unwrap();
        let counts: Vec<usize> = t.stages.iter().map(|s| s.census.vertex_edges).collect();
        assert_eq!(counts, [4, 3, 3, 3]);
    }

    #[test]
    fn degenerate_directive_is_refused() {
        let sys = catalog::chacon(DirectiveSequence::constant(0)).unwrap();
        assert!(matches!(
            build_tower(&sys, 2, TowerOptions::default()),
            Err(LimitsError::NotPrimitive { .. })
        ));
    }
}
