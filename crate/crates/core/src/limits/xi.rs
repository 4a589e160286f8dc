use std::collections::BTreeSet;

use serde::Serialize;

use super::{build_tower, StageTower, TowerOptions};
use crate::complex::{compose_maps, CellComplex, CellularMap, EdgeLabel};
use crate::homology::cohomology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XiMethod {
    CellBijectionWindow,
    EventualRangePeriodic,
    ImageStabilization,
    Undetermined,
}

/// The finite complex whose homeomorphism type Ξ is reported to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XiComplex {
    /// Vertex edges of the complex, as two-letter words.
    pub edges: Vec<String>,
    pub vertices: usize,
    pub components: usize,
    pub reduced_h0_rank: usize,
    pub h1_rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct XiReport {
    pub method: XiMethod,
    pub evidence_depth: usize,
    pub exact: bool,
    pub semantics: String,
    pub complex: Option<XiComplex>,
    /// Successive images `h^k(S)` for the period-block map, method (b) only.
    pub image_sequence: Vec<Vec<String>>,
    /// For eventually periodic directives, the exact method run alongside a
    /// windowed conclusion.
    pub periodic_confirmation: Option<Box<XiReport>>,
}

impl XiReport {
    pub fn is_conclusive(&self) -> bool {
        self.complex.is_some()
    }

    pub fn components(&self) -> Option<usize> {
        self.complex.as_ref().map(|c| c.components)
    }

    pub fn h1_rank(&self) -> Option<usize> {
        self.complex.as_ref().map(|c| c.h1_rank)
    }

    fn undetermined(depth: usize) -> Self {
        Self {
            method: XiMethod::Undetermined,
            evidence_depth: depth,
            exact: false,
            semantics: format!("no method concluded within depth {depth}"),
            complex: None,
            image_sequence: Vec::new(),
            periodic_confirmation: None,
        }
    }
}

fn edge_names(tower: &StageTower, s: &CellComplex, edges: &BTreeSet<usize>) -> Vec<String> {
    let alphabet = tower.system.alphabet();
    edges
        .iter()
        .map(|&e| match s.edges[e].label {
            EdgeLabel::Vertex(a, b) => format!("{}{}", alphabet.symbol(a), alphabet.symbol(b)),
            other => format!("{other:?}"),
        })
        .collect()
}

fn describe(tower: &StageTower, s: &CellComplex, edges: &BTreeSet<usize>) -> XiComplex {
    let sub = s.edge_subcomplex(edges).complex;
    let data = cohomology(&sub);
    XiComplex {
        edges: edge_names(tower, s, edges),
        vertices: data.vertices,
        components: data.components,
        reduced_h0_rank: data.reduced_h0_rank,
        h1_rank: data.h1_rank,
    }
}

fn image(f: &[usize], edges: &BTreeSet<usize>) -> BTreeSet<usize> {
    edges.iter().map(|&e| f[e]).collect()
}

fn all_edges(s: &CellComplex) -> BTreeSet<usize> {
    (0..s.edge_count()).collect()
}

/// (a): every restricted map in the window is a cell bijection.
fn cell_bijection_window(tower: &StageTower) -> Option<XiReport> {
    if tower.maps.is_empty() || !tower.maps.iter().all(|c| c.restricted_bijective) {
        return None;
    }
    let s0 = &tower.maps[0].restricted.codomain;
    Some(XiReport {
        method: XiMethod::CellBijectionWindow,
        evidence_depth: tower.depth,
        exact: false,
        semantics: format!("verified to depth {}", tower.depth),
        complex: Some(describe(tower, s0, &all_edges(s0))),
        image_sequence: Vec::new(),
        periodic_confirmation: None,
    })
}

/// (b): compose the period block into `h: S -> S` and take descending images.
fn eventual_range(tower: &StageTower) -> Option<XiReport> {
    let (pre, per) = tower.system.directive().periodic_form()?;
    let (pre, per) = (pre.len(), per.len());
    let owned;
    let t = if tower.depth >= pre + per {
        tower
    } else {
        let options = TowerOptions {
            waive_primitivity: true,
            ..tower.options
        };
        owned = build_tower(&tower.system, pre + per, options).ok()?;
        &owned
    };
    // h = g_pre ∘ g_{pre+1} ∘ ... ∘ g_{pre+per-1}
    let mut h: CellularMap = t.maps[pre + per - 1].restricted.clone();
    for i in (pre..pre + per - 1).rev() {
        h = compose_maps(&t.maps[i].restricted, &h).ok()?;
    }
    if h.domain != h.codomain {
        return None;
    }
    let f = h.edge_function()?;
    let s = &h.codomain;
    let mut current = all_edges(s);
    let mut sequence = vec![edge_names(tower, s, &current)];
    let mut steps = 0;
    loop {
        let next = image(&f, &current);
        if next == current {
            break;
        }
        assert!(
            next.len() < current.len() && steps < s.edge_count(),
            "descending images must shrink strictly until stable"
        );
        steps += 1;
        current = next;
        sequence.push(edge_names(tower, s, &current));
    }
    Some(XiReport {
        method: XiMethod::EventualRangePeriodic,
        evidence_depth: pre + per,
        exact: true,
        semantics: "exact: the period-block map permutes the cells of its eventual range".into(),
        complex: Some(describe(tower, s, &current)),
        image_sequence: sequence,
        periodic_confirmation: None,
    })
}

/// (c): stage images of the levels above stabilize and the connecting maps
/// between stabilized images are bijective.
fn image_stabilization(tower: &StageTower) -> Option<XiReport> {
    let k = tower.depth;
    if k < 4 {
        return None;
    }
    let fs: Vec<Vec<usize>> = tower
        .maps
        .iter()
        .map(|c| c.restricted.edge_function())
        .collect::<Option<_>>()?;
    let spaces: Vec<&CellComplex> = tower.maps.iter().map(|c| &c.restricted.codomain).collect();
    let levels = k / 2;
    let mut stable = Vec::with_capacity(levels + 1);
    for i in 0..=levels {
        // images of S_{j+1} in S_i for j = i .. k-1
        let mut chain = Vec::new();
        for top in i + 1..=k {
            let mut set = all_edges(&tower.maps[top - 1].restricted.domain);
            for j in (i..top).rev() {
                set = image(&fs[j], &set);
            }
            chain.push(set);
        }
        let n = chain.len();
        if n < 2 || chain[n - 1] != chain[n - 2] {
            return None;
        }
        stable.push(chain.pop().expect("nonempty"));
    }
    for i in 0..levels {
        let img = image(&fs[i], &stable[i + 1]);
        if img != stable[i] || img.len() != stable[i + 1].len() {
            return None;
        }
    }
    Some(XiReport {
        method: XiMethod::ImageStabilization,
        evidence_depth: k,
        exact: false,
        semantics: format!("verified to depth {k}"),
        complex: Some(describe(tower, spaces[0], &stable[0])),
        image_sequence: Vec::new(),
        periodic_confirmation: None,
    })
}

/// Homeomorphism type of `Ξ = lim<-(S_i, g_i)`, trying the cell-bijection
/// window, then the periodic eventual range, then stage-image stabilization.
pub fn xi_analysis(tower: &StageTower) -> XiReport {
    if let Some(mut rep) = cell_bijection_window(tower) {
        if let Some(exact) = eventual_range(tower) {
            rep.exact = exact.complex == rep.complex;
            rep.periodic_confirmation = Some(Box::new(exact));
        }
        return rep;
    }
    eventual_range(tower)
        .or_else(|| image_stabilization(tower))
        .unwrap_or_else(|| XiReport::undetermined(tower.depth))
}
