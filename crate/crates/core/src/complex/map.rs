use serde::Serialize;

use super::bd::{edge_name, left, right, BDComplex};
use super::cells::{CellComplex, EdgeLabel};
use super::ComplexError;
use crate::symbolic::Substitution;

/// A traversal of one edge; `forward = false` runs head to tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

/// A cellular map of 1-complexes: vertices to vertices, edges to edge paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellularMap {
    pub domain: CellComplex,
    pub codomain: CellComplex,
    pub vertex_images: Vec<usize>,
    pub edge_images: Vec<Vec<Step>>,
}

impl CellularMap {
    pub fn identity(k: &CellComplex) -> Self {
        Self {
            domain: k.clone(),
            codomain: k.clone(),
            vertex_images: (0..k.vertex_count()).collect(),
            edge_images: (0..k.edge_count())
                .map(|e| {
                    vec![Step {
                        edge: e,
                        forward: true,
                    }]
                })
                .collect(),
        }
    }

    /// Each image path runs from the image of the tail to the image of the
    /// head, through adjacent cells; vertex edges go to single vertex edges.
    pub fn check(&self) -> Result<(), String> {
        if self.vertex_images.len() != self.domain.vertex_count()
            || self.edge_images.len() != self.domain.edge_count()
        {
            return Err("image tables do not match the domain".into());
        }
        if let Some(&v) = self
            .vertex_images
            .iter()
            .find(|&&v| v >= self.codomain.vertex_count())
        {
            return Err(format!("vertex image {v} outside codomain"));
        }
        for (e, path) in self.edge_images.iter().enumerate() {
            let edge = self.domain.edges[e];
            let mut at = self.vertex_images[edge.tail];
            for step in path {
                let c = self
                    .codomain
                    .edges
                    .get(step.edge)
                    .ok_or_else(|| format!("edge {e}: path uses missing cell {}", step.edge))?;
                let (from, to) = if step.forward {
                    (c.tail, c.head)
                } else {
                    (c.head, c.tail)
                };
                if from != at {
                    return Err(format!(
                        "edge {e}: path is disconnected at cell {}",
                        step.edge
                    ));
                }
                at = to;
            }
            if at != self.vertex_images[edge.head] {
                return Err(format!(
                    "edge {e}: path ends away from the image of its head"
                ));
            }
            if edge.label.is_vertex_edge() {
                let single = matches!(path.as_slice(), [s] if s.forward
                    && self.codomain.edges[s.edge].label.is_vertex_edge());
                if !single {
                    return Err(format!(
                        "vertex edge {e} does not map to a single vertex edge"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Signed number of times each codomain edge is crossed by the image of each
    /// domain edge: `counts[e][f]`.
    pub fn traversal_counts(&self) -> Vec<Vec<i64>> {
        self.edge_images
            .iter()
            .map(|path| {
                let mut c = vec![0i64; self.codomain.edge_count()];
                for s in path {
                    c[s.edge] += if s.forward { 1 } else { -1 };
                }
                c
            })
            .collect()
    }

    /// Restriction to the vertex-edge subcomplexes, as a map of those complexes.
    pub fn restrict_to_vertex_subcomplex(&self) -> CellularMap {
        let sub = |k: &CellComplex| {
            let edges = (0..k.edge_count())
                .filter(|&e| k.edges[e].label.is_vertex_edge())
                .collect();
            k.edge_subcomplex(&edges)
        };
        let dom = sub(&self.domain);
        let cod = sub(&self.codomain);
        let local_vertex = |v: usize| {
            cod.vertex_map
                .binary_search(&v)
                .expect("image of S lies in S")
        };
        let local_edge = |e: usize| {
            cod.edge_map
                .binary_search(&e)
                .expect("image of S lies in S")
        };
        let map = CellularMap {
            vertex_images: dom
                .vertex_map
                .iter()
                .map(|&v| local_vertex(self.vertex_images[v]))
                .collect(),
            edge_images: dom
                .edge_map
                .iter()
                .map(|&e| {
                    let path = &self.edge_images[e];
                    assert!(
                        path.len() == 1 && path[0].forward,
                        "restriction is simplicial"
                    );
                    vec![Step {
                        edge: local_edge(path[0].edge),
                        forward: true,
                    }]
                })
                .collect(),
            domain: dom.complex,
            codomain: cod.complex,
        };
        debug_assert_eq!(map.check(), Ok(()));
        map
    }

    /// For maps sending every edge to a single edge: the edge function.
    pub fn edge_function(&self) -> Option<Vec<usize>> {
        self.edge_images
            .iter()
            .map(|p| match p.as_slice() {
                [s] if s.forward => Some(s.edge),
                _ => None,
            })
            .collect()
    }

    /// Bijective on vertices and on edges (a cell isomorphism).
    pub fn is_cell_bijection(&self) -> bool {
        let bij = |images: &[usize], n: usize| {
            let mut seen = vec![false; n];
            images.len() == n
                && images
                    .iter()
                    .all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        match self.edge_function() {
            Some(f) => {
                bij(&f, self.codomain.edge_count())
                    && bij(&self.vertex_images, self.codomain.vertex_count())
            }
            None => false,
        }
    }
}

/// `self ∘ inner`; requires `inner.codomain == self.domain`.
pub fn compose_maps(g: &CellularMap, h: &CellularMap) -> Result<CellularMap, ComplexError> {
    if h.codomain != g.domain {
        return Err(ComplexError::Mismatch);
    }
    let edge_images = h
        .edge_images
        .iter()
        .map(|path| {
            let mut out = Vec::new();
            for s in path {
                let img = &g.edge_images[s.edge];
                if s.forward {
                    out.extend_from_slice(img);
                } else {
                    out.extend(img.iter().rev().map(|t| Step {
                        edge: t.edge,
                        forward: !t.forward,
                    }));
                }
            }
            out
        })
        .collect();
    Ok(CellularMap {
        domain: h.domain.clone(),
        codomain: g.codomain.clone(),
        vertex_images: h
            .vertex_images
            .iter()
            .map(|&v| g.vertex_images[v])
            .collect(),
        edge_images,
    })
}

/// `g_phi: dom -> cod`: `e_a` goes to `e_{a_1} e_{a_1 a_2} e_{a_2} ... e_{a_k}`
/// for `phi(a) = a_1 ... a_k`, and `e_ab` to `e_{r(phi(a)) l(phi(b))}`.
pub fn induced_cell_map(
    phi: &Substitution,
    dom: &BDComplex,
    cod: &BDComplex,
) -> Result<CellularMap, ComplexError> {
    let l = dom.alphabet().size();
    if cod.alphabet() != dom.alphabet() || phi.size() != l {
        return Err(ComplexError::Mismatch);
    }
    let alphabet = dom.alphabet();
    let missing = |a: usize, b: usize, context: String| ComplexError::MissingCell {
        pair: edge_name(alphabet, EdgeLabel::Vertex(a, b)),
        context,
    };
    let mut edge_images = Vec::with_capacity(dom.cells().edge_count());
    for e in &dom.cells().edges {
        let path = match e.label {
            EdgeLabel::Tile(a) => {
                let w = phi.image(a).letters();
                let mut path = vec![Step {
                    edge: cod.tile_edge(w[0]),
                    forward: true,
                }];
                for pair in w.windows(2) {
                    let (x, y) = (pair[0], pair[1]);
                    let edge = cod.vertex_edge(x, y).ok_or_else(|| {
                        missing(
                            x,
                            y,
                            format!("interior of the image of tile {}", alphabet.symbol(a)),
                        )
                    })?;
                    path.push(Step {
                        edge,
                        forward: true,
                    });
                    path.push(Step {
                        edge: cod.tile_edge(y),
                        forward: true,
                    });
                }
                path
            }
            EdgeLabel::Vertex(a, b) => {
                let (x, y) = (phi.right(a), phi.left(b));
                let edge = cod.vertex_edge(x, y).ok_or_else(|| {
                    missing(
                        x,
                        y,
                        format!(
                            "junction image of {}",
                            edge_name(alphabet, EdgeLabel::Vertex(a, b))
                        ),
                    )
                })?;
                vec![Step {
                    edge,
                    forward: true,
                }]
            }
            EdgeLabel::Plain(_) => unreachable!("BD complexes carry labeled cells"),
        };
        edge_images.push(path);
    }
    let vertex_images = (0..l)
        .flat_map(|a| [left(phi.left(a)), right(phi.right(a))])
        .collect();
    let map = CellularMap {
        domain: dom.cells().clone(),
        codomain: cod.cells().clone(),
        vertex_images,
        edge_images,
    };
    map.check().map_err(ComplexError::Invariant)?;
    Ok(map)
}
