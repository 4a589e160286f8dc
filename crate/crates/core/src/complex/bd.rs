use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use super::cells::{CellComplex, Edge, EdgeLabel, Subcomplex, VertexLabel};
use super::ComplexError;
use crate::symbolic::{Alphabet, Letter, Word};

/// The Barge-Diamond complex on an alphabet and a set of two-letter words.
///
/// Cell order: vertex `2a` is `left(a)`, `2a+1` is `right(a)`; edges `0..l`
/// are the tile edges, followed by the vertex edges in lexicographic order.
#[derive(Clone, Debug, Serialize)]
pub struct BDComplex {
    alphabet: Alphabet,
    pairs: BTreeSet<(Letter, Letter)>,
    cells: CellComplex,
    #[serde(skip)]
    subcomplex: OnceLock<Subcomplex>,
}

impl PartialEq for BDComplex {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.pairs == other.pairs
    }
}

impl Eq for BDComplex {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub vertices: usize,
    pub edges: usize,
    pub tile_edges: usize,
    pub vertex_edges: usize,
    pub components: usize,
    pub s_vertices: usize,
    pub s_edges: usize,
    pub s_components: usize,
}

pub fn left(a: Letter) -> usize {
    2 * a
}

pub fn right(a: Letter) -> usize {
    2 * a + 1
}

impl BDComplex {
    pub fn new(
        alphabet: &Alphabet,
        pairs: impl IntoIterator<Item = (Letter, Letter)>,
    ) -> Result<Self, ComplexError> {
        let l = alphabet.size();
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= l || b >= l) {
            return Err(ComplexError::UnknownLetter {
                index: a.max(b),
                size: l,
            });
        }
        let vertices = (0..l)
            .flat_map(|a| [VertexLabel::Left(a), VertexLabel::Right(a)])
            .collect();
        let mut edges: Vec<Edge> = (0..l)
            .map(|a| Edge {
                tail: left(a),
                head: right(a),
                label: EdgeLabel::Tile(a),
            })
            .collect();
        edges.extend(pairs.iter().map(|&(a, b)| Edge {
            tail: right(a),
            head: left(b),
            label: EdgeLabel::Vertex(a, b),
        }));
        Ok(Self {
            alphabet: alphabet.clone(),
            pairs,
            cells: CellComplex { vertices, edges },
            subcomplex: OnceLock::new(),
        })
    }

    /// Built from a set of two-letter words.
    pub fn from_words<'a>(
        alphabet: &Alphabet,
        words: impl IntoIterator<Item = &'a Word>,
    ) -> Result<Self, ComplexError> {
        let mut pairs = Vec::new();
        for w in words {
            match w.letters() {
                &[a, b] => pairs.push((a, b)),
                _ => return Err(ComplexError::NotAPair(alphabet.render(w))),
            }
        }
        Self::new(alphabet, pairs)
    }

    /// All `l^2` vertex edges.
    pub fn universal(alphabet: &Alphabet) -> Self {
        let l = alphabet.size();
        Self::new(alphabet, (0..l).flat_map(|a| (0..l).map(move |b| (a, b)))).expect("in range")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pairs(&self) -> &BTreeSet<(Letter, Letter)> {
        &self.pairs
    }

    pub fn cells(&self) -> &CellComplex {
        &self.cells
    }

    pub fn tile_edge(&self, a: Letter) -> usize {
        a
    }

    pub fn vertex_edge(&self, a: Letter, b: Letter) -> Option<usize> {
        self.pairs
            .range(..(a, b))
            .count()
            .checked_add(self.alphabet.size())
            .filter(|_| self.pairs.contains(&(a, b)))
    }

    pub fn has_pair(&self, a: Letter, b: Letter) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// `S`: the vertex edges and their endpoints.
    pub fn vertex_subcomplex(&self) -> &Subcomplex {
        self.subcomplex.get_or_init(|| {
            let l = self.alphabet.size();
            self.cells
                .edge_subcomplex(&(l..self.cells.edge_count()).collect())
        })
    }

    pub fn census(&self) -> Census {
        let s = self.vertex_subcomplex();
        Census {
            vertices: self.cells.vertex_count(),
            edges: self.cells.edge_count(),
            tile_edges: self.alphabet.size(),
            vertex_edges: self.pairs.len(),
            components: self.cells.component_count(),
            s_vertices: s.complex.vertex_count(),
            s_edges: s.complex.edge_count(),
            s_components: s.complex.component_count(),
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        vertex_name(&self.alphabet, self.cells.vertices[v])
    }

    pub fn edge_name(&self, e: usize) -> String {
        edge_name(&self.alphabet, self.cells.edges[e].label)
    }
}

pub fn vertex_name(alphabet: &Alphabet, v: VertexLabel) -> String {
    match v {
        VertexLabel::Left(a) => format!("left({})", alphabet.symbol(a)),
        VertexLabel::Right(a) => format!("right({})", alphabet.symbol(a)),
        VertexLabel::Plain(i) => format!("v{i}"),
    }
}

pub fn edge_name(alphabet: &Alphabet, e: EdgeLabel) -> String {
    let sep = if alphabet.is_compact() { "" } else { " " };
    match e {
        EdgeLabel::Tile(a) => alphabet.symbol(a).to_string(),
        EdgeLabel::Vertex(a, b) => format!("{}{sep}{}", alphabet.symbol(a), alphabet.symbol(b)),
        EdgeLabel::Plain(i) => format!("e{i}"),
    }
}
