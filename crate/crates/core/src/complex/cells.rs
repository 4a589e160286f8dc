use std::collections::BTreeSet;

use serde::Serialize;

/// Endpoint of a tile edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexLabel {
    Left(usize),
    Right(usize),
    /// Vertex of an unlabeled complex (used for generic 1-complexes).
    Plain(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeLabel {
    /// `e_a`, from `left(a)` to `right(a)`.
    Tile(usize),
    /// `e_ab`, from `right(a)` to `left(b)`.
    Vertex(usize, usize),
    Plain(usize),
}

impl EdgeLabel {
    pub fn is_vertex_edge(self) -> bool {
        matches!(self, EdgeLabel::Vertex(..))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub label: EdgeLabel,
}

/// A finite oriented 1-dimensional cell complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellComplex {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<Edge>,
}

impl CellComplex {
    /// Generic complex on `n` vertices; edges given as `(tail, head)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self {
            vertices: (0..n).map(VertexLabel::Plain).collect(),
            edges: edges
                .iter()
                .enumerate()
                .map(|(k, &(tail, head))| {
                    assert!(tail < n && head < n, "edge endpoint out of range");
                    Edge {
                        tail,
                        head,
                        label: EdgeLabel::Plain(k),
                    }
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, label: VertexLabel) -> Option<usize> {
        self.vertices.iter().position(|&v| v == label)
    }

    pub fn edge_index(&self, label: EdgeLabel) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Component id for each vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out[v] = ids[r];
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Subcomplex spanned by the given edges (and their endpoints), in the
    /// original cell order. Returns the complex with the vertex and edge
    /// index maps into `self`.
    pub fn edge_subcomplex(&self, edges: &BTreeSet<usize>) -> Subcomplex {
        let mut vset = BTreeSet::new();
        for &e in edges {
            vset.insert(self.edges[e].tail);
            vset.insert(self.edges[e].head);
        }
        let vertex_map: Vec<usize> = vset.into_iter().collect();
        let edge_map: Vec<usize> = edges.iter().copied().collect();
        let local = |v: usize| vertex_map.binary_search(&v).expect("endpoint present");
        let complex = CellComplex {
            vertices: vertex_map.iter().map(|&v| self.vertices[v]).collect(),
            edges: edge_map
                .iter()
                .map(|&e| {
                    let edge = self.edges[e];
                    Edge {
                        tail: local(edge.tail),
                        head: local(edge.head),
                        label: edge.label,
                    }
                })
                .collect(),
        };
        Subcomplex {
            complex,
            vertex_map,
            edge_map,
        }
    }
}

/// A subcomplex together with its inclusion into the ambient complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subcomplex {
    pub complex: CellComplex,
    /// local vertex index -> ambient vertex index
    pub vertex_map: Vec<usize>,
    /// local edge index -> ambient edge index
    pub edge_map: Vec<usize>,
}
