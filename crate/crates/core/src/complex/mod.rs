//! Barge-Diamond complexes, vertex subcomplexes and the cellular maps between them.

mod bd;
mod cells;
mod dot;
mod map;

use thiserror::Error;

pub use bd::{edge_name, left, right, vertex_name, BDComplex, Census};
pub use cells::{CellComplex, Edge, EdgeLabel, Subcomplex, VertexLabel};
pub use dot::export_dot;
pub use map::{compose_maps, induced_cell_map, CellularMap, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("pair references letter {index}, alphabet has {size}")]
    UnknownLetter { index: usize, size: usize },
    #[error("{0:?} is not a two-letter word")]
    NotAPair(String),
    #[error("codomain has no vertex edge e_{pair} (needed for the {context})")]
    MissingCell { pair: String, context: String },
    #[error("maps or complexes do not match")]
    Mismatch,
    #[error("cellular map invariant failed: {0}")]
    Invariant(String),
}
