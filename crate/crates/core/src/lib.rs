pub mod error;
pub mod graph;
pub mod planarity;
pub mod constructions;
pub mod dual;
pub mod decompositions;
pub mod drawings;
pub mod verification;
pub mod io;
pub mod svg;

pub use error::{Error, Result};
pub use graph::{EmbeddedGraph, Face, Graph, VertexId};
