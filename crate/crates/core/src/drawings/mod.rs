//! Layered drawings of blowups and the constructions that produce them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::{blowup, BlowupVertex};
use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Graph, VertexId};

mod coloring;
mod forest;
mod outerpath;
mod strip;

pub use coloring::{draw_bipartite_thicknessk, draw_coloring_splitk};
pub use forest::draw_forest_closed_blowup;
pub use outerpath::{draw_kleetope_split2, draw_path_copath_split2, draw_two_outerpath_biplanar, KleetopeSplitDrawing, TrianglePair};

/// One occurrence of a blowup vertex in a plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ImageId<V = String> {
    pub vertex: BlowupVertex<V>,
    pub occ: u32,
}

impl<V> ImageId<V> {
    pub fn new(base: V, copy: u32, occ: u32) -> Self {
        Self { vertex: BlowupVertex::new(base, copy), occ }
    }
}

impl<V: fmt::Display> fmt::Display for ImageId<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.vertex, self.occ)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DrawingKind {
    Thickness(u32),
    Split(u32),
}

impl fmt::Display for DrawingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingKind::Thickness(t) => write!(f, "thickness {t}"),
            DrawingKind::Split(k) => write!(f, "split thickness {k}"),
        }
    }
}

/// The blowup a drawing claims to realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target<V: VertexId = String> {
    pub graph: Graph<V>,
    pub k: u32,
    pub closed: bool,
}

impl<V: VertexId> Target<V> {
    pub fn blowup(&self) -> Result<Graph<BlowupVertex<V>>> {
        blowup(&self.graph, self.k, self.closed)
    }
}

/// A plane: an embedded graph on images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneDrawing<V: VertexId = String> {
    pub embedding: EmbeddedGraph<ImageId<V>>,
}

impl<V: VertexId> PlaneDrawing<V> {
    pub fn images(&self) -> impl Iterator<Item = &ImageId<V>> + '_ {
        self.embedding.graph().vertices()
    }

    pub fn edge_count(&self) -> usize {
        self.embedding.graph().edge_count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredDrawing<V: VertexId = String> {
    pub kind: DrawingKind,
    pub planes: Vec<PlaneDrawing<V>>,
    pub target: Target<V>,
}

impl<V: VertexId> LayeredDrawing<V> {
    pub fn edge_count(&self) -> usize {
        self.planes.iter().map(PlaneDrawing::edge_count).sum()
    }

    pub fn image_count(&self) -> usize {
        self.planes.iter().map(|p| p.embedding.graph().vertex_count()).sum()
    }
}

/// Puts both planes of a thickness-2 drawing side by side; images from
/// plane `p` get occurrence `p`.
pub fn biplanar_to_split2<V: VertexId>(d: &LayeredDrawing<V>) -> Result<LayeredDrawing<V>> {
    match (d.kind, d.planes.len()) {
        (DrawingKind::Split(_), 1) => return Ok(d.clone()),
        (DrawingKind::Thickness(_), 1) => {
            return Ok(LayeredDrawing { kind: DrawingKind::Split(1), ..d.clone() });
        }
        (DrawingKind::Thickness(2), 2) => {}
        _ => return Err(Error::InvalidParameter(format!("expected a thickness-2 drawing, got {}", d.kind))),
    }
    let mut planes = d.planes.iter().enumerate().map(|(p, plane)| {
        plane.embedding.map_vertices(|im| ImageId { vertex: im.vertex.clone(), occ: p as u32 })
    });
    let first = planes.next().unwrap()?;
    let second = planes.next().unwrap()?;
    let union = first.disjoint_union(&second)?;
    Ok(LayeredDrawing {
        kind: DrawingKind::Split(2),
        planes: vec![PlaneDrawing { embedding: union }],
        target: d.target.clone(),
    })
}

/// Builds a plane from oriented face cycles.
pub(crate) fn plane_from_faces<V: VertexId>(
    faces: &[Vec<ImageId<V>>],
    extra: impl IntoIterator<Item = ImageId<V>>,
) -> Result<PlaneDrawing<V>> {
    let embedding = EmbeddedGraph::from_faces(faces, extra)?;
    if !embedding.is_genus_zero() {
        return Err(Error::Internal("constructed plane is not genus zero".into()));
    }
    Ok(PlaneDrawing { embedding })
}
