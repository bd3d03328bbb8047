use std::collections::BTreeSet;

use crate::drawings::{DrawingKind, ImageId, LayeredDrawing};
use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Face, VertexId};

/// Excess accounting for a drawing. Faces are traced per component; a
/// plane with `c` components, isolated images and unused image slots is
/// charged as if the missing connecting edges were absent from a single
/// connected drawing: `6(c - 1)` per plane, `-3` per isolated image and
/// `+3` per unused slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessReport<V: VertexId = String> {
    /// `(plane, face, length - 3)` for every traced face.
    pub per_face_excess: Vec<(usize, Face<ImageId<V>>, i64)>,
    pub face_excess: i64,
    pub component_correction: i64,
    pub unused_slots: i64,
    pub total_excess: i64,
    pub predicted_total: i64,
    pub max_edges: i64,
    pub nontriangle_vertex_bound: i64,
    /// Images on a face that is not a triangle; with several components
    /// per plane, each component's longest face also counts.
    pub images_on_nontriangular_faces: usize,
}

/// Images on a non-triangular face of one plane. Isolated images count,
/// and with several components each component's longest face counts as
/// the face it shares with the rest of the plane.
pub(crate) fn nontriangular_in_plane<V: VertexId>(
    e: &EmbeddedGraph<ImageId<V>>,
    faces: &[Face<ImageId<V>>],
) -> BTreeSet<ImageId<V>> {
    let mut out = BTreeSet::new();
    let g = e.graph();
    for v in g.vertices().filter(|v| g.degree(v) == 0) {
        out.insert(v.clone());
    }
    for f in faces.iter().filter(|f| f.len() != 3) {
        out.extend(f.vertices());
    }
    let comps = g.components();
    if comps.len() > 1 {
        for comp in &comps {
            let members: BTreeSet<&ImageId<V>> = comp.iter().collect();
            if let Some(outer) = faces
                .iter()
                .filter(|f| f.darts.first().is_some_and(|d| members.contains(&d.0)))
                .max_by_key(|f| f.len())
            {
                out.extend(outer.vertices());
            }
        }
    }
    out
}

pub fn excess_report<V: VertexId>(d: &LayeredDrawing<V>) -> Result<ExcessReport<V>> {
    let n = (d.target.graph.vertex_count() * d.target.k as usize) as i64;
    let m = d.target.blowup()?.edge_count() as i64;
    let (slots_per_plane, max_edges) = match d.kind {
        DrawingKind::Thickness(t) => (n, t as i64 * (3 * n - 6)),
        DrawingKind::Split(k) => (k as i64 * n, 3 * k as i64 * n - 6),
    };
    let mut per_face_excess = Vec::new();
    let (mut face_excess, mut component_correction, mut unused) = (0i64, 0i64, 0i64);
    let mut on_nontriangular = BTreeSet::new();
    for (p, plane) in d.planes.iter().enumerate() {
        let e = &plane.embedding;
        if !e.is_genus_zero() {
            return Err(Error::NotGenusZero(format!("plane {p}")));
        }
        let g = e.graph();
        let comps = g.components();
        let isolated = e.isolated_vertex_count() as i64;
        component_correction += 6 * (comps.len() as i64 - 1) - 3 * isolated;
        unused += slots_per_plane - g.vertex_count() as i64;
        let faces = e.faces();
        on_nontriangular.extend(nontriangular_in_plane(e, &faces).into_iter().map(|v| (p, v)));
        for f in faces {
            let x = f.len() as i64 - 3;
            face_excess += x;
            per_face_excess.push((p, f, x));
        }
    }
    let total_excess = face_excess + component_correction + 3 * unused;
    let predicted_total = max_edges - m;
    if total_excess != predicted_total {
        return Err(Error::ExcessMismatch { counted: total_excess, predicted: predicted_total });
    }
    Ok(ExcessReport {
        per_face_excess,
        face_excess,
        component_correction,
        unused_slots: unused,
        total_excess,
        predicted_total,
        max_edges,
        nontriangle_vertex_bound: 4 * total_excess,
        images_on_nontriangular_faces: on_nontriangular.len(),
    })
}
