use std::collections::BTreeMap;

use crate::decompositions::ProperColoring;
use crate::drawings::{DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, Target};
use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Graph, VertexId};
use crate::planarity::planar_embedding;

/// Copy index of a vertex with color `c` in copy `(i, j)`: red takes `i`,
/// blue `j`, yellow `-(i + j) mod k`.
fn copy_index(c: usize, i: u32, j: u32, k: u32) -> u32 {
    match c {
        0 => i,
        1 => j,
        _ => (k - (i + j) % k) % k,
    }
}

fn prepare<V: VertexId>(g: &Graph<V>, coloring: &ProperColoring<V>, k: u32, max_colors: usize) -> Result<EmbeddedGraph<V>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    coloring.validate(g)?;
    if coloring.colors.values().any(|&c| c >= max_colors) {
        return Err(Error::InvalidParameter(format!("coloring uses more than {max_colors} colors")));
    }
    planar_embedding(g).ok_or(Error::NotPlanar)
}

/// Embedded copy `(i, j)` of G, with occurrence numbers taken from `occ`.
fn copy_of<V: VertexId>(
    e: &EmbeddedGraph<V>,
    coloring: &ProperColoring<V>,
    (i, j, k): (u32, u32, u32),
    mut occ: impl FnMut(&V, u32) -> u32,
) -> Result<EmbeddedGraph<ImageId<V>>> {
    let images: BTreeMap<V, ImageId<V>> = e
        .graph()
        .vertices()
        .map(|v| {
            let c = copy_index(coloring.colors[v], i, j, k);
            (v.clone(), ImageId::new(v.clone(), c, occ(v, c)))
        })
        .collect();
    e.map_vertices(|v| images[v].clone())
}

fn union_all<V: VertexId>(parts: Vec<EmbeddedGraph<ImageId<V>>>) -> Result<EmbeddedGraph<ImageId<V>>> {
    let mut it = parts.into_iter();
    let mut acc = it.next().ok_or_else(|| Error::Internal("no copies".into()))?;
    for p in it {
        acc = acc.disjoint_union(&p)?;
    }
    Ok(acc)
}

/// Split-k drawing of the k-blowup of a 3-colored planar graph as k^2
/// disjoint copies of G.
pub fn draw_coloring_splitk<V: VertexId>(g: &Graph<V>, coloring: &ProperColoring<V>, k: u32) -> Result<LayeredDrawing<V>> {
    let e = prepare(g, coloring, k, 3)?;
    let mut count: BTreeMap<(V, u32), u32> = BTreeMap::new();
    let mut parts = Vec::new();
    for i in 0..k {
        for j in 0..k {
            parts.push(copy_of(&e, coloring, (i, j, k), |v, c| {
                let n = count.entry((v.clone(), c)).or_default();
                *n += 1;
                *n - 1
            })?);
        }
    }
    Ok(LayeredDrawing {
        kind: DrawingKind::Split(k),
        planes: vec![PlaneDrawing { embedding: union_all(parts)? }],
        target: Target { graph: g.clone(), k, closed: false },
    })
}

/// Thickness-k drawing of the k-blowup of a bipartite planar graph: plane
/// `t` holds the k copies whose missing third color would have index `t`.
pub fn draw_bipartite_thicknessk<V: VertexId>(g: &Graph<V>, coloring: &ProperColoring<V>, k: u32) -> Result<LayeredDrawing<V>> {
    let e = prepare(g, coloring, k, 2)?;
    let mut planes = Vec::new();
    for t in 0..k {
        let mut parts = Vec::new();
        for i in 0..k {
            let j = (2 * k - t - i) % k;
            parts.push(copy_of(&e, coloring, (i, j, k), |_, _| 0)?);
        }
        planes.push(PlaneDrawing { embedding: union_all(parts)? });
    }
    Ok(LayeredDrawing {
        kind: DrawingKind::Thickness(k),
        planes,
        target: Target { graph: g.clone(), k, closed: false },
    })
}
