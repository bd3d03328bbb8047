use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::decompositions::ForestPartition;
use crate::drawings::{plane_from_faces, DrawingKind, ImageId, LayeredDrawing, Target};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Glues `K4` on `{u0, u1, c0, c1}` into the face holding a dart of `u0u1`.
fn glue<V: VertexId>(faces: &mut [Vec<ImageId<V>>], extra: &mut Vec<Vec<ImageId<V>>>, u: &V, c: &V) -> Result<()> {
    let (u0, u1) = (ImageId::new(u.clone(), 0, 0), ImageId::new(u.clone(), 1, 0));
    let (c0, c1) = (ImageId::new(c.clone(), 0, 0), ImageId::new(c.clone(), 1, 0));
    for f in faces.iter_mut() {
        let n = f.len();
        let Some(i) = (0..n).find(|&i| {
            let (a, b) = (&f[i], &f[(i + 1) % n]);
            (*a == u0 && *b == u1) || (*a == u1 && *b == u0)
        }) else {
            continue;
        };
        let (a, b) = (f[i].clone(), f[(i + 1) % n].clone());
        f.insert(i + 1, c1.clone());
        extra.push(vec![a.clone(), b.clone(), c0.clone()]);
        extra.push(vec![b, c1.clone(), c0.clone()]);
        extra.push(vec![c1, a, c0]);
        return Ok(());
    }
    Err(Error::Internal(format!("no face on the copy edge of {}", crate::graph::show(u))))
}

/// Thickness-a drawing of the closed 2-blowup: plane `p` holds the closed
/// 2-blowup of forest `p`, built one leaf at a time by gluing a `K4` onto
/// the parent's copy edge. A copy edge `v0v1` is kept only in the first
/// plane where `v` appears; vertices on no edge go to plane 0 as a `K2`.
pub fn draw_forest_closed_blowup<V: VertexId>(g: &Graph<V>, partition: &ForestPartition<V>) -> Result<LayeredDrawing<V>> {
    partition.validate(g)?;
    let mut first_plane: BTreeMap<V, usize> = BTreeMap::new();
    let mut planes = Vec::new();
    for (p, forest) in partition.forests.iter().enumerate() {
        let fg = Graph::from_edges(forest.iter().cloned())?;
        let mut faces: Vec<Vec<ImageId<V>>> = Vec::new();
        let mut done = BTreeSet::new();
        for root in fg.vertices() {
            if !done.insert(root.clone()) {
                continue;
            }
            let mut queue = VecDeque::from([root.clone()]);
            let mut started = false;
            while let Some(u) = queue.pop_front() {
                for c in fg.neighbors(&u) {
                    if !done.insert(c.clone()) {
                        continue;
                    }
                    if started {
                        let mut extra = Vec::new();
                        glue(&mut faces, &mut extra, &u, c)?;
                        faces.extend(extra);
                    } else {
                        let q = [
                            ImageId::new(u.clone(), 0, 0),
                            ImageId::new(u.clone(), 1, 0),
                            ImageId::new(c.clone(), 0, 0),
                            ImageId::new(c.clone(), 1, 0),
                        ];
                        for t in [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]] {
                            faces.push(t.iter().map(|&i| q[i].clone()).collect());
                        }
                        started = true;
                    }
                    queue.push_back(c.clone());
                }
            }
        }
        if p == 0 {
            for v in g.vertices().filter(|v| g.degree(v) == 0) {
                faces.push(vec![ImageId::new(v.clone(), 0, 0), ImageId::new(v.clone(), 1, 0)]);
                first_plane.insert(v.clone(), 0);
            }
        }
        let mut plane = plane_from_faces(&faces, [])?;
        for v in fg.vertices() {
            let first = *first_plane.entry(v.clone()).or_insert(p);
            if first != p {
                plane.embedding.remove_edge(&ImageId::new(v.clone(), 0, 0), &ImageId::new(v.clone(), 1, 0))?;
            }
        }
        planes.push(plane);
    }
    Ok(LayeredDrawing {
        kind: DrawingKind::Thickness(partition.forests.len() as u32),
        planes,
        target: Target { graph: g.clone(), k: 2, closed: true },
    })
}
