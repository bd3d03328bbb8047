use std::collections::{BTreeMap, BTreeSet};

use crate::constructions::{kleetope, kleetope_level, KleetopeVertexTag};
use crate::decompositions::{triangulate_outerpath, Outerpath, PathCopathDecomposition, StripRegion, TwoOuterpathDecomposition};
use crate::drawings::strip::{draw_strip, Slot, Tri};
use crate::drawings::{plane_from_faces, DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, Target};
use crate::error::{Error, Result};
use crate::graph::{show, EmbeddedGraph, VertexId};

fn unordered<L: VertexId>(a: &L, b: &L) -> (L, L) {
    if a < b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Removes every copy of the triangulation diagonals from a plane.
fn remove_added<V: VertexId, L: VertexId>(
    plane: &mut PlaneDrawing<V>,
    op: &Outerpath<L>,
    image: impl Fn(&Slot<L>) -> ImageId<V>,
) -> Result<()> {
    for (a, b) in &op.added_edges {
        for ca in 0..2 {
            for cb in 0..2 {
                plane.embedding.remove_edge(&image(&(a.clone(), ca)), &image(&(b.clone(), cb)))?;
            }
        }
    }
    Ok(())
}

/// Thickness-2 drawing of the 2-blowup: plane 0 draws outerpath 0 with
/// same-index boundary copies, plane 1 draws outerpath 1 with crossed ones.
pub fn draw_two_outerpath_biplanar<V: VertexId>(
    e: &EmbeddedGraph<V>,
    dec: &TwoOuterpathDecomposition<V>,
) -> Result<LayeredDrawing<V>> {
    dec.validate(e)?;
    let mut planes = Vec::new();
    for (p, op) in dec.outerpaths.iter().enumerate() {
        let sd = draw_strip(op, |_, _| Ok(p as u32), false)?;
        let image = |s: &Slot<V>| ImageId::new(s.0.clone(), s.1, 0);
        let faces: Vec<Vec<ImageId<V>>> = sd.faces.iter().map(|f| f.iter().map(image).collect()).collect();
        let mut plane = plane_from_faces(&faces, [])?;
        remove_added(&mut plane, op, image)?;
        planes.push(plane);
    }
    Ok(LayeredDrawing {
        kind: DrawingKind::Thickness(2),
        planes,
        target: Target { graph: e.graph().clone(), k: 2, closed: false },
    })
}

/// The two disjoint pairs of image triangles hosting the images of one
/// Kleetope apex: copy `c` of the apex sits in both triangles of `pairs[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePair {
    pub apex: String,
    pub face: Vec<String>,
    pub pairs: [[[ImageId; 3]; 2]; 2],
}

#[derive(Clone, Debug)]
pub struct KleetopeSplitDrawing {
    pub drawing: LayeredDrawing,
    pub apexes: Vec<TrianglePair>,
    /// Hexagon chords that duplicated an edge copy of the other plane and
    /// were deleted after the apexes were placed.
    pub removed_chords: Vec<(ImageId, ImageId)>,
}

fn replace_triangle(faces: &mut Vec<Vec<ImageId>>, t: &[ImageId; 3], apex: ImageId) -> Result<()> {
    let pos = faces
        .iter()
        .position(|f| f.len() == 3 && (0..3).any(|r| (0..3).all(|j| f[(r + j) % 3] == t[j])))
        .ok_or_else(|| Error::Internal(format!("image triangle {} not found", t[0])))?;
    let f = faces.swap_remove(pos);
    for j in 0..3 {
        faces.push(vec![f[j].clone(), f[(j + 1) % 3].clone(), apex.clone()]);
    }
    Ok(())
}

/// Split-2 drawing of the 2-blowup of the Kleetope of a maximal planar
/// graph: both planes of the biplanar drawing side by side, ear hexagons
/// split so each face of G has four image triangles, one apex image in
/// each.
pub fn draw_kleetope_split2(e: &EmbeddedGraph, dec: &TwoOuterpathDecomposition<String>) -> Result<KleetopeSplitDrawing> {
    dec.validate(e)?;
    let faces_g = e.faces();
    if faces_g.iter().any(|f| f.len() != 3) {
        return Err(Error::InvalidParameter("Kleetope drawing needs a maximal planar graph".into()));
    }
    let kg = kleetope(e)?;
    let level = kleetope_level(e) + 1;
    let apex_of: BTreeMap<BTreeSet<String>, (String, Vec<String>)> = faces_g
        .iter()
        .map(|f| {
            let key = f.canonical_key();
            (f.vertices().into_iter().collect(), (KleetopeVertexTag::apex_id(level, &key), key))
        })
        .collect();
    let mut faces: Vec<Vec<ImageId>> = Vec::new();
    let mut apexes = Vec::new();
    let mut removed_chords = Vec::new();
    for (p, op) in dec.outerpaths.iter().enumerate() {
        let sd = draw_strip(op, |_, _| Ok(p as u32), true)?;
        let image = |s: &Slot<String>| ImageId::new(s.0.clone(), s.1, p as u32);
        let tri = |t: &Tri<String>| [image(&t[0]), image(&t[1]), image(&t[2])];
        let mut plane_faces: Vec<Vec<ImageId>> = sd.faces.iter().map(|f| f.iter().map(image).collect()).collect();
        for (t, pairs) in op.triangles.iter().zip(&sd.pairs) {
            let key: BTreeSet<String> = t.iter().cloned().collect();
            let (apex, face) = apex_of
                .get(&key)
                .ok_or_else(|| Error::Internal(format!("triangle {:?} is not a face", t)))?
                .clone();
            if pairs.len() != 2 {
                return Err(Error::Internal("triangle without two image pairs".into()));
            }
            let pairs = [[tri(&pairs[0][0]), tri(&pairs[0][1])], [tri(&pairs[1][0]), tri(&pairs[1][1])]];
            for (copy, pair) in pairs.iter().enumerate() {
                for (occ, t) in pair.iter().enumerate() {
                    replace_triangle(&mut plane_faces, t, ImageId::new(apex.clone(), copy as u32, occ as u32))?;
                }
            }
            apexes.push(TrianglePair { apex, face, pairs });
        }
        faces.extend(plane_faces);
        removed_chords.extend(sd.chords.iter().map(|(a, b)| (image(a), image(b))));
    }
    let mut plane = plane_from_faces(&faces, [])?;
    for (a, b) in &removed_chords {
        plane.embedding.remove_edge(a, b)?;
    }
    apexes.sort_by(|a, b| a.apex.cmp(&b.apex));
    Ok(KleetopeSplitDrawing {
        drawing: LayeredDrawing {
            kind: DrawingKind::Split(2),
            planes: vec![plane],
            target: Target { graph: kg.graph().clone(), k: 2, closed: false },
        },
        apexes,
        removed_chords,
    })
}

/// Sector of the corner following `u` in the rotation at `v`, where the
/// rotation is cut at the path neighbors of `v`.
fn sector<V: VertexId>(rot: &[V], cuts: &[usize], u: &V) -> u32 {
    let pos = rot.iter().position(|w| w == u).unwrap();
    let j = cuts.iter().rposition(|&c| c <= pos).unwrap_or(cuts.len() - 1);
    j as u32
}

/// Split-2 drawing of the 2-blowup from a path-copath decomposition: cut
/// the plane along `P`, draw the resulting outerpath with nested
/// quadrilaterals. The first boundary appearance of each path edge takes
/// same-index copies, the second crossed ones.
pub fn draw_path_copath_split2<V: VertexId>(
    e: &EmbeddedGraph<V>,
    dec: &PathCopathDecomposition<V>,
) -> Result<LayeredDrawing<V>> {
    dec.validate(e)?;
    let path_nbrs: BTreeMap<&V, BTreeSet<&V>> = {
        let mut m: BTreeMap<&V, BTreeSet<&V>> = BTreeMap::new();
        for w in dec.primal_path.windows(2) {
            m.entry(&w[0]).or_default().insert(&w[1]);
            m.entry(&w[1]).or_default().insert(&w[0]);
        }
        m
    };
    let cuts: BTreeMap<&V, Vec<usize>> = e
        .graph()
        .vertices()
        .map(|v| {
            let rot = e.rotation(v);
            let c = (0..rot.len()).filter(|&i| path_nbrs.get(v).is_some_and(|s| s.contains(&rot[i]))).collect();
            (v, c)
        })
        .collect();
    let faces = e.faces();
    let polygons: Vec<Vec<(V, u32)>> = dec
        .dual_path
        .iter()
        .map(|&f| {
            faces[f]
                .darts
                .iter()
                .map(|(u, v)| (v.clone(), sector(e.rotation(v), &cuts[v], u)))
                .collect()
        })
        .collect();
    let op = triangulate_outerpath(&StripRegion { polygons })?;

    let mut occ: BTreeMap<(V, u32), u32> = BTreeMap::new();
    let mut used: BTreeMap<V, u32> = BTreeMap::new();
    for a in &op.boundary {
        if !occ.contains_key(a) {
            let n = used.entry(a.0.clone()).or_default();
            occ.insert(a.clone(), *n);
            *n += 1;
        }
    }
    let mut parity: BTreeMap<((V, u32), (V, u32)), u32> = BTreeMap::new();
    let mut seen: BTreeSet<(V, V)> = BTreeSet::new();
    let b = &op.boundary;
    for i in 0..b.len() {
        let (x, y) = (&b[i], &b[(i + 1) % b.len()]);
        let first = seen.insert(unordered(&x.0, &y.0));
        if parity.insert(unordered(x, y), u32::from(!first)).is_some() {
            return Err(Error::InvalidCertificate(format!(
                "path edge {}-{} appears twice with the same ends",
                show(&x.0),
                show(&y.0)
            )));
        }
    }
    let sd = draw_strip(
        &op,
        |x, y| parity.get(&unordered(x, y)).copied().ok_or_else(|| Error::Internal("boundary edge has no parity".into())),
        false,
    )?;
    let image = |s: &Slot<(V, u32)>| ImageId::new(s.0 .0.clone(), s.1, occ.get(&s.0).copied().unwrap_or(0));
    let faces: Vec<Vec<ImageId<V>>> = sd.faces.iter().map(|f| f.iter().map(image).collect()).collect();
    let mut plane = plane_from_faces(&faces, [])?;
    remove_added(&mut plane, &op, image)?;
    Ok(LayeredDrawing {
        kind: DrawingKind::Split(2),
        planes: vec![plane],
        target: Target { graph: e.graph().clone(), k: 2, closed: false },
    })
}
