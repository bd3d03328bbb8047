//! Nested-quadrilateral drawing of one triangulated outerpath.

use crate::decompositions::Outerpath;
use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A copy of an outerpath vertex: label and copy index.
pub(crate) type Slot<L> = (L, u32);
pub(crate) type Tri<L> = [Slot<L>; 3];

pub(crate) struct StripDrawing<L> {
    /// Oriented face cycles, bounded faces counterclockwise.
    pub faces: Vec<Vec<Slot<L>>>,
    /// For each outerpath triangle, its image triangles grouped in pairs
    /// with disjoint vertex sets.
    pub pairs: Vec<Vec<[Tri<L>; 2]>>,
    /// Hexagon chords added when ears are augmented.
    pub chords: Vec<(Slot<L>, Slot<L>)>,
}

fn off<L: VertexId>(t: &[L; 3], d: &(L, L)) -> Result<L> {
    t.iter()
        .find(|v| **v != d.0 && **v != d.1)
        .cloned()
        .ok_or_else(|| Error::InvalidCertificate("degenerate outerpath triangle".into()))
}

/// Index `k` with `{q[k], q[k+1]} == {s, t}`.
fn find_side<L: VertexId>(q: &[Slot<L>; 4], s: &Slot<L>, t: &Slot<L>) -> Result<usize> {
    (0..4)
        .find(|&k| {
            let (a, b) = (&q[k], &q[(k + 1) % 4]);
            (a == s && b == t) || (a == t && b == s)
        })
        .ok_or_else(|| Error::Internal("ear neighbors are not consecutive on the quadrilateral".into()))
}

/// Draws the four copies of every diagonal as nested quadrilaterals, and
/// two copies of each boundary edge `uv`: `u_i v_{i ^ parity(u, v)}`.
/// With `augment_ears`, each ear hexagon is split by two chords so every
/// triangle of the outerpath gets four image triangles.
pub(crate) fn draw_strip<L: VertexId>(
    op: &Outerpath<L>,
    parity: impl Fn(&L, &L) -> Result<u32>,
    augment_ears: bool,
) -> Result<StripDrawing<L>> {
    let s = |v: &L, c: u32| (v.clone(), c);
    let m = op.triangles.len();
    let mut faces: Vec<Vec<Slot<L>>> = Vec::new();
    let mut pairs: Vec<Vec<[Tri<L>; 2]>> = vec![Vec::new(); m];
    let mut chords = Vec::new();

    if m == 1 {
        if augment_ears {
            return Err(Error::InvalidParameter("ear augmentation needs at least two triangles".into()));
        }
        let [a, b, c] = &op.triangles[0];
        let p1 = parity(a, b)?;
        let p2 = p1 ^ parity(b, c)?;
        let p3 = p2 ^ parity(c, a)?;
        if p3 == 0 {
            for i in 0..2 {
                let t = [s(a, i), s(b, i ^ p1), s(c, i ^ p2)];
                faces.push(t.to_vec());
                faces.push(vec![t[0].clone(), t[2].clone(), t[1].clone()]);
            }
            pairs[0].push([
                [s(a, 0), s(b, p1), s(c, p2)],
                [s(a, 1), s(b, 1 ^ p1), s(c, 1 ^ p2)],
            ]);
        } else {
            let h = vec![s(a, 0), s(b, p1), s(c, p2), s(a, 1), s(b, 1 ^ p1), s(c, 1 ^ p2)];
            faces.push(h.iter().rev().cloned().collect());
            faces.push(h);
        }
        return Ok(StripDrawing { faces, pairs, chords });
    }

    let mut split_hexagon = |h: [Slot<L>; 6], faces: &mut Vec<Vec<Slot<L>>>, pairs: &mut Vec<[Tri<L>; 2]>| {
        if augment_ears {
            let t1 = [h[1].clone(), h[2].clone(), h[3].clone()];
            let t2 = [h[4].clone(), h[5].clone(), h[0].clone()];
            faces.push(t1.to_vec());
            faces.push(t2.to_vec());
            faces.push(vec![h[0].clone(), h[1].clone(), h[3].clone(), h[4].clone()]);
            chords.push((h[1].clone(), h[3].clone()));
            chords.push((h[4].clone(), h[0].clone()));
            pairs.push([t1, t2]);
        } else {
            faces.push(h.to_vec());
        }
    };

    // inner ear, inside the first quadrilateral
    let d0 = &op.diagonals[0];
    let mut q = [s(&d0.0, 0), s(&d0.1, 0), s(&d0.0, 1), s(&d0.1, 1)];
    let x = off(&op.triangles[0], d0)?;
    let k = find_side(&q, &s(&d0.0, parity(&x, &d0.0)?), &s(&d0.1, parity(&x, &d0.1)?))?;
    let qk = |j: usize| q[(k + j) % 4].clone();
    let (x0, x1) = (s(&x, 0), s(&x, 1));
    let t1 = [qk(0), qk(1), x0.clone()];
    let t2 = [qk(2), qk(3), x1.clone()];
    faces.push(t1.to_vec());
    faces.push(t2.to_vec());
    pairs[0].push([t1, t2]);
    split_hexagon([qk(0), x0, qk(1), qk(2), x1, qk(3)], &mut faces, &mut pairs[0]);

    // annuli between consecutive quadrilaterals
    for i in 0..m - 2 {
        let (d, e) = (&op.diagonals[i], &op.diagonals[i + 1]);
        let v = if d.0 == e.0 || d.0 == e.1 { d.0.clone() } else { d.1.clone() };
        let xv = if d.0 == v { d.1.clone() } else { d.0.clone() };
        let w = if e.0 == v { e.1.clone() } else { e.0.clone() };
        let r = q.iter().position(|c| *c == s(&v, 0)).ok_or_else(|| Error::Internal("diagonals do not chain".into()))?;
        q.rotate_left(r);
        let [v0, xa, v1, xb] = q.clone();
        let w1 = s(&w, xa.1 ^ parity(&xv, &w)?);
        let w2 = s(&w, 1 ^ w1.1);
        let a1 = [v0.clone(), w1.clone(), xa.clone()];
        let a2 = [v1.clone(), w2.clone(), xb.clone()];
        let b1 = [xa, w1.clone(), v1.clone()];
        let b2 = [xb, w2.clone(), v0.clone()];
        for t in [&a1, &b1, &a2, &b2] {
            faces.push(t.to_vec());
        }
        pairs[i + 1].push([a1, a2]);
        pairs[i + 1].push([b1, b2]);
        q = [v0, w1, v1, w2];
    }

    // outer ear, outside the last quadrilateral
    let d = &op.diagonals[m - 2];
    let y = off(&op.triangles[m - 1], d)?;
    let k = find_side(&q, &s(&d.0, parity(&y, &d.0)?), &s(&d.1, parity(&y, &d.1)?))?;
    let p = |j: usize| q[(k + j) % 4].clone();
    let (y0, y1) = (s(&y, 0), s(&y, 1));
    let t1 = [p(1), p(0), y0.clone()];
    let t2 = [p(3), p(2), y1.clone()];
    faces.push(t1.to_vec());
    faces.push(t2.to_vec());
    pairs[m - 1].push([t1, t2]);
    split_hexagon([p(1), y0, p(0), p(3), y1, p(2)], &mut faces, &mut pairs[m - 1]);

    Ok(StripDrawing { faces, pairs, chords })
}
