//! Straight-line SVG export. Each plane component is laid out by a
//! barycentric (Tutte) embedding: its longest face is pinned to a regular
//! polygon and every other face gets a helper vertex joined to its
//! corners, which is dropped from the output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};

use crate::drawings::{ImageId, LayeredDrawing, PlaneDrawing};
use crate::error::{Error, Result};
use crate::graph::{show, VertexId};
use crate::verification::validate_drawing;

pub type Point = (f64, f64);

fn layout_component<V: VertexId>(p: &PlaneDrawing<V>, comp: &[ImageId<V>]) -> Result<BTreeMap<ImageId<V>, Point>> {
    let mut pos = BTreeMap::new();
    match comp.len() {
        1 => {
            pos.insert(comp[0].clone(), (0.0, 0.0));
            return Ok(pos);
        }
        2 => {
            pos.insert(comp[0].clone(), (-0.5, 0.0));
            pos.insert(comp[1].clone(), (0.5, 0.0));
            return Ok(pos);
        }
        _ => {}
    }
    let members: BTreeSet<&ImageId<V>> = comp.iter().collect();
    let faces: Vec<_> = p
        .embedding
        .faces()
        .into_iter()
        .filter(|f| f.darts.first().is_some_and(|d| members.contains(&d.0)))
        .collect();
    let outer = (0..faces.len()).max_by_key(|&i| (faces[i].len(), std::cmp::Reverse(i))).unwrap();
    let mut boundary = Vec::new();
    for v in faces[outer].vertices() {
        if !boundary.contains(&v) {
            boundary.push(v);
        }
    }
    let r = boundary.len();
    for (i, v) in boundary.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / r as f64;
        pos.insert(v.clone(), (a.cos(), a.sin()));
    }
    // free unknowns: interior images, then one helper per inner face
    let free: Vec<&ImageId<V>> = comp.iter().filter(|v| !pos.contains_key(*v)).collect();
    let slot: BTreeMap<&ImageId<V>, usize> = free.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let inner: Vec<BTreeSet<ImageId<V>>> = faces
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != outer)
        .map(|(_, f)| f.vertices().into_iter().collect())
        .collect();
    let n = free.len() + inner.len();
    if n == 0 {
        return Ok(pos);
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut bx = DVector::<f64>::zeros(n);
    let mut by = DVector::<f64>::zeros(n);
    let mut link = |i: usize, other: std::result::Result<usize, Point>, a: &mut DMatrix<f64>| {
        a[(i, i)] += 1.0;
        match other {
            Ok(j) => a[(i, j)] -= 1.0,
            Err((x, y)) => {
                bx[i] += x;
                by[i] += y;
            }
        }
    };
    let target = |v: &ImageId<V>| match slot.get(v) {
        Some(&j) => Ok(j),
        None => Err(pos[v]),
    };
    for (i, v) in free.iter().enumerate() {
        for w in p.embedding.graph().neighbors(v) {
            link(i, target(w), &mut a);
        }
    }
    for (fi, face) in inner.iter().enumerate() {
        let h = free.len() + fi;
        for v in face {
            link(h, target(v), &mut a);
            if let Some(&j) = slot.get(v) {
                link(j, Ok(h), &mut a);
            }
        }
    }
    let lu = a.lu();
    let xs = lu.solve(&bx).ok_or_else(|| Error::Internal("singular layout system".into()))?;
    let ys = lu.solve(&by).ok_or_else(|| Error::Internal("singular layout system".into()))?;
    for (i, v) in free.iter().enumerate() {
        pos.insert((*v).clone(), (xs[i], ys[i]));
    }
    Ok(pos)
}

/// Coordinates for every image of a plane; components are placed on a
/// grid of cells of side 2.5 centred on their Tutte layouts.
pub fn layout_plane<V: VertexId>(p: &PlaneDrawing<V>) -> Result<BTreeMap<ImageId<V>, Point>> {
    let comps = p.embedding.graph().components();
    let cols = (comps.len() as f64).sqrt().ceil().max(1.0) as usize;
    let mut out = BTreeMap::new();
    for (i, comp) in comps.iter().enumerate() {
        let (cx, cy) = ((i % cols) as f64 * 2.5, (i / cols) as f64 * 2.5);
        for (v, (x, y)) in layout_component(p, comp)? {
            out.insert(v, (x + cx, y + cy));
        }
    }
    Ok(out)
}

const PALETTE: [&str; 6] = ["#1f5fbf", "#c0392b", "#2e8b57", "#8e44ad", "#d68910", "#117a65"];

fn label<V: VertexId>(im: &ImageId<V>) -> String {
    let base = show(&im.vertex.base);
    let base = base.trim_matches('"');
    format!("{}{}{}", base, im.vertex.copy, "'".repeat(im.occ as usize))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// One SVG document with the planes side by side. Refuses drawings that
/// do not validate.
pub fn export_svg<V: VertexId>(d: &LayeredDrawing<V>) -> Result<String> {
    let report = validate_drawing(d)?;
    if !report.is_valid() {
        return Err(Error::InvalidCertificate(format!("refusing to export: {report}")));
    }
    let panel = 640.0;
    let margin = 24.0;
    let mut body = String::new();
    for (p, plane) in d.planes.iter().enumerate() {
        let pos = layout_plane(plane)?;
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in pos.values() {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let scale = (panel - 2.0 * margin) / span;
        let px = |(x, y): Point| (p as f64 * panel + margin + (x - x0) * scale, margin + (y1 - y) * scale);
        let _ = writeln!(body, "<g id=\"plane-{p}\">");
        let _ = writeln!(body, "<rect x=\"{}\" y=\"0\" width=\"{panel}\" height=\"{panel}\" fill=\"none\" stroke=\"#ccc\"/>", p as f64 * panel);
        for (a, b) in plane.embedding.graph().edges() {
            let ((ax, ay), (bx, by)) = (px(pos[a]), px(pos[b]));
            let _ = writeln!(body, "<line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\" stroke=\"#555\" stroke-width=\"1\"/>");
        }
        for (im, &xy) in &pos {
            let (x, y) = px(xy);
            let color = PALETTE[im.vertex.copy as usize % PALETTE.len()];
            let _ = writeln!(body, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"{color}\"/>");
            let _ = writeln!(
                body,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"9\" font-family=\"sans-serif\">{}</text>",
                x + 5.0,
                y - 5.0,
                escape(&label(im))
            );
        }
        body.push_str("</g>\n");
    }
    let width = panel * d.planes.len().max(1) as f64;
    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{panel}\" viewBox=\"0 0 {width} {panel}\">\n{body}</svg>\n"
    ))
}
