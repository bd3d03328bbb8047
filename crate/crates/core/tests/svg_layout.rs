//! Straight-line layouts of constructed drawings have no crossings.

use blowup_lab::constructions::{complete_multipartite, cube, icosahedron, kleetope, octahedron, tetrahedron, wheel};
use blowup_lab::decompositions::{color, find_path_copath, find_two_outerpath, forest_partition, three_color, Budget};
use blowup_lab::drawings::*;
use blowup_lab::svg::{export_svg, layout_plane, Point};

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let eps = 1e-9;
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1.abs() < eps && o2.abs() < eps {
        // collinear: overlap check on the projection
        let proj = |p: Point| p.0 * (b.0 - a.0) + p.1 * (b.1 - a.1);
        let (lo1, hi1) = (proj(a).min(proj(b)), proj(a).max(proj(b)));
        let (lo2, hi2) = (proj(c).min(proj(d)), proj(c).max(proj(d)));
        return lo1.max(lo2) < hi1.min(hi2) - eps;
    }
    o1 * o2 < -eps && o3 * o4 < -eps
}

fn assert_plane_drawings(d: &LayeredDrawing) {
    for plane in &d.planes {
        let pos = layout_plane(plane).unwrap();
        let pts: Vec<Point> = pos.values().copied().collect();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let dist = ((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt();
                assert!(dist > 1e-7, "two images share a point");
            }
        }
        let edges: Vec<_> = plane.embedding.graph().edges().collect();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, e) = edges[j];
                if a == c || a == e || b == c || b == e {
                    continue;
                }
                assert!(!segments_cross(pos[a], pos[b], pos[c], pos[e]), "{a} {b} crosses {c} {e}");
            }
        }
    }
    assert!(export_svg(d).unwrap().contains("<svg"));
}

#[test]
fn constructed_drawings_are_crossing_free() {
    for e in [tetrahedron(), octahedron(), icosahedron(), cube(), kleetope(&tetrahedron()).unwrap()] {
        let dec = find_two_outerpath(&e, Budget::default()).unwrap().found().unwrap();
        assert_plane_drawings(&draw_two_outerpath_biplanar(&e, &dec).unwrap());
    }
    let e = icosahedron();
    let dec = find_two_outerpath(&e, Budget::default()).unwrap().found().unwrap();
    assert_plane_drawings(&draw_kleetope_split2(&e, &dec).unwrap().drawing);
    let e = octahedron();
    let dec = find_path_copath(&e, Budget::default()).unwrap().found().unwrap();
    assert_plane_drawings(&draw_path_copath_split2(&e, &dec).unwrap());
    let g = complete_multipartite(&[2, 2, 2]).unwrap();
    let c = three_color(&g, Budget::default()).found().unwrap();
    assert_plane_drawings(&draw_coloring_splitk(&g, &c, 3).unwrap());
    let g = cube().graph().clone();
    let c = color(&g, 2, Budget::default()).found().unwrap();
    assert_plane_drawings(&draw_bipartite_thicknessk(&g, &c, 2).unwrap());
    let w = wheel(7).unwrap();
    let f = forest_partition(&w, 2, Budget::default()).found().unwrap();
    assert_plane_drawings(&draw_forest_closed_blowup(&w, &f).unwrap());
}
