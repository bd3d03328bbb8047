use blowup_lab::constructions::{blowup, complete_multipartite, cube, cycle, icosahedron, kleetope, octahedron, path, tetrahedron, wheel};
use blowup_lab::decompositions::{color, find_path_copath, find_two_outerpath, forest_partition, three_color, Budget};
use blowup_lab::drawings::*;
use blowup_lab::verification::{excess_report, validate_drawing};
use blowup_lab::{EmbeddedGraph, Graph};

fn check<V: blowup_lab::VertexId>(d: &LayeredDrawing<V>, edges: usize, excess: i64) {
    let r = validate_drawing(d).unwrap();
    assert!(r.is_valid(), "{r}");
    assert_eq!(d.edge_count(), edges);
    assert_eq!(excess_report(d).unwrap().total_excess, excess);
}

fn thm2(e: &EmbeddedGraph) -> LayeredDrawing {
    let dec = find_two_outerpath(e, Budget::default()).unwrap().found().unwrap();
    draw_two_outerpath_biplanar(e, &dec).unwrap()
}

#[test]
fn two_outerpath_biplanar() {
    check(&thm2(&icosahedron()), 120, 12);
    check(&thm2(&tetrahedron()), 24, 12);
    check(&thm2(&kleetope(&tetrahedron()).unwrap()), 4 * 18, 12);
    let c = cube();
    let d = thm2(&c);
    let n = 16;
    check(&d, 48, (6 * n - 12) - 48);
}

#[test]
fn kleetope_split2() {
    for e in [icosahedron(), kleetope(&tetrahedron()).unwrap()] {
        let dec = find_two_outerpath(&e, Budget::default()).unwrap().found().unwrap();
        let k = draw_kleetope_split2(&e, &dec).unwrap();
        let kg = kleetope(&e).unwrap();
        check(&k.drawing, 4 * kg.graph().edge_count(), 18);
    }
}

#[test]
fn path_copath_split2() {
    let e = octahedron();
    let dec = find_path_copath(&e, Budget::default()).unwrap().found().unwrap();
    let d = draw_path_copath_split2(&e, &dec).unwrap();
    check(&d, 48, 18);
    let p3 = blowup_lab::constructions::embed(&path(3).unwrap()).unwrap();
    let dec = find_path_copath(&p3, Budget::default()).unwrap().found().unwrap();
    let d = draw_path_copath_split2(&p3, &dec).unwrap();
    assert!(validate_drawing(&d).unwrap().is_valid());
}

#[test]
fn coloring_constructions() {
    let g = complete_multipartite(&[2, 2, 2]).unwrap();
    let c = three_color(&g, Budget::default()).found().unwrap();
    for k in 1..=3u32 {
        let d = draw_coloring_splitk(&g, &c, k).unwrap();
        let n = 6 * k as i64;
        let m = 12 * (k * k) as i64;
        check(&d, m as usize, 3 * k as i64 * n - 6 - m);
        assert_eq!(d.planes[0].embedding.graph().components().len(), (k * k) as usize);
    }
    for (g, k) in [(cube().graph().clone(), 2u32), (cycle(4).unwrap(), 3), (cycle(4).unwrap(), 1)] {
        let c = color(&g, 2, Budget::default()).found().unwrap();
        let d = draw_bipartite_thicknessk(&g, &c, k).unwrap();
        let target = blowup(&g, k, false).unwrap();
        let r = validate_drawing(&d).unwrap();
        assert!(r.is_valid(), "{r}");
        assert_eq!(d.edge_count(), target.edge_count());
        excess_report(&d).unwrap();
    }
}

#[test]
fn forest_closed_blowup() {
    let w = wheel(7).unwrap();
    let f = forest_partition(&w, 2, Budget::default()).found().unwrap();
    let d = draw_forest_closed_blowup(&w, &f).unwrap();
    let r = validate_drawing(&d).unwrap();
    assert!(r.is_valid(), "{r}");
    assert_eq!(d.edge_count(), 4 * 12 + 7);
    excess_report(&d).unwrap();
    let e = Graph::from_edges([("a".to_string(), "b".to_string())]).unwrap();
    let f = forest_partition(&e, 1, Budget::default()).found().unwrap();
    let d = draw_forest_closed_blowup(&e, &f).unwrap();
    assert_eq!(d.edge_count(), 6);
    let p = path(3).unwrap();
    let f = forest_partition(&p, 1, Budget::default()).found().unwrap();
    let d = draw_forest_closed_blowup(&p, &f).unwrap();
    assert!(validate_drawing(&d).unwrap().is_valid());
}

#[test]
fn split_from_biplanar() {
    let d = thm2(&icosahedron());
    let s = biplanar_to_split2(&d).unwrap();
    check(&s, 120, (6 * 24 - 6) - 120);
}
