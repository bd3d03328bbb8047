//! Cross-checks the left-right planarity test against an independent brute
//! force: reduce to minimum degree three, then search every rotation system
//! for one of genus zero.

use blowup_lab::planarity::{is_planar, Planarity};
use blowup_lab::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;
use common::{brute_force_planar, random_graph};

#[test]
fn agrees_with_rotation_enumeration_on_small_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut nonplanar = 0;
    for _ in 0..150 {
        let n = rng.gen_range(5..=8);
        let m = rng.gen_range(6..=12);
        let edges = random_graph(&mut rng, n, m);
        let g = Graph::from_parts(0..n, edges.iter().copied()).unwrap();
        let expected = brute_force_planar(n, &edges);
        match is_planar(&g) {
            Planarity::Planar(e) => {
                assert!(expected, "LR says planar, oracle disagrees: {edges:?}");
                assert!(e.is_genus_zero());
            }
            Planarity::NonPlanar(k) => {
                assert!(!expected, "LR says non-planar, oracle disagrees: {edges:?}");
                nonplanar += 1;
                let sub: Vec<(usize, usize)> = k.subgraph.edges().map(|(u, v)| (*u, *v)).collect();
                assert!(!brute_force_planar(n, &sub), "witness is planar");
                for i in 0..sub.len() {
                    let mut less = sub.clone();
                    less.remove(i);
                    assert!(brute_force_planar(n, &less), "witness is not minimal");
                }
            }
        }
    }
    assert!(nonplanar > 5, "sample should contain non-planar graphs");
}

#[test]
fn dense_planar_graphs_embed() {
    // stacked triangulations are planar; check witnesses on larger inputs
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for v in 3..60 {
            let f = faces.swap_remove(rng.gen_range(0..faces.len()));
            edges.extend(f.iter().map(|&u| (u, v)));
            faces.push([f[0], f[1], v]);
            faces.push([f[1], f[2], v]);
            faces.push([f[2], f[0], v]);
        }
        let g = Graph::from_edges(edges).unwrap();
        let e = is_planar(&g).embedding().expect("stacked triangulation is planar");
        assert!(e.is_genus_zero());
        assert_eq!(e.faces().len(), 2 * 60 - 4);
    }
}
