//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use blowup_lab::Graph;
use rand::rngs::StdRng;
use rand::Rng;

fn reduce(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut es: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    loop {
        let mut deg = vec![0usize; n];
        for &(u, v) in &es {
            deg[u] += 1;
            deg[v] += 1;
        }
        let Some(v) = (0..n).find(|&v| deg[v] == 1 || deg[v] == 2) else {
            return es.into_iter().collect();
        };
        let inc: Vec<(usize, usize)> = es.iter().copied().filter(|&(a, b)| a == v || b == v).collect();
        for e in &inc {
            es.remove(e);
        }
        if inc.len() == 2 {
            let other = |(a, b): (usize, usize)| if a == v { b } else { a };
            let (a, b) = (other(inc[0]), other(inc[1]));
            if a != b {
                es.insert((a.min(b), a.max(b)));
            }
        }
    }
}

fn genus_zero(n: usize, edges: &[(usize, usize)], rot: &[Vec<usize>]) -> bool {
    let mut succ = HashMap::new();
    for v in 0..n {
        let r = &rot[v];
        for i in 0..r.len() {
            succ.insert((r[i], v), r[(i + 1) % r.len()]);
        }
    }
    let mut seen = BTreeSet::new();
    let mut faces = 0;
    for &(u, v) in edges {
        for (a0, b0) in [(u, v), (v, u)] {
            if seen.contains(&(a0, b0)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (a0, b0);
            while seen.insert((a, b)) {
                let c = succ[&(a, b)];
                a = b;
                b = c;
            }
        }
    }
    let g = Graph::from_edges(edges.iter().copied()).unwrap();
    let verts = g.vertex_count() as i64;
    let comps = g.components().len() as i64;
    verts - edges.len() as i64 + faces == 2 * comps
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn brute_force_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let es = reduce(n, edges);
    if es.len() < 9 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &es {
        adj[u].push(v);
        adj[v].push(u);
    }
    let options: Vec<Vec<Vec<usize>>> = adj
        .iter()
        .map(|ns| {
            if ns.is_empty() {
                return vec![Vec::new()];
            }
            permutations(&ns[1..])
                .into_iter()
                .map(|mut p| {
                    p.insert(0, ns[0]);
                    p
                })
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| options[v][choice[v]].clone()).collect();
        if genus_zero(n, &es, &rot) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn random_graph(rng: &mut StdRng, n: usize, m: usize) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut picked = BTreeSet::new();
    let m = m.min(all.len());
    while picked.len() < m {
        picked.insert(all[rng.gen_range(0..all.len())]);
    }
    picked.into_iter().collect()
}

/// Plain 2^m search for a split of the edges into two planar sets.
pub fn brute_force_biplanar(n: usize, edges: &[(usize, usize)]) -> bool {
    let m = edges.len();
    if m == 0 {
        return true;
    }
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut planar = |mask: u64| {
        *memo.entry(mask).or_insert_with(|| {
            let es: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            brute_force_planar(n, &es)
        })
    };
    let full = (1u64 << m) - 1;
    (0..1u64 << m).any(|mask| planar(mask) && planar(full ^ mask))
}
