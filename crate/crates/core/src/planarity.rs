//! Left-right planarity test with embedding output, and Kuratowski
//! subgraph extraction for non-planar inputs.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{EmbeddedGraph, Graph, Indexed, VertexId};

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    // oriented edges (source, target)
    edges: Vec<(usize, usize)>,
    oriented: HashMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    rotation: Vec<Vec<usize>>,
}

impl<'a> LrState<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            height: vec![None; n],
            parent_edge: vec![None; n],
            edges: Vec::new(),
            oriented: HashMap::new(),
            out: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            reference: Vec::new(),
            side: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            left_ref: vec![usize::MAX; n],
            right_ref: vec![usize::MAX; n],
            rotation: vec![Vec::new(); n],
        }
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for &w in &self.adj[v] {
            if self.oriented.contains_key(&Self::key(v, w)) {
                continue;
            }
            let vw = self.edges.len();
            self.edges.push((v, w));
            self.oriented.insert(Self::key(v, w), vw);
            self.out[v].push(vw);
            let hv = self.height[v].expect("visited");
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                self.nesting_depth[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("nonempty")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("nonempty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("nonempty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let ordered = self.out[v].clone();
        for &ei in &ordered {
            let w = self.edges[ei].1;
            self.stack_bottom[ei] = self.stack.len();
            if Some(ei) == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.lowpt[ei] < self.height[v].unwrap() {
                if ei == ordered[0] {
                    if let Some(e) = e {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e.expect("non-root has parent")) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("stack holds constraints of ei");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.unwrap();
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.edges[e].0;
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.edges[h].1 != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.edges[h].1 != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        // iterative version of the recursive sign resolution
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().unwrap()] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (cur, r) = (chain[i], chain[i + 1]);
            self.side[cur] *= self.side[r];
            self.reference[cur] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize) {
        let ordered = self.out[v].clone();
        for ei in ordered {
            let w = self.edges[ei].1;
            if Some(ei) == self.parent_edge[w] {
                self.rotation[w].insert(0, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                let pos = self.rotation[w].iter().position(|&x| x == r).expect("reference present");
                self.rotation[w].insert(pos + 1, v);
            } else {
                let r = self.left_ref[w];
                let pos = self.rotation[w].iter().position(|&x| x == r).expect("reference present");
                self.rotation[w].insert(pos, v);
                self.left_ref[w] = v;
            }
        }
    }
}

/// Runs the left-right test on an adjacency-list graph. Returns a rotation
/// system (per vertex neighbor order) when the graph is planar.
pub(crate) fn lr_embedding(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(adj);
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orient(v);
        }
    }
    let me = st.edges.len();
    st.reference = vec![None; me];
    st.side = vec![1; me];
    st.lowpt_edge = vec![None; me];
    st.stack_bottom = vec![0; me];
    for v in 0..n {
        let nd = &st.nesting_depth;
        st.out[v].sort_by_key(|&e| nd[e]);
    }
    for &r in &roots {
        if !st.test(r) {
            return None;
        }
    }
    for e in 0..me {
        let s = st.sign(e);
        st.nesting_depth[e] *= s;
    }
    for v in 0..n {
        let nd = &st.nesting_depth;
        st.out[v].sort_by_key(|&e| nd[e]);
        st.rotation[v] = st.out[v].iter().map(|&e| st.edges[e].1).collect();
    }
    for &r in &roots {
        st.embed(r);
    }
    Some(st.rotation)
}

pub(crate) fn adjacency_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub(crate) fn edges_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    lr_embedding(&adjacency_from_edges(n, edges)).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 contained in a non-planar graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiSubgraph<V: VertexId> {
    pub kind: KuratowskiKind,
    pub subgraph: Graph<V>,
    /// Vertices of degree at least three in the subdivision.
    pub branch_vertices: Vec<V>,
}

#[derive(Clone, Debug)]
pub enum Planarity<V: VertexId> {
    Planar(EmbeddedGraph<V>),
    NonPlanar(KuratowskiSubgraph<V>),
}

impl<V: VertexId> Planarity<V> {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<EmbeddedGraph<V>> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }
}

fn embedding_from_indexed<V: VertexId>(g: &Graph<V>, ix: &Indexed<V>, rot: Vec<Vec<usize>>) -> EmbeddedGraph<V> {
    let rotation: BTreeMap<V, Vec<V>> = rot
        .into_iter()
        .enumerate()
        .map(|(i, r)| (ix.ids[i].clone(), r.into_iter().map(|j| ix.ids[j].clone()).collect()))
        .collect();
    let e = EmbeddedGraph::new(g.clone(), rotation).expect("left-right embedding lists every neighbor once");
    debug_assert!(e.is_genus_zero());
    e
}

/// Planar embedding if one exists, without computing a witness otherwise.
pub fn planar_embedding<V: VertexId>(g: &Graph<V>) -> Option<EmbeddedGraph<V>> {
    let ix = g.indexed();
    lr_embedding(&ix.adj).map(|rot| embedding_from_indexed(g, &ix, rot))
}

pub fn is_planar_graph<V: VertexId>(g: &Graph<V>) -> bool {
    lr_embedding(&g.indexed().adj).is_some()
}

/// Planarity test returning an embedding or a Kuratowski subdivision.
pub fn is_planar<V: VertexId>(g: &Graph<V>) -> Planarity<V> {
    let ix = g.indexed();
    if let Some(rot) = lr_embedding(&ix.adj) {
        return Planarity::Planar(embedding_from_indexed(g, &ix, rot));
    }
    let n = ix.ids.len();
    let mut keep = ix.edge_list();
    let mut i = 0;
    while i < keep.len() {
        let e = keep.remove(i);
        if edges_planar(n, &keep) {
            keep.insert(i, e);
            i += 1;
        }
    }
    let mut sub = Graph::new();
    for &(u, v) in &keep {
        sub.add_edge(ix.ids[u].clone(), ix.ids[v].clone()).expect("subgraph of simple graph");
    }
    let branch_vertices: Vec<V> = sub.vertices().filter(|v| sub.degree(v) >= 3).cloned().collect();
    let kind = if branch_vertices.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    Planarity::NonPlanar(KuratowskiSubgraph { kind, subgraph: sub, branch_vertices })
}

/// Planar with at least three vertices and `3n - 6` edges.
pub fn is_maximal_planar<V: VertexId>(g: &Graph<V>) -> bool {
    let n = g.vertex_count();
    n >= 3 && g.edge_count() == 3 * n - 6 && is_planar_graph(g)
}
