//! Dual graphs of connected sphere embeddings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Face, Graph, VertexId};

/// Dual of a connected embedding. Dual vertex `i` is `faces[i]`; parallel
/// dual edges are merged, with every primal edge behind a dual edge kept in
/// `primal_edges`.
#[derive(Clone, Debug)]
pub struct DualGraph<V: VertexId> {
    pub faces: Vec<Face<V>>,
    pub graph: Graph<usize>,
    pub primal_edges: BTreeMap<(usize, usize), Vec<(V, V)>>,
    /// For each primal edge `(u, v)` with `u < v`: the faces left of the
    /// darts `u -> v` and `v -> u`.
    pub edge_faces: BTreeMap<(V, V), (usize, usize)>,
}

impl<V: VertexId> DualGraph<V> {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn multiplicity(&self, f: usize, g: usize) -> usize {
        self.primal_edges.get(&(f.min(g), f.max(g))).map_or(0, Vec::len)
    }

    /// Faces on both sides of a primal edge, in either orientation.
    pub fn faces_of_edge(&self, u: &V, v: &V) -> Option<(usize, usize)> {
        if u < v {
            self.edge_faces.get(&(u.clone(), v.clone())).copied()
        } else {
            self.edge_faces.get(&(v.clone(), u.clone())).map(|&(a, b)| (b, a))
        }
    }
}

pub fn dual<V: VertexId>(e: &EmbeddedGraph<V>) -> Result<DualGraph<V>> {
    if !e.graph().is_connected() {
        return Err(Error::Disconnected("dual of a disconnected embedding".into()));
    }
    if !e.is_genus_zero() {
        return Err(Error::NotGenusZero("dual input".into()));
    }
    let faces = e.faces();
    let mut face_of: BTreeMap<(V, V), usize> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for d in &f.darts {
            face_of.insert(d.clone(), i);
        }
    }
    let mut graph = Graph::new();
    for i in 0..faces.len() {
        graph.add_vertex(i);
    }
    let mut primal_edges: BTreeMap<(usize, usize), Vec<(V, V)>> = BTreeMap::new();
    let mut edge_faces = BTreeMap::new();
    for (u, v) in e.graph().edges() {
        let a = face_of[&(u.clone(), v.clone())];
        let b = face_of[&(v.clone(), u.clone())];
        edge_faces.insert((u.clone(), v.clone()), (a, b));
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if !graph.has_edge(&a, &b) {
            graph.add_edge(a, b)?;
        }
        primal_edges.entry(key).or_default().push((u.clone(), v.clone()));
    }
    Ok(DualGraph { faces, graph, primal_edges, edge_faces })
}
