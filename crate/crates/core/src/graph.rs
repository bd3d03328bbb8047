//! Simple graphs and their sphere embeddings as rotation systems.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use crate::error::{Error, Result};

/// Anything usable as a vertex id. Ordering is the canonical order used for
/// tie-breaking everywhere.
pub trait VertexId: Ord + Clone + Debug {}
impl<T: Ord + Clone + Debug> VertexId for T {}

pub(crate) fn show<V: Debug>(v: &V) -> String {
    format!("{v:?}")
}

/// Undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph<V: VertexId = String> {
    adj: BTreeMap<V, BTreeSet<V>>,
}

impl<V: VertexId> Default for Graph<V> {
    fn default() -> Self {
        Self { adj: BTreeMap::new() }
    }
}

impl<V: VertexId> Graph<V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph, rejecting self-loops, repeated edges and undeclared
    /// endpoints.
    pub fn from_parts<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = (V, V)>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (u, v) in edges {
            if !g.contains(&u) {
                return Err(Error::UnknownVertex(show(&u)));
            }
            if !g.contains(&v) {
                return Err(Error::UnknownVertex(show(&v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, declaring endpoints implicitly.
    pub fn from_edges<E>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (V, V)>,
    {
        let mut g = Self::new();
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: V) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: V, v: V) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(show(&u)));
        }
        if self.has_edge(&u, &v) {
            return Err(Error::RepeatedEdge(show(&u), show(&v)));
        }
        self.adj.entry(u.clone()).or_default().insert(v.clone());
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: &V, v: &V) -> bool {
        let removed = self.adj.get_mut(u).is_some_and(|s| s.remove(v));
        if removed {
            self.adj.get_mut(v).map(|s| s.remove(u));
        }
        removed
    }

    pub fn contains(&self, v: &V) -> bool {
        self.adj.contains_key(v)
    }

    pub fn has_edge(&self, u: &V, v: &V) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &V> + '_ {
        self.adj.keys()
    }

    /// Edges as `(u, v)` with `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.adj
            .iter()
            .flat_map(|(u, ns)| ns.range(u..).filter(move |v| *v != u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: &V) -> impl Iterator<Item = &V> + '_ {
        self.adj.get(v).into_iter().flatten()
    }

    pub fn neighbor_set(&self, v: &V) -> Option<&BTreeSet<V>> {
        self.adj.get(v)
    }

    pub fn degree(&self, v: &V) -> usize {
        self.adj.get(v).map_or(0, BTreeSet::len)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<V>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.adj.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start.clone()];
            seen.insert(start.clone());
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i].clone();
                for w in &self.adj[&u] {
                    if seen.insert(w.clone()) {
                        comp.push(w.clone());
                    }
                }
                i += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels vertices through an injective map.
    pub fn map_vertices<W: VertexId>(&self, mut f: impl FnMut(&V) -> W) -> Result<Graph<W>> {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(f(v));
        }
        if g.vertex_count() != self.vertex_count() {
            return Err(Error::InvalidParameter("vertex relabelling is not injective".into()));
        }
        for (u, v) in self.edges() {
            g.add_edge(f(u), f(v))?;
        }
        Ok(g)
    }

    /// Subgraph on the same vertex set with the given edges only.
    pub fn spanning_subgraph<'a>(&self, edges: impl IntoIterator<Item = (&'a V, &'a V)>) -> Result<Self>
    where
        V: 'a,
    {
        let mut g = Self::new();
        for v in self.vertices() {
            g.add_vertex(v.clone());
        }
        for (u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("{} -- {} is not an edge", show(u), show(v))));
            }
            g.add_edge(u.clone(), v.clone())?;
        }
        Ok(g)
    }

    pub(crate) fn indexed(&self) -> Indexed<V> {
        let ids: Vec<V> = self.adj.keys().cloned().collect();
        let pos: BTreeMap<&V, usize> = ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let adj = self
            .adj
            .values()
            .map(|ns| ns.iter().map(|w| pos[w]).collect())
            .collect();
        Indexed { ids, adj }
    }
}

/// Dense index view used by the search and planarity routines.
#[derive(Clone, Debug)]
pub(crate) struct Indexed<V> {
    pub ids: Vec<V>,
    pub adj: Vec<Vec<usize>>,
}

impl<V: VertexId> Indexed<V> {
    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.ids.binary_search(v).ok()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            for &w in ns {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }
}

/// A face of an embedding: its boundary walk as a cyclic dart sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face<V: VertexId = String> {
    pub darts: Vec<(V, V)>,
}

impl<V: VertexId> Face<V> {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in walk order (a vertex may repeat).
    pub fn vertices(&self) -> Vec<V> {
        self.darts.iter().map(|(u, _)| u.clone()).collect()
    }

    pub fn is_simple_cycle(&self) -> bool {
        let vs = self.vertices();
        vs.len() >= 3 && vs.iter().collect::<BTreeSet<_>>().len() == vs.len()
    }

    pub fn contains_vertex(&self, v: &V) -> bool {
        self.darts.iter().any(|(u, _)| u == v)
    }

    /// Least rotation of the vertex cycle, as a stable identifier.
    pub fn canonical_key(&self) -> Vec<V> {
        let vs = self.vertices();
        (0..vs.len())
            .map(|s| vs[s..].iter().chain(&vs[..s]).cloned().collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }
}

/// A graph together with a rotation system (cyclic neighbor order at each
/// vertex). Faces are traced by the rule: after dart `u -> v` comes
/// `v -> w` with `w` the successor of `u` in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph<V: VertexId = String> {
    graph: Graph<V>,
    rotation: BTreeMap<V, Vec<V>>,
}

impl<V: VertexId> EmbeddedGraph<V> {
    /// Checks that each rotation lists exactly the neighbors of its vertex.
    /// Does not check genus; see [`EmbeddedGraph::is_genus_zero`].
    pub fn new(graph: Graph<V>, mut rotation: BTreeMap<V, Vec<V>>) -> Result<Self> {
        for v in graph.vertices() {
            let rot = rotation.entry(v.clone()).or_default();
            let listed: BTreeSet<&V> = rot.iter().collect();
            if listed.len() != rot.len() {
                return Err(Error::Rotation(format!("rotation at {} repeats a neighbor", show(v))));
            }
            let expected: BTreeSet<&V> = graph.neighbors(v).collect();
            if listed != expected {
                return Err(Error::Rotation(format!(
                    "rotation at {} does not match its neighbors",
                    show(v)
                )));
            }
        }
        if let Some(extra) = rotation.keys().find(|v| !graph.contains(v)) {
            return Err(Error::UnknownVertex(show(extra)));
        }
        Ok(Self { graph, rotation })
    }

    /// Derives the rotation system from a list of oriented face cycles.
    /// Every dart must occur in exactly one face. Isolated vertices can be
    /// declared through `extra_vertices`.
    pub fn from_faces(faces: &[Vec<V>], extra_vertices: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut succ: BTreeMap<(V, V), V> = BTreeMap::new();
        let mut darts = BTreeSet::new();
        let mut graph = Graph::new();
        for v in extra_vertices {
            graph.add_vertex(v);
        }
        for face in faces {
            let k = face.len();
            if k < 2 {
                return Err(Error::Rotation("face with fewer than two darts".into()));
            }
            for i in 0..k {
                let (a, b, c) = (&face[i], &face[(i + 1) % k], &face[(i + 2) % k]);
                if a == b {
                    return Err(Error::SelfLoop(show(a)));
                }
                if !darts.insert((a.clone(), b.clone())) {
                    return Err(Error::Rotation(format!("dart {} -> {} used twice", show(a), show(b))));
                }
                if !graph.has_edge(a, b) {
                    graph.add_edge(a.clone(), b.clone())?;
                }
                succ.insert((b.clone(), a.clone()), c.clone());
            }
        }
        for (u, v) in &darts {
            if !darts.contains(&(v.clone(), u.clone())) {
                return Err(Error::Rotation(format!("dart {} -> {} has no reverse", show(u), show(v))));
            }
        }
        let mut rotation = BTreeMap::new();
        for v in graph.vertices() {
            let deg = graph.degree(v);
            let mut rot = Vec::with_capacity(deg);
            if let Some(first) = graph.neighbors(v).next() {
                let mut cur = first.clone();
                loop {
                    rot.push(cur.clone());
                    cur = succ[&(v.clone(), cur)].clone();
                    if &cur == first || rot.len() > deg {
                        break;
                    }
                }
            }
            if rot.len() != deg {
                return Err(Error::Rotation(format!(
                    "faces around {} do not close into a single disc",
                    show(v)
                )));
            }
            rotation.insert(v.clone(), rot);
        }
        Self::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph<V> {
        &self.graph
    }

    pub fn rotation(&self, v: &V) -> &[V] {
        self.rotation.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn rotations(&self) -> &BTreeMap<V, Vec<V>> {
        &self.rotation
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn successor(&self, v: &V, u: &V) -> Option<&V> {
        let rot = self.rotation.get(v)?;
        let i = rot.iter().position(|w| w == u)?;
        Some(&rot[(i + 1) % rot.len()])
    }

    /// Neighbor preceding `u` in the rotation at `v`.
    pub fn predecessor(&self, v: &V, u: &V) -> Option<&V> {
        let rot = self.rotation.get(v)?;
        let i = rot.iter().position(|w| w == u)?;
        Some(&rot[(i + rot.len() - 1) % rot.len()])
    }

    /// All faces, traced from darts in canonical order.
    pub fn faces(&self) -> Vec<Face<V>> {
        let mut next: BTreeMap<(&V, &V), &V> = BTreeMap::new();
        for (v, rot) in &self.rotation {
            for (i, u) in rot.iter().enumerate() {
                next.insert((u, v), &rot[(i + 1) % rot.len()]);
            }
        }
        let mut seen: BTreeSet<(&V, &V)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (u, v) in self.graph.adj.iter().flat_map(|(u, ns)| ns.iter().map(move |v| (u, v))) {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut darts = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                darts.push((a.clone(), b.clone()));
                let c = next[&(a, b)];
                a = b;
                b = c;
            }
            faces.push(Face { darts });
        }
        faces
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.graph.vertices().filter(|v| self.graph.degree(v) == 0).count()
    }

    /// Euler characteristic check, summed over components. An isolated
    /// vertex counts as a component with one (empty) face.
    pub fn is_genus_zero(&self) -> bool {
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        let f = (self.faces().len() + self.isolated_vertex_count()) as i64;
        let c = self.graph.components().len() as i64;
        v - e + f == 2 * c
    }

    /// Deletes an edge, keeping the rest of the rotation system.
    pub fn remove_edge(&mut self, u: &V, v: &V) -> Result<()> {
        if !self.graph.remove_edge(u, v) {
            return Err(Error::InvalidParameter(format!("{} -- {} is not an edge", show(u), show(v))));
        }
        if let Some(r) = self.rotation.get_mut(u) {
            r.retain(|w| w != v);
        }
        if let Some(r) = self.rotation.get_mut(v) {
            r.retain(|w| w != u);
        }
        Ok(())
    }

    /// Relabels vertices through an injective map.
    pub fn map_vertices<W: VertexId>(&self, mut f: impl FnMut(&V) -> W) -> Result<EmbeddedGraph<W>> {
        let graph = self.graph.map_vertices(&mut f)?;
        let rotation = self
            .rotation
            .iter()
            .map(|(v, rot)| (f(v), rot.iter().map(&mut f).collect()))
            .collect();
        EmbeddedGraph::new(graph, rotation)
    }

    pub fn into_parts(self) -> (Graph<V>, BTreeMap<V, Vec<V>>) {
        (self.graph, self.rotation)
    }

    /// Disjoint union; fails if the vertex sets overlap.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let mut graph = self.graph.clone();
        for v in other.graph.vertices() {
            if graph.contains(v) {
                return Err(Error::InvalidParameter(format!("vertex {} in both parts", show(v))));
            }
            graph.add_vertex(v.clone());
        }
        for (u, v) in other.graph.edges() {
            graph.add_edge(u.clone(), v.clone())?;
        }
        let mut rotation = self.rotation.clone();
        rotation.extend(other.rotation.iter().map(|(k, r)| (k.clone(), r.clone())));
        Self::new(graph, rotation)
    }
}

pub fn trace_faces<V: VertexId>(e: &EmbeddedGraph<V>) -> Vec<Face<V>> {
    e.faces()
}

pub fn euler_genus_zero<V: VertexId>(e: &EmbeddedGraph<V>) -> bool {
    e.is_genus_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> EmbeddedGraph<u32> {
        EmbeddedGraph::from_faces(&[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]], []).unwrap()
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(matches!(Graph::from_edges([(1, 1)]), Err(Error::SelfLoop(_))));
        assert!(matches!(Graph::from_edges([(1, 2), (2, 1)]), Err(Error::RepeatedEdge(..))));
        assert!(matches!(Graph::from_parts([1], [(1, 2)]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn k4_faces() {
        let e = k4();
        let faces = e.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(e.is_genus_zero());
    }

    #[test]
    fn cycle_has_two_faces() {
        let e = EmbeddedGraph::from_faces(&[vec![0, 1, 2, 3], vec![3, 2, 1, 0]], []).unwrap();
        let faces = e.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4));
        assert!(e.is_genus_zero());
    }

    #[test]
    fn two_triangles_are_genus_zero() {
        let e = EmbeddedGraph::from_faces(
            &[vec![0, 1, 2], vec![2, 1, 0], vec![3, 4, 5], vec![5, 4, 3]],
            [],
        )
        .unwrap();
        assert_eq!(e.faces().len(), 4);
        assert!(e.is_genus_zero());
    }

    #[test]
    fn mismatched_rotation_is_structural_error() {
        let g = Graph::from_edges([(0, 1), (1, 2)]).unwrap();
        let rot = BTreeMap::from([(0, vec![1]), (1, vec![0]), (2, vec![1])]);
        assert!(matches!(EmbeddedGraph::new(g, rot), Err(Error::Rotation(_))));
    }

    #[test]
    fn k5_rotation_is_not_genus_zero() {
        let g = Graph::from_edges((0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        let rot = (0..5)
            .map(|v| (v, (0..5).filter(|&w| w != v).collect()))
            .collect();
        let e = EmbeddedGraph::new(g, rot).unwrap();
        assert!(!e.is_genus_zero());
    }

    #[test]
    fn removing_an_edge_keeps_genus() {
        let mut e = k4();
        e.remove_edge(&0, &1).unwrap();
        assert!(e.is_genus_zero());
        assert_eq!(e.faces().len(), 3);
    }

    #[test]
    fn isolated_vertex_counts_as_component() {
        let e = EmbeddedGraph::<u32>::from_faces(&[], [7]).unwrap();
        assert!(e.is_genus_zero());
    }

    #[test]
    fn canonical_key_is_least_rotation() {
        let f = Face { darts: vec![(3, 1), (1, 2), (2, 3)] };
        assert_eq!(f.canonical_key(), vec![1, 2, 3]);
    }
}
