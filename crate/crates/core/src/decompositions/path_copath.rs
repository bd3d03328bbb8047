use std::collections::BTreeMap;

use crate::decompositions::{Budget, SearchOutcome};
use crate::dual::dual;
use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, VertexId};

/// A Hamiltonian path `P` together with a dual Hamiltonian path `P*` formed
/// by the duals of the edges off `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCopathDecomposition<V> {
    pub primal_path: Vec<V>,
    /// Faces (indices into `EmbeddedGraph::faces`) in dual path order.
    pub dual_path: Vec<usize>,
    /// `dual_edges[i]` is the primal edge crossed between `dual_path[i]`
    /// and `dual_path[i + 1]`.
    pub dual_edges: Vec<(V, V)>,
}

fn key<V: VertexId>(u: &V, v: &V) -> (V, V) {
    if u < v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

impl<V: VertexId> PathCopathDecomposition<V> {
    pub fn primal_edges(&self) -> Vec<(V, V)> {
        self.primal_path.windows(2).map(|w| key(&w[0], &w[1])).collect()
    }

    /// Re-derives the dual path from the primal path and compares.
    pub fn validate(&self, e: &EmbeddedGraph<V>) -> Result<()> {
        let again = path_copath_from_parts(e, &self.primal_path)?;
        if again.dual_edges.len() != self.dual_edges.len() {
            return Err(Error::InvalidCertificate("dual path has the wrong length".into()));
        }
        let primal = self.primal_edges();
        for d in &self.dual_edges {
            if primal.contains(&key(&d.0, &d.1)) {
                return Err(Error::InvalidCertificate("an edge and its dual lie on both paths".into()));
            }
        }
        let same = again.dual_path == self.dual_path
            || again.dual_path.iter().rev().eq(self.dual_path.iter());
        if !same {
            return Err(Error::InvalidCertificate("dual path does not match the primal path".into()));
        }
        Ok(())
    }
}

/// Builds the decomposition determined by a Hamiltonian path: the duals of
/// the remaining edges must form a Hamiltonian path of the dual.
pub fn path_copath_from_parts<V: VertexId>(e: &EmbeddedGraph<V>, primal_path: &[V]) -> Result<PathCopathDecomposition<V>> {
    let g = e.graph();
    let n = g.vertex_count();
    if primal_path.len() != n {
        return Err(Error::InvalidCertificate("primal path must visit every vertex".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for v in primal_path {
        if !g.contains(v) || !seen.insert(v) {
            return Err(Error::InvalidCertificate("primal path repeats or leaves the graph".into()));
        }
    }
    for w in primal_path.windows(2) {
        if !g.has_edge(&w[0], &w[1]) {
            return Err(Error::InvalidCertificate("primal path uses a non-edge".into()));
        }
    }
    let on_path: std::collections::BTreeSet<(V, V)> = primal_path.windows(2).map(|w| key(&w[0], &w[1])).collect();
    let d = dual(e)?;
    let f = d.face_count();
    let mut adj: Vec<Vec<(usize, (V, V))>> = vec![Vec::new(); f];
    for (edge, &(a, b)) in &d.edge_faces {
        if on_path.contains(edge) {
            continue;
        }
        if a == b {
            return Err(Error::InvalidCertificate("dual path would use a loop".into()));
        }
        adj[a].push((b, edge.clone()));
        adj[b].push((a, edge.clone()));
    }
    if adj.iter().any(|ns| ns.len() > 2) {
        return Err(Error::InvalidCertificate("dual of the complement is not a path".into()));
    }
    let start = if f == 1 { 0 } else {
        (0..f).find(|&i| adj[i].len() == 1)
            .ok_or_else(|| Error::InvalidCertificate("dual of the complement is not a path".into()))?
    };
    let mut dual_path = vec![start];
    let mut dual_edges = Vec::new();
    let mut prev_edge: Option<(V, V)> = None;
    let mut cur = start;
    while let Some((next, edge)) = adj[cur].iter().find(|(_, ed)| Some(ed) != prev_edge.as_ref()).cloned() {
        if dual_path.contains(&next) {
            return Err(Error::InvalidCertificate("dual of the complement has a cycle".into()));
        }
        dual_path.push(next);
        dual_edges.push(edge.clone());
        prev_edge = Some(edge);
        cur = next;
    }
    if dual_path.len() != f {
        return Err(Error::InvalidCertificate("dual path misses faces".into()));
    }
    Ok(PathCopathDecomposition { primal_path: primal_path.to_vec(), dual_path, dual_edges })
}

/// Exhaustive search over Hamiltonian paths `P`, pruning when some face
/// already has more than two boundary edges that can no longer join `P`.
pub fn find_path_copath<V: VertexId>(
    e: &EmbeddedGraph<V>,
    budget: Budget,
) -> Result<SearchOutcome<PathCopathDecomposition<V>>> {
    let d = dual(e)?;
    let idx = e.graph().indexed();
    let n = idx.ids.len();
    let f = d.face_count();
    // faces on each side of every edge
    let mut edge_faces: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for ((u, v), &fs) in &d.edge_faces {
        let (a, b) = (idx.index_of(u).unwrap(), idx.index_of(v).unwrap());
        edge_faces.insert((a.min(b), a.max(b)), fs);
    }
    let mut meter = budget.meter();
    if n == 0 {
        return Ok(SearchOutcome::None);
    }
    let mut dead = vec![0usize; f];
    let mut visited = vec![false; n];
    let mut path: Vec<usize> = Vec::new();
    let mut found = None;

    // marks edges from `v` to visited vertices (other than its path
    // predecessor) as dead; returns the list to undo
    let kill = |v: usize, pred: Option<usize>, visited: &[bool], dead: &mut [usize]| -> (Vec<usize>, bool) {
        let mut touched = Vec::new();
        let mut ok = true;
        for &w in &idx.adj[v] {
            if visited[w] && Some(w) != pred {
                let (a, b) = edge_faces[&(v.min(w), v.max(w))];
                for face in [a, b] {
                    dead[face] += 1;
                    touched.push(face);
                    if dead[face] > 2 {
                        ok = false;
                    }
                }
            }
        }
        (touched, ok)
    };

    struct Frame {
        v: usize,
        next: usize,
        touched: Vec<usize>,
    }
    'starts: for s in 0..n {
        visited[s] = true;
        path.push(s);
        let (touched, _) = kill(s, None, &visited, &mut dead);
        let mut stack = vec![Frame { v: s, next: 0, touched }];
        while let Some(top) = stack.last_mut() {
            if path.len() == n {
                let vs: Vec<V> = path.iter().map(|&i| idx.ids[i].clone()).collect();
                if let Ok(dec) = path_copath_from_parts(e, &vs) {
                    found = Some(dec);
                    break 'starts;
                }
            }
            let v = top.v;
            let cand = idx.adj[v].iter().copied().skip(top.next).find(|&w| !visited[w]);
            match cand {
                Some(w) if path.len() < n => {
                    top.next = idx.adj[v].iter().position(|&x| x == w).unwrap() + 1;
                    if !meter.step() {
                        break 'starts;
                    }
                    visited[w] = true;
                    path.push(w);
                    let (touched, ok) = kill(w, Some(v), &visited, &mut dead);
                    stack.push(Frame { v: w, next: 0, touched });
                    if !ok {
                        let fr = stack.pop().unwrap();
                        for face in fr.touched {
                            dead[face] -= 1;
                        }
                        visited[w] = false;
                        path.pop();
                    }
                }
                _ => {
                    let fr = stack.pop().unwrap();
                    for face in fr.touched {
                        dead[face] -= 1;
                    }
                    visited[fr.v] = false;
                    path.pop();
                }
            }
        }
    }
    Ok(meter.outcome(found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{octahedron, star, embed};

    #[test]
    fn octahedron_has_one() {
        let e = octahedron();
        let dec = find_path_copath(&e, Budget::default()).unwrap().found().unwrap();
        dec.validate(&e).unwrap();
        assert_eq!(dec.primal_path.len(), 6);
        assert_eq!(dec.dual_path.len(), 8);
        assert_eq!(dec.primal_edges().len() + dec.dual_edges.len(), 12);
    }

    #[test]
    fn star_has_none() {
        let e = embed(&star(3).unwrap()).unwrap();
        assert_eq!(find_path_copath(&e, Budget::default()).unwrap(), SearchOutcome::None);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let e = octahedron();
        assert_eq!(find_path_copath(&e, Budget::nodes(1)).unwrap(), SearchOutcome::Unknown);
    }
}
