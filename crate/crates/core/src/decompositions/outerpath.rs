use std::collections::{BTreeMap, BTreeSet};

use crate::decompositions::{Budget, SearchOutcome};
use crate::dual::{dual, DualGraph};
use crate::error::{Error, Result};
use crate::graph::{show, EmbeddedGraph, VertexId};

/// A face-connected strip of polygons, each given by its vertex cycle, in
/// strip order. Consecutive polygons share exactly one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripRegion<V> {
    pub polygons: Vec<Vec<V>>,
}

/// A triangulated outerpath: triangles in path order, `diagonals[i]` shared
/// by `triangles[i]` and `triangles[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outerpath<V> {
    pub boundary: Vec<V>,
    pub triangles: Vec<[V; 3]>,
    pub diagonals: Vec<(V, V)>,
    /// Diagonals introduced by triangulation; not edges of the input.
    pub added_edges: Vec<(V, V)>,
}

fn same_edge<V: PartialEq>(a: &(V, V), b: &(V, V)) -> bool {
    (a.0 == b.0 && a.1 == b.1) || (a.0 == b.1 && a.1 == b.0)
}

fn on_triangle<V: PartialEq>(t: &[V; 3], e: &(V, V)) -> bool {
    t.contains(&e.0) && t.contains(&e.1)
}

impl<V: VertexId> Outerpath<V> {
    /// The two ear triangles' apex vertices: the vertex of the first
    /// (last) triangle off the first (last) diagonal. `None` for a single
    /// triangle.
    pub fn ear_vertices(&self) -> Option<(V, V)> {
        let first = self.diagonals.first()?;
        let last = self.diagonals.last()?;
        let off = |t: &[V; 3], d: &(V, V)| t.iter().find(|v| **v != d.0 && **v != d.1).cloned();
        Some((off(&self.triangles[0], first)?, off(self.triangles.last()?, last)?))
    }

    /// Edges of triangle `i` that are not diagonals.
    pub fn boundary_edges_of(&self, i: usize) -> Vec<(V, V)> {
        let t = &self.triangles[i];
        let mut out = Vec::new();
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            let e = (t[a].clone(), t[b].clone());
            let inner = (i > 0 && same_edge(&self.diagonals[i - 1], &e))
                || (i < self.diagonals.len() && same_edge(&self.diagonals[i], &e));
            if !inner {
                out.push(e);
            }
        }
        out
    }

    /// Checks the outerpath invariants: triangle/diagonal incidence, path
    /// shape, and consecutive diagonals sharing exactly one endpoint.
    pub fn check(&self) -> Result<()> {
        let m = self.triangles.len();
        if m == 0 || self.diagonals.len() + 1 != m {
            return Err(Error::InvalidCertificate("outerpath needs one diagonal between consecutive triangles".into()));
        }
        for (i, d) in self.diagonals.iter().enumerate() {
            if !on_triangle(&self.triangles[i], d) || !on_triangle(&self.triangles[i + 1], d) {
                return Err(Error::InvalidCertificate(format!("diagonal {i} is not shared by its triangles")));
            }
        }
        for w in self.diagonals.windows(2) {
            let shared = [&w[1].0, &w[1].1].iter().filter(|v| ***v == w[0].0 || ***v == w[0].1).count();
            if shared != 1 || same_edge(&w[0], &w[1]) {
                return Err(Error::InvalidCertificate("consecutive diagonals must share one endpoint".into()));
            }
        }
        for (i, t) in self.triangles.iter().enumerate() {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::InvalidCertificate(format!("triangle {i} is degenerate")));
            }
        }
        Ok(())
    }
}

fn polygon_edge_position<V: PartialEq>(p: &[V], e: &(V, V)) -> Option<usize> {
    let r = p.len();
    (0..r).find(|&a| same_edge(&(&p[a], &p[(a + 1) % r]), &(&e.0, &e.1)))
}

/// Triangulates one polygon so its triangles form a path from the entry
/// edge to the exit edge. Returns triangles in order and the new diagonals.
fn triangulate_polygon<V: VertexId>(
    p: &[V],
    entry: Option<&(V, V)>,
    exit: Option<&(V, V)>,
    pivot: Option<&V>,
) -> Result<(Vec<[V; 3]>, Vec<(V, V)>)> {
    let r = p.len();
    let at = |i: isize| p[i.rem_euclid(r as isize) as usize].clone();
    if r < 3 || p.iter().collect::<BTreeSet<_>>().len() != r {
        return Err(Error::NonPolyhedral(format!("strip polygon {:?}", p)));
    }
    match (entry, exit) {
        (None, None) => {
            let s = (0..r).min_by_key(|&i| &p[i]).unwrap() as isize;
            let tris: Vec<[V; 3]> = (1..r as isize - 1).map(|j| [at(s), at(s + j), at(s + j + 1)]).collect();
            let diags = (2..r as isize - 1).map(|j| (at(s), at(s + j))).collect();
            Ok((tris, diags))
        }
        (None, Some(exit)) => {
            let (mut t, mut d) = triangulate_polygon(p, Some(exit), None, None)?;
            t.reverse();
            d.reverse();
            Ok((t, d))
        }
        (Some(entry), exit) => {
            let a = polygon_edge_position(p, entry)
                .ok_or_else(|| Error::InvalidCertificate("entry diagonal is not a polygon edge".into()))?
                as isize;
            let (x, y) = (at(a), at(a + 1));
            let pivot_is_x = match pivot {
                Some(v) => *v == x,
                None => x < y,
            };
            // chains walked away from the entry edge on the x side and y side
            let (right, left): (Vec<V>, Vec<V>) = match exit {
                Some(exit) => {
                    let b = polygon_edge_position(p, exit)
                        .ok_or_else(|| Error::InvalidCertificate("exit diagonal is not a polygon edge".into()))?
                        as isize;
                    if b == a {
                        return Err(Error::InvalidCertificate("entry and exit coincide".into()));
                    }
                    let steps_r = (b - a - 1).rem_euclid(r as isize);
                    let steps_l = (a - b - 1).rem_euclid(r as isize);
                    (
                        (0..=steps_r).map(|k| at(a + 1 + k)).collect(),
                        (0..=steps_l).map(|k| at(a - k)).collect(),
                    )
                }
                None if pivot_is_x => ((1..r as isize).map(|k| at(a + k)).collect(), vec![x.clone()]),
                None => (vec![y.clone()], (0..r as isize - 1).map(|k| at(a - k)).collect()),
            };
            let (mut li, mut ri) = (0, 0);
            let mut tris = Vec::new();
            let mut diags = Vec::new();
            let advance_right = |li: usize, ri: &mut usize, tris: &mut Vec<[V; 3]>, diags: &mut Vec<(V, V)>| {
                while *ri + 1 < right.len() {
                    tris.push([left[li].clone(), right[*ri].clone(), right[*ri + 1].clone()]);
                    *ri += 1;
                    diags.push((left[li].clone(), right[*ri].clone()));
                }
            };
            let advance_left = |li: &mut usize, ri: usize, tris: &mut Vec<[V; 3]>, diags: &mut Vec<(V, V)>| {
                while *li + 1 < left.len() {
                    tris.push([left[*li].clone(), right[ri].clone(), left[*li + 1].clone()]);
                    *li += 1;
                    diags.push((left[*li].clone(), right[ri].clone()));
                }
            };
            if pivot_is_x {
                advance_right(li, &mut ri, &mut tris, &mut diags);
                advance_left(&mut li, ri, &mut tris, &mut diags);
            } else {
                advance_left(&mut li, ri, &mut tris, &mut diags);
                advance_right(li, &mut ri, &mut tris, &mut diags);
            }
            // the last diagonal emitted is the exit edge (or a polygon edge)
            diags.pop();
            Ok((tris, diags))
        }
    }
}

/// Boundary walk: first ear vertex, the left chain of diagonal endpoints,
/// the last ear vertex, then the right chain back.
fn boundary_cycle<V: VertexId>(triangles: &[[V; 3]], diagonals: &[(V, V)]) -> Result<Vec<V>> {
    let Some(first) = diagonals.first() else {
        return Ok(triangles[0].to_vec());
    };
    let off = |t: &[V; 3], d: &(V, V)| t.iter().find(|v| **v != d.0 && **v != d.1).cloned();
    let bad = || Error::InvalidCertificate("strip is not an outerpath".into());
    let mut left = vec![first.0.clone()];
    let mut right = vec![first.1.clone()];
    for w in diagonals.windows(2) {
        let (l, r) = (left.last().unwrap().clone(), right.last().unwrap().clone());
        let next = &w[1];
        if next.0 == l || next.1 == l {
            right.push(if next.0 == l { next.1.clone() } else { next.0.clone() });
        } else if next.0 == r || next.1 == r {
            left.push(if next.0 == r { next.1.clone() } else { next.0.clone() });
        } else {
            return Err(bad());
        }
    }
    let x = off(&triangles[0], first).ok_or_else(bad)?;
    let y = off(triangles.last().unwrap(), diagonals.last().unwrap()).ok_or_else(bad)?;
    let mut cycle = vec![x];
    cycle.extend(left);
    cycle.push(y);
    cycle.extend(right.into_iter().rev());
    Ok(cycle)
}

/// Triangulates every polygon of a strip so the weak dual stays a path.
/// Each polygon is fanned from the endpoint of its entry diagonal shared
/// with the diagonal before it.
pub fn triangulate_outerpath<V: VertexId>(strip: &StripRegion<V>) -> Result<Outerpath<V>> {
    let m = strip.polygons.len();
    if m == 0 {
        return Err(Error::InvalidCertificate("empty strip".into()));
    }
    let edges_of = |p: &Vec<V>| -> BTreeSet<(V, V)> {
        (0..p.len())
            .map(|i| {
                let (a, b) = (p[i].clone(), p[(i + 1) % p.len()].clone());
                (a.clone().min(b.clone()), a.max(b))
            })
            .collect()
    };
    let edge_sets: Vec<_> = strip.polygons.iter().map(edges_of).collect();
    let mut links = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let shared: Vec<_> = edge_sets[i].intersection(&edge_sets[j]).cloned().collect();
            if j == i + 1 {
                if shared.len() != 1 {
                    return Err(Error::InvalidCertificate(format!(
                        "polygons {i} and {j} share {} edges, expected one",
                        shared.len()
                    )));
                }
                links.push(shared[0].clone());
            } else if !shared.is_empty() {
                return Err(Error::InvalidCertificate(format!("polygons {i} and {j} are not consecutive but touch")));
            }
        }
    }
    let mut triangles = Vec::new();
    let mut diagonals: Vec<(V, V)> = Vec::new();
    let mut added = Vec::new();
    for (i, poly) in strip.polygons.iter().enumerate() {
        let entry = i.checked_sub(1).map(|k| &links[k]);
        let exit = links.get(i);
        let pivot = entry.and_then(|e| {
            let before = diagonals.iter().rev().nth(1)?;
            [&e.0, &e.1].into_iter().find(|v| **v == before.0 || **v == before.1).cloned()
        });
        let (t, d) = triangulate_polygon(poly, entry, exit, pivot.as_ref())?;
        triangles.extend(t);
        added.extend(d.iter().cloned());
        diagonals.extend(d);
        if let Some(x) = exit {
            diagonals.push(x.clone());
        }
    }
    let boundary = boundary_cycle(&triangles, &diagonals)?;
    let op = Outerpath { boundary, triangles, diagonals, added_edges: added };
    op.check()?;
    Ok(op)
}

/// Partition of the faces into two induced dual paths; the edges between
/// the two sides form a Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoOuterpathDecomposition<V: VertexId> {
    pub hamiltonian_cycle: Vec<V>,
    /// Side of each face, indexed like `EmbeddedGraph::faces`.
    pub side_assignment: Vec<u8>,
    /// Faces of each side in path order.
    pub face_paths: [Vec<usize>; 2],
    pub outerpaths: [Outerpath<V>; 2],
}

fn hamiltonian_cycle_of_cut<V: VertexId>(e: &EmbeddedGraph<V>, d: &DualGraph<V>, side: &[u8]) -> Option<Vec<V>> {
    let mut adj: BTreeMap<&V, Vec<&V>> = BTreeMap::new();
    for ((u, v), (a, b)) in &d.edge_faces {
        if side[*a] != side[*b] {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
    }
    let n = e.graph().vertex_count();
    if adj.len() != n || adj.values().any(|ns| ns.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut cycle = vec![start.clone()];
    let (mut prev, mut cur) = (start, *adj[start].iter().min()?);
    while cur != start {
        cycle.push(cur.clone());
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        if cycle.len() > n {
            return None;
        }
    }
    (cycle.len() == n).then_some(cycle)
}

/// Validates a face partition given as two face paths and builds the
/// triangulated outerpaths.
pub fn two_outerpath_from_sides<V: VertexId>(
    e: &EmbeddedGraph<V>,
    face_paths: [Vec<usize>; 2],
) -> Result<TwoOuterpathDecomposition<V>> {
    let d = dual(e)?;
    let f = d.face_count();
    let mut side = vec![u8::MAX; f];
    for (s, path) in face_paths.iter().enumerate() {
        if path.is_empty() {
            return Err(Error::InvalidCertificate(format!("side {s} is empty")));
        }
        for &face in path {
            if face >= f || side[face] != u8::MAX {
                return Err(Error::InvalidCertificate(format!("face {face} missing or repeated")));
            }
            side[face] = s as u8;
        }
        for (i, &a) in path.iter().enumerate() {
            for (j, &b) in path.iter().enumerate().skip(i + 1) {
                let adjacent = d.graph.has_edge(&a, &b);
                if adjacent != (j == i + 1) {
                    return Err(Error::InvalidCertificate(format!("side {s} is not an induced dual path")));
                }
            }
        }
    }
    if side.contains(&u8::MAX) {
        return Err(Error::InvalidCertificate("some face has no side".into()));
    }
    let cycle = hamiltonian_cycle_of_cut(e, &d, &side)
        .ok_or_else(|| Error::InvalidCertificate("cut edges do not form a Hamiltonian cycle".into()))?;
    let build = |path: &Vec<usize>| -> Result<Outerpath<V>> {
        let polygons = path.iter().map(|&i| d.faces[i].vertices()).collect();
        triangulate_outerpath(&StripRegion { polygons })
    };
    let outerpaths = [build(&face_paths[0])?, build(&face_paths[1])?];
    Ok(TwoOuterpathDecomposition { hamiltonian_cycle: cycle, side_assignment: side, face_paths, outerpaths })
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    side: Vec<i8>,
}

impl Search<'_> {
    fn same_side_neighbors(&self, f: usize, s: i8) -> impl Iterator<Item = usize> + '_ {
        self.adj[f].iter().copied().filter(move |&g| self.side[g] == s)
    }

    fn connected_within(&self, a: usize, b: usize, s: i8, skip: usize) -> bool {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for y in self.same_side_neighbors(x, s) {
                if y != skip && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn locally_ok(&self, f: usize) -> bool {
        let s = self.side[f];
        let ns: Vec<usize> = self.same_side_neighbors(f, s).collect();
        if ns.len() > 2 || ns.iter().any(|&g| self.same_side_neighbors(g, s).count() > 2) {
            return false;
        }
        !(ns.len() == 2 && self.connected_within(ns[0], ns[1], s, f))
    }

    /// A side whose component can no longer grow must be the whole side.
    fn no_stranded_component(&self) -> bool {
        let n = self.adj.len();
        for s in 0..2i8 {
            let members: Vec<usize> = (0..n).filter(|&f| self.side[f] == s).collect();
            let Some(&start) = members.first() else { continue };
            let mut seen = vec![false; n];
            let mut stack = vec![start];
            seen[start] = true;
            let (mut size, mut open) = (0, false);
            let mut comps_closed = Vec::new();
            // walk every component of side s
            let mut pending: Vec<usize> = members.clone();
            loop {
                while let Some(x) = stack.pop() {
                    size += 1;
                    for &y in &self.adj[x] {
                        if self.side[y] == -1 {
                            open = true;
                        } else if self.side[y] == s && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                comps_closed.push((size, open));
                pending.retain(|&f| !seen[f]);
                let Some(&next) = pending.first() else { break };
                seen[next] = true;
                stack.push(next);
                size = 0;
                open = false;
            }
            if comps_closed.len() > 1 && comps_closed.iter().any(|&(_, open)| !open) {
                return false;
            }
        }
        true
    }
}

/// Exhaustive search for a two-outerpath decomposition. Faces are assigned
/// in ascending id order with face 0 fixed to side 0.
pub fn find_two_outerpath<V: VertexId>(
    e: &EmbeddedGraph<V>,
    budget: Budget,
) -> Result<SearchOutcome<TwoOuterpathDecomposition<V>>> {
    let d = dual(e)?;
    let f = d.face_count();
    if f < 2 {
        return Ok(SearchOutcome::None);
    }
    let adj: Vec<Vec<usize>> = (0..f).map(|i| d.graph.neighbors(&i).copied().collect()).collect();
    let mut search = Search { adj: &adj, side: vec![-1; f] };
    let mut meter = budget.meter();
    let mut found = None;
    // explicit stack of (face, next side to try)
    let mut next_side = vec![0i8; f];
    let mut depth = 0usize;
    'outer: loop {
        if depth == f {
            let sides: Vec<u8> = search.side.iter().map(|&s| s as u8).collect();
            if sides.contains(&1) {
                if let Some(paths) = order_paths(&adj, &sides) {
                    if let Ok(dec) = two_outerpath_from_sides(e, paths) {
                        found = Some(dec);
                        break 'outer;
                    }
                }
            }
            depth -= 1;
            continue;
        }
        let limit = if depth == 0 { 1 } else { 2 };
        if next_side[depth] >= limit {
            next_side[depth] = 0;
            search.side[depth] = -1;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        if !meter.step() {
            break;
        }
        let s = next_side[depth];
        next_side[depth] += 1;
        search.side[depth] = s;
        if search.locally_ok(depth) && search.no_stranded_component() {
            depth += 1;
        } else {
            search.side[depth] = -1;
        }
    }
    Ok(meter.outcome(found))
}

fn order_paths(adj: &[Vec<usize>], side: &[u8]) -> Option<[Vec<usize>; 2]> {
    let order = |s: u8| -> Option<Vec<usize>> {
        let members: Vec<usize> = (0..side.len()).filter(|&f| side[f] == s).collect();
        let deg = |f: usize| adj[f].iter().filter(|&&g| side[g] == s).count();
        let start = *members.iter().find(|&&f| deg(f) <= 1)?;
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur].iter().copied().find(|&g| side[g] == s && g != prev && !path.contains(&g));
            match next {
                Some(g) => {
                    path.push(g);
                    prev = cur;
                    cur = g;
                }
                None => break,
            }
        }
        (path.len() == members.len()).then_some(path)
    };
    Some([order(0)?, order(1)?])
}

impl<V: VertexId> TwoOuterpathDecomposition<V> {
    /// Re-checks the invariants against the embedding.
    pub fn validate(&self, e: &EmbeddedGraph<V>) -> Result<()> {
        let again = two_outerpath_from_sides(e, self.face_paths.clone())?;
        if again != *self {
            return Err(Error::InvalidCertificate(format!(
                "decomposition does not match its face paths (cycle starts at {})",
                self.hamiltonian_cycle.first().map(show).unwrap_or_default()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cube, icosahedron, kleetope, octahedron, tetrahedron};

    fn strip(polys: &[&[u32]]) -> StripRegion<u32> {
        StripRegion { polygons: polys.iter().map(|p| p.to_vec()).collect() }
    }

    #[test]
    fn triangulated_strip_is_identity() {
        let s = strip(&[&[0, 1, 2], &[2, 1, 3], &[2, 3, 4]]);
        let op = triangulate_outerpath(&s).unwrap();
        assert!(op.added_edges.is_empty());
        assert_eq!(op.triangles.len(), 3);
        assert_eq!(op.diagonals, vec![(1, 2), (2, 3)]);
        assert_eq!(op.ear_vertices(), Some((0, 4)));
        assert_eq!(op.boundary.len(), 5);
    }

    #[test]
    fn quadrilateral_gets_one_diagonal() {
        let s = strip(&[&[0, 1, 2], &[2, 1, 3, 4], &[4, 3, 5]]);
        let op = triangulate_outerpath(&s).unwrap();
        assert_eq!(op.added_edges.len(), 1);
        assert_eq!(op.triangles.len(), 4);
        op.check().unwrap();
    }

    #[test]
    fn hexagon_fans_into_a_path() {
        let s = strip(&[&[0, 1, 2, 3, 4, 5]]);
        let op = triangulate_outerpath(&s).unwrap();
        assert_eq!(op.triangles.len(), 4);
        assert_eq!(op.added_edges.len(), 3);
        op.check().unwrap();
        let s = strip(&[&[10, 0, 1], &[0, 5, 4, 3, 2, 1], &[2, 3, 11]]);
        let op = triangulate_outerpath(&s).unwrap();
        assert_eq!(op.triangles.len(), 6);
        op.check().unwrap();
        assert_eq!(op.boundary.len(), 8);
    }

    #[test]
    fn non_path_strip_is_rejected() {
        let s = strip(&[&[0, 1, 2], &[1, 2, 3], &[0, 1, 3]]);
        assert!(triangulate_outerpath(&s).is_err());
    }

    #[test]
    fn small_polyhedra_decompose() {
        for e in [tetrahedron(), icosahedron(), kleetope(&tetrahedron()).unwrap(), octahedron(), cube()] {
            let dec = find_two_outerpath(&e, Budget::default()).unwrap().found().unwrap();
            dec.validate(&e).unwrap();
            assert_eq!(dec.hamiltonian_cycle.len(), e.graph().vertex_count());
        }
    }
}
