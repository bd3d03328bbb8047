//! Kleetopes, blowups and the named graphs used as fixtures.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{show, EmbeddedGraph, Graph, VertexId};
use crate::planarity::planar_embedding;

/// A vertex of a k-blowup: copy `copy` of the base vertex `base`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlowupVertex<V = String> {
    pub base: V,
    pub copy: u32,
}

impl<V> BlowupVertex<V> {
    pub fn new(base: V, copy: u32) -> Self {
        Self { base, copy }
    }
}

impl<V: fmt::Display> fmt::Display for BlowupVertex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.base, self.copy)
    }
}

/// Provenance of a vertex id in an (iterated) Kleetope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KleetopeVertexTag {
    Original(String),
    Apex { level: u32, face: Vec<String> },
}

impl KleetopeVertexTag {
    /// Apex ids look like `k<level>(<v1>,<v2>,...)`, listing the least
    /// rotation of the parent face's vertex cycle.
    pub fn apex_id(level: u32, face_key: &[String]) -> String {
        format!("k{level}({})", face_key.join(","))
    }

    pub fn parse(id: &str) -> Self {
        let apex = || -> Option<Self> {
            let rest = id.strip_prefix('k')?;
            let open = rest.find('(')?;
            let level: u32 = rest[..open].parse().ok()?;
            let inner = rest[open + 1..].strip_suffix(')')?;
            Some(Self::Apex { level, face: split_top_level(inner) })
        };
        apex().unwrap_or_else(|| Self::Original(id.to_string()))
    }

    pub fn level(&self) -> u32 {
        match self {
            Self::Original(_) => 0,
            Self::Apex { level, .. } => *level,
        }
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].to_string());
    out
}

/// Highest Kleetope level present among the vertex ids.
pub fn kleetope_level(e: &EmbeddedGraph<String>) -> u32 {
    e.graph().vertices().map(|v| KleetopeVertexTag::parse(v).level()).max().unwrap_or(0)
}

/// One apex per face, joined to the face's vertices, spliced into the
/// rotations on the side of that face.
pub fn kleetope(e: &EmbeddedGraph<String>) -> Result<EmbeddedGraph<String>> {
    kleetope_at_level(e, kleetope_level(e) + 1)
}

pub fn kleetope_at_level(e: &EmbeddedGraph<String>, level: u32) -> Result<EmbeddedGraph<String>> {
    if !e.is_genus_zero() {
        return Err(Error::NotGenusZero("Kleetope input".into()));
    }
    let mut triangles = Vec::new();
    let mut apexes = BTreeSet::new();
    for face in e.faces() {
        if !face.is_simple_cycle() {
            return Err(Error::NonPolyhedral(format!("{:?}", face.vertices())));
        }
        let apex = KleetopeVertexTag::apex_id(level, &face.canonical_key());
        if e.graph().contains(&apex) || !apexes.insert(apex.clone()) {
            return Err(Error::InvalidParameter(format!("apex id {apex} collides")));
        }
        let vs = face.vertices();
        for i in 0..vs.len() {
            triangles.push(vec![vs[i].clone(), vs[(i + 1) % vs.len()].clone(), apex.clone()]);
        }
    }
    let out = EmbeddedGraph::from_faces(&triangles, e.graph().vertices().cloned())?;
    if !out.is_genus_zero() {
        return Err(Error::Internal("Kleetope rotation is not genus zero".into()));
    }
    Ok(out)
}

pub fn iterated_kleetope(e: &EmbeddedGraph<String>, iterations: u32) -> Result<EmbeddedGraph<String>> {
    let mut cur = e.clone();
    for _ in 0..iterations {
        cur = kleetope(&cur)?;
    }
    Ok(cur)
}

/// The k-blowup; `closed` also joins the copies of each vertex.
pub fn blowup<V: VertexId>(g: &Graph<V>, k: u32, closed: bool) -> Result<Graph<BlowupVertex<V>>> {
    if k == 0 {
        return Err(Error::InvalidParameter("blowup multiplicity must be positive".into()));
    }
    let mut out = Graph::new();
    for v in g.vertices() {
        for c in 0..k {
            out.add_vertex(BlowupVertex::new(v.clone(), c));
        }
        if closed {
            for a in 0..k {
                for b in a + 1..k {
                    out.add_edge(BlowupVertex::new(v.clone(), a), BlowupVertex::new(v.clone(), b))?;
                }
            }
        }
    }
    for (u, v) in g.edges() {
        for a in 0..k {
            for b in 0..k {
                out.add_edge(BlowupVertex::new(u.clone(), a), BlowupVertex::new(v.clone(), b))?;
            }
        }
    }
    Ok(out)
}

/// Smallest `deg(u) + deg(v)` over all edges.
pub fn min_edge_total_degree<V: VertexId>(g: &Graph<V>) -> Option<usize> {
    g.edges().map(|(u, v)| g.degree(u) + g.degree(v)).min()
}

fn id(i: usize) -> String {
    i.to_string()
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "complete graph needs n >= 1")?;
    Graph::from_parts((0..n).map(id), (0..n).flat_map(|i| (i + 1..n).map(move |j| (id(i), id(j)))))
}

/// Parts are numbered consecutively: part 0 gets ids `0..p0`, and so on.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(!parts.is_empty() && parts.iter().all(|&p| p > 0), "parts must be non-empty")?;
    let mut owner = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        owner.extend(std::iter::repeat(i).take(p));
    }
    let n = owner.len();
    let owner = &owner;
    Graph::from_parts(
        (0..n).map(id),
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| owner[i] != owner[j]).map(move |j| (id(i), id(j)))),
    )
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs n >= 3")?;
    Graph::from_edges((0..n).map(|i| (id(i), id((i + 1) % n))))
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs n >= 1")?;
    Graph::from_parts((0..n).map(id), (1..n).map(|i| (id(i - 1), id(i))))
}

/// `K_{1,leaves}` with center `0`.
pub fn star(leaves: usize) -> Result<Graph> {
    need(leaves >= 1, "star needs at least one leaf")?;
    Graph::from_edges((1..=leaves).map(|i| (id(0), id(i))))
}

/// Wheel on `n` vertices: hub `0` and rim cycle `1..n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    Ok(wheel_embedded(n)?.graph().clone())
}

pub fn wheel_embedded(n: usize) -> Result<EmbeddedGraph> {
    need(n >= 4, "wheel needs n >= 4")?;
    let r = n - 1;
    let rim = |i: usize| id(1 + i % r);
    let mut faces: Vec<Vec<String>> = (0..r).map(|i| vec![id(0), rim(i), rim(i + 1)]).collect();
    faces.push((0..r).rev().map(rim).collect());
    EmbeddedGraph::from_faces(&faces, [])
}

fn from_face_list(faces: &[&[usize]]) -> Result<EmbeddedGraph> {
    let faces: Vec<Vec<String>> = faces.iter().map(|f| f.iter().copied().map(id).collect()).collect();
    EmbeddedGraph::from_faces(&faces, [])
}

pub fn tetrahedron() -> EmbeddedGraph {
    from_face_list(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 1], &[1, 3, 2]]).expect("fixed face list")
}

/// `K_{2,2,2}` with parts `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> EmbeddedGraph {
    from_face_list(&[
        &[0, 2, 4],
        &[0, 4, 3],
        &[0, 3, 5],
        &[0, 5, 2],
        &[1, 4, 2],
        &[1, 3, 4],
        &[1, 5, 3],
        &[1, 2, 5],
    ])
    .expect("fixed face list")
}

pub fn cube() -> EmbeddedGraph {
    from_face_list(&[
        &[0, 1, 2, 3],
        &[4, 7, 6, 5],
        &[0, 4, 5, 1],
        &[1, 5, 6, 2],
        &[2, 6, 7, 3],
        &[3, 7, 4, 0],
    ])
    .expect("fixed face list")
}

/// Top vertex `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
pub fn icosahedron() -> EmbeddedGraph {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![11, low(i + 1), low(i)]);
    }
    let refs: Vec<&[usize]> = faces.iter().map(Vec::as_slice).collect();
    from_face_list(&refs).expect("fixed face list")
}

/// Cycle `0..ring` plus two poles `ring` and `ring + 1`; maximal planar.
pub fn bipyramid(ring: usize) -> Result<EmbeddedGraph> {
    need(ring >= 3, "bipyramid needs a ring of at least 3")?;
    let (top, bottom) = (ring, ring + 1);
    let mut faces = Vec::new();
    for i in 0..ring {
        let j = (i + 1) % ring;
        faces.push(vec![top, i, j]);
        faces.push(vec![bottom, j, i]);
    }
    let refs: Vec<&[usize]> = faces.iter().map(Vec::as_slice).collect();
    from_face_list(&refs)
}

/// Embeds a planar graph, or fails with [`Error::NotPlanar`].
pub fn embed(g: &Graph) -> Result<EmbeddedGraph> {
    planar_embedding(g).ok_or(Error::NotPlanar)
}

/// Named generator lookup used by the command line.
pub fn named(name: &str, n: Option<usize>, parts: &[usize]) -> Result<EmbeddedOrPlain> {
    let need_n = || n.ok_or_else(|| Error::InvalidParameter(format!("generator {name} needs -n")));
    Ok(match name {
        "tetrahedron" | "k4" => EmbeddedOrPlain::Embedded(tetrahedron()),
        "octahedron" => EmbeddedOrPlain::Embedded(octahedron()),
        "icosahedron" => EmbeddedOrPlain::Embedded(icosahedron()),
        "cube" => EmbeddedOrPlain::Embedded(cube()),
        "bipyramid" => EmbeddedOrPlain::Embedded(bipyramid(need_n()?)?),
        "wheel" => EmbeddedOrPlain::Embedded(wheel_embedded(need_n()?)?),
        "complete" => EmbeddedOrPlain::Plain(complete(need_n()?)?),
        "multipartite" => EmbeddedOrPlain::Plain(complete_multipartite(parts)?),
        "cycle" => EmbeddedOrPlain::Plain(cycle(need_n()?)?),
        "path" => EmbeddedOrPlain::Plain(path(need_n()?)?),
        "star" => EmbeddedOrPlain::Plain(star(need_n()?)?),
        other => return Err(Error::InvalidParameter(format!("unknown generator {}", show(&other)))),
    })
}

#[derive(Clone, Debug)]
pub enum EmbeddedOrPlain {
    Embedded(EmbeddedGraph),
    Plain(Graph),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::is_maximal_planar;

    #[test]
    fn platonic_fixtures() {
        for (e, v, m, f) in [
            (tetrahedron(), 4, 6, 4),
            (octahedron(), 6, 12, 8),
            (cube(), 8, 12, 6),
            (icosahedron(), 12, 30, 20),
        ] {
            assert!(e.is_genus_zero());
            assert_eq!(e.graph().vertex_count(), v);
            assert_eq!(e.graph().edge_count(), m);
            assert_eq!(e.faces().len(), f);
        }
        let ico = icosahedron();
        assert!(ico.graph().vertices().all(|v| ico.graph().degree(v) == 5));
        assert!(ico.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn octahedron_is_k222() {
        assert_eq!(octahedron().graph(), &complete_multipartite(&[2, 2, 2]).unwrap());
    }

    #[test]
    fn wheel_seven() {
        let w = wheel(7).unwrap();
        assert_eq!(w.vertex_count(), 7);
        assert_eq!(w.edge_count(), 12);
        assert_eq!(w.degree(&"0".to_string()), 6);
        assert!(wheel_embedded(7).unwrap().is_genus_zero());
    }

    #[test]
    fn kleetope_counts() {
        let kk4 = kleetope(&tetrahedron()).unwrap();
        assert_eq!(kk4.graph().vertex_count(), 8);
        assert_eq!(kk4.graph().edge_count(), 18);
        assert!(is_maximal_planar(kk4.graph()));

        let triakis = kleetope(&icosahedron()).unwrap();
        assert_eq!(triakis.graph().vertex_count(), 32);
        assert_eq!(triakis.graph().edge_count(), 90);
        assert_eq!(min_edge_total_degree(triakis.graph()), Some(13));

        let k2k4 = iterated_kleetope(&tetrahedron(), 2).unwrap();
        assert_eq!(k2k4.graph().vertex_count(), 20);
        assert_eq!(k2k4.graph().edge_count(), 54);
        assert_eq!(iterated_kleetope(&icosahedron(), 0).unwrap(), icosahedron());
    }

    #[test]
    fn kleetope_of_cube_adds_quadrilateral_apexes() {
        let k = kleetope(&cube()).unwrap();
        assert_eq!(k.graph().vertex_count(), 14);
        assert_eq!(k.graph().edge_count(), 12 + 24);
        assert!(is_maximal_planar(k.graph()));
    }

    #[test]
    fn apex_tags_round_trip() {
        let k2 = iterated_kleetope(&tetrahedron(), 2).unwrap();
        assert_eq!(kleetope_level(&k2), 2);
        let apex = k2.graph().vertices().find(|v| v.starts_with("k2(")).unwrap();
        match KleetopeVertexTag::parse(apex) {
            KleetopeVertexTag::Apex { level, face } => {
                assert_eq!(level, 2);
                assert_eq!(face.len(), 3);
            }
            other => panic!("unexpected tag {other:?}"),
        }
        assert_eq!(KleetopeVertexTag::parse("17"), KleetopeVertexTag::Original("17".into()));
    }

    #[test]
    fn kleetope_rejects_repeated_face_vertex() {
        let tree = embed(&path(3).unwrap()).unwrap();
        assert!(matches!(kleetope(&tree), Err(Error::NonPolyhedral(_))));
    }

    #[test]
    fn blowup_shapes() {
        let k2 = complete(2).unwrap();
        let c4 = blowup(&k2, 2, false).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        let k4 = blowup(&k2, 2, true).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(matches!(blowup(&k2, 0, false), Err(Error::InvalidParameter(_))));

        let k666 = blowup(octahedron().graph(), 3, false).unwrap();
        assert_eq!(k666.vertex_count(), 18);
        assert_eq!(k666.edge_count(), 108);
    }
}
