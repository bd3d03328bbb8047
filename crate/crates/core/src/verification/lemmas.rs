use std::collections::{BTreeMap, BTreeSet};

use crate::drawings::{DrawingKind, ImageId, LayeredDrawing};
use crate::error::{Error, Result};
use crate::graph::{show, VertexId};
use crate::verification::excess::nontriangular_in_plane;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report<V> {
    /// Base vertices all of whose images touch only triangles.
    pub vertices: Vec<V>,
    pub n: usize,
    /// 49 for biplanar drawings, 73 for split-2 drawings.
    pub threshold: usize,
    pub threshold_applies: bool,
}

impl<V> Lemma1Report<V> {
    /// Lemma 1's conclusion: above the threshold the set is nonempty.
    pub fn holds(&self) -> bool {
        !self.threshold_applies || !self.vertices.is_empty()
    }
}

/// Base vertices `v` of a drawing of a 2-blowup such that every image of
/// `v_0` and `v_1` is incident only to triangular faces.
pub fn lemma1_detect<V: VertexId>(d: &LayeredDrawing<V>) -> Result<Lemma1Report<V>> {
    if d.target.k != 2 {
        return Err(Error::InvalidParameter("lemma 1 applies to 2-blowups".into()));
    }
    let mut bad = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for plane in &d.planes {
        let e = &plane.embedding;
        let faces = e.faces();
        bad.extend(nontriangular_in_plane(e, &faces).into_iter().map(|im| im.vertex.base));
        seen.extend(e.graph().vertices().map(|im| im.vertex.base.clone()));
    }
    let vertices = seen.into_iter().filter(|v| !bad.contains(v)).collect();
    let n = d.target.graph.vertex_count();
    let threshold = match d.kind {
        DrawingKind::Split(_) => 73,
        DrawingKind::Thickness(_) => 49,
    };
    Ok(Lemma1Report { vertices, n, threshold, threshold_applies: n >= threshold })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodReport<V> {
    pub vertex: V,
    /// `(plane, image)` for every image of both copies.
    pub images: Vec<(usize, ImageId<V>)>,
    /// Image incident only to triangular faces.
    pub triangulated: Vec<bool>,
    /// Image of degree three surrounded by exactly three triangles.
    pub triangular: Vec<bool>,
    /// Edges lying on the rims of two or more image neighborhoods.
    pub shared_edges: usize,
}

impl<V> NeighborhoodReport<V> {
    pub fn all_triangular(&self) -> bool {
        self.triangular.iter().all(|&t| t)
    }
}

/// Neighborhood structure of the images of a degree-3 vertex `w` of the
/// target graph. The rim of an image is the set of edges of its incident
/// faces that avoid the image.
pub fn lemma2_check<V: VertexId>(d: &LayeredDrawing<V>, w: &V) -> Result<NeighborhoodReport<V>> {
    let deg = d.target.graph.degree(w);
    if !d.target.graph.contains(w) || deg != 3 {
        return Err(Error::InvalidParameter(format!("{} is not a degree-3 vertex of the target", show(w))));
    }
    let mut images = Vec::new();
    let mut triangulated = Vec::new();
    let mut triangular = Vec::new();
    let mut rim_count: BTreeMap<(usize, ImageId<V>, ImageId<V>), usize> = BTreeMap::new();
    for (p, plane) in d.planes.iter().enumerate() {
        let e = &plane.embedding;
        let mine: Vec<&ImageId<V>> = e.graph().vertices().filter(|im| im.vertex.base == *w).collect();
        if mine.is_empty() {
            continue;
        }
        let faces = e.faces();
        for im in mine {
            let incident: Vec<_> = faces.iter().filter(|f| f.contains_vertex(im)).collect();
            let all_tri = !incident.is_empty() && incident.iter().all(|f| f.len() == 3);
            triangulated.push(all_tri);
            triangular.push(all_tri && e.graph().degree(im) == 3 && incident.len() == 3);
            let mut rim = BTreeSet::new();
            for f in &incident {
                for (a, b) in &f.darts {
                    if a != im && b != im {
                        rim.insert(if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) });
                    }
                }
            }
            for (a, b) in rim {
                *rim_count.entry((p, a, b)).or_default() += 1;
            }
            images.push((p, im.clone()));
        }
    }
    let shared_edges = rim_count.values().filter(|&&c| c >= 2).count();
    Ok(NeighborhoodReport { vertex: w.clone(), images, triangulated, triangular, shared_edges })
}

/// All partitions of the edges of `K_{2,2,2}` (parts `{0,1}`, `{2,3}`,
/// `{4,5}`) into four triangles, with the two properties used in Lemma 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctahedronPartitions {
    pub triangles: Vec<[usize; 3]>,
    pub subsets_checked: usize,
    pub partitions: Vec<[[usize; 3]; 4]>,
    /// Every two triangles of every partition share a vertex.
    pub pairwise_share_vertex: bool,
    /// Every two triangles of every partition cover exactly five vertices.
    pub pairs_cover_five: bool,
}

pub fn octahedron_partition_oracle() -> OctahedronPartitions {
    let mut triangles = Vec::new();
    for a in 0..2 {
        for b in 2..4 {
            for c in 4..6 {
                triangles.push([a, b, c]);
            }
        }
    }
    let edges = |t: &[usize; 3]| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
    let mut partitions = Vec::new();
    let mut subsets_checked = 0;
    let t = triangles.len();
    for i in 0..t {
        for j in i + 1..t {
            for k in j + 1..t {
                for l in k + 1..t {
                    subsets_checked += 1;
                    let pick = [triangles[i], triangles[j], triangles[k], triangles[l]];
                    let covered: BTreeSet<(usize, usize)> = pick.iter().flat_map(edges).collect();
                    if covered.len() == 12 {
                        partitions.push(pick);
                    }
                }
            }
        }
    }
    let mut share = true;
    let mut five = true;
    for p in &partitions {
        for a in 0..4 {
            for b in a + 1..4 {
                let union: BTreeSet<usize> = p[a].iter().chain(p[b].iter()).copied().collect();
                share &= union.len() < 6;
                five &= union.len() == 5;
            }
        }
    }
    OctahedronPartitions {
        triangles,
        subsets_checked,
        partitions,
        pairwise_share_vertex: share,
        pairs_cover_five: five,
    }
}
