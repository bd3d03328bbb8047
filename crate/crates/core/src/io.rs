//! JSON interchange documents: graphs, certificates and drawings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::{BlowupVertex, EmbeddedOrPlain};
use crate::decompositions::{
    path_copath_from_parts, two_outerpath_from_sides, ForestPartition, PathCopathDecomposition, ProperColoring,
    TwoOuterpathDecomposition,
};
use crate::drawings::{DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, Target};
use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Graph};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphData {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<String>>>,
}

impl GraphData {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            vertices: g.vertices().cloned().collect(),
            edges: g.edges().map(|(u, v)| (u.clone(), v.clone())).collect(),
            rotation: None,
        }
    }

    pub fn from_embedded(e: &EmbeddedGraph) -> Self {
        Self { rotation: Some(e.rotations().clone()), ..Self::from_graph(e.graph()) }
    }

    pub fn from_either(g: &EmbeddedOrPlain) -> Self {
        match g {
            EmbeddedOrPlain::Embedded(e) => Self::from_embedded(e),
            EmbeddedOrPlain::Plain(g) => Self::from_graph(g),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_parts(self.vertices.iter().cloned(), self.edges.iter().cloned())
    }

    pub fn to_either(&self) -> Result<EmbeddedOrPlain> {
        let g = self.to_graph()?;
        Ok(match &self.rotation {
            Some(r) => EmbeddedOrPlain::Embedded(EmbeddedGraph::new(g, r.clone())?),
            None => EmbeddedOrPlain::Plain(g),
        })
    }
}

/// Faces are named by their canonical vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoOuterpathData {
    pub hamiltonian_cycle: Vec<String>,
    pub face_paths: [Vec<Vec<String>>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCopathData {
    pub primal_path: Vec<String>,
    pub dual_path: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringData {
    pub c: usize,
    pub colors: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestsData {
    pub forests: Vec<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageData {
    pub base: String,
    pub copy: u32,
    pub occ: u32,
}

/// One plane: images, edges as index pairs into `images`, and the
/// rotation at each image as a list of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneData {
    pub images: Vec<ImageData>,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetData {
    pub graph: GraphData,
    pub k: u32,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingData {
    pub kind: DrawingKind,
    pub target: TargetData,
    pub planes: Vec<PlaneData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Document {
    Graph(GraphData),
    TwoOuterpath(TwoOuterpathData),
    PathCopath(PathCopathData),
    Coloring(ColoringData),
    Forests(ForestsData),
    Drawing(DrawingData),
}

impl Document {
    pub fn type_name(&self) -> &'static str {
        match self {
            Document::Graph(_) => "graph",
            Document::TwoOuterpath(_) => "two-outerpath",
            Document::PathCopath(_) => "path-copath",
            Document::Coloring(_) => "coloring",
            Document::Forests(_) => "forests",
            Document::Drawing(_) => "drawing",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    format_version: u32,
    #[serde(flatten)]
    document: Document,
}

pub fn to_json(doc: &Document) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { format_version: FORMAT_VERSION, document: doc.clone() })?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Document> {
    let env: Envelope = serde_json::from_str(s)?;
    if env.format_version != FORMAT_VERSION {
        return Err(Error::InvalidParameter(format!("unsupported format_version {}", env.format_version)));
    }
    Ok(env.document)
}

pub fn read_document(path: &Path) -> Result<Document> {
    from_json(&std::fs::read_to_string(path)?)
}

pub fn write_document(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, to_json(doc)?)?;
    Ok(())
}

fn face_index(e: &EmbeddedGraph) -> BTreeMap<Vec<String>, usize> {
    e.faces().iter().enumerate().map(|(i, f)| (f.canonical_key(), i)).collect()
}

impl TwoOuterpathData {
    pub fn from_decomposition(e: &EmbeddedGraph, d: &TwoOuterpathDecomposition<String>) -> Self {
        let faces = e.faces();
        let keys = |path: &Vec<usize>| path.iter().map(|&i| faces[i].canonical_key()).collect();
        Self { hamiltonian_cycle: d.hamiltonian_cycle.clone(), face_paths: [keys(&d.face_paths[0]), keys(&d.face_paths[1])] }
    }

    pub fn to_decomposition(&self, e: &EmbeddedGraph) -> Result<TwoOuterpathDecomposition<String>> {
        let index = face_index(e);
        let ids = |path: &Vec<Vec<String>>| -> Result<Vec<usize>> {
            path.iter()
                .map(|k| index.get(k).copied().ok_or_else(|| Error::InvalidCertificate(format!("no face {:?}", k))))
                .collect()
        };
        two_outerpath_from_sides(e, [ids(&self.face_paths[0])?, ids(&self.face_paths[1])?])
    }
}

impl PathCopathData {
    pub fn from_decomposition(e: &EmbeddedGraph, d: &PathCopathDecomposition<String>) -> Self {
        let faces = e.faces();
        Self {
            primal_path: d.primal_path.clone(),
            dual_path: d.dual_path.iter().map(|&i| faces[i].canonical_key()).collect(),
        }
    }

    pub fn to_decomposition(&self, e: &EmbeddedGraph) -> Result<PathCopathDecomposition<String>> {
        let d = path_copath_from_parts(e, &self.primal_path)?;
        let faces = e.faces();
        let keys: Vec<Vec<String>> = d.dual_path.iter().map(|&i| faces[i].canonical_key()).collect();
        if keys != self.dual_path && !keys.iter().rev().eq(self.dual_path.iter()) {
            return Err(Error::InvalidCertificate("dual path does not match the primal path".into()));
        }
        Ok(d)
    }
}

impl ColoringData {
    pub fn from_coloring(c: &ProperColoring<String>) -> Self {
        Self { c: c.c, colors: c.colors.clone() }
    }

    pub fn to_coloring(&self) -> ProperColoring<String> {
        ProperColoring { colors: self.colors.clone(), c: self.c }
    }
}

impl ForestsData {
    pub fn from_partition(f: &ForestPartition<String>) -> Self {
        Self { forests: f.forests.clone() }
    }

    pub fn to_partition(&self) -> ForestPartition<String> {
        ForestPartition { forests: self.forests.clone() }
    }
}

impl DrawingData {
    pub fn from_drawing(d: &LayeredDrawing) -> Self {
        let planes = d
            .planes
            .iter()
            .map(|p| {
                let g = p.embedding.graph();
                let ids: Vec<&ImageId> = g.vertices().collect();
                let pos: BTreeMap<&ImageId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
                PlaneData {
                    images: ids
                        .iter()
                        .map(|im| ImageData { base: im.vertex.base.clone(), copy: im.vertex.copy, occ: im.occ })
                        .collect(),
                    edges: g.edges().map(|(a, b)| (pos[a], pos[b])).collect(),
                    rotation: ids.iter().map(|v| p.embedding.rotation(v).iter().map(|w| pos[w]).collect()).collect(),
                }
            })
            .collect();
        Self {
            kind: d.kind,
            target: TargetData { graph: GraphData::from_graph(&d.target.graph), k: d.target.k, closed: d.target.closed },
            planes,
        }
    }

    pub fn to_drawing(&self) -> Result<LayeredDrawing> {
        let mut planes = Vec::new();
        for p in &self.planes {
            let ids: Vec<ImageId> = p
                .images
                .iter()
                .map(|im| ImageId { vertex: BlowupVertex::new(im.base.clone(), im.copy), occ: im.occ })
                .collect();
            let at = |i: usize| {
                ids.get(i).cloned().ok_or_else(|| Error::InvalidParameter(format!("image index {i} out of range")))
            };
            let edges: Vec<(ImageId, ImageId)> = p.edges.iter().map(|&(a, b)| Ok((at(a)?, at(b)?))).collect::<Result<_>>()?;
            let graph = Graph::from_parts(ids.iter().cloned(), edges)?;
            if p.rotation.len() != ids.len() {
                return Err(Error::Rotation("rotation list does not match the images".into()));
            }
            let rotation = ids
                .iter()
                .zip(&p.rotation)
                .map(|(v, r)| Ok((v.clone(), r.iter().map(|&i| at(i)).collect::<Result<Vec<_>>>()?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            planes.push(PlaneDrawing { embedding: EmbeddedGraph::new(graph, rotation)? });
        }
        Ok(LayeredDrawing {
            kind: self.kind,
            planes,
            target: Target { graph: self.target.graph.to_graph()?, k: self.target.k, closed: self.target.closed },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::octahedron;
    use crate::decompositions::{find_path_copath, Budget};
    use crate::drawings::draw_path_copath_split2;

    #[test]
    fn round_trips() {
        let e = octahedron();
        let doc = Document::Graph(GraphData::from_embedded(&e));
        assert_eq!(from_json(&to_json(&doc).unwrap()).unwrap(), doc);
        let dec = find_path_copath(&e, Budget::default()).unwrap().found().unwrap();
        let data = PathCopathData::from_decomposition(&e, &dec);
        assert_eq!(data.to_decomposition(&e).unwrap(), dec);
        let d = draw_path_copath_split2(&e, &dec).unwrap();
        let dd = DrawingData::from_drawing(&d);
        let back = match from_json(&to_json(&Document::Drawing(dd)).unwrap()).unwrap() {
            Document::Drawing(x) => x.to_drawing().unwrap(),
            _ => unreachable!(),
        };
        assert_eq!(back, d);
        assert!(from_json(r#"{"format_version": 9, "type": "forests", "forests": []}"#).is_err());
    }
}
