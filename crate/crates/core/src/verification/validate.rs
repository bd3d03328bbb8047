use std::collections::BTreeMap;
use std::fmt;

use crate::constructions::BlowupVertex;
use crate::drawings::{DrawingKind, LayeredDrawing};
use crate::error::Result;
use crate::graph::{show, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    PlaneCount { expected: usize, found: usize },
    Genus { plane: usize },
    UnknownImage { plane: usize, image: String },
    ImageCount { vertex: String, images: usize, allowed: usize },
    IntraCopy { plane: usize, vertex: String },
    NotInTarget { plane: usize, edge: (String, String) },
    Repeated { edge: (String, String), times: usize },
    Missing { edge: (String, String) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PlaneCount { expected, found } => write!(f, "expected {expected} planes, found {found}"),
            Violation::Genus { plane } => write!(f, "plane {plane} is not a genus-0 embedding"),
            Violation::UnknownImage { plane, image } => write!(f, "plane {plane}: image {image} is not a target vertex"),
            Violation::ImageCount { vertex, images, allowed } => {
                write!(f, "{vertex} has {images} images, at most {allowed} allowed")
            }
            Violation::IntraCopy { plane, vertex } => write!(f, "plane {plane}: edge between two images of {vertex}"),
            Violation::NotInTarget { plane, edge } => write!(f, "plane {plane}: {}-{} is not a target edge", edge.0, edge.1),
            Violation::Repeated { edge, times } => write!(f, "{}-{} drawn {times} times", edge.0, edge.1),
            Violation::Missing { edge } => write!(f, "{}-{} is not drawn", edge.0, edge.1),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub edges_realized: usize,
    pub target_edges: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "valid: {} of {} edges realized", self.edges_realized, self.target_edges),
            Some(v) => write!(f, "invalid ({} violations), first: {v}", self.violations.len()),
        }
    }
}

fn pair<V: VertexId>(a: &BlowupVertex<V>, b: &BlowupVertex<V>) -> (BlowupVertex<V>, BlowupVertex<V>) {
    if a < b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

fn name<V: VertexId>(v: &BlowupVertex<V>) -> String {
    format!("{}_{}", show(&v.base), v.copy)
}

/// Checks genus, exact-once coverage of the target blowup, image bounds
/// and (for open blowups) the absence of edges inside one vertex's copies.
pub fn validate_drawing<V: VertexId>(d: &LayeredDrawing<V>) -> Result<ValidationReport> {
    let target = d.target.blowup()?;
    let mut report = ValidationReport { target_edges: target.edge_count(), ..Default::default() };
    let v = &mut report.violations;
    let (planes_expected, per_plane, total) = match d.kind {
        DrawingKind::Thickness(t) => (t as usize, 1, t as usize),
        DrawingKind::Split(k) => (1, k as usize, k as usize),
    };
    if d.planes.len() != planes_expected {
        v.push(Violation::PlaneCount { expected: planes_expected, found: d.planes.len() });
    }
    let mut images: BTreeMap<&BlowupVertex<V>, (usize, Vec<usize>)> = BTreeMap::new();
    let mut drawn: BTreeMap<(BlowupVertex<V>, BlowupVertex<V>), usize> = BTreeMap::new();
    for (p, plane) in d.planes.iter().enumerate() {
        let e = &plane.embedding;
        if !e.is_genus_zero() {
            v.push(Violation::Genus { plane: p });
        }
        for im in e.graph().vertices() {
            if !target.contains(&im.vertex) {
                v.push(Violation::UnknownImage { plane: p, image: format!("{}#{}", name(&im.vertex), im.occ) });
                continue;
            }
            let entry = images.entry(&im.vertex).or_default();
            entry.0 += 1;
            entry.1.push(p);
        }
        for (a, b) in e.graph().edges() {
            if a.vertex == b.vertex {
                v.push(Violation::IntraCopy { plane: p, vertex: name(&a.vertex) });
                continue;
            }
            if !target.has_edge(&a.vertex, &b.vertex) {
                v.push(Violation::NotInTarget { plane: p, edge: (name(&a.vertex), name(&b.vertex)) });
                continue;
            }
            *drawn.entry(pair(&a.vertex, &b.vertex)).or_default() += 1;
        }
    }
    for (vertex, (count, planes)) in &images {
        let worst = (0..d.planes.len()).map(|p| planes.iter().filter(|&&q| q == p).count()).max().unwrap_or(0);
        if worst > per_plane || *count > total {
            v.push(Violation::ImageCount { vertex: name(vertex), images: *count, allowed: total });
        }
    }
    for (edge, times) in &drawn {
        if *times > 1 {
            v.push(Violation::Repeated { edge: (name(&edge.0), name(&edge.1)), times: *times });
        }
    }
    for (a, b) in target.edges() {
        if !drawn.contains_key(&pair(a, b)) {
            v.push(Violation::Missing { edge: (name(a), name(b)) });
        }
    }
    report.edges_realized = drawn.len();
    Ok(report)
}
