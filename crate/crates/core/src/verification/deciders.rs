use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::decompositions::{Budget, SearchOutcome};
use crate::drawings::{biplanar_to_split2, DrawingKind, ImageId, LayeredDrawing, PlaneDrawing, Target};
use crate::error::Result;
use crate::graph::{EmbeddedGraph, Graph, VertexId};
use crate::planarity::{adjacency_from_edges, edges_planar, lr_embedding, planar_embedding};
use crate::verification::validate_drawing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeBound {
    Planar,
    Biplanar,
    Split2,
}

/// Edge bound for an `n`-vertex graph drawn in the given way.
pub fn max_edges(kind: EdgeBound, n: usize) -> usize {
    if n < 3 {
        return n * n.saturating_sub(1) / 2;
    }
    match kind {
        EdgeBound::Planar => 3 * n - 6,
        EdgeBound::Biplanar => 6 * n - 12,
        EdgeBound::Split2 => 6 * n - 6,
    }
}

fn single_copy<V: VertexId>(e: &EmbeddedGraph<V>, occ: u32) -> Result<EmbeddedGraph<ImageId<V>>> {
    e.map_vertices(|v| ImageId::new(v.clone(), 0, occ))
}

/// Planarity as a one-plane drawing of the 1-blowup.
pub fn decide_planar<V: VertexId>(g: &Graph<V>) -> Result<SearchOutcome<LayeredDrawing<V>>> {
    let Some(e) = planar_embedding(g) else {
        return Ok(SearchOutcome::None);
    };
    Ok(SearchOutcome::Found(LayeredDrawing {
        kind: DrawingKind::Thickness(1),
        planes: vec![PlaneDrawing { embedding: single_copy(&e, 0)? }],
        target: Target { graph: g.clone(), k: 1, closed: false },
    }))
}

/// Embeds one color class over all vertices of `g`.
fn class_plane<V: VertexId>(g: &Graph<V>, ids: &[V], edges: &[(usize, usize)]) -> Result<PlaneDrawing<V>> {
    let sub = Graph::from_parts(
        g.vertices().cloned(),
        edges.iter().map(|&(a, b)| (ids[a].clone(), ids[b].clone())),
    )?;
    let e = planar_embedding(&sub).ok_or(crate::error::Error::Internal("class is not planar".into()))?;
    Ok(PlaneDrawing { embedding: single_copy(&e, 0)? })
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    found: Mutex<Option<(usize, Vec<u8>)>>,
    /// Lowest prefix index with a solution so far.
    best: AtomicUsize,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn charge(&self, batch: u64) -> bool {
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        if total > self.max_nodes || self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    cap: usize,
    shared: &'a Shared,
    prefix: usize,
    colors: Vec<u8>,
    classes: [Vec<(usize, usize)>; 2],
    pending: u64,
}

impl Search<'_> {
    fn fits(&self, c: usize) -> bool {
        let class = &self.classes[c];
        class.len() <= self.cap && (class.len() < 9 || edges_planar(self.n, class))
    }

    fn push(&mut self, i: usize, c: u8) -> bool {
        self.colors.push(c);
        self.classes[c as usize].push(self.edges[i]);
        if self.fits(c as usize) {
            true
        } else {
            self.pop();
            false
        }
    }

    fn pop(&mut self) {
        let c = self.colors.pop().unwrap();
        self.classes[c as usize].pop();
    }

    /// Depth-first over the colors of edges `from..`.
    fn run(&mut self, from: usize) -> bool {
        if self.shared.stop.load(Ordering::Relaxed) || self.shared.best.load(Ordering::Relaxed) < self.prefix {
            return false;
        }
        if from == self.edges.len() {
            let mut found = self.shared.found.lock().unwrap();
            if found.as_ref().is_none_or(|(k, _)| self.prefix < *k) {
                *found = Some((self.prefix, self.colors.clone()));
            }
            self.shared.best.fetch_min(self.prefix, Ordering::Relaxed);
            return true;
        }
        self.pending += 1;
        if self.pending >= 256 {
            let batch = std::mem::take(&mut self.pending);
            if !self.shared.charge(batch) {
                return false;
            }
        }
        for c in 0..2u8 {
            if self.push(from, c) {
                if self.run(from + 1) {
                    return true;
                }
                self.pop();
            }
        }
        false
    }
}

/// Exact thickness-2 test by branch and bound over edge 2-colorings. The
/// first edge is fixed to color 0; a color class is re-tested for
/// planarity whenever it grows. Subtrees below a fixed prefix depth are
/// explored in parallel; the certificate comes from the first prefix, in
/// enumeration order, that has a solution.
pub fn decide_biplanar<V: VertexId>(g: &Graph<V>, budget: Budget) -> Result<SearchOutcome<LayeredDrawing<V>>> {
    let idx = g.indexed();
    let n = idx.ids.len();
    let target = Target { graph: g.clone(), k: 1, closed: false };
    let certificate = |classes: [Vec<(usize, usize)>; 2]| -> Result<LayeredDrawing<V>> {
        let planes = vec![class_plane(g, &idx.ids, &classes[0])?, class_plane(g, &idx.ids, &classes[1])?];
        Ok(LayeredDrawing { kind: DrawingKind::Thickness(2), planes, target: target.clone() })
    };
    // dense vertices first, so classes fill up early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(idx.adj[v].len()), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut edges = idx.edge_list();
    edges.sort_by_key(|&(u, v)| (rank[u].max(rank[v]), rank[u].min(rank[v])));
    let m = edges.len();
    if edges_planar(n, &edges) {
        return Ok(SearchOutcome::Found(certificate([edges, Vec::new()])?));
    }
    if m > max_edges(EdgeBound::Biplanar, n) {
        return Ok(SearchOutcome::None);
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        found: Mutex::new(None),
        best: AtomicUsize::new(usize::MAX),
        max_nodes: budget.max_nodes,
        deadline: budget.timeout.map(|t| Instant::now() + t),
    };
    let cap = max_edges(EdgeBound::Planar, n);
    let fresh = || Search {
        n,
        edges: &edges,
        cap,
        shared: &shared,
        prefix: 0,
        colors: Vec::new(),
        classes: [Vec::new(), Vec::new()],
        pending: 0,
    };
    // feasible prefixes of the first few edges, first edge fixed to 0
    let depth = m.min(12);
    let mut prefixes: Vec<Vec<u8>> = vec![vec![0]];
    for _ in 1..depth {
        let mut next = Vec::new();
        for p in &prefixes {
            for c in 0..2u8 {
                let mut s = fresh();
                let mut ok = true;
                for (j, &pc) in p.iter().chain(std::iter::once(&c)).enumerate() {
                    ok &= s.push(j, pc);
                }
                if ok {
                    let mut q = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
        }
        prefixes = next;
    }
    let work = AtomicU64::new(0);
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(prefixes.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let k = work.fetch_add(1, Ordering::Relaxed) as usize;
                if k >= prefixes.len() || shared.stop.load(Ordering::Relaxed) || shared.best.load(Ordering::Relaxed) < k {
                    break;
                }
                let mut s = Search { prefix: k, ..fresh() };
                for (j, &c) in prefixes[k].iter().enumerate() {
                    s.push(j, c);
                }
                if s.run(prefixes[k].len()) {
                    break;
                }
                let batch = std::mem::take(&mut s.pending);
                shared.charge(batch);
            });
        }
    });
    let found = shared.found.lock().unwrap().take();
    match found {
        Some((_, colors)) => {
            let mut classes = [Vec::new(), Vec::new()];
            for (i, &c) in colors.iter().enumerate() {
                classes[c as usize].push(edges[i]);
            }
            let d = certificate(classes)?;
            let report = validate_drawing(&d)?;
            if !report.is_valid() {
                return Err(crate::error::Error::Internal(format!("biplanar certificate rejected: {report}")));
            }
            Ok(SearchOutcome::Found(d))
        }
        None if shared.exhausted.load(Ordering::Relaxed) => Ok(SearchOutcome::Unknown),
        None => Ok(SearchOutcome::None),
    }
}

/// Split-thickness-2 test. Planar graphs and biplanar graphs answer
/// directly; otherwise every way of splitting each vertex's edges between
/// two images is tried, provided the number of combinations fits the
/// node budget.
pub fn decide_split2<V: VertexId>(g: &Graph<V>, budget: Budget) -> Result<SearchOutcome<LayeredDrawing<V>>> {
    let n = g.vertex_count();
    let target = Target { graph: g.clone(), k: 1, closed: false };
    if let Some(e) = planar_embedding(g) {
        return Ok(SearchOutcome::Found(LayeredDrawing {
            kind: DrawingKind::Split(2),
            planes: vec![PlaneDrawing { embedding: single_copy(&e, 0)? }],
            target,
        }));
    }
    if g.edge_count() > max_edges(EdgeBound::Split2, n) {
        return Ok(SearchOutcome::None);
    }
    let bip = decide_biplanar(g, budget)?;
    if let SearchOutcome::Found(d) = &bip {
        return Ok(SearchOutcome::Found(biplanar_to_split2(d)?));
    }
    let idx = g.indexed();
    let mut space: u64 = 1;
    for ns in &idx.adj {
        let options = 1u64.checked_shl(ns.len().saturating_sub(1) as u32).unwrap_or(u64::MAX);
        space = space.saturating_mul(options);
    }
    if space > budget.max_nodes {
        return Ok(SearchOutcome::Unknown);
    }
    let edges = idx.edge_list();
    // split[v] is a bit mask over v's neighbor list: set bits go to image 1;
    // the first neighbor always stays on image 0
    let mut split = vec![0u64; n];
    let mut meter = budget.meter();
    loop {
        if !meter.step() {
            return Ok(SearchOutcome::Unknown);
        }
        let side = |v: usize, w: usize| -> usize {
            let pos = idx.adj[v].iter().position(|&x| x == w).unwrap();
            2 * v + ((split[v] >> pos) & 1) as usize
        };
        let split_edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (side(a, b), side(b, a))).collect();
        if let Some(rot) = lr_embedding(&adjacency_from_edges(2 * n, &split_edges)) {
            let image = |s: usize| ImageId::new(idx.ids[s / 2].clone(), 0, (s % 2) as u32);
            let used: Vec<usize> = (0..2 * n).filter(|&s| !rot[s].is_empty() || s % 2 == 0).collect();
            let graph = Graph::from_parts(
                used.iter().map(|&s| image(s)),
                split_edges.iter().map(|&(a, b)| (image(a), image(b))),
            )?;
            let rotation = used.iter().map(|&s| (image(s), rot[s].iter().map(|&t| image(t)).collect())).collect();
            let d = LayeredDrawing {
                kind: DrawingKind::Split(2),
                planes: vec![PlaneDrawing { embedding: EmbeddedGraph::new(graph, rotation)? }],
                target,
            };
            return Ok(SearchOutcome::Found(d));
        }
        // next mask assignment, odometer style
        let mut v = 0;
        loop {
            if v == n {
                return Ok(SearchOutcome::None);
            }
            let limit = 1u64 << idx.adj[v].len().saturating_sub(1);
            split[v] += 2;
            if split[v] < 2 * limit {
                break;
            }
            split[v] = 0;
            v += 1;
        }
    }
}
