use std::collections::BTreeMap;

use crate::decompositions::{Budget, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{show, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperColoring<V: VertexId> {
    pub colors: BTreeMap<V, usize>,
    pub c: usize,
}

impl<V: VertexId> ProperColoring<V> {
    pub fn color(&self, v: &V) -> Option<usize> {
        self.colors.get(v).copied()
    }

    pub fn validate(&self, g: &Graph<V>) -> Result<()> {
        for v in g.vertices() {
            match self.colors.get(v) {
                Some(&c) if c < self.c => {}
                _ => return Err(Error::InvalidCertificate(format!("vertex {} has no valid color", show(v)))),
            }
        }
        if self.colors.len() != g.vertex_count() {
            return Err(Error::InvalidCertificate("coloring names vertices outside the graph".into()));
        }
        for (u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(Error::InvalidCertificate(format!("edge {}-{} is monochromatic", show(u), show(v))));
            }
        }
        Ok(())
    }
}

/// Proper coloring with at most `c` colors by backtracking. Vertices are
/// taken in BFS order from the smallest id of each component; a new color
/// is only opened after all lower ones are in use.
pub fn color<V: VertexId>(g: &Graph<V>, c: usize, budget: Budget) -> SearchOutcome<ProperColoring<V>> {
    let idx = g.indexed();
    let n = idx.ids.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &idx.adj[v] {
                if !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut col = vec![usize::MAX; n];
    let mut next = vec![0usize; n];
    let mut used = vec![0usize; n + 1];
    let mut meter = budget.meter();
    let mut depth = 0;
    let mut found = None;
    loop {
        if depth == n {
            found = Some(col.clone());
            break;
        }
        let v = order[depth];
        let open = used[depth].saturating_add(1).min(c);
        let mut chosen = None;
        while next[depth] < open {
            let k = next[depth];
            next[depth] += 1;
            if idx.adj[v].iter().all(|&w| col[w] != k) {
                chosen = Some(k);
                break;
            }
        }
        match chosen {
            Some(k) => {
                if !meter.step() {
                    break;
                }
                col[v] = k;
                used[depth + 1] = used[depth].max(k + 1);
                depth += 1;
            }
            None => {
                next[depth] = 0;
                col[v] = usize::MAX;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                col[order[depth]] = usize::MAX;
            }
        }
    }
    meter.outcome(found.map(|col| ProperColoring {
        colors: idx.ids.iter().cloned().zip(col).collect(),
        c,
    }))
}

pub fn three_color<V: VertexId>(g: &Graph<V>, budget: Budget) -> SearchOutcome<ProperColoring<V>> {
    color(g, 3, budget)
}
