use std::collections::BTreeSet;

use crate::decompositions::{Budget, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{show, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestPartition<V> {
    pub forests: Vec<Vec<(V, V)>>,
}

/// Union-find with undo, no path compression.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push(Some((a, b)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((a, b))) = self.log.pop() {
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

impl<V: VertexId> ForestPartition<V> {
    pub fn validate(&self, g: &Graph<V>) -> Result<()> {
        let idx = g.indexed();
        let mut seen = BTreeSet::new();
        for (p, forest) in self.forests.iter().enumerate() {
            let mut dsu = Dsu::new(idx.ids.len());
            for (u, v) in forest {
                let (Some(a), Some(b)) = (idx.index_of(u), idx.index_of(v)) else {
                    return Err(Error::UnknownVertex(show(u)));
                };
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidCertificate(format!("{}-{} is not an edge", show(u), show(v))));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(Error::InvalidCertificate(format!("edge {}-{} repeated", show(u), show(v))));
                }
                if !dsu.union(a, b) {
                    return Err(Error::InvalidCertificate(format!("forest {p} has a cycle")));
                }
            }
        }
        if seen.len() != g.edge_count() {
            return Err(Error::InvalidCertificate("forests do not cover every edge".into()));
        }
        Ok(())
    }
}

fn degeneracy_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Partition of the edges into at most `a` forests. Tries a greedy pass in
/// degeneracy order first, then exact backtracking.
pub fn forest_partition<V: VertexId>(g: &Graph<V>, a: usize, budget: Budget) -> SearchOutcome<ForestPartition<V>> {
    let idx = g.indexed();
    let n = idx.ids.len();
    let m = g.edge_count();
    if m == 0 {
        return SearchOutcome::Found(ForestPartition { forests: vec![Vec::new(); a.max(1)] });
    }
    if a == 0 || m > a * (n - 1) {
        return SearchOutcome::None;
    }
    // edges ordered by their later endpoint in degeneracy order
    let order = degeneracy_order(&idx.adj);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut edges = idx.edge_list();
    edges.sort_by_key(|&(u, v)| (rank[u].max(rank[v]), rank[u].min(rank[v])));

    let build = |assign: &[usize]| ForestPartition {
        forests: (0..a)
            .map(|p| {
                edges
                    .iter()
                    .zip(assign)
                    .filter(|(_, &q)| q == p)
                    .map(|(&(u, v), _)| (idx.ids[u].clone(), idx.ids[v].clone()))
                    .collect()
            })
            .collect(),
    };

    let mut dsus: Vec<Dsu> = (0..a).map(|_| Dsu::new(n)).collect();
    let mut assign = Vec::with_capacity(m);
    for &(u, v) in &edges {
        match (0..a).find(|&p| dsus[p].union(u, v)) {
            Some(p) => assign.push(p),
            None => break,
        }
    }
    if assign.len() == m {
        return SearchOutcome::Found(build(&assign));
    }

    let mut dsus: Vec<Dsu> = (0..a).map(|_| Dsu::new(n)).collect();
    let mut assign = vec![0usize; m];
    let mut next = vec![0usize; m];
    let mut used = vec![0usize; m + 1];
    let mut meter = budget.meter();
    let mut depth = 0;
    let mut found = false;
    loop {
        if depth == m {
            found = true;
            break;
        }
        let (u, v) = edges[depth];
        let open = (used[depth] + 1).min(a);
        let mut placed = false;
        while next[depth] < open {
            let p = next[depth];
            next[depth] += 1;
            if dsus[p].union(u, v) {
                assign[depth] = p;
                placed = true;
                break;
            }
        }
        if placed {
            if !meter.step() {
                break;
            }
            used[depth + 1] = used[depth].max(assign[depth] + 1);
            depth += 1;
        } else {
            next[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            dsus[assign[depth]].undo();
        }
    }
    meter.outcome(found.then(|| build(&assign)))
}
