use rayon::prelude::*;
use serde::Serialize;

use super::MetricsError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathStats {
    /// `pairs_at[l]` = unordered node pairs at hop distance `l`.
    pub pairs_at: Vec<u64>,
    /// Mean shortest-path length over all unordered pairs.
    pub ell_star: f64,
}

impl PathStats {
    pub fn pair_count(&self) -> u64 {
        self.pairs_at.iter().sum()
    }

    pub fn diameter(&self) -> usize {
        self.pairs_at.len().saturating_sub(1)
    }

    /// `(l, P(≥ l))` for `l = 1..=diameter`.
    pub fn ccd(&self) -> Vec<(usize, f64)> {
        let total = self.pair_count() as f64;
        let mut remaining = self.pair_count();
        let mut out = Vec::with_capacity(self.diameter());
        for (l, &count) in self.pairs_at.iter().enumerate().skip(1) {
            out.push((l, remaining as f64 / total));
            remaining -= count;
        }
        out
    }
}

/// Compressed adjacency for traversal-heavy work.
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(g: &Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.node_count() + 1);
        let mut targets = Vec::with_capacity(2 * g.link_count());
        offsets.push(0);
        for v in 0..g.node_count() {
            targets.extend(g.nbrs(v).iter().map(|&u| u as u32));
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    #[inline]
    fn nbrs(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

struct Bfs {
    dist: Vec<u32>,
    queue: Vec<u32>,
    hist: Vec<u64>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![u32::MAX; n],
            queue: Vec::with_capacity(n),
            hist: Vec::new(),
        }
    }

    /// Adds distances from `source` to every node with a larger id, so each
    /// unordered pair is counted once. Returns the number of nodes reached.
    fn run(&mut self, csr: &Csr, source: usize) -> usize {
        self.dist.fill(u32::MAX);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let d = self.dist[u] + 1;
            for &v in csr.nbrs(u) {
                let v = v as usize;
                if self.dist[v] == u32::MAX {
                    self.dist[v] = d;
                    self.queue.push(v as u32);
                    if v > source {
                        let d = d as usize;
                        if self.hist.len() <= d {
                            self.hist.resize(d + 1, 0);
                        }
                        self.hist[d] += 1;
                    }
                }
            }
        }
        self.queue.len()
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Breadth-first search from every node. Sources run in parallel and their
/// integer histograms are summed, so the result does not depend on
/// scheduling.
pub fn path_stats(g: &Graph) -> Result<PathStats, MetricsError> {
    let n = g.node_count();
    if n < 2 {
        return Err(MetricsError::TooSmall { needed: 2, got: n });
    }
    if let Some(v) = g.unreachable_from(0) {
        return Err(MetricsError::Disconnected(0, v));
    }
    let csr = Csr::new(g);
    let pairs_at = (0..n)
        .into_par_iter()
        .fold(
            || Bfs::new(n),
            |mut bfs, s| {
                bfs.run(&csr, s);
                bfs
            },
        )
        .map(|bfs| bfs.hist)
        .reduce(Vec::new, merge);

    let pairs: u64 = pairs_at.iter().sum();
    let hops: u64 = pairs_at
        .iter()
        .enumerate()
        .map(|(l, &c)| l as u64 * c)
        .sum();
    Ok(PathStats {
        ell_star: hops as f64 / pairs as f64,
        pairs_at,
    })
}
