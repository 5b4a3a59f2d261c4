use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleStats {
    /// Triangle coefficient `k_t` per node: links among its neighbors.
    pub kt: Vec<usize>,
    /// Mean `k_t` of the nodes in each degree class.
    pub kt_by_degree: BTreeMap<usize, f64>,
    /// Clustering `k_t / (k(k−1)/2)`; `None` for degree below two.
    pub clustering: Vec<Option<f64>>,
}

impl TriangleStats {
    pub fn triangle_count(&self) -> usize {
        self.kt.iter().sum::<usize>() / 3
    }

    /// `(k_t, P(≥ k_t))` at every observed `k_t` value.
    pub fn ccd(&self) -> Vec<(usize, f64)> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in &self.kt {
            *counts.entry(t).or_insert(0) += 1;
        }
        let n = self.kt.len() as f64;
        let mut remaining = self.kt.len();
        counts
            .into_iter()
            .map(|(t, c)| {
                let point = (t, remaining as f64 / n);
                remaining -= c;
                point
            })
            .collect()
    }

    /// Mean clustering over nodes with degree at least two.
    pub fn mean_clustering(&self) -> Option<f64> {
        let defined: Vec<f64> = self.clustering.iter().flatten().copied().collect();
        (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64)
    }
}

/// Per-node triangle counts by degree-ordered edge orientation: each edge
/// points from the lower- to the higher-ranked endpoint (degree, then id),
/// and every triangle is found exactly once from its lowest-ranked corner.
pub fn triangle_stats(g: &Graph) -> TriangleStats {
    let n = g.node_count();
    let before = |a: usize, b: usize| (g.deg(a), a) < (g.deg(b), b);
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            g.nbrs(u)
                .iter()
                .copied()
                .filter(|&v| before(u, v))
                .collect()
        })
        .collect();

    let mut kt = vec![0usize; n];
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for &v in &forward[u] {
            mark[v] = u;
        }
        for &v in &forward[u] {
            for &w in &forward[v] {
                if mark[w] == u {
                    kt[u] += 1;
                    kt[v] += 1;
                    kt[w] += 1;
                }
            }
        }
    }

    let mut by_degree: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut clustering = Vec::with_capacity(n);
    for v in 0..n {
        let k = g.deg(v);
        let e = by_degree.entry(k).or_insert((0, 0));
        e.0 += kt[v];
        e.1 += 1;
        clustering.push((k >= 2).then(|| kt[v] as f64 / (k * (k - 1) / 2) as f64));
    }
    TriangleStats {
        kt,
        kt_by_degree: by_degree
            .into_iter()
            .map(|(k, (s, c))| (k, s as f64 / c as f64))
            .collect(),
        clustering,
    }
}
