use std::collections::BTreeMap;

use serde::Serialize;

use super::fit::fit_power_law;
use crate::graph::Graph;

/// Degree range used for the degree-distribution exponent.
pub const GAMMA_FIT_RANGE: (f64, f64) = (2.0, 100.0);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeDistribution {
    /// Number of nodes with each populated degree.
    pub counts: BTreeMap<usize, usize>,
    pub node_count: usize,
    pub max_degree: usize,
    /// Exponent of `P(k)` over `2 ≤ k ≤ 100`, read off the cumulative
    /// distribution: one less than the fitted slope of `P(≥k)`.
    pub gamma: Option<f64>,
    /// Exponent fitted directly on the raw `P(k)` points over the same range.
    /// Sparse tail counts bias it towards shallower values.
    pub gamma_density: Option<f64>,
}

impl DegreeDistribution {
    /// Fraction of nodes with degree `k`.
    pub fn p(&self, k: usize) -> f64 {
        self.counts
            .get(&k)
            .map_or(0.0, |&c| c as f64 / self.node_count as f64)
    }

    /// `(k, P(k))` for every populated degree.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.counts
            .iter()
            .map(|(&k, &c)| (k as f64, c as f64 / self.node_count as f64))
            .collect()
    }

    /// `(k, P(≥k))` for every populated degree.
    pub fn ccd_points(&self) -> Vec<(f64, f64)> {
        let n = self.node_count as f64;
        let mut remaining = self.node_count;
        self.counts
            .iter()
            .map(|(&k, &c)| {
                let point = (k as f64, remaining as f64 / n);
                remaining -= c;
                point
            })
            .collect()
    }
}

/// Empirical `P(k)` with its fitted exponent. Isolated nodes are counted in
/// `P(0)` but never enter the fit.
pub fn degree_distribution(g: &Graph) -> DegreeDistribution {
    let mut counts = BTreeMap::new();
    for k in g.degrees() {
        *counts.entry(k).or_insert(0) += 1;
    }
    let dist = DegreeDistribution {
        max_degree: counts.keys().next_back().copied().unwrap_or(0),
        node_count: g.node_count(),
        counts,
        gamma: None,
        gamma_density: None,
    };
    let (lo, hi) = GAMMA_FIT_RANGE;
    DegreeDistribution {
        gamma: fit_power_law(&dist.ccd_points(), lo, hi).map(|slope| slope - 1.0),
        gamma_density: fit_power_law(&dist.points(), lo, hi),
        ..dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{complete, star};
    use crate::graph::LinkKind;

    #[test]
    fn complete_graph() {
        let d = degree_distribution(&complete(4));
        assert_eq!(d.p(3), 1.0);
        assert_eq!(d.max_degree, 3);
        assert_eq!(d.gamma, None);
        assert_eq!(d.gamma_density, None);
        assert_eq!(d.ccd_points(), vec![(3.0, 1.0)]);
    }

    #[test]
    fn star_fractions() {
        let d = degree_distribution(&star(4));
        assert_eq!(d.p(1), 0.8);
        assert_eq!(d.p(4), 0.2);
        assert_eq!(d.p(2), 0.0);
        let total: f64 = d.points().iter().map(|p| p.1).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn planted_exponent_is_recovered() {
        // Build a graph of disjoint stars whose centers realise n(k) ∝ k^-2.5
        // exactly (up to rounding to whole nodes); leaves add to P(1) only,
        // which lies outside the fit range.
        let scale = 3.0e5;
        let mut g = Graph::new();
        let mut want = Vec::new();
        for k in 2..=100usize {
            let n_k = (scale * (k as f64).powf(-2.5)).round() as usize;
            want.push((k as f64, n_k as f64));
            for _ in 0..n_k {
                let c = g.add_node();
                for _ in 0..k {
                    let leaf = g.add_node();
                    g.add_edge(c, leaf, LinkKind::Seed).unwrap();
                }
            }
        }
        let d = degree_distribution(&g);
        for &(k, n_k) in &want {
            assert_eq!(d.counts[&(k as usize)] as f64, n_k);
        }
        // rounding n(k) to integers perturbs the slope slightly
        let gamma = d.gamma_density.unwrap();
        assert!((gamma + 2.5).abs() < 0.01, "{gamma}");
    }

    #[test]
    fn planted_cumulative_exponent_is_recovered() {
        // Rounded tail counts T(k) = round(C k^-1.5), n(k) = T(k) - T(k+1) for
        // 2 ≤ k ≤ 100 and all of T(101) on degree 101, so that P(≥k) ∝ k^-1.5
        // up to rounding. The rest of the nodes are degree-1 leaves.
        let tail = |k: usize| (2.0e5 * (k as f64).powf(-1.5)).round() as usize;
        let mut g = Graph::new();
        for k in 2..=101 {
            let n_k = if k == 101 {
                tail(k)
            } else {
                tail(k) - tail(k + 1)
            };
            for _ in 0..n_k {
                let c = g.add_node();
                for _ in 0..k {
                    let leaf = g.add_node();
                    g.add_edge(c, leaf, LinkKind::Seed).unwrap();
                }
            }
        }
        let d = degree_distribution(&g);
        let gamma = d.gamma.unwrap();
        assert!((gamma + 2.5).abs() < 0.01, "{gamma}");
    }

    #[test]
    fn ccd_by_hand() {
        let d = degree_distribution(&star(4));
        assert_eq!(d.ccd_points(), vec![(1.0, 1.0), (4.0, 0.2)]);
    }
}
