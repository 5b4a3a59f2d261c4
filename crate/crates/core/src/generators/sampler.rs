//! Dynamic weighted sampling over node degrees.
//!
//! Weights live in a Fenwick tree so that a degree change and a draw both
//! cost `O(log N)`. Exclusions are handled by rejection with an exact
//! fallback scan once rejections pile up.

use rand::Rng;

use super::{GenerateError, PreferenceScheme};
use crate::graph::{Graph, NodeId};

const MAX_REJECTIONS: usize = 4096;

#[derive(Debug, Clone)]
pub(crate) struct PreferentialSampler {
    scheme: PreferenceScheme,
    /// `f(k)` indexed by degree; entry 0 is 0 so isolated nodes are never drawn.
    by_degree: Vec<f64>,
    weights: Vec<f64>,
    tree: Vec<f64>,
}

impl PreferentialSampler {
    pub fn new(scheme: PreferenceScheme) -> Self {
        Self {
            scheme,
            by_degree: vec![0.0],
            weights: Vec::new(),
            tree: vec![0.0],
        }
    }

    pub fn from_graph(g: &Graph, scheme: PreferenceScheme) -> Self {
        let mut s = Self::new(scheme);
        for v in 0..g.node_count() {
            s.push(g.deg(v));
        }
        s
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    fn weight_of_degree(&mut self, k: usize) -> f64 {
        while self.by_degree.len() <= k {
            let next = self.by_degree.len() as f64;
            self.by_degree.push(self.scheme.eval(next));
        }
        self.by_degree[k]
    }

    /// Registers the next node id with the given degree.
    pub fn push(&mut self, degree: usize) {
        let w = self.weight_of_degree(degree);
        self.weights.push(0.0);
        // A new Fenwick slot i covers (i - lowbit(i), i]; rebuild it from
        // the children already present.
        let i = self.weights.len();
        let low = i & i.wrapping_neg();
        let mut sum = 0.0;
        let mut j = i - 1;
        while j > i - low {
            sum += self.tree[j];
            j -= j & j.wrapping_neg();
        }
        self.tree.push(sum);
        self.add(i - 1, w);
        self.weights[i - 1] = w;
    }

    pub fn set_degree(&mut self, v: NodeId, degree: usize) {
        let w = self.weight_of_degree(degree);
        let delta = w - self.weights[v];
        self.weights[v] = w;
        self.add(v, delta);
    }

    fn add(&mut self, v: NodeId, delta: f64) {
        let mut i = v + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    fn total(&self) -> f64 {
        let mut i = self.weights.len();
        let mut sum = 0.0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// One unconstrained draw; `None` when every weight is zero, and
    /// `Some(None)` when rounding landed on a zero-weight slot.
    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Option<NodeId>> {
        let n = self.weights.len();
        let total = self.total();
        if n == 0 || total <= 0.0 {
            return None;
        }
        let mut target = rng.random::<f64>() * total;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        // rounding can push the descent one past the last positive slot
        let v = pos.min(n - 1);
        Some((self.weights[v] > 0.0).then_some(v))
    }

    /// Draws a node with probability proportional to its weight among nodes
    /// accepted by `eligible`.
    pub fn sample<R, F>(&self, rng: &mut R, eligible: F) -> Result<NodeId, GenerateError>
    where
        R: Rng + ?Sized,
        F: Fn(NodeId) -> bool,
    {
        for _ in 0..MAX_REJECTIONS {
            match self.draw(rng) {
                Some(Some(v)) if eligible(v) => return Ok(v),
                Some(_) => continue,
                None => return Err(GenerateError::NoEligibleNode),
            }
        }
        self.sample_exact(rng, eligible)
    }

    fn sample_exact<R, F>(&self, rng: &mut R, eligible: F) -> Result<NodeId, GenerateError>
    where
        R: Rng + ?Sized,
        F: Fn(NodeId) -> bool,
    {
        let candidates: Vec<(NodeId, f64)> = self
            .weights
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w > 0.0 && eligible(v))
            .map(|(v, &w)| (v, w))
            .collect();
        let total: f64 = candidates.iter().map(|&(_, w)| w).sum();
        if candidates.is_empty() {
            return Err(GenerateError::NoEligibleNode);
        }
        let mut target = rng.random::<f64>() * total;
        for &(v, w) in &candidates {
            if target < w {
                return Ok(v);
            }
            target -= w;
        }
        Ok(candidates[candidates.len() - 1].0)
    }

    #[cfg(test)]
    pub(crate) fn weight(&self, v: NodeId) -> f64 {
        self.weights[v]
    }
}

/// Draws one node outside `exclude`, with probability proportional to
/// `f(degree)` under `scheme`.
pub fn sample_preferential<R: Rng + ?Sized>(
    g: &Graph,
    scheme: &PreferenceScheme,
    exclude: &[NodeId],
    rng: &mut R,
) -> Result<NodeId, GenerateError> {
    scheme.validate()?;
    PreferentialSampler::from_graph(g, *scheme).sample(rng, |v| !exclude.contains(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{complete, star};
    use crate::graph::LinkKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    /// Upper 0.001 quantile of chi-square with `df` degrees of freedom
    /// (Wilson-Hilferty approximation).
    fn chi2_critical_001(df: f64) -> f64 {
        let z = 3.090_232_306;
        let h = 2.0 / (9.0 * df);
        df * (1.0 - h + z * h.sqrt()).powi(3)
    }

    #[test]
    fn fenwick_matches_naive_prefix_sums() {
        let mut s = PreferentialSampler::new(PreferenceScheme::Linear);
        for d in [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5] {
            s.push(d);
        }
        s.set_degree(4, 10);
        s.set_degree(0, 1);
        assert_eq!(
            s.total(),
            1.0 + 1.0 + 4.0 + 1.0 + 10.0 + 9.0 + 2.0 + 6.0 + 5.0 + 3.0 + 5.0
        );
        assert_eq!(s.weight(4), 10.0);
    }

    #[test]
    fn only_remaining_node_is_certain() {
        let g = star(4);
        let mut r = rng();
        for _ in 0..100 {
            assert_eq!(
                sample_preferential(&g, &PreferenceScheme::Linear, &[0, 1, 2, 4], &mut r),
                Ok(3)
            );
        }
        assert_eq!(
            sample_preferential(&g, &PreferenceScheme::Linear, &[0, 1, 2, 3, 4], &mut r),
            Err(GenerateError::NoEligibleNode)
        );
    }

    #[test]
    fn star_center_drawn_half_the_time() {
        let g = star(4);
        let draws = 100_000;
        let mut r = rng();
        let hits = (0..draws)
            .filter(|_| {
                sample_preferential(&g, &PreferenceScheme::Linear, &[], &mut r).unwrap() == 0
            })
            .count() as f64;
        // exact: 4 / (4 + 1 + 1 + 1 + 1)
        let p = 4.0 / 8.0;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        assert!((hits - draws as f64 * p).abs() < 3.0 * sigma, "{hits}");
    }

    #[test]
    fn equal_degrees_are_uniform() {
        let g = complete(3);
        let scheme = PreferenceScheme::PositiveFeedback { delta: 0.021 };
        let mut counts = [0usize; 3];
        let mut r = rng();
        for _ in 0..30_000 {
            counts[sample_preferential(&g, &scheme, &[], &mut r).unwrap()] += 1;
        }
        for c in counts {
            assert!(
                (c as f64 - 10_000.0).abs()
                    < 3.0 * (30_000.0f64 * (1.0 / 3.0) * (2.0 / 3.0)).sqrt()
            );
        }
    }

    #[test]
    fn chi_square_against_exact_weights() {
        // fixed 20-node graph with a spread of degrees
        let mut g = crate::graph::Graph::with_nodes(20);
        for v in 1..20 {
            g.add_edge(0, v, LinkKind::Seed).unwrap();
        }
        for v in 2..20 {
            g.add_edge(1, v, LinkKind::Seed).unwrap();
        }
        for v in (4..20).step_by(2) {
            g.add_edge(2, v, LinkKind::Seed).unwrap();
        }
        for v in (9..20).step_by(3) {
            g.add_edge(3, v, LinkKind::Seed).unwrap();
        }
        let scheme = PreferenceScheme::PositiveFeedback { delta: 0.021 };
        let exclude = [5usize, 11];

        // oracle: exact weights straight from the degree function
        let weights: Vec<f64> = (0..20)
            .map(|v| {
                if exclude.contains(&v) {
                    0.0
                } else {
                    let k = g.degree(v).unwrap() as f64;
                    k.powf(1.0 + 0.021 * k.ln())
                }
            })
            .collect();
        let total: f64 = weights.iter().sum();

        let draws = 100_000;
        let mut counts = [0usize; 20];
        let mut r = rng();
        for _ in 0..draws {
            counts[sample_preferential(&g, &scheme, &exclude, &mut r).unwrap()] += 1;
        }
        let mut chi2 = 0.0;
        let mut cells = 0;
        for v in 0..20 {
            let expected = draws as f64 * weights[v] / total;
            if expected == 0.0 {
                assert_eq!(counts[v], 0);
                continue;
            }
            chi2 += (counts[v] as f64 - expected).powi(2) / expected;
            cells += 1;
        }
        let crit = chi2_critical_001((cells - 1) as f64);
        assert!(chi2 < crit, "chi2 {chi2} >= {crit}");
    }

    #[test]
    fn exact_fallback_agrees_with_rejection() {
        // a predicate that rejects almost all the mass forces the fallback
        let g = star(50);
        let s = PreferentialSampler::from_graph(&g, PreferenceScheme::Linear);
        let mut r = rng();
        for _ in 0..200 {
            let v = s.sample(&mut r, |v| v == 17 || v == 33).unwrap();
            assert!(v == 17 || v == 33);
        }
        let mut r = rng();
        assert_eq!(s.sample_exact(&mut r, |v| v == 0), Ok(0));
    }
}
