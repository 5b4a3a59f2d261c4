use std::collections::BTreeMap;

use super::MetricsError;
use crate::graph::Graph;

/// Degree assortativity coefficient over the `L` links, one `(j, k)`
/// endpoint-degree pair per link:
///
/// ```text
///        L⁻¹ Σ j k − [L⁻¹ Σ ½(j + k)]²
/// α = ─────────────────────────────────
///      L⁻¹ Σ ½(j² + k²) − [L⁻¹ Σ ½(j + k)]²
/// ```
///
/// Evaluated in exact integer arithmetic as
/// `(4L·Σjk − S²) / (2L·Σ(j² + k²) − S²)` with `S = Σ(j + k)`, so the
/// degenerate case (every endpoint degree equal) is detected exactly and
/// reported as `None`.
pub fn assortativity(g: &Graph) -> Result<Option<f64>, MetricsError> {
    let links = g.link_count() as i128;
    if links == 0 {
        return Err(MetricsError::NoLinks);
    }
    let (mut sum, mut sum_sq, mut sum_prod) = (0i128, 0i128, 0i128);
    for (u, v) in g.edges() {
        let (j, k) = (g.deg(u) as i128, g.deg(v) as i128);
        sum += j + k;
        sum_sq += j * j + k * k;
        sum_prod += j * k;
    }
    let numerator = 4 * links * sum_prod - sum * sum;
    let denominator = 2 * links * sum_sq - sum * sum;
    if denominator == 0 {
        return Ok(None);
    }
    Ok(Some(numerator as f64 / denominator as f64))
}

/// Average nearest-neighbor degree `k_nn(k)`: for each degree class, the
/// mean over its nodes of the mean degree of their neighbors.
pub fn knn_by_degree(g: &Graph) -> Result<BTreeMap<usize, f64>, MetricsError> {
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for v in 0..g.node_count() {
        let k = g.deg(v);
        if k == 0 {
            return Err(MetricsError::IsolatedNode(v));
        }
        let nbr_sum: usize = g.nbrs(v).iter().map(|&u| g.deg(u)).sum();
        let entry = acc.entry(k).or_insert((0.0, 0));
        entry.0 += nbr_sum as f64 / k as f64;
        entry.1 += 1;
    }
    Ok(acc
        .into_iter()
        .map(|(k, (s, c))| (k, s / c as f64))
        .collect())
}
