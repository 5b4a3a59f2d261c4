use serde::Serialize;

use super::fit::fit_power_law;
use crate::graph::{Graph, NodeId};

/// Normalised-rank range used for the rich-club exponent.
pub const THETA_FIT_RANGE: (f64, f64) = (0.1, 1.0);

/// Rich-club connectivity `φ(r/N)` for every club size `r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RichClubCurve {
    /// Node ids by non-increasing degree, ties by ascending id.
    pub ranked: Vec<NodeId>,
    /// `club_links[r]` = links among the `r` best-ranked nodes.
    pub club_links: Vec<usize>,
    /// Power-law exponent of `φ` against `r/N` over `0.1 ≤ r/N ≤ 1`.
    pub theta: Option<f64>,
    /// Largest `n` such that the top `n` nodes form a clique.
    pub top_clique: usize,
}

impl RichClubCurve {
    pub fn node_count(&self) -> usize {
        self.ranked.len()
    }

    /// `φ` of the top-`r` club; undefined below two members.
    pub fn phi(&self, r: usize) -> Option<f64> {
        if r < 2 || r > self.node_count() {
            return None;
        }
        Some(self.club_links[r] as f64 / (r * (r - 1) / 2) as f64)
    }

    /// `φ` at the club size closest to `fraction · N`, clamped to `2..=N`.
    pub fn phi_at_fraction(&self, fraction: f64) -> Option<f64> {
        let n = self.node_count();
        if n < 2 {
            return None;
        }
        let r = (fraction * n as f64).round().clamp(2.0, n as f64) as usize;
        self.phi(r)
    }

    /// `(r/N, φ(r/N))` for `r = 2..=N`.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let n = self.node_count() as f64;
        (2..=self.node_count())
            .map(|r| (r as f64 / n, self.phi(r).expect("r within range")))
            .collect()
    }
}

/// Nodes ordered by non-increasing degree, ties by ascending id.
pub fn degree_ranking(g: &Graph) -> Vec<NodeId> {
    let mut ranked: Vec<NodeId> = (0..g.node_count()).collect();
    ranked.sort_by(|&a, &b| g.deg(b).cmp(&g.deg(a)).then(a.cmp(&b)));
    ranked
}

pub fn rich_club(g: &Graph) -> RichClubCurve {
    let n = g.node_count();
    let ranked = degree_ranking(g);
    let mut rank = vec![0usize; n];
    for (r, &v) in ranked.iter().enumerate() {
        rank[v] = r;
    }

    // Adding the node at rank r brings in its links to better-ranked nodes.
    let mut club_links = vec![0usize; n + 1];
    let mut top_clique = n.min(1);
    let mut still_clique = true;
    for (r, &v) in ranked.iter().enumerate() {
        let to_club = g.nbrs(v).iter().filter(|&&u| rank[u] < r).count();
        club_links[r + 1] = club_links[r] + to_club;
        if still_clique && r > 0 {
            if to_club == r {
                top_clique = r + 1;
            } else {
                still_clique = false;
            }
        }
    }

    let mut curve = RichClubCurve {
        ranked,
        club_links,
        theta: None,
        top_clique,
    };
    curve.theta = fit_power_law(&curve.points(), THETA_FIT_RANGE.0, THETA_FIT_RANGE.1);
    curve
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{complete, path, star};
    use crate::graph::LinkKind;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_graph_is_one_clique() {
        let c = rich_club(&complete(5));
        for r in 2..=5 {
            assert_eq!(c.phi(r), Some(1.0));
        }
        assert_eq!(c.top_clique, 5);
        assert_eq!(c.phi(1), None);
    }

    #[test]
    fn star_by_hand() {
        // ranks: center 0, then leaves 1..4 by id
        let c = rich_club(&star(4));
        assert_eq!(c.ranked, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.top_clique, 2);
        assert_eq!(c.phi(2), Some(1.0));
        assert_eq!(c.phi(3), Some(2.0 / 3.0));
        assert_eq!(c.phi(5), Some(4.0 / 10.0));
    }

    #[test]
    fn full_club_density() {
        let g = path(6);
        let c = rich_club(&g);
        assert_eq!(c.phi(6), Some(2.0 * 5.0 / 30.0));
        // ties broken by id: 1, 2, 3, 4 (degree 2), then 0, 5
        assert_eq!(c.ranked, vec![1, 2, 3, 4, 0, 5]);
        assert_eq!(c.top_clique, 2);
    }

    #[test]
    fn fraction_lookup_clamps() {
        let c = rich_club(&complete(10));
        assert_eq!(c.phi_at_fraction(0.01), Some(1.0));
        assert_eq!(c.phi_at_fraction(1.0), Some(1.0));
    }

    #[test]
    fn incremental_matches_recount() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut g = Graph::with_nodes(200);
        for _ in 0..900 {
            let (u, v) = (rng.random_range(0..200), rng.random_range(0..200));
            let _ = g.add_edge(u, v, LinkKind::Seed);
        }
        let c = rich_club(&g);
        for _ in 0..50 {
            let r = rng.random_range(2..=200);
            let club = &c.ranked[..r];
            let direct = g
                .edges()
                .filter(|&(u, v)| club.contains(&u) && club.contains(&v))
                .count();
            assert_eq!(c.club_links[r], direct);
        }
        // every prefix up to the clique size is complete, the next is not
        for n in 2..=c.top_clique {
            assert_eq!(c.club_links[n], n * (n - 1) / 2);
        }
        if c.top_clique < 200 {
            let n = c.top_clique + 1;
            assert!(c.club_links[n] < n * (n - 1) / 2);
        }
    }
}
