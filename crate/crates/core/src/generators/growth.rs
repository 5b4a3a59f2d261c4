use rand::Rng;

use super::sampler::PreferentialSampler;
use super::{GenerateError, PreferenceScheme};
use crate::graph::{Graph, LinkKind, NodeId};

/// Which interactive-growth branch a step took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InteractiveBranch {
    /// New node attached to one host; host gains two internal links.
    SingleHost { host: NodeId },
    /// New node attached to two hosts; one of them gains an internal link.
    DualHost { hosts: [NodeId; 2], linked: NodeId },
}

/// A graph under growth together with its preferential sampler.
///
/// Degree changes are pushed to the sampler as soon as each link lands, so
/// later draws within the same step already see them. A node created by a
/// step only becomes selectable once that step is complete.
#[derive(Debug, Clone)]
pub struct Growth {
    graph: Graph,
    sampler: PreferentialSampler,
}

impl Growth {
    pub fn new(graph: Graph, scheme: PreferenceScheme) -> Result<Self, GenerateError> {
        scheme.validate()?;
        let sampler = PreferentialSampler::from_graph(&graph, scheme);
        Ok(Self { graph, sampler })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    fn link(&mut self, u: NodeId, v: NodeId, kind: LinkKind) -> Result<(), GenerateError> {
        self.graph.add_edge(u, v, kind)?;
        for w in [u, v] {
            if w < self.sampler.len() {
                self.sampler.set_degree(w, self.graph.deg(w));
            }
        }
        Ok(())
    }

    fn finish_step(&mut self, new: NodeId) {
        debug_assert_eq!(new, self.sampler.len());
        self.sampler.push(self.graph.deg(new));
    }

    /// Adds one node linked to `m` distinct old nodes chosen preferentially.
    pub fn step_new_node_only<R: Rng + ?Sized>(
        &mut self,
        m: usize,
        rng: &mut R,
    ) -> Result<NodeId, GenerateError> {
        if m > self.graph.node_count() {
            return Err(GenerateError::InvalidConfig(format!(
                "cannot attach to {m} distinct nodes in a graph of {}",
                self.graph.node_count()
            )));
        }
        let new = self.graph.add_node();
        for _ in 0..m {
            let target = {
                let g = &self.graph;
                self.sampler.sample(rng, |v| !g.adjacent(new, v))?
            };
            self.link(new, target, LinkKind::External)?;
        }
        self.finish_step(new);
        Ok(new)
    }

    /// One interactive-growth step: with probability `p` the single-host
    /// branch, otherwise the dual-host branch. Always adds one node and
    /// three links.
    pub fn step_interactive<R: Rng + ?Sized>(
        &mut self,
        p: f64,
        rng: &mut R,
    ) -> Result<InteractiveBranch, GenerateError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenerateError::InvalidConfig(format!(
                "p must lie in [0, 1], got {p}"
            )));
        }
        let single = rng.random_bool(p);
        let new = self.graph.add_node();
        // Hosts must keep at least two old non-neighbors so that their
        // internal links can always be placed.
        let old = new;
        let roomy = |g: &Graph, v: NodeId| (old - 1).saturating_sub(g.deg(v)) >= 2;

        let branch = if single {
            let host = {
                let g = &self.graph;
                self.sampler.sample(rng, |v| roomy(g, v))?
            };
            self.link(new, host, LinkKind::External)?;
            for _ in 0..2 {
                // new is adjacent to host, so the adjacency test excludes it too
                let peer = {
                    let g = &self.graph;
                    self.sampler
                        .sample(rng, |v| v != host && !g.adjacent(host, v))?
                };
                self.link(host, peer, LinkKind::Internal)?;
            }
            InteractiveBranch::SingleHost { host }
        } else {
            let first = {
                let g = &self.graph;
                self.sampler.sample(rng, |v| roomy(g, v))?
            };
            self.link(new, first, LinkKind::External)?;
            let second = {
                let g = &self.graph;
                self.sampler.sample(rng, |v| v != first && roomy(g, v))?
            };
            self.link(new, second, LinkKind::External)?;
            let linked = if rng.random_bool(0.5) { first } else { second };
            let peer = {
                let g = &self.graph;
                self.sampler
                    .sample(rng, |v| v != first && v != second && !g.adjacent(linked, v))?
            };
            self.link(linked, peer, LinkKind::Internal)?;
            InteractiveBranch::DualHost {
                hosts: [first, second],
                linked,
            }
        };
        self.finish_step(new);
        Ok(branch)
    }
}

/// Long-run ratio of internal to external links under interactive growth:
/// `(2p + (1 - p)) / (p + 2(1 - p)) = (1 + p) / (2 - p)`.
pub fn expected_link_ratio(p: f64) -> f64 {
    (1.0 + p) / (2.0 - p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::seed_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn grown(scheme: PreferenceScheme, seed: u64) -> (Growth, ChaCha8Rng) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = seed_graph(10, 30, &mut rng).unwrap();
        (Growth::new(g, scheme).unwrap(), rng)
    }

    #[test]
    fn new_node_only_adds_m_links() {
        let (mut growth, mut rng) = grown(PreferenceScheme::Linear, 1);
        let v = growth.step_new_node_only(3, &mut rng).unwrap();
        let g = growth.graph();
        assert_eq!((v, g.node_count(), g.link_count()), (10, 11, 33));
        assert_eq!(g.degree(v), Ok(3));
        assert_eq!(g.external_links(), 3);

        for _ in 0..500 {
            let v = growth.step_new_node_only(3, &mut rng).unwrap();
            assert_eq!(growth.graph().degree(v), Ok(3));
        }
        assert_eq!(growth.graph().link_count(), 30 + 3 * 501);
    }

    #[test]
    fn single_host_branch_gives_degree_leap() {
        let (mut growth, mut rng) = grown(PreferenceScheme::PositiveFeedback { delta: 0.021 }, 2);
        for _ in 0..200 {
            let before = growth.graph().degrees();
            let branch = growth.step_interactive(1.0, &mut rng).unwrap();
            let g = growth.graph();
            let InteractiveBranch::SingleHost { host } = branch else {
                panic!("p = 1 must take the single-host branch");
            };
            assert_eq!(g.deg(host), before[host] + 3);
            assert_eq!(g.deg(g.node_count() - 1), 1);
        }
    }

    #[test]
    fn dual_host_branch_shape() {
        let (mut growth, mut rng) = grown(PreferenceScheme::Linear, 3);
        for _ in 0..200 {
            let before = growth.graph().degrees();
            let links = growth.graph().link_count();
            let branch = growth.step_interactive(0.0, &mut rng).unwrap();
            let g = growth.graph();
            let InteractiveBranch::DualHost { hosts, linked } = branch else {
                panic!("p = 0 must take the dual-host branch");
            };
            assert_ne!(hosts[0], hosts[1]);
            assert!(hosts.contains(&linked));
            assert_eq!(g.deg(linked), before[linked] + 2);
            assert_eq!(g.deg(g.node_count() - 1), 2);
            assert_eq!(g.link_count(), links + 3);
        }
    }

    #[test]
    fn link_ratio_formula() {
        assert!((expected_link_ratio(0.4) - 0.875).abs() < 1e-15);
        assert_eq!(expected_link_ratio(0.0), 0.5);
        assert_eq!(expected_link_ratio(1.0), 2.0);
    }

    #[test]
    fn dense_graph_runs_out_of_peers() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = seed_graph(5, 10, &mut rng).unwrap();
        let mut growth = Growth::new(g, PreferenceScheme::Linear).unwrap();
        assert_eq!(
            growth.step_interactive(1.0, &mut rng),
            Err(GenerateError::NoEligibleNode)
        );
    }

    #[test]
    fn rejects_bad_probability() {
        let (mut growth, mut rng) = grown(PreferenceScheme::Linear, 5);
        assert!(growth.step_interactive(1.5, &mut rng).is_err());
        assert!(growth.step_new_node_only(11, &mut rng).is_err());
    }
}
