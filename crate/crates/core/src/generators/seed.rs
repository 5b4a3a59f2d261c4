use rand::seq::index;
use rand::Rng;

use super::GenerateError;
use crate::graph::{Graph, LinkKind};

const MAX_SEED_DRAWS: usize = 100_000;

/// Uniformly random connected simple graph with `nodes` nodes and exactly
/// `links` links, obtained by rejecting disconnected draws.
pub fn seed_graph<R: Rng + ?Sized>(
    nodes: usize,
    links: usize,
    rng: &mut R,
) -> Result<Graph, GenerateError> {
    check_seed_shape(nodes, links)?;
    let pairs: Vec<(usize, usize)> = (0..nodes)
        .flat_map(|u| (u + 1..nodes).map(move |v| (u, v)))
        .collect();

    for _ in 0..MAX_SEED_DRAWS {
        let mut chosen = index::sample(rng, pairs.len(), links).into_vec();
        chosen.sort_unstable();
        let mut g = Graph::with_nodes(nodes);
        for i in chosen {
            let (u, v) = pairs[i];
            g.add_edge(u, v, LinkKind::Seed)?;
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenerateError::SeedRejected(MAX_SEED_DRAWS))
}

pub(crate) fn check_seed_shape(nodes: usize, links: usize) -> Result<(), GenerateError> {
    if nodes == 0 {
        return Err(GenerateError::InvalidConfig(
            "seed graph needs at least one node".into(),
        ));
    }
    let max = nodes * (nodes - 1) / 2;
    if links < nodes - 1 || links > max {
        return Err(GenerateError::InvalidConfig(format!(
            "a connected simple graph on {nodes} nodes has between {} and {max} links, got {links}",
            nodes - 1
        )));
    }
    Ok(())
}
