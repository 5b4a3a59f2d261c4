//! Network growth models: the random seed graph, preference schemes and
//! the two growth mechanisms (new-node-only and interactive).

mod growth;
mod model;
mod preference;
mod sampler;
mod seed;

use thiserror::Error;

use crate::graph::GraphError;

pub use growth::{expected_link_ratio, Growth, InteractiveBranch};
pub use model::{generate, generate_with, GrowthMechanism, ModelConfig, Preset, IG_P, PFP_DELTA};
pub use preference::{preference_ratio, preference_weight, PreferenceScheme};
pub use sampler::sample_preferential;
pub use seed::seed_graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("preference weight is undefined for degree 0")]
    ZeroDegree,
    #[error("invalid preference scheme {0:?}")]
    InvalidScheme(PreferenceScheme),
    #[error("degree multiplier must be >= 1, got {0}")]
    InvalidMultiplier(f64),
    #[error("invalid model configuration: {0}")]
    InvalidConfig(String),
    #[error("no eligible node left to sample")]
    NoEligibleNode,
    #[error("no connected seed graph found after {0} draws")]
    SeedRejected(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
