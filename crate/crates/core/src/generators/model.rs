use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::growth::Growth;
use super::seed::{check_seed_shape, seed_graph};
use super::{GenerateError, PreferenceScheme};
use crate::graph::Graph;

/// Feedback parameter of the tuned positive-feedback preference.
pub const PFP_DELTA: f64 = 0.021;
/// Single-host probability of the tuned interactive growth.
pub const IG_P: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GrowthMechanism {
    /// Each new node links to `m` distinct old nodes.
    NewNodeOnly { m: usize },
    /// Interactive growth with single-host probability `p`.
    Interactive { p: f64 },
}

impl GrowthMechanism {
    pub fn links_per_step(&self) -> usize {
        match *self {
            GrowthMechanism::NewNodeOnly { m } => m,
            GrowthMechanism::Interactive { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub growth: GrowthMechanism,
    pub scheme: PreferenceScheme,
    pub target_n: usize,
    pub seed_nodes: usize,
    pub seed_links: usize,
    pub rng_seed: u64,
}

/// The four model combinations compared throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Preset {
    /// New-node-only growth (m = 3), linear preference.
    Ba,
    /// Interactive growth (p = 0.4), linear preference.
    Ig,
    /// New-node-only growth (m = 3), positive-feedback preference (δ = 0.021).
    BaPfp,
    /// Interactive growth (p = 0.4), positive-feedback preference (δ = 0.021).
    Pfp,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Ba, Preset::Ig, Preset::BaPfp, Preset::Pfp];

    pub fn growth(self) -> GrowthMechanism {
        match self {
            Preset::Ba | Preset::BaPfp => GrowthMechanism::NewNodeOnly { m: 3 },
            Preset::Ig | Preset::Pfp => GrowthMechanism::Interactive { p: IG_P },
        }
    }

    pub fn scheme(self) -> PreferenceScheme {
        match self {
            Preset::Ba | Preset::Ig => PreferenceScheme::Linear,
            Preset::BaPfp | Preset::Pfp => PreferenceScheme::PositiveFeedback { delta: PFP_DELTA },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Ba => "ba",
            Preset::Ig => "ig",
            Preset::BaPfp => "ba-pfp",
            Preset::Pfp => "pfp",
        }
    }

    /// Column heading as used in the comparison table.
    pub fn title(self) -> &'static str {
        match self {
            Preset::Ba => "BA",
            Preset::Ig => "IG",
            Preset::BaPfp => "BA+PFP",
            Preset::Pfp => "PFP",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ba" => Ok(Preset::Ba),
            "ig" => Ok(Preset::Ig),
            "ba-pfp" | "ba+pfp" | "bapfp" => Ok(Preset::BaPfp),
            "pfp" => Ok(Preset::Pfp),
            other => Err(format!(
                "unknown model preset {other:?} (expected ba, ig, ba-pfp or pfp)"
            )),
        }
    }
}

impl ModelConfig {
    /// Preset grown from the default 10-node, 30-link seed graph.
    pub fn preset(preset: Preset, target_n: usize, rng_seed: u64) -> Self {
        Self::new(preset.growth(), preset.scheme(), target_n, rng_seed)
    }

    pub fn new(
        growth: GrowthMechanism,
        scheme: PreferenceScheme,
        target_n: usize,
        rng_seed: u64,
    ) -> Self {
        Self {
            growth,
            scheme,
            target_n,
            seed_nodes: 10,
            seed_links: 30,
            rng_seed,
        }
    }

    pub fn with_seed(mut self, rng_seed: u64) -> Self {
        self.rng_seed = rng_seed;
        self
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        self.scheme.validate()?;
        check_seed_shape(self.seed_nodes, self.seed_links)?;
        if self.target_n < self.seed_nodes {
            return Err(GenerateError::InvalidConfig(format!(
                "target size {} is below the seed size {}",
                self.target_n, self.seed_nodes
            )));
        }
        match self.growth {
            GrowthMechanism::NewNodeOnly { m } if m == 0 || m > self.seed_nodes => {
                Err(GenerateError::InvalidConfig(format!(
                    "m = {m} must lie in 1..={}",
                    self.seed_nodes
                )))
            }
            GrowthMechanism::Interactive { p } if !(0.0..=1.0).contains(&p) => Err(
                GenerateError::InvalidConfig(format!("p = {p} outside [0, 1]")),
            ),
            GrowthMechanism::Interactive { .. } if self.seed_nodes < 4 => {
                Err(GenerateError::InvalidConfig(
                    "interactive growth needs a seed graph of at least 4 nodes".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    /// Number of links every generated graph ends up with.
    pub fn expected_links(&self) -> usize {
        self.seed_links + self.growth.links_per_step() * (self.target_n - self.seed_nodes)
    }
}

/// Grows a graph from `cfg`; a pure function of the configuration.
pub fn generate(cfg: &ModelConfig) -> Result<Graph, GenerateError> {
    generate_with(cfg, |_| {})
}

/// Like [`generate`], calling `observe` on the seed graph and again after
/// every growth step.
pub fn generate_with<F>(cfg: &ModelConfig, mut observe: F) -> Result<Graph, GenerateError>
where
    F: FnMut(&Graph),
{
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let seed = seed_graph(cfg.seed_nodes, cfg.seed_links, &mut rng)?;
    observe(&seed);
    let mut growth = Growth::new(seed, cfg.scheme)?;
    for _ in cfg.seed_nodes..cfg.target_n {
        match cfg.growth {
            GrowthMechanism::NewNodeOnly { m } => {
                growth.step_new_node_only(m, &mut rng)?;
            }
            GrowthMechanism::Interactive { p } => {
                growth.step_interactive(p, &mut rng)?;
            }
        }
        observe(growth.graph());
    }
    Ok(growth.into_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgelist::to_edge_list_string;

    #[test]
    fn presets_match_table_layout() {
        assert_eq!(Preset::Ba.growth(), GrowthMechanism::NewNodeOnly { m: 3 });
        assert_eq!(Preset::Ig.growth(), GrowthMechanism::Interactive { p: 0.4 });
        assert_eq!(
            Preset::BaPfp.scheme(),
            PreferenceScheme::PositiveFeedback { delta: 0.021 }
        );
        assert_eq!(
            Preset::Pfp.scheme(),
            PreferenceScheme::PositiveFeedback { delta: 0.021 }
        );
        assert_eq!("BA+PFP".parse::<Preset>(), Ok(Preset::BaPfp));
        assert!("xyz".parse::<Preset>().is_err());
    }

    #[test]
    fn target_equal_to_seed_returns_seed() {
        for preset in Preset::ALL {
            let g = generate(&ModelConfig::preset(preset, 10, 11)).unwrap();
            assert_eq!(
                (g.node_count(), g.link_count(), g.seed_links()),
                (10, 30, 30)
            );
        }
    }

    #[test]
    fn link_budget_and_connectivity() {
        for preset in Preset::ALL {
            let cfg = ModelConfig::preset(preset, 1500, 3);
            let g = generate(&cfg).unwrap();
            assert_eq!(g.node_count(), 1500);
            assert_eq!(g.link_count(), 30 + 3 * 1490);
            assert_eq!(g.link_count(), cfg.expected_links());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let cfg = ModelConfig::preset(Preset::Pfp, 800, 42);
        let a = to_edge_list_string(&generate(&cfg).unwrap());
        let b = to_edge_list_string(&generate(&cfg).unwrap());
        assert_eq!(a, b);
        let c = to_edge_list_string(&generate(&cfg.clone().with_seed(43)).unwrap());
        assert_ne!(a, c);
    }

    #[test]
    fn zero_feedback_equals_linear() {
        for growth in [
            GrowthMechanism::Interactive { p: 0.4 },
            GrowthMechanism::NewNodeOnly { m: 3 },
        ] {
            let linear = ModelConfig::new(growth, PreferenceScheme::Linear, 1000, 9);
            let flat = ModelConfig::new(
                growth,
                PreferenceScheme::PositiveFeedback { delta: 0.0 },
                1000,
                9,
            );
            assert_eq!(generate(&linear).unwrap(), generate(&flat).unwrap());
        }
    }

    #[test]
    fn empirical_link_ratio() {
        for p in [0.0, 0.4, 0.8] {
            let cfg = ModelConfig::new(
                GrowthMechanism::Interactive { p },
                PreferenceScheme::Linear,
                5000,
                17,
            );
            let g = generate(&cfg).unwrap();
            let ratio = g.internal_links() as f64 / g.external_links() as f64;
            assert!(
                (ratio - super::super::expected_link_ratio(p)).abs() <= 0.05,
                "p={p}: {ratio}"
            );
        }
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = ModelConfig::preset(Preset::Pfp, 5, 1);
        assert!(generate(&cfg).is_err());
        cfg.target_n = 100;
        cfg.seed_links = 50;
        assert!(generate(&cfg).is_err());
        let cfg = ModelConfig::new(
            GrowthMechanism::NewNodeOnly { m: 0 },
            PreferenceScheme::Linear,
            20,
            1,
        );
        assert!(cfg.validate().is_err());
        let cfg = ModelConfig::new(
            GrowthMechanism::Interactive { p: -0.1 },
            PreferenceScheme::Linear,
            20,
            1,
        );
        assert!(cfg.validate().is_err());
    }
}
