use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfp_core::generators::{
    GrowthMechanism, ModelConfig, PreferenceScheme, Preset, IG_P, PFP_DELTA,
};

use crate::error::{CliError, Result};

pub const DEFAULT_SEED: u64 = 1;
pub const FULL_N: usize = 9204;
pub const GRID_N: usize = 3000;

/// Generate and analyze internet AS-level topology models.
#[derive(Debug, Parser)]
#[command(name = "pfp", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow graphs and write them as edge lists with a JSON sidecar.
    Generate(GenerateArgs),
    /// Compute every topology statistic of generated or ingested graphs.
    Analyze(AnalyzeArgs),
    /// Compare BA, IG, BA+PFP and PFP.
    Table2(Table2Args),
    /// Sweep the interactive-growth probability p at fixed delta.
    SweepP(SweepPArgs),
    /// Sweep the feedback strength delta at fixed p.
    SweepDelta(SweepDeltaArgs),
    /// Evaluate every (p, delta) pair and write contour tables.
    Grid(GridArgs),
    /// Track the mean degree of the seed nodes as the network grows.
    Trajectory(TrajectoryArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GrowthKind {
    NewNodeOnly,
    Interactive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeKind {
    Linear,
    PositiveFeedback,
    Exponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `u v` per line.
    Edgelist,
    /// `source,target` with a header row.
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Seed of the first run; run i uses seed + i.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output directory.
    #[arg(long, env = "PFP_OUT_DIR", default_value = "pfp-out")]
    pub out: PathBuf,
}

/// A preset plus optional overrides of any of its parameters.
#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Model preset: ba, ig, ba-pfp or pfp.
    #[arg(long, default_value = "pfp")]
    pub model: Preset,
    #[arg(long, value_enum)]
    pub growth: Option<GrowthKind>,
    /// Single-host probability of interactive growth.
    #[arg(long)]
    pub p: Option<f64>,
    /// Links per new node of new-node-only growth.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeKind>,
    /// Positive-feedback strength.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Exponent of the exponential preference k^lambda.
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, default_value_t = 10)]
    pub seed_nodes: usize,
    #[arg(long, default_value_t = 30)]
    pub seed_links: usize,
}

impl ModelArgs {
    pub fn label(&self) -> String {
        let overridden = self.growth.is_some()
            || self.p.is_some()
            || self.m.is_some()
            || self.scheme.is_some()
            || self.delta.is_some()
            || self.lambda.is_some()
            || self.seed_nodes != 10
            || self.seed_links != 30;
        if overridden {
            "custom".to_string()
        } else {
            self.model.name().to_string()
        }
    }

    pub fn config(&self, nodes: usize, seed: u64) -> Result<ModelConfig> {
        let growth_kind = match self.growth {
            Some(kind) => kind,
            None => match (self.p, self.m) {
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage(
                        "--p and --m select different growth mechanisms; pass --growth".into(),
                    ))
                }
                (Some(_), None) => GrowthKind::Interactive,
                (None, Some(_)) => GrowthKind::NewNodeOnly,
                (None, None) => match self.model.growth() {
                    GrowthMechanism::NewNodeOnly { .. } => GrowthKind::NewNodeOnly,
                    GrowthMechanism::Interactive { .. } => GrowthKind::Interactive,
                },
            },
        };
        let growth = match growth_kind {
            GrowthKind::NewNodeOnly => GrowthMechanism::NewNodeOnly {
                m: self.m.unwrap_or(3),
            },
            GrowthKind::Interactive => GrowthMechanism::Interactive {
                p: self.p.unwrap_or(IG_P),
            },
        };

        let scheme_kind = match self.scheme {
            Some(kind) => kind,
            None => match (self.delta, self.lambda) {
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage(
                        "--delta and --lambda select different preferences; pass --scheme".into(),
                    ))
                }
                (Some(_), None) => SchemeKind::PositiveFeedback,
                (None, Some(_)) => SchemeKind::Exponential,
                (None, None) => match self.model.scheme() {
                    PreferenceScheme::Linear => SchemeKind::Linear,
                    PreferenceScheme::PositiveFeedback { .. } => SchemeKind::PositiveFeedback,
                    PreferenceScheme::Exponential { .. } => SchemeKind::Exponential,
                },
            },
        };
        let scheme = match scheme_kind {
            SchemeKind::Linear => PreferenceScheme::Linear,
            SchemeKind::PositiveFeedback => PreferenceScheme::PositiveFeedback {
                delta: self.delta.unwrap_or(PFP_DELTA),
            },
            SchemeKind::Exponential => PreferenceScheme::Exponential {
                lambda: self.lambda.ok_or_else(|| {
                    CliError::Usage("exponential preference needs --lambda".into())
                })?,
            },
        };

        let mut cfg = ModelConfig::new(growth, scheme, nodes, seed);
        cfg.seed_nodes = self.seed_nodes;
        cfg.seed_links = self.seed_links;
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    /// Number of graphs.
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Edge list to analyze instead of generating graphs.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Table2Args {
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    #[arg(long, default_value_t = 10)]
    pub runs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepPArgs {
    /// Values of p, as a list or start:stop:step.
    #[arg(long, default_value = "0,0.2,0.4,0.6,0.8")]
    pub values: String,
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    #[arg(long, default_value_t = 10)]
    pub runs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepDeltaArgs {
    /// Values of delta, as a list or start:stop:step.
    #[arg(long, default_value = "0,0.007,0.014,0.021,0.028,0.035")]
    pub values: String,
    #[arg(long, default_value_t = IG_P)]
    pub p: f64,
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    #[arg(long, default_value_t = 10)]
    pub runs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Values of p, as a list or start:stop:step.
    #[arg(long, default_value = "0:0.8:0.1")]
    pub p: String,
    /// Values of delta, as a list or start:stop:step.
    #[arg(long, default_value = "0:0.035:0.005")]
    pub delta: String,
    #[arg(long, default_value_t = GRID_N)]
    pub nodes: usize,
    #[arg(long, default_value_t = 10)]
    pub runs: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct TrajectoryArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = FULL_N)]
    pub nodes: usize,
    /// Growth steps between samples.
    #[arg(long, default_value_t = 100)]
    pub every: usize,
    #[command(flatten)]
    pub common: Common,
}
