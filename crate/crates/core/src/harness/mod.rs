//! Multi-run experiments: the four-model comparison, single-parameter
//! sweeps, the two-parameter grid and the seed-node degree trajectory.
//!
//! Every `(configuration, run)` cell is generated and measured
//! independently and in parallel; results are always ordered by cell key.
//! Run `i` of every configuration uses seed `base_seed + i`, so a single
//! cell can be rerun in isolation and configurations that coincide across
//! experiments produce identical graphs.

mod aggregate;
mod output;
mod table;

use std::io;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generators::{
    generate, generate_with, GenerateError, GrowthMechanism, ModelConfig, PreferenceScheme, Preset,
    IG_P,
};
use crate::metrics::{report, MetricsError, MetricsReport, Scalar};

pub use aggregate::{Aggregate, CurvePoint, Summary};
pub use output::{
    write_aggregate_curves, write_contour_csv, write_curves, write_grid_csv, write_runs_csv,
    write_trajectory_csv,
};
pub use table::{format_scalar, format_table};

/// Feedback strength above which the model's growth degenerates towards a
/// star and fitted exponents become unstable.
pub const TIPPING_DELTA: f64 = 0.028;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment: {0}")]
    Invalid(String),
    #[error("{label} run {run}: {source}")]
    Generate {
        label: String,
        run: usize,
        source: GenerateError,
    },
    #[error("{label} run {run}: {source}")]
    Metrics {
        label: String,
        run: usize,
        source: MetricsError,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Seed of run `run` in an experiment with base seed `base_seed`.
pub fn run_seed(base_seed: u64, run: usize) -> u64 {
    base_seed.wrapping_add(run as u64)
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    /// Labelled configurations; their `rng_seed` is replaced per run.
    pub configs: Vec<(String, ModelConfig)>,
    pub runs_per_config: usize,
    pub base_seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    pub report: MetricsReport,
}

/// All runs of one configuration and their average.
#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub label: String,
    pub config: ModelConfig,
    pub runs: Vec<RunRecord>,
    pub aggregate: Aggregate,
}

impl Cell {
    pub fn mean(&self, s: Scalar) -> Option<f64> {
        self.aggregate.mean(s)
    }

    /// Interactive-growth probability, if the configuration has one.
    pub fn p(&self) -> Option<f64> {
        match self.config.growth {
            GrowthMechanism::Interactive { p } => Some(p),
            GrowthMechanism::NewNodeOnly { .. } => None,
        }
    }

    /// Feedback strength; linear preference counts as `δ = 0`.
    pub fn delta(&self) -> Option<f64> {
        match self.config.scheme {
            PreferenceScheme::Linear => Some(0.0),
            PreferenceScheme::PositiveFeedback { delta } => Some(delta),
            PreferenceScheme::Exponential { .. } => None,
        }
    }

    pub fn past_tipping_point(&self) -> bool {
        self.delta().is_some_and(|d| d > TIPPING_DELTA)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentResult {
    pub base_seed: u64,
    pub cells: Vec<Cell>,
}

impl ExperimentResult {
    pub fn cell(&self, label: &str) -> Option<&Cell> {
        self.cells.iter().find(|c| c.label == label)
    }

    /// Cell of the interactive configuration with parameters `(p, δ)`.
    pub fn at(&self, p: f64, delta: f64) -> Option<&Cell> {
        self.cells
            .iter()
            .find(|c| c.p() == Some(p) && c.delta() == Some(delta))
    }
}

/// Generates and measures a single run; the unit of parallel work.
pub fn run_once(
    cfg: &ModelConfig,
    label: &str,
    base_seed: u64,
    run: usize,
) -> Result<RunRecord, HarnessError> {
    let seed = run_seed(base_seed, run);
    let cfg = cfg.clone().with_seed(seed);
    let g = generate(&cfg).map_err(|source| HarnessError::Generate {
        label: label.to_string(),
        run,
        source,
    })?;
    let report = report(&g).map_err(|source| HarnessError::Metrics {
        label: label.to_string(),
        run,
        source,
    })?;
    Ok(RunRecord { run, seed, report })
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult, HarnessError> {
    if spec.runs_per_config == 0 {
        return Err(HarnessError::Invalid(
            "runs per configuration must be at least 1".into(),
        ));
    }
    if spec.configs.is_empty() {
        return Err(HarnessError::Invalid("no configurations to run".into()));
    }
    for (label, cfg) in &spec.configs {
        cfg.validate()
            .map_err(|e| HarnessError::Invalid(format!("{label}: {e}")))?;
    }

    let jobs: Vec<(usize, usize)> = (0..spec.configs.len())
        .flat_map(|c| (0..spec.runs_per_config).map(move |r| (c, r)))
        .collect();
    let mut records = jobs
        .par_iter()
        .map(|&(c, r)| {
            let (label, cfg) = &spec.configs[c];
            run_once(cfg, label, spec.base_seed, r)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter();

    let cells = spec
        .configs
        .iter()
        .map(|(label, cfg)| {
            let runs: Vec<RunRecord> = records.by_ref().take(spec.runs_per_config).collect();
            let reports: Vec<&MetricsReport> = runs.iter().map(|r| &r.report).collect();
            Cell {
                label: label.clone(),
                config: cfg.clone().with_seed(spec.base_seed),
                aggregate: Aggregate::from_reports(&reports),
                runs,
            }
        })
        .collect();
    Ok(ExperimentResult {
        base_seed: spec.base_seed,
        cells,
    })
}

/// BA, IG, BA+PFP and PFP, `runs` graphs each.
pub fn run_table2(n: usize, runs: usize, base_seed: u64) -> Result<ExperimentResult, HarnessError> {
    if n < 100 {
        return Err(HarnessError::Invalid(format!(
            "table needs n >= 100, got {n}"
        )));
    }
    let configs = Preset::ALL
        .iter()
        .map(|&p| (p.name().to_string(), ModelConfig::preset(p, n, base_seed)))
        .collect();
    run_experiment(&ExperimentSpec {
        configs,
        runs_per_config: runs,
        base_seed,
    })
}

/// Label of the interactive configuration `(p, δ)`.
pub fn cell_label(p: f64, delta: f64) -> String {
    format!("p{p}_delta{delta}")
}

fn interactive(p: f64, delta: f64, n: usize) -> ModelConfig {
    let scheme = if delta == 0.0 {
        PreferenceScheme::Linear
    } else {
        PreferenceScheme::PositiveFeedback { delta }
    };
    ModelConfig::new(GrowthMechanism::Interactive { p }, scheme, n, 0)
}

/// Interactive growth over every `(p, δ)` pair, rows by `p` then `δ`.
pub fn sweep_grid(
    p_values: &[f64],
    delta_values: &[f64],
    n: usize,
    runs: usize,
    base_seed: u64,
) -> Result<ExperimentResult, HarnessError> {
    if p_values.is_empty() || delta_values.is_empty() {
        return Err(HarnessError::Invalid(
            "sweep needs at least one p and one delta".into(),
        ));
    }
    if let Some(p) = p_values.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(HarnessError::Invalid(format!("p = {p} outside [0, 1]")));
    }
    if let Some(d) = delta_values.iter().find(|d| !(d.is_finite() && **d >= 0.0)) {
        return Err(HarnessError::Invalid(format!("delta = {d} must be >= 0")));
    }
    let configs = p_values
        .iter()
        .flat_map(|&p| {
            delta_values
                .iter()
                .map(move |&d| (cell_label(p, d), interactive(p, d, n)))
        })
        .collect();
    run_experiment(&ExperimentSpec {
        configs,
        runs_per_config: runs,
        base_seed,
    })
}

/// Sensitivity to the single-host probability at fixed `δ`.
pub fn sweep_p(
    p_values: &[f64],
    delta: f64,
    n: usize,
    runs: usize,
    base_seed: u64,
) -> Result<ExperimentResult, HarnessError> {
    sweep_grid(p_values, &[delta], n, runs, base_seed)
}

/// Sensitivity to the feedback strength at fixed `p` (default 0.4).
pub fn sweep_delta(
    delta_values: &[f64],
    p: Option<f64>,
    n: usize,
    runs: usize,
    base_seed: u64,
) -> Result<ExperimentResult, HarnessError> {
    sweep_grid(&[p.unwrap_or(IG_P)], delta_values, n, runs, base_seed)
}

/// Mean degree of the seed nodes as the network grows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    /// `(N, mean seed-node degree)` samples.
    pub samples: Vec<(usize, f64)>,
}

impl Trajectory {
    /// Mean seed-node degree at the last sample taken at or before `n`.
    pub fn at(&self, n: usize) -> Option<f64> {
        self.samples
            .iter()
            .take_while(|s| s.0 <= n)
            .last()
            .map(|s| s.1)
    }
}

/// Samples the mean degree of the seed nodes on the seed graph and after
/// every `sample_every` growth steps, always ending on the final graph.
pub fn track_trajectory(
    cfg: &ModelConfig,
    sample_every: usize,
) -> Result<Trajectory, HarnessError> {
    if sample_every == 0 {
        return Err(HarnessError::Invalid(
            "sample interval must be at least 1".into(),
        ));
    }
    let seeds = cfg.seed_nodes;
    let mean_seed_degree =
        |g: &crate::Graph| (0..seeds).map(|v| g.deg(v)).sum::<usize>() as f64 / seeds as f64;
    let mut samples = Vec::new();
    let g = generate_with(cfg, |g| {
        if (g.node_count() - seeds).is_multiple_of(sample_every) {
            samples.push((g.node_count(), mean_seed_degree(g)));
        }
    })
    .map_err(|source| HarnessError::Generate {
        label: "trajectory".into(),
        run: 0,
        source,
    })?;
    if samples.last().map(|s| s.0) != Some(g.node_count()) {
        samples.push((g.node_count(), mean_seed_degree(&g)));
    }
    Ok(Trajectory { samples })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_offsets_of_base() {
        assert_eq!(run_seed(10, 0), 10);
        assert_eq!(run_seed(10, 3), 13);
        assert_eq!(run_seed(u64::MAX, 1), 0);
    }

    #[test]
    fn small_table_is_complete() {
        let t = run_table2(100, 2, 1).unwrap();
        assert_eq!(t.cells.len(), 4);
        for cell in &t.cells {
            assert_eq!(cell.runs.len(), 2);
            assert_eq!(cell.aggregate.runs, 2);
            for s in Scalar::ALL {
                let sum = cell.aggregate.summary(s);
                assert_eq!(sum.defined + sum.undefined, 2);
                if s != Scalar::LinkRatio {
                    assert!(sum.mean.is_some(), "{} {s:?} missing", cell.label);
                }
            }
        }
        assert!(run_table2(50, 2, 1).is_err());
    }

    #[test]
    fn cells_rerun_in_isolation() {
        let grid = sweep_grid(&[0.2, 0.6], &[0.0, 0.01], 300, 3, 77).unwrap();
        let cell = grid.at(0.6, 0.01).unwrap();
        let alone = run_once(&cell.config, &cell.label, 77, 2).unwrap();
        assert_eq!(alone.report, cell.runs[2].report);
        assert_eq!(alone.seed, 79);
    }

    #[test]
    fn sweep_p_at_zero_has_no_leaves() {
        let s = sweep_p(&[0.0], 0.0, 400, 2, 3).unwrap();
        assert_eq!(s.cells[0].mean(Scalar::P1), Some(0.0));
    }

    #[test]
    fn invalid_sweeps() {
        assert!(sweep_grid(&[], &[0.0], 100, 1, 0).is_err());
        assert!(sweep_grid(&[1.2], &[0.0], 100, 1, 0).is_err());
        assert!(sweep_delta(&[-0.1], None, 100, 1, 0).is_err());
        assert!(run_experiment(&ExperimentSpec {
            configs: vec![("x".into(), ModelConfig::preset(Preset::Ba, 100, 0))],
            runs_per_config: 0,
            base_seed: 0,
        })
        .is_err());
    }

    #[test]
    fn trajectory_starts_from_seed_graph() {
        let cfg = ModelConfig::preset(Preset::Pfp, 500, 4);
        let t = track_trajectory(&cfg, 50).unwrap();
        assert_eq!(t.samples[0], (10, 6.0));
        assert_eq!(t.samples.last().unwrap().0, 500);
        assert!(t.samples.windows(2).all(|w| w[0].1 <= w[1].1));
        assert!(track_trajectory(&cfg, 0).is_err());
    }

    #[test]
    fn tipping_flag() {
        let s = sweep_delta(&[0.028, 0.035], None, 150, 1, 0).unwrap();
        assert!(!s.cells[0].past_tipping_point());
        assert!(s.cells[1].past_tipping_point());
    }
}
