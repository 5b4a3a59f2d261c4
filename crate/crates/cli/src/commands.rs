use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use pfp_core::edgelist::{read_edge_list, write_edge_list, EdgeListError};
use pfp_core::generators::{generate, ModelConfig};
use pfp_core::harness::{
    format_scalar, format_table, run_experiment, run_seed, run_table2, sweep_delta, sweep_grid,
    sweep_p, track_trajectory, write_aggregate_curves, write_contour_csv, write_curves,
    write_grid_csv, write_runs_csv, write_trajectory_csv, Aggregate, ExperimentResult,
    ExperimentSpec,
};
use pfp_core::metrics::{report, Scalar};
use pfp_core::Graph;
use serde_json::{json, Value};

use crate::args::*;
use crate::error::{CliError, Result};
use crate::values::parse_values;

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(CliError::io(dir))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(CliError::io(path))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(CliError::io(path))
}

fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("json values always serialize");
    text.push('\n');
    write_text(path, &text)
}

fn argv() -> Vec<String> {
    std::env::args().collect()
}

fn write_graph(g: &Graph, format: Format, path: &Path) -> Result<()> {
    let mut w = create(path)?;
    match format {
        Format::Edgelist => write_edge_list(g, &mut w),
        Format::Csv => writeln!(w, "source,target")
            .and_then(|_| g.edges().try_for_each(|(u, v)| writeln!(w, "{u},{v}"))),
    }
    .and_then(|_| w.flush())
    .map_err(CliError::io(path))
}

pub fn generate_cmd(args: &GenerateArgs) -> Result<()> {
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let label = args.model.label();
    let dir = args.common.out.join("generate");
    create_dir(&dir)?;
    let ext = match args.format {
        Format::Edgelist => "edges",
        Format::Csv => "csv",
    };
    for run in 0..args.runs {
        let seed = run_seed(args.common.seed, run);
        let cfg = args.model.config(args.nodes, seed)?;
        let start = Instant::now();
        let g = generate(&cfg).map_err(|e| CliError::Compute(e.to_string()))?;
        let wall = start.elapsed().as_secs_f64();

        let stem = format!("{label}_n{}_seed{seed}", args.nodes);
        let path = dir.join(format!("{stem}.{ext}"));
        write_graph(&g, args.format, &path)?;
        write_json(
            &dir.join(format!("{stem}.json")),
            &json!({
                "command": "generate",
                "version": env!("CARGO_PKG_VERSION"),
                "argv": argv(),
                "model": label,
                "config": cfg,
                "seed": seed,
                "format": ext,
                "nodes": g.node_count(),
                "links": g.link_count(),
                "internal_links": g.internal_links(),
                "external_links": g.external_links(),
                "wall_time_secs": wall,
            }),
        )?;
        println!(
            "{}: N={} L={} (L_int={}, L_ext={}), seed {seed}",
            path.display(),
            g.node_count(),
            g.link_count(),
            g.internal_links(),
            g.external_links()
        );
    }
    Ok(())
}

/// Writes the standard outputs of a multi-run experiment and prints its table.
fn finish(
    name: &str,
    result: &ExperimentResult,
    out: &Path,
    extra: Value,
    start: Instant,
) -> Result<PathBuf> {
    let dir = out.join(name);
    create_dir(&dir)?;
    let runs_path = dir.join("runs.csv");
    write_runs_csv(result, create(&runs_path)?).map_err(CliError::harness(&runs_path))?;
    write_curves(result, &dir).map_err(CliError::harness(&dir))?;
    let table = format_table(result);
    write_text(&dir.join("table.txt"), &table)?;

    let configs: Vec<Value> = result
        .cells
        .iter()
        .map(|c| json!({ "label": c.label, "config": c.config }))
        .collect();
    let mut meta = json!({
        "command": name,
        "version": env!("CARGO_PKG_VERSION"),
        "argv": argv(),
        "base_seed": result.base_seed,
        "run_seeds": "base_seed + run",
        "runs": result.cells.first().map_or(0, |c| c.runs.len()),
        "configs": configs,
        "wall_time_secs": start.elapsed().as_secs_f64(),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut meta, extra) {
        m.extend(e);
    }
    write_json(&dir.join("meta.json"), &meta)?;
    print!("{table}");
    println!("outputs in {}", dir.display());
    Ok(dir)
}

fn compute(e: pfp_core::harness::HarnessError) -> CliError {
    CliError::harness(Path::new(""))(e)
}

pub fn analyze_cmd(args: &AnalyzeArgs) -> Result<()> {
    let start = Instant::now();
    let Some(input) = &args.input else {
        if args.runs == 0 {
            return Err(CliError::Usage("--runs must be at least 1".into()));
        }
        let label = args.model.label();
        let cfg = args.model.config(args.nodes, args.common.seed)?;
        let spec = ExperimentSpec {
            configs: vec![(label, cfg)],
            runs_per_config: args.runs,
            base_seed: args.common.seed,
        };
        let result = run_experiment(&spec).map_err(compute)?;
        finish("analyze", &result, &args.common.out, json!({}), start)?;
        return Ok(());
    };

    let file = File::open(input).map_err(CliError::io(input))?;
    let (g, stats) = read_edge_list(BufReader::new(file)).map_err(|e| match e {
        EdgeListError::Io(source) => CliError::Io {
            path: input.clone(),
            source,
        },
        other => CliError::Input {
            path: input.clone(),
            message: other.to_string(),
        },
    })?;
    if stats.self_loops + stats.duplicates > 0 {
        eprintln!(
            "warning: skipped {} self-loops and {} duplicate edges",
            stats.self_loops, stats.duplicates
        );
    }
    let r = report(&g).map_err(|e| CliError::Compute(format!("{}: {e}", input.display())))?;

    let label = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".into());
    let dir = args.common.out.join("analyze").join(&label);
    create_dir(&dir)?;
    let metrics_path = dir.join("metrics.csv");
    let mut w = csv::Writer::from_writer(create(&metrics_path)?);
    let mut write_metrics = || -> std::result::Result<(), csv::Error> {
        let mut header = vec!["graph"];
        header.extend(Scalar::ALL.iter().map(|s| s.column()));
        w.write_record(&header)?;
        let mut row = vec![label.clone()];
        row.extend(
            Scalar::ALL
                .iter()
                .map(|&s| r.scalar(s).map(|v| v.to_string()).unwrap_or_default()),
        );
        w.write_record(&row)?;
        w.flush()?;
        Ok(())
    };
    write_metrics().map_err(|e| CliError::Io {
        path: metrics_path.clone(),
        source: e.into(),
    })?;
    write_aggregate_curves(&Aggregate::from_reports(&[&r]), &dir)
        .map_err(CliError::harness(&dir))?;
    write_json(
        &dir.join("meta.json"),
        &json!({
            "command": "analyze",
            "version": env!("CARGO_PKG_VERSION"),
            "argv": argv(),
            "input": input,
            "nodes": g.node_count(),
            "links": g.link_count(),
            "self_loops_skipped": stats.self_loops,
            "duplicates_skipped": stats.duplicates,
            "wall_time_secs": start.elapsed().as_secs_f64(),
        }),
    )?;
    for s in Scalar::ALL {
        println!("{:36} {}", s.title(), format_scalar(s, r.scalar(s)));
    }
    println!("outputs in {}", dir.display());
    Ok(())
}

pub fn table2_cmd(args: &Table2Args) -> Result<()> {
    let start = Instant::now();
    let result = run_table2(args.nodes, args.runs, args.common.seed).map_err(compute)?;
    finish(
        "table2",
        &result,
        &args.common.out,
        json!({ "nodes": args.nodes }),
        start,
    )?;
    Ok(())
}

fn values(flag: &str, spec: &str) -> Result<Vec<f64>> {
    parse_values(spec).map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}

pub fn sweep_p_cmd(args: &SweepPArgs) -> Result<()> {
    let start = Instant::now();
    let ps = values("--values", &args.values)?;
    let result =
        sweep_p(&ps, args.delta, args.nodes, args.runs, args.common.seed).map_err(compute)?;
    let extra = json!({ "nodes": args.nodes, "p_values": ps, "delta": args.delta });
    finish("sweep-p", &result, &args.common.out, extra, start)?;
    Ok(())
}

pub fn sweep_delta_cmd(args: &SweepDeltaArgs) -> Result<()> {
    let start = Instant::now();
    let ds = values("--values", &args.values)?;
    let result =
        sweep_delta(&ds, Some(args.p), args.nodes, args.runs, args.common.seed).map_err(compute)?;
    let extra = json!({ "nodes": args.nodes, "delta_values": ds, "p": args.p });
    finish("sweep-delta", &result, &args.common.out, extra, start)?;
    Ok(())
}

pub fn grid_cmd(args: &GridArgs) -> Result<()> {
    let start = Instant::now();
    let ps = values("--p", &args.p)?;
    let ds = values("--delta", &args.delta)?;
    let result = sweep_grid(&ps, &ds, args.nodes, args.runs, args.common.seed).map_err(compute)?;
    let extra = json!({ "nodes": args.nodes, "p_values": ps, "delta_values": ds });
    let dir = finish("grid", &result, &args.common.out, extra, start)?;

    let grid_path = dir.join("grid.csv");
    write_grid_csv(&result, create(&grid_path)?).map_err(CliError::harness(&grid_path))?;
    for s in [Scalar::Theta, Scalar::Gamma, Scalar::Alpha] {
        let path = dir.join(format!("{}.csv", s.column()));
        write_contour_csv(&result, s, create(&path)?).map_err(CliError::harness(&path))?;
    }
    Ok(())
}

pub fn trajectory_cmd(args: &TrajectoryArgs) -> Result<()> {
    let start = Instant::now();
    let cfg: ModelConfig = args.model.config(args.nodes, args.common.seed)?;
    let t = track_trajectory(&cfg, args.every).map_err(compute)?;
    let label = args.model.label();
    let dir = args.common.out.join("trajectory").join(&label);
    create_dir(&dir)?;
    let path = dir.join("trajectory.csv");
    write_trajectory_csv(&t, create(&path)?).map_err(CliError::harness(&path))?;
    write_json(
        &dir.join("meta.json"),
        &json!({
            "command": "trajectory",
            "version": env!("CARGO_PKG_VERSION"),
            "argv": argv(),
            "model": label,
            "config": cfg,
            "seed": cfg.rng_seed,
            "sample_every": args.every,
            "wall_time_secs": start.elapsed().as_secs_f64(),
        }),
    )?;
    if let Some(&(n, k)) = t.samples.last() {
        println!(
            "mean seed-node degree {k} at N={n} ({} samples)",
            t.samples.len()
        );
    }
    println!("outputs in {}", dir.display());
    Ok(())
}
