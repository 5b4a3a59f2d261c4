use std::fs;
use std::io::Write;
use std::path::Path;

use super::{Aggregate, Cell, ExperimentResult, HarnessError, Trajectory};
use crate::metrics::{CurveKind, Scalar};

// Shortest round-trip representation, so CSV values re-parse exactly.
fn num(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn cell_keys(cell: &Cell) -> [String; 4] {
    [
        cell.label.clone(),
        num(cell.p()),
        num(cell.delta()),
        cell.past_tipping_point().to_string(),
    ]
}

/// One row per `(configuration, run)` followed by `mean`, `std` and
/// `undefined` rows per configuration. Undefined values are left empty.
pub fn write_runs_csv<W: Write>(result: &ExperimentResult, out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = vec!["config", "p", "delta", "tipping", "row", "seed"];
    header.extend(Scalar::ALL.iter().map(|s| s.column()));
    w.write_record(&header)?;

    for cell in &result.cells {
        let keys = cell_keys(cell);
        for run in &cell.runs {
            let mut row = keys.to_vec();
            row.push(run.run.to_string());
            row.push(run.seed.to_string());
            row.extend(Scalar::ALL.iter().map(|&s| num(run.report.scalar(s))));
            w.write_record(&row)?;
        }
        let rows: [(&str, &dyn Fn(Scalar) -> String); 3] = [
            ("mean", &|s| num(cell.aggregate.summary(s).mean)),
            ("std", &|s| num(cell.aggregate.summary(s).std)),
            ("undefined", &|s| {
                cell.aggregate.summary(s).undefined.to_string()
            }),
        ];
        for (name, value) in rows {
            let mut row = keys.to_vec();
            row.push(name.to_string());
            row.push(String::new());
            row.extend(Scalar::ALL.iter().map(|&s| value(s)));
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Writes `<dir>/<config>/<curve>.csv` for every configuration and curve.
pub fn write_curves(result: &ExperimentResult, dir: &Path) -> Result<(), HarnessError> {
    for cell in &result.cells {
        write_aggregate_curves(&cell.aggregate, &dir.join(&cell.label))?;
    }
    Ok(())
}

/// Writes `<dir>/<curve>.csv` for every curve of one aggregate.
pub fn write_aggregate_curves(aggregate: &Aggregate, dir: &Path) -> Result<(), HarnessError> {
    fs::create_dir_all(dir)?;
    for kind in CurveKind::ALL {
        let file = fs::File::create(dir.join(format!("{}.csv", kind.file_stem())))?;
        let mut w = csv::Writer::from_writer(std::io::BufWriter::new(file));
        w.write_record(["x", "y_mean", "y_std", "n_runs"])?;
        for pt in &aggregate.curves[&kind] {
            w.write_record([
                pt.x.to_string(),
                pt.y_mean.to_string(),
                num(pt.y_std),
                pt.n_runs.to_string(),
            ])?;
        }
        w.flush()?;
    }
    Ok(())
}

const GRID_SCALARS: [Scalar; 3] = [Scalar::Theta, Scalar::Gamma, Scalar::Alpha];

/// Contour-ready table: one row per `(p, δ)` cell with the run means and
/// standard deviations of θ, γ and α.
pub fn write_grid_csv<W: Write>(result: &ExperimentResult, out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["p".to_string(), "delta".to_string(), "tipping".to_string()];
    for s in GRID_SCALARS {
        header.push(s.column().to_string());
        header.push(format!("{}_std", s.column()));
    }
    header.push("runs".to_string());
    w.write_record(&header)?;
    for cell in &result.cells {
        let mut row = vec![
            num(cell.p()),
            num(cell.delta()),
            cell.past_tipping_point().to_string(),
        ];
        for s in GRID_SCALARS {
            let sum = cell.aggregate.summary(s);
            row.push(num(sum.mean));
            row.push(num(sum.std));
        }
        row.push(cell.runs.len().to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Matrix of the run-mean of `scalar`: one row per `p`, one column per `δ`
/// (the header row holds the `δ` values). Missing cells are left empty.
pub fn write_contour_csv<W: Write>(
    result: &ExperimentResult,
    scalar: Scalar,
    out: W,
) -> Result<(), HarnessError> {
    let mut ps: Vec<f64> = Vec::new();
    let mut deltas: Vec<f64> = Vec::new();
    for cell in &result.cells {
        if let (Some(p), Some(d)) = (cell.p(), cell.delta()) {
            if !ps.contains(&p) {
                ps.push(p);
            }
            if !deltas.contains(&d) {
                deltas.push(d);
            }
        }
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["p/delta".to_string()];
    header.extend(deltas.iter().map(|d| d.to_string()));
    w.write_record(&header)?;
    for &p in &ps {
        let mut row = vec![p.to_string()];
        row.extend(
            deltas
                .iter()
                .map(|&d| num(result.at(p, d).and_then(|c| c.mean(scalar)))),
        );
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_trajectory_csv<W: Write>(t: &Trajectory, out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "mean_seed_degree"])?;
    for &(n, k) in &t.samples {
        w.write_record([n.to_string(), k.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
