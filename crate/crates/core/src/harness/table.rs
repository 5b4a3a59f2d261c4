use std::fmt::Write;

use super::ExperimentResult;
use crate::generators::Preset;
use crate::metrics::Scalar;

fn column_title(label: &str) -> String {
    label
        .parse::<Preset>()
        .map(|p| p.title().to_string())
        .unwrap_or_else(|_| label.to_string())
}

/// One scalar as shown in tables: fractions as percentages, `-` when
/// undefined.
pub fn format_scalar(s: Scalar, v: Option<f64>) -> String {
    match v {
        None => "-".to_string(),
        Some(v) if s.is_fraction() => format!("{:.1}%", 100.0 * v),
        Some(v) => match s {
            Scalar::Nodes | Scalar::Links | Scalar::KMax | Scalar::TopClique => {
                format!("{v:.1}").trim_end_matches(".0").to_string()
            }
            Scalar::Alpha | Scalar::LinkRatio | Scalar::MeanClustering => format!("{v:.3}"),
            _ => format!("{v:.2}"),
        },
    }
}

/// Run-averaged scalars as a plain-text table, one column per
/// configuration. Fractions are shown as percentages.
pub fn format_table(result: &ExperimentResult) -> String {
    let titles: Vec<String> = result
        .cells
        .iter()
        .map(|c| column_title(&c.label))
        .collect();
    let rows: Vec<(String, Vec<String>)> = Scalar::ALL
        .iter()
        .map(|&s| {
            let cells = result
                .cells
                .iter()
                .map(|c| format_scalar(s, c.mean(s)))
                .collect();
            (s.title().to_string(), cells)
        })
        .collect();

    let label_width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let widths: Vec<usize> = titles
        .iter()
        .enumerate()
        .map(|(i, t)| {
            rows.iter()
                .map(|r| r.1[i].len())
                .chain([t.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    let _ = write!(out, "{:label_width$}", "");
    for (t, w) in titles.iter().zip(&widths) {
        let _ = write!(out, "  {t:>w$}");
    }
    out.push('\n');
    for (label, cells) in &rows {
        let _ = write!(out, "{label:label_width$}");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.push('\n');
    }
    let runs = result.cells.first().map_or(0, |c| c.runs.len());
    let _ = writeln!(
        out,
        "(means over {runs} runs, base seed {})",
        result.base_seed
    );
    if result.cells.iter().any(|c| c.past_tipping_point()) {
        out.push_str("warning: delta > 0.028 is past the tipping point; fitted exponents are unstable there\n");
    }
    out
}
