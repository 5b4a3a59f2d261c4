use std::collections::BTreeMap;

use serde::Serialize;

use crate::metrics::{CurveKind, MetricsReport, Scalar};

/// Mean and spread of one scalar over the runs where it was defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub mean: Option<f64>,
    /// Sample standard deviation; needs two defined runs.
    pub std: Option<f64>,
    pub defined: usize,
    pub undefined: usize,
}

impl Summary {
    pub fn of<I: IntoIterator<Item = Option<f64>>>(values: I) -> Self {
        let mut defined = Vec::new();
        let mut undefined = 0;
        for v in values {
            match v {
                Some(x) => defined.push(x),
                None => undefined += 1,
            }
        }
        let n = defined.len();
        let mean = (n > 0).then(|| defined.iter().sum::<f64>() / n as f64);
        let std = mean.filter(|_| n > 1).map(|m| {
            let ss: f64 = defined.iter().map(|x| (x - m).powi(2)).sum();
            (ss / (n - 1) as f64).sqrt()
        });
        Self {
            mean,
            std,
            defined: n,
            undefined,
        }
    }
}

/// One abscissa of a run-averaged curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub x: f64,
    pub y_mean: f64,
    pub y_std: Option<f64>,
    pub n_runs: usize,
}

/// Scalars and curves of one configuration, averaged over its runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub runs: usize,
    pub scalars: BTreeMap<Scalar, Summary>,
    pub curves: BTreeMap<CurveKind, Vec<CurvePoint>>,
}

impl Aggregate {
    pub fn from_reports(reports: &[&MetricsReport]) -> Self {
        let scalars = Scalar::ALL
            .iter()
            .map(|&s| (s, Summary::of(reports.iter().map(|r| r.scalar(s)))))
            .collect();
        let curves = CurveKind::ALL
            .iter()
            .map(|&kind| {
                (
                    kind,
                    average_curve(reports.iter().map(|r| r.curves.get(kind))),
                )
            })
            .collect();
        Self {
            runs: reports.len(),
            scalars,
            curves,
        }
    }

    pub fn mean(&self, s: Scalar) -> Option<f64> {
        self.scalars.get(&s).and_then(|sum| sum.mean)
    }

    pub fn summary(&self, s: Scalar) -> Summary {
        self.scalars[&s]
    }
}

/// Pointwise mean over runs at shared abscissae. A run that lacks a point
/// simply does not contribute to it.
fn average_curve<'a, I: Iterator<Item = &'a [(f64, f64)]>>(curves: I) -> Vec<CurvePoint> {
    // non-negative finite floats order the same way as their bit patterns
    let mut by_x: BTreeMap<u64, Vec<f64>> = BTreeMap::new();
    for curve in curves {
        for &(x, y) in curve {
            by_x.entry(x.to_bits()).or_default().push(y);
        }
    }
    by_x.into_iter()
        .map(|(bits, ys)| {
            let s = Summary::of(ys.iter().copied().map(Some));
            CurvePoint {
                x: f64::from_bits(bits),
                y_mean: s.mean.expect("at least one value"),
                y_std: s.std,
                n_runs: s.defined,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_skips_undefined() {
        let s = Summary::of([Some(1.0), None, Some(3.0), Some(5.0)]);
        assert_eq!(s.mean, Some(3.0));
        assert_eq!(s.std, Some(2.0));
        assert_eq!((s.defined, s.undefined), (3, 1));

        let single = Summary::of([Some(4.0)]);
        assert_eq!((single.mean, single.std), (Some(4.0), None));
        let none = Summary::of([None, None]);
        assert_eq!((none.mean, none.undefined), (None, 2));
    }

    #[test]
    fn curves_average_only_present_points() {
        let a: &[(f64, f64)] = &[(1.0, 0.5), (2.0, 0.25), (5.0, 0.1)];
        let b: &[(f64, f64)] = &[(1.0, 0.7), (2.0, 0.15)];
        let avg = average_curve([a, b].into_iter());
        assert_eq!(avg.len(), 3);
        assert!((avg[0].y_mean - 0.6).abs() < 1e-15);
        assert_eq!(avg[1].n_runs, 2);
        // the tail point is not dragged towards zero by the run that lacks it
        assert_eq!((avg[2].x, avg[2].y_mean, avg[2].n_runs), (5.0, 0.1, 1));
        assert_eq!(avg[2].y_std, None);
    }
}
