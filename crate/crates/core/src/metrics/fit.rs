/// Exponent of a power law `y ∝ x^e` fitted by ordinary least squares on
/// `(ln x, ln y)`, using only points with `lo ≤ x ≤ hi` and positive
/// coordinates.
///
/// Returns `None` with fewer than three usable points or when all of them
/// share one abscissa.
pub fn fit_power_law(points: &[(f64, f64)], lo: f64, hi: f64) -> Option<f64> {
    // abscissae such as r/N are computed, so allow for rounding at the edges
    let slack = 1e-12 * hi.abs().max(1.0);
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(x, y)| x > 0.0 && y > 0.0 && x >= lo - slack && x <= hi + slack)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 3 {
        return None;
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let (sxy, sxx) = logs.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = x - mean_x;
        (sxy + dx * (y - mean_y), sxx + dx * dx)
    });
    if sxx <= 0.0 {
        return None;
    }
    Some(sxy / sxx)
}
