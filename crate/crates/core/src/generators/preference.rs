use serde::{Deserialize, Serialize};

use super::GenerateError;

/// Degree function `f(k)` used for preferential selection; a node of degree
/// `k` is chosen with probability `f(k) / Σ f(k_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PreferenceScheme {
    /// `f(k) = k`
    Linear,
    /// `f(k) = k^(1 + δ ln k)`, natural logarithm, `δ ≥ 0`.
    PositiveFeedback { delta: f64 },
    /// `f(k) = k^λ`, `λ ≥ 1`.
    Exponential { lambda: f64 },
}

impl PreferenceScheme {
    pub fn validate(&self) -> Result<(), GenerateError> {
        match *self {
            PreferenceScheme::Linear => Ok(()),
            PreferenceScheme::PositiveFeedback { delta } if delta.is_finite() && delta >= 0.0 => {
                Ok(())
            }
            PreferenceScheme::Exponential { lambda } if lambda.is_finite() && lambda >= 1.0 => {
                Ok(())
            }
            other => Err(GenerateError::InvalidScheme(other)),
        }
    }

    /// `f(k)` for a real-valued degree. Callers guarantee `k ≥ 1`.
    #[inline]
    pub(crate) fn eval(&self, k: f64) -> f64 {
        match *self {
            PreferenceScheme::Linear => k,
            // δ = 0 must reproduce the linear weights bit for bit
            PreferenceScheme::PositiveFeedback { delta: 0.0 } => k,
            PreferenceScheme::PositiveFeedback { delta } => k.powf(1.0 + delta * k.ln()),
            PreferenceScheme::Exponential { lambda } => k.powf(lambda),
        }
    }

    /// Short label used in file names and tables.
    pub fn label(&self) -> String {
        match *self {
            PreferenceScheme::Linear => "linear".to_string(),
            PreferenceScheme::PositiveFeedback { delta } => format!("pfp{delta}"),
            PreferenceScheme::Exponential { lambda } => format!("exp{lambda}"),
        }
    }
}

/// Preference weight `f(k)` of a node with degree `k ≥ 1`.
pub fn preference_weight(k: usize, scheme: &PreferenceScheme) -> Result<f64, GenerateError> {
    scheme.validate()?;
    if k == 0 {
        return Err(GenerateError::ZeroDegree);
    }
    Ok(scheme.eval(k as f64))
}

/// Advantage `f(μk) / f(k)` of a node with `μ` times the degree.
///
/// `μk` need not be an integer, so this evaluates the degree function on
/// the reals.
pub fn preference_ratio(
    k: usize,
    mu: f64,
    scheme: &PreferenceScheme,
) -> Result<f64, GenerateError> {
    scheme.validate()?;
    if k == 0 {
        return Err(GenerateError::ZeroDegree);
    }
    if !(mu.is_finite() && mu >= 1.0) {
        return Err(GenerateError::InvalidMultiplier(mu));
    }
    let k = k as f64;
    Ok(scheme.eval(mu * k) / scheme.eval(k))
}
