//! Browser bindings. Every operation returns a JSON string; the plain
//! `*_json` functions hold the logic and are what the native tests call.

use pfp_core::generators::{
    generate, preference_ratio, preference_weight, GrowthMechanism, ModelConfig, PreferenceScheme,
    Preset,
};
use pfp_core::harness::track_trajectory;
use pfp_core::metrics::{report, Scalar};
use serde_json::{json, Map, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page may request; all-pairs paths dominate beyond it.
pub const MAX_NODES: usize = 20_000;

fn config(
    preset: &str,
    nodes: usize,
    seed: u64,
    p: Option<f64>,
    delta: Option<f64>,
) -> Result<ModelConfig, String> {
    if nodes > MAX_NODES {
        return Err(format!(
            "at most {MAX_NODES} nodes in the browser, got {nodes}"
        ));
    }
    let preset: Preset = preset.parse()?;
    let mut cfg = ModelConfig::preset(preset, nodes, seed);
    if let Some(p) = p {
        cfg.growth = GrowthMechanism::Interactive { p };
    }
    if let Some(delta) = delta {
        cfg.scheme = PreferenceScheme::PositiveFeedback { delta };
    }
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

/// `f(k)` of the three preference schemes and the ratio `f(10k)/f(k)` on a
/// log-spaced grid of degrees `1..=k_max`.
pub fn preference_curves_json(delta: f64, lambda: f64, k_max: u32) -> Result<String, String> {
    if k_max < 1 {
        return Err("k_max must be at least 1".into());
    }
    let schemes = [
        ("linear", PreferenceScheme::Linear),
        (
            "positive_feedback",
            PreferenceScheme::PositiveFeedback { delta },
        ),
        ("exponential", PreferenceScheme::Exponential { lambda }),
    ];
    for (_, s) in &schemes {
        s.validate().map_err(|e| e.to_string())?;
    }

    let mut ks: Vec<usize> = (0..=60)
        .map(|i| (f64::from(k_max).ln() * f64::from(i) / 60.0).exp().round() as usize)
        .collect();
    ks.dedup();
    let mut out = Map::new();
    out.insert("k".into(), json!(ks));
    for (name, s) in &schemes {
        let weights = ks
            .iter()
            .map(|&k| preference_weight(k, s))
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| e.to_string())?;
        let ratios = ks
            .iter()
            .map(|&k| preference_ratio(k, 10.0, s))
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| e.to_string())?;
        out.insert(
            (*name).into(),
            json!({ "weight": weights, "ratio": ratios }),
        );
    }
    Ok(Value::Object(out).to_string())
}

/// Grows one graph and returns its scalars plus the degree-distribution,
/// rich-club and `k_nn` curves.
pub fn simulate_json(
    preset: &str,
    nodes: usize,
    seed: u64,
    p: Option<f64>,
    delta: Option<f64>,
) -> Result<String, String> {
    let cfg = config(preset, nodes, seed, p, delta)?;
    let g = generate(&cfg).map_err(|e| e.to_string())?;
    let r = report(&g).map_err(|e| e.to_string())?;
    let scalars: Map<String, Value> = Scalar::ALL
        .iter()
        .map(|&s| (s.column().to_string(), json!(r.scalar(s))))
        .collect();
    Ok(json!({
        "config": cfg,
        "internal_links": r.internal_links,
        "external_links": r.external_links,
        "scalars": scalars,
        "degree_distribution": r.curves.degree_distribution,
        "rich_club": r.curves.rich_club,
        "knn": r.curves.knn,
    })
    .to_string())
}

/// Mean degree of the seed nodes sampled every `every` growth steps.
pub fn trajectory_json(
    preset: &str,
    nodes: usize,
    seed: u64,
    every: usize,
    p: Option<f64>,
    delta: Option<f64>,
) -> Result<String, String> {
    let cfg = config(preset, nodes, seed, p, delta)?;
    let t = track_trajectory(&cfg, every).map_err(|e| e.to_string())?;
    Ok(json!({ "config": cfg, "samples": t.samples }).to_string())
}

#[wasm_bindgen(js_name = preferenceCurves)]
pub fn preference_curves(delta: f64, lambda: f64, k_max: u32) -> Result<String, JsError> {
    preference_curves_json(delta, lambda, k_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn simulate(
    preset: &str,
    nodes: usize,
    seed: u64,
    p: Option<f64>,
    delta: Option<f64>,
) -> Result<String, JsError> {
    simulate_json(preset, nodes, seed, p, delta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn trajectory(
    preset: &str,
    nodes: usize,
    seed: u64,
    every: usize,
    p: Option<f64>,
    delta: Option<f64>,
) -> Result<String, JsError> {
    trajectory_json(preset, nodes, seed, every, p, delta).map_err(|e| JsError::new(&e))
}
