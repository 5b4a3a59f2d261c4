use pfp_wasm::{preference_curves_json, simulate_json, trajectory_json, MAX_NODES};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn preference_curves() {
    let v = parse(preference_curves_json(0.021, 1.15, 1000).unwrap());
    let ks: Vec<f64> = serde_json::from_value(v["k"].clone()).unwrap();
    assert_eq!(ks.first(), Some(&1.0));
    assert_eq!(ks.last(), Some(&1000.0));
    assert!(ks.windows(2).all(|w| w[0] < w[1]));

    let linear = &v["linear"];
    assert_eq!(linear["weight"][0], 1.0);
    assert!((linear["ratio"][3].as_f64().unwrap() - 10.0).abs() < 1e-12);
    // positive feedback steepens with degree, the exponential form does not
    let pf: Vec<f64> = serde_json::from_value(v["positive_feedback"]["ratio"].clone()).unwrap();
    assert!(pf.windows(2).all(|w| w[0] < w[1]));
    let ex: Vec<f64> = serde_json::from_value(v["exponential"]["ratio"].clone()).unwrap();
    assert!(ex.iter().all(|r| (r - 10f64.powf(1.15)).abs() < 1e-9));

    assert!(preference_curves_json(-1.0, 1.15, 100).is_err());
    assert!(preference_curves_json(0.021, 0.5, 100).is_err());
    assert!(preference_curves_json(0.021, 1.15, 0).is_err());
}

#[test]
fn simulate_small_graph() {
    let v = parse(simulate_json("pfp", 500, 3, None, None).unwrap());
    assert_eq!(v["scalars"]["n"], 500.0);
    assert_eq!(v["scalars"]["l"], 1500.0);
    assert_eq!(v["config"]["rng_seed"], 3);
    let dd = v["degree_distribution"].as_array().unwrap();
    let total: f64 = dd.iter().map(|pt| pt[1].as_f64().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-12);
    assert!(!v["rich_club"].as_array().unwrap().is_empty());

    // identical input, identical output
    assert_eq!(
        simulate_json("pfp", 500, 3, None, None),
        simulate_json("pfp", 500, 3, None, None)
    );
}

#[test]
fn simulate_overrides() {
    let v = parse(simulate_json("ba", 300, 1, Some(0.0), Some(0.01)).unwrap());
    assert_eq!(v["config"]["growth"]["p"], 0.0);
    assert_eq!(v["config"]["scheme"]["delta"], 0.01);
    // p = 0 always attaches new nodes to two hosts
    assert_eq!(v["scalars"]["p1"], 0.0);

    assert!(simulate_json("nope", 300, 1, None, None).is_err());
    assert!(simulate_json("pfp", MAX_NODES + 1, 1, None, None).is_err());
    assert!(simulate_json("pfp", 300, 1, Some(1.5), None).is_err());
}

#[test]
fn seed_trajectory() {
    let v = parse(trajectory_json("ig", 1000, 2, 100, None, None).unwrap());
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples[0][0], 10);
    assert_eq!(samples[0][1], 6.0);
    assert_eq!(samples.last().unwrap()[0], 1000);
    assert!(trajectory_json("ig", 1000, 2, 0, None, None).is_err());
}
