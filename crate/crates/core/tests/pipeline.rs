use std::io::Cursor;

use pfp_core::edgelist::{read_edge_list, to_edge_list_string};
use pfp_core::generators::{generate, ModelConfig, Preset};
use pfp_core::harness::{
    run_table2, track_trajectory, write_curves, write_runs_csv, write_trajectory_csv,
};
use pfp_core::metrics::{report, CurveKind, Scalar};

#[test]
fn edge_list_round_trip_preserves_metrics() {
    let g = generate(&ModelConfig::preset(Preset::Pfp, 1500, 21)).unwrap();
    let text = to_edge_list_string(&g);
    let (back, stats) = read_edge_list(Cursor::new(text.as_bytes())).unwrap();
    assert_eq!((stats.self_loops, stats.duplicates), (0, 0));
    assert_eq!(
        back.edges().collect::<Vec<_>>(),
        g.edges().collect::<Vec<_>>()
    );
    assert_eq!(to_edge_list_string(&back), text);

    let (a, b) = (report(&g).unwrap(), report(&back).unwrap());
    for s in Scalar::ALL {
        if s != Scalar::LinkRatio {
            assert_eq!(a.scalar(s), b.scalar(s), "{s:?}");
        }
    }
    // link provenance does not survive a plain edge list
    assert_eq!(b.scalar(Scalar::LinkRatio), None);
    assert_eq!(a.curves, b.curves);
}

#[test]
fn small_experiment_writes_every_output() {
    let t = run_table2(100, 2, 4).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    write_runs_csv(&t, &mut runs).unwrap();
    write_curves(&t, dir.path()).unwrap();

    let runs = String::from_utf8(runs).unwrap();
    assert_eq!(runs.lines().count(), 1 + 4 * (2 + 3));
    for cell in &t.cells {
        assert_eq!(cell.mean(Scalar::Nodes), Some(100.0));
        assert_eq!(cell.mean(Scalar::Links), Some(300.0));
        for kind in CurveKind::ALL {
            let path = dir
                .path()
                .join(&cell.label)
                .join(format!("{}.csv", kind.file_stem()));
            assert!(path.exists(), "{}", path.display());
        }
    }
}

#[test]
fn feedback_accelerates_seed_node_growth() {
    let mean_at_end = |preset| {
        let t = track_trajectory(&ModelConfig::preset(preset, 3000, 8), 500).unwrap();
        assert_eq!(t.samples.first(), Some(&(10, 6.0)));
        assert!(t.samples.windows(2).all(|w| w[0].1 <= w[1].1));
        t.samples.last().unwrap().1
    };
    let (ba, pfp) = (mean_at_end(Preset::Ba), mean_at_end(Preset::Pfp));
    assert!(pfp > 2.0 * ba, "pfp {pfp} vs ba {ba}");

    let t = track_trajectory(&ModelConfig::preset(Preset::Ig, 100, 1), 30).unwrap();
    let mut csv = Vec::new();
    write_trajectory_csv(&t, &mut csv).unwrap();
    let csv = String::from_utf8(csv).unwrap();
    let ns: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ns, ["10", "40", "70", "100"]);
}
