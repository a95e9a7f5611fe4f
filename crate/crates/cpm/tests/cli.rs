use cpm::census::{enumerate_census, CensusOptions, ClassFilter, RadiusFilter, Verification};
use cpm::formats::{parse_adjacency, parse_edge_list, parse_witness_json, JsonRecord};
use cpm_core::graphs::{build_component, Adjacency};
use cpm_core::maps::check_isomorphism;
use cpm_core::Params;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cpm").chain(args.iter().copied());
    let code = cpm::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(jsonl: &str) -> Vec<JsonRecord> {
    jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn classify_half_arc_transitive_example() {
    let (code, out, _) = run(&["classify", "--m", "3", "--s", "2", "--n", "7", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("HAT"), "{out}");
    assert!(out.contains("|Aut| 1176"), "{out}");
    assert!(out.contains("order: 294"), "{out}");
    assert!(out.contains("confirmed"), "{out}");
}

#[test]
fn invalid_parameters_exit_with_one() {
    let (code, _, err) = run(&["classify", "--m", "3", "--s", "2", "--n", "8", "--r", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, _) = run(&["classify", "--m", "3"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn small_two_arc_transitive_classes() {
    let (code, out, _) = run(&["census", "--max-order", "100", "--class", "2at", "--format", "jsonl"]);
    assert_eq!(code, 0);
    let orders: Vec<u64> = records(&out).iter().map(|r| r.order).collect();
    assert!(orders.contains(&16) && orders.contains(&54), "{orders:?}");
    assert!(records(&out).iter().all(|r| r.class == "2AT"));
}

#[test]
fn order_sixteen_is_one_class() {
    let (code, out, _) = run(&["census", "--max-order", "16", "--format", "jsonl", "--all-r", "--members"]);
    assert_eq!(code, 0);
    let recs: Vec<_> = records(&out).into_iter().filter(|r| r.order == 16).collect();
    let params: Vec<_> = recs.iter().map(|r| (r.m, r.s, r.n, r.r)).collect();
    assert!(params.contains(&(1, 2, 4, 1)) && params.contains(&(2, 2, 4, 1)), "{params:?}");
    assert!(recs.windows(2).all(|w| w[0].iso_class == w[1].iso_class), "{params:?}");

    let (_, reps, _) = run(&["census", "--max-order", "16", "--format", "jsonl", "--all-r"]);
    assert_eq!(records(&reps).iter().filter(|r| r.order == 16).count(), 1);
}

#[test]
fn jsonl_is_deterministic() {
    let args = ["census", "--max-order", "300", "--format", "jsonl", "--members"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&[&args[..], &["--threads", "1"]].concat());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn verified_records_are_below_the_threshold() {
    let census = enumerate_census(400, 2, 150).unwrap();
    assert!(census.class_count() > 10);
    for rec in &census.records {
        let expect = if rec.order <= 150 {
            Verification::BruteForceConfirmed
        } else {
            Verification::TheoryOnly
        };
        assert_eq!(rec.verified, expect, "{}", rec.params);
    }
    let members = census.select(ClassFilter::All, RadiusFilter::All, true);
    assert_eq!(members.len(), census.records.len());
    assert_eq!(census.representatives().count(), census.class_count());
}

#[test]
fn census_options_default() {
    let opts = CensusOptions::default();
    assert_eq!(opts.verify_below, 500);
}

#[test]
fn iso_reports_certificate_and_writes_witness() {
    let dir = std::env::temp_dir().join(format!("cpm-witness-{}", std::process::id()));
    let path = dir.with_extension("json");
    let (code, out, err) = run(&[
        "iso",
        "--left",
        "3,2,7,2",
        "--right",
        "3,2,7,4",
        "--verify-below",
        "500",
        "--witness",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("isomorphic (theory); isomorphic"), "{out}");
    let map = parse_witness_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let a = build_component(Params::new(3, 2, 7, 2).unwrap()).unwrap();
    let b = build_component(Params::new(3, 2, 7, 4).unwrap()).unwrap();
    check_isomorphism(&a, &b, &map).unwrap();
}

#[test]
fn iso_open_case_falls_back_to_invariants() {
    let (code, out, _) = run(&["iso", "--left", "6,2,52,3", "--right", "6,2,52,15"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("open-case (theory); NOT isomorphic (invariants)"), "{out}");
}

#[test]
fn iso_different_orders() {
    let (code, out, _) = run(&["iso", "--left", "3,2,7,2", "--right", "3,2,5,2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("NOT isomorphic (theory)"), "{out}");
}

#[test]
fn export_round_trips() {
    let p = Params::new(3, 2, 7, 2).unwrap();
    let g = build_component(p).unwrap();
    let (code, adj, _) = run(&["export", "--m", "3", "--s", "2", "--n", "7", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(adj.starts_with("# CPM 3 2 7 2 294"), "{}", adj.lines().next().unwrap());
    let parsed = parse_adjacency(&adj).unwrap();
    let (_, edges, _) = run(&["export", "--m", "3", "--s", "2", "--n", "7", "--r", "2", "--format", "edges"]);
    let from_edges = parse_edge_list(&edges).unwrap();
    assert_eq!(parsed.order(), 294);
    for x in 0..g.order() {
        let mut a = g.neighbors(x).to_vec();
        let mut b = parsed.neighbors(x).to_vec();
        let mut c = from_edges.neighbors(x).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        c.sort_unstable();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn cycles_table_lists_generic_trace() {
    let (code, out, _) = run(&["cycles", "--m", "3", "--s", "2", "--n", "7", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("anananan ")), "{out}");
}
