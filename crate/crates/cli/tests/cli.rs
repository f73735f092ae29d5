use std::process::Command;

use tdp_cli::certificate::{Certificate, ColorTag, Source};
use tdp_cli::{run, EXIT_NEGATIVE, EXIT_UNDECIDED};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tdp(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tdp").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let r = tdp(&full, "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn cert(stdout: &str) -> Certificate {
    serde_json::from_str(stdout).expect("certificate JSON")
}

fn symbols(c: &Certificate) -> String {
    c.coloring
        .as_ref()
        .unwrap()
        .iter()
        .map(|t| format!("{t:?}"))
        .collect()
}

#[test]
fn heawood_check_reports_l_witness() {
    let r = tdp(&["check"], &gen(&["heawood"]));
    assert_eq!(r.code, EXIT_NEGATIVE);
    let c = cert(&r.stdout);
    assert!(c.checks.cubic);
    assert_eq!(c.checks.l_free, Some(false));
    assert!(c.l_witness.is_some());
}

#[test]
fn truncated_k4_is_l_free() {
    let r = tdp(&["check"], &gen(&["k4", "--truncate"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(cert(&r.stdout).checks.l_free, Some(true));
}

#[test]
fn non_cubic_input_is_rejected_by_check() {
    // K5 is 4-regular.
    let k5 = "n 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let r = tdp(&["check", "--format", "edges"], k5);
    assert_eq!(r.code, 1);
    assert!(!cert(&r.stdout).checks.cubic);
    assert!(r.stderr.contains("not cubic"));
}

#[test]
fn malformed_input_is_an_input_error() {
    assert_eq!(tdp(&["check"], "!!!\n").code, 1);
    assert_eq!(tdp(&["check", "--format", "edges"], "n 3\n0 0\n").code, 1);
    assert_eq!(tdp(&["check"], "").code, 1);
    assert_eq!(
        tdp(&["check", "--input", "/nonexistent/graph.g6"], "").code,
        1
    );
    assert_eq!(tdp(&["frobnicate"], "").code, 1);
}

#[test]
fn prism_coloring_matches_reference() {
    let r = tdp(&["color"], &gen(&["prism:3"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let c = cert(&r.stdout);
    assert_eq!(symbols(&c), "BWWBWW");
    assert_eq!(c.coloring_source, Some(Source::Construction));
    let kinds: Vec<&str> = c
        .partition
        .as_ref()
        .unwrap()
        .iter()
        .map(|p| p.kind.as_str())
        .collect();
    assert_eq!(kinds, ["C3", "C3"]);
    assert_eq!(c.checks.partition_valid, Some(true));
    assert_eq!(c.checks.coupon_valid, Some(true));
}

#[test]
fn k33_is_a_single_domino() {
    let r = tdp(&["color"], &gen(&["k33"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let c = cert(&r.stdout);
    let p = c.partition.unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].kind, "Y");
}

#[test]
fn heawood_color_falls_back_to_proven_d_t_one() {
    let r = tdp(&["color"], &gen(&["heawood"]));
    assert_eq!(r.code, EXIT_NEGATIVE);
    let c = cert(&r.stdout);
    let o = c.oracle.unwrap();
    assert_eq!(o.d_t, Some(1));
    assert!(o.proven);
    assert!(c.coloring.is_none());
}

#[test]
fn color_on_small_non_cubic_graph_uses_search() {
    let r = tdp(&["color"], &gen(&["cycle:12"]));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let c = cert(&r.stdout);
    assert_eq!(c.coloring_source, Some(Source::Oracle));
    assert_eq!(c.checks.coupon_valid, Some(true));
    assert_eq!(tdp(&["color"], &gen(&["cycle:10"])).code, EXIT_NEGATIVE);
}

#[test]
fn color_on_large_non_cubic_graph_is_undecided() {
    let r = tdp(&["color"], &gen(&["cycle:40"]));
    assert_eq!(r.code, EXIT_UNDECIDED);
}

#[test]
fn exact_follows_cycle_law_and_k33() {
    for (name, d_t) in [("cycle:12", 2), ("cycle:10", 1), ("k33", 3)] {
        let r = tdp(&["exact"], &gen(&[name]));
        assert_eq!(r.code, 0, "{name}: {}", r.stderr);
        assert_eq!(cert(&r.stdout).oracle.unwrap().d_t, Some(d_t), "{name}");
    }
}

#[test]
fn exhausted_budget_is_undecided() {
    let r = tdp(&["exact", "--budget", "3"], &gen(&["heawood"]));
    assert_eq!(r.code, EXIT_UNDECIDED);
    let o = cert(&r.stdout).oracle.unwrap();
    assert_eq!(o.d_t, None);
    assert!(!o.proven);
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("tdp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_accepts_emitted_certificates() {
    for (name, mode) in [
        ("petersen:t", "color"),
        ("heawood", "color"),
        ("cycle:8", "exact"),
        ("k33", "check"),
    ] {
        let g = match name.strip_suffix(":t") {
            Some(base) => gen(&[base, "--truncate"]),
            None => gen(&[name]),
        };
        let r = tdp(&[mode], &g);
        let path = write_temp(
            &format!("{}-{mode}.json", name.replace(':', "_")),
            &r.stdout,
        );
        let v = tdp(&["verify", "--cert", path.to_str().unwrap()], &g);
        assert_eq!(v.code, 0, "{name} {mode}: {}", v.stdout);
    }
}

#[test]
fn verify_rejects_tampered_certificates() {
    let g = gen(&["prism:4"]);
    let base = cert(&tdp(&["color"], &g).stdout);

    let mut flipped = base.clone();
    let tags = flipped.coloring.as_mut().unwrap();
    tags[0] = match tags[0] {
        ColorTag::B => ColorTag::W,
        ColorTag::W => ColorTag::B,
    };
    let path = write_temp("flipped.json", &flipped.to_json());
    let v = tdp(&["verify", "--cert", path.to_str().unwrap()], &g);
    assert_eq!(v.code, EXIT_NEGATIVE);
    assert!(v.stdout.contains("coupon_valid"));

    let mut other_graph = base.clone();
    other_graph.checks.l_free = Some(false);
    let path = write_temp("lfree.json", &other_graph.to_json());
    assert_eq!(
        tdp(&["verify", "--cert", path.to_str().unwrap()], &g).code,
        EXIT_NEGATIVE
    );

    let path = write_temp("wrong-graph.json", &base.to_json());
    assert_eq!(
        tdp(
            &["verify", "--cert", path.to_str().unwrap()],
            &gen(&["prism:5"])
        )
        .code,
        EXIT_NEGATIVE
    );

    let path = write_temp("garbage.json", "{ not json");
    assert_eq!(
        tdp(&["verify", "--cert", path.to_str().unwrap()], &g).code,
        1
    );
}

#[test]
fn verify_rejects_false_oracle_claims() {
    let g = gen(&["cycle:8"]);
    let mut c = cert(&tdp(&["exact"], &g).stdout);
    let o = c.oracle.as_mut().unwrap();
    o.d_t = Some(1);
    o.witness = Some(vec![0; 8]);
    let path = write_temp("oracle.json", &c.to_json());
    let v = tdp(&["verify", "--cert", path.to_str().unwrap()], &g);
    assert_eq!(v.code, EXIT_NEGATIVE, "{}", v.stdout);
}

#[test]
fn multi_line_graph6_emits_json_lines_with_max_exit_code() {
    let input = gen(&["k4"]) + &gen(&["heawood"]) + &gen(&["prism:5"]);
    let r = tdp(&["check"], &input);
    assert_eq!(r.code, EXIT_NEGATIVE);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    let l_free: Vec<Option<bool>> = lines.iter().map(|l| cert(l).checks.l_free).collect();
    assert_eq!(l_free, [Some(true), Some(false), Some(true)]);
}

#[test]
fn gen_random_is_seeded_and_counted() {
    let a = gen(&["random:20", "--seed", "7", "--count", "3"]);
    let b = gen(&["random:20", "--seed", "7", "--count", "3"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 3);
    assert_ne!(a, gen(&["random:20", "--seed", "8", "--count", "3"]));
    assert_eq!(tdp(&["gen", "random:7"], "").code, 1);
    assert_eq!(tdp(&["gen", "dodecahedron"], "").code, 1);
}

#[test]
fn edge_list_round_trip_through_the_tool() {
    let edges = gen(&["petersen", "--truncate", "--format", "edges"]);
    let r = tdp(&["color", "--format", "edges"], &edges);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let via_graph6 = tdp(&["color"], &gen(&["petersen", "--truncate"]));
    assert_eq!(r.stdout, via_graph6.stdout);
}

#[test]
fn bench_truncated_family_colors_everything() {
    let r = tdp(
        &[
            "bench", "--count", "100", "--n-base", "20", "--seed", "3", "--jobs", "2",
        ],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(
        r.stdout.contains("graphs: 100  colored: 100"),
        "{}",
        r.stdout
    );

    let csv = tdp(
        &[
            "bench", "--family", "prism", "--count", "4", "--n-base", "3", "--output", "csv",
        ],
        "",
    );
    assert_eq!(csv.code, 0);
    let rows: Vec<&str> = csv.stdout.lines().collect();
    assert_eq!(rows[0], "index,n,m,pieces,status,time_us,detail");
    assert_eq!(rows.len(), 5);
    assert!(rows[1..].iter().all(|r| r.contains(",colored,")));
}

#[test]
fn bench_reads_graph6_files() {
    let input = gen(&["k4", "--truncate"]) + &gen(&["heawood"]);
    let path = write_temp("bench.g6", &input);
    let r = tdp(&["bench", "--input", path.to_str().unwrap()], "");
    assert_eq!(r.code, 0);
    assert!(
        r.stdout.contains("colored: 1  l-witness: 1"),
        "{}",
        r.stdout
    );
}

#[test]
fn certificates_are_deterministic() {
    let g = gen(&["random:30", "--seed", "11", "--truncate"]);
    let a = tdp(&["color", "--seed", "11"], &g).stdout;
    let b = tdp(&["color", "--seed", "11"], &g).stdout;
    assert_eq!(a, b);
    assert_eq!(cert(&a).seed, Some(11));
}

#[test]
fn text_output_summarises_the_certificate() {
    let r = tdp(&["color", "--output", "text"], &gen(&["prism:3"]));
    assert!(r.stdout.contains("coloring (yes): BWWBWW"), "{}", r.stdout);
    assert!(
        r.stdout
            .contains("partition (yes): C3[0, 1, 2] C3[3, 4, 5]"),
        "{}",
        r.stdout
    );
}

#[test]
fn budget_environment_variable_and_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_tdp");
    let graph = write_temp("heawood.g6", &gen(&["heawood"]));
    let status = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(bin);
        cmd.args(["exact", "--input", graph.to_str().unwrap()])
            .args(extra);
        match env {
            Some(b) => cmd.env("TDP_BUDGET", b),
            None => cmd.env_remove("TDP_BUDGET"),
        };
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(None, &[]), 0);
    assert_eq!(status(Some("3"), &[]), EXIT_UNDECIDED);
    assert_eq!(status(Some("3"), &["--budget", "1000000"]), 0);
}
