//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tdp_cli::certificate::{verify_certificate, Certificate};
use tdp_cli::{cmd_check, cmd_color};
use tdp_core::coloring::{
    base_coloring, dependent_coloring, is_valid_dependent, verify_coupon, Color,
};
use tdp_core::formats::serialize_graph6;
use tdp_core::generators::{gen_named, gen_random_cubic, truncate, NamedGraph};
use tdp_core::motif::{check_templates, find_l_witness, template_of, PieceKind};
use tdp_core::oracle::{
    enumerate_f_partitions, exact_two_colorable, total_domatic_number, SearchLimits,
    DEFAULT_DOMATIC_BUDGET, DEFAULT_TWO_COLOR_BUDGET,
};
use tdp_core::partition::{f_partition_traced, validate_replacement_table};
use tdp_core::{two_coupon_color, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn named(g: NamedGraph) -> Graph {
    gen_named(g).expect("named graph")
}

fn oracle_limits() -> SearchLimits {
    SearchLimits::with_budget(DEFAULT_DOMATIC_BUDGET)
}

/// The constructive corpus: prisms and Moebius ladders for k = 3..50, 200 truncations
/// of random cubic graphs with n_base <= 64, K4 and K33.
fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 3..=50 {
        out.push((format!("prism:{k}"), named(NamedGraph::Prism(k))));
        out.push((format!("moebius:{k}"), named(NamedGraph::MoebiusLadder(k))));
    }
    for i in 0..200u64 {
        let n_base = 4 + 2 * (i as usize % 31);
        let g = truncate(&gen_random_cubic(n_base, 1000 + i).expect("random cubic"))
            .expect("truncation");
        out.push((format!("truncated random:{n_base} seed {}", 1000 + i), g));
    }
    out.push(("k4".into(), named(NamedGraph::K4)));
    out.push(("k33".into(), named(NamedGraph::K33)));
    out
}

fn criterion_1() -> Outcome {
    let limits = oracle_limits();
    let (mut colored, mut skipped) = (0, 0);
    for (name, g) in corpus() {
        if cmd_check(&g).code != 0 {
            skipped += 1;
            continue;
        }
        let out = cmd_color(&g, &limits, None);
        let checks = &out.cert.checks;
        if out.code != 0
            || checks.partition_valid != Some(true)
            || checks.coupon_valid != Some(true)
        {
            return Err(format!(
                "{name}: exit {} checks {checks:?} notes {:?}",
                out.code, out.notes
            ));
        }
        let reparsed: Certificate =
            serde_json::from_str(&out.cert.to_json()).map_err(|e| e.to_string())?;
        let report = verify_certificate(&g, &reparsed, &limits);
        if !report.is_ok() {
            return Err(format!("{name}: verifier rejected certificate: {report:?}"));
        }
        colored += 1;
    }
    Ok(format!(
        "{colored} graphs colored and re-verified, {skipped} skipped as not L-free"
    ))
}

/// Distinct labelled cubic L-free graphs on at most 14 vertices: small corpus members plus
/// random cubic graphs.
fn small_l_free() -> Vec<(String, Graph)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut add = |name: String, g: Graph| {
        if g.order() <= 14 && cmd_check(&g).code == 0 && seen.insert(serialize_graph6(&g)) {
            out.push((name, g));
        }
    };
    for (name, g) in corpus() {
        add(name, g);
    }
    for n in (4..=14).step_by(2) {
        for seed in 0..300 {
            add(
                format!("random:{n} seed {seed}"),
                gen_random_cubic(n, seed).expect("random cubic"),
            );
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let limits = SearchLimits::with_budget(DEFAULT_TWO_COLOR_BUDGET);
    let graphs = small_l_free();
    let mut enumerated = 0;
    for (name, g) in &graphs {
        match exact_two_colorable(g, &limits) {
            Ok(Some(_)) => {}
            Ok(None) => return Err(format!("{name}: exact search found no 2-coupon coloring")),
            Err(e) => return Err(format!("{name}: {e}")),
        }
        let (partition, _) = f_partition_traced(g).map_err(|e| format!("{name}: {e}"))?;
        let coloring = two_coupon_color(g, &partition).map_err(|e| format!("{name}: {e}"))?;
        if verify_coupon(g, &coloring) != Ok(true) {
            return Err(format!("{name}: constructed coloring fails verify_coupon"));
        }
        if g.order() <= 12 {
            if enumerate_f_partitions(g, 1).is_empty() {
                return Err(format!("{name}: no piece cover found by enumeration"));
            }
            enumerated += 1;
        }
    }
    Ok(format!("{} labelled L-free cubic graphs with n <= 14 agree with the exact search, {enumerated} covers enumerated", graphs.len()))
}

fn criterion_3() -> Outcome {
    let g = named(NamedGraph::Heawood);
    let start = Instant::now();
    let witness = find_l_witness(&g).ok_or("Heawood graph: no L witness")?;
    let r =
        total_domatic_number(&g, &oracle_limits()).map_err(|e| format!("Heawood graph: {e}"))?;
    let elapsed = start.elapsed();
    if r.d_t != 1 {
        return Err(format!("Heawood graph: d_t = {}", r.d_t));
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("Heawood graph: search took {elapsed:?}"));
    }
    Ok(format!(
        "L centered at {}, d_t = 1 proven in {} nodes, {elapsed:?}",
        witness.center, r.nodes
    ))
}

fn criterion_4() -> Outcome {
    let limits = SearchLimits::with_budget(DEFAULT_TWO_COLOR_BUDGET);
    for n in 4..=24 {
        let g = named(NamedGraph::Cycle(n));
        let colorable = exact_two_colorable(&g, &limits)
            .map_err(|e| format!("cycle {n}: {e}"))?
            .is_some();
        if colorable != (n % 4 == 0) {
            return Err(format!("cycle {n}: 2-coupon colorable = {colorable}"));
        }
    }
    Ok("21 of 21 cycles match n = 0 mod 4".into())
}

fn criterion_5() -> Outcome {
    check_templates().map_err(|e| e.to_string())?;
    for kind in [PieceKind::C4, PieceKind::K23, PieceKind::X, PieceKind::Y] {
        let colors = base_coloring(kind).map_err(|e| e.to_string())?;
        let t = template_of(kind);
        for role in 0..t.len() {
            let seen: BTreeSet<Color> = t.neighbors(role).map(|r| colors[r]).collect();
            if seen.len() != 2 {
                return Err(format!("{kind} base coloring: role {role} sees {seen:?}"));
            }
        }
    }
    let mut entries = 0;
    for kind in [PieceKind::C3, PieceKind::Z] {
        for &role in template_of(kind).degree_two {
            for color in [Color::Black, Color::White] {
                let colors = dependent_coloring(kind, role, color).map_err(|e| e.to_string())?;
                if !is_valid_dependent(kind, role, color, colors) {
                    return Err(format!(
                        "{kind} role {role} {color}: invalid entry {colors:?}"
                    ));
                }
                entries += 1;
            }
        }
    }
    validate_replacement_table().map_err(|e| e.to_string())?;
    Ok(format!(
        "4 base colorings, {entries} dependent entries, replacement table valid"
    ))
}

fn criterion_6() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut largest = 0;
    for i in 0..1000u64 {
        let n_base = 4 + 2 * (i as usize % 32);
        let seed = 50_000 + i;
        let g = truncate(&gen_random_cubic(n_base, seed).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let start = Instant::now();
        let (partition, _) =
            f_partition_traced(&g).map_err(|e| format!("n_base {n_base} seed {seed}: {e}"))?;
        let coloring = two_coupon_color(&g, &partition)
            .map_err(|e| format!("n_base {n_base} seed {seed}: {e}"))?;
        let elapsed = start.elapsed();
        if verify_coupon(&g, &coloring) != Ok(true) {
            return Err(format!(
                "n_base {n_base} seed {seed}: coloring fails verification"
            ));
        }
        if elapsed >= Duration::from_secs(1) {
            return Err(format!("n_base {n_base} seed {seed}: took {elapsed:?}"));
        }
        slowest = slowest.max(elapsed);
        largest = largest.max(g.order());
    }
    Ok(format!(
        "1000 graphs up to n = {largest}, slowest {slowest:?}"
    ))
}

fn criterion_7() -> Outcome {
    let limits = oracle_limits();
    let inputs = [
        ("prism:7", named(NamedGraph::Prism(7))),
        ("moebius:9", named(NamedGraph::MoebiusLadder(9))),
        ("heawood", named(NamedGraph::Heawood)),
        ("cycle:16", named(NamedGraph::Cycle(16))),
        (
            "truncated random:40",
            truncate(&gen_random_cubic(40, 7).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?,
        ),
    ];
    for (name, g) in &inputs {
        let runs: Vec<String> = (0..3)
            .map(|_| {
                cmd_color(g, &limits, Some(42))
                    .cert
                    .without_timing()
                    .to_json()
            })
            .collect();
        if runs.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!("{name}: certificates differ between runs"));
        }
    }
    Ok(format!(
        "{} inputs, 3 runs each, byte-identical",
        inputs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("constructive suite", criterion_1),
        ("oracle cross-check", criterion_2),
        ("negative certificate", criterion_3),
        ("cycle law", criterion_4),
        ("table derivations", criterion_5),
        ("invariant fuzzing", criterion_6),
        ("determinism", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("PASS criterion {} ({name}): {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
