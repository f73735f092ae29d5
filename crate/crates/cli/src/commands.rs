//! Command implementations, independent of argument parsing and I/O.

use std::time::Instant;

use tdp_core::coloring::{two_coupon_color, Color};
use tdp_core::oracle::{total_domatic_number, ExactResult, SearchLimits};
use tdp_core::partition::{f_partition_traced, PartitionError};
use tdp_core::Graph;

use crate::certificate::{
    verify_certificate, Certificate, Mode, OracleRecord, Source, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
/// Unreadable input, or a non-cubic graph passed to `check`.
pub const EXIT_INPUT: i32 = 1;
/// An L witness, a proven `d_t = 1`, or a failed verification.
pub const EXIT_NEGATIVE: i32 = 2;
/// Budget exhausted or the instance is outside what the tool decides.
pub const EXIT_UNDECIDED: i32 = 3;

/// Largest order the `color` command hands to the exact search.
pub const ORACLE_MAX_ORDER: usize = 32;

/// A certificate plus the exit code and diagnostics it implies.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub cert: Certificate,
    pub notes: Vec<String>,
}

pub fn cmd_check(g: &Graph) -> Outcome {
    let cert = Certificate::new(g, Mode::Check, None);
    let (code, notes) = match (&cert.l_witness, cert.checks.cubic) {
        (_, false) => (EXIT_INPUT, vec![not_cubic_note(g)]),
        (Some(w), true) => (
            EXIT_NEGATIVE,
            vec![format!("L subgraph centered at vertex {}", w.center)],
        ),
        (None, true) => (EXIT_OK, Vec::new()),
    };
    Outcome { code, cert, notes }
}

fn not_cubic_note(g: &Graph) -> String {
    match tdp_core::validate_cubic(g) {
        Err(e) => format!("not cubic: {e}"),
        Ok(()) => "not cubic".to_string(),
    }
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

fn colors_from_witness(r: &ExactResult) -> Vec<Color> {
    r.witness
        .iter()
        .map(|&c| if c == 0 { Color::Black } else { Color::White })
        .collect()
}

/// Runs the exact search and records it; a coloring is attached when `d_t >= 2`.
fn attach_oracle(g: &Graph, cert: &mut Certificate, limits: &SearchLimits) -> Result<usize, u64> {
    let start = Instant::now();
    let res = total_domatic_number(g, limits);
    cert.oracle = Some(OracleRecord::from_result(&res, millis(start)));
    match res {
        Ok(r) => {
            if r.d_t >= 2 {
                cert.set_coloring(g, &colors_from_witness(&r), Source::Oracle);
            }
            Ok(r.d_t)
        }
        Err(e) => Err(match e {
            tdp_core::oracle::OracleError::BudgetExhausted { nodes }
            | tdp_core::oracle::OracleError::Cancelled { nodes } => nodes,
        }),
    }
}

fn oracle_code(d_t: Result<usize, u64>, notes: &mut Vec<String>) -> i32 {
    match d_t {
        Ok(d) if d >= 2 => EXIT_OK,
        Ok(d) => {
            notes.push(format!("no 2-coupon coloring: d_t = {d}"));
            EXIT_NEGATIVE
        }
        Err(nodes) => {
            notes.push(format!("search budget exhausted after {nodes} nodes"));
            EXIT_UNDECIDED
        }
    }
}

/// Cover plus coloring for L-free cubic graphs; exact search for small other graphs.
pub fn cmd_color(g: &Graph, limits: &SearchLimits, seed: Option<u64>) -> Outcome {
    let mut cert = Certificate::new(g, Mode::Color, seed);
    let mut notes = Vec::new();

    if cert.checks.l_free == Some(true) {
        let code = match f_partition_traced(g) {
            Ok((partition, _)) => {
                cert.set_partition(g, partition.pieces());
                match two_coupon_color(g, &partition).and_then(|c| c.to_vec()) {
                    Ok(colors) => {
                        cert.set_coloring(g, &colors, Source::Construction);
                        if cert.checks.partition_valid == Some(true)
                            && cert.checks.coupon_valid == Some(true)
                        {
                            EXIT_OK
                        } else {
                            notes
                                .push("constructed certificate failed re-verification".to_string());
                            EXIT_NEGATIVE
                        }
                    }
                    Err(e) => {
                        notes.push(format!("coloring failed: {e}"));
                        EXIT_NEGATIVE
                    }
                }
            }
            Err(PartitionError::InvariantBreach(b)) => {
                notes.push(format!(
                    "invariant breach at step {} (vertex {}, {}): {}",
                    b.step, b.vertex, b.case, b.reason
                ));
                notes.push(format!("pieces so far: {:?}", b.pieces));
                notes.push(format!("trace: {:?}", b.trace));
                EXIT_NEGATIVE
            }
            Err(e) => {
                notes.push(format!("partition failed: {e}"));
                EXIT_NEGATIVE
            }
        };
        return Outcome { code, cert, notes };
    }

    if let Some(w) = &cert.l_witness {
        notes.push(format!("L subgraph centered at vertex {}", w.center));
    } else if !cert.checks.cubic {
        notes.push(not_cubic_note(g));
    }
    if g.order() > ORACLE_MAX_ORDER {
        notes.push(format!(
            "exact search is limited to n <= {ORACLE_MAX_ORDER}"
        ));
        return Outcome {
            code: EXIT_UNDECIDED,
            cert,
            notes,
        };
    }
    let d_t = attach_oracle(g, &mut cert, limits);
    let code = oracle_code(d_t, &mut notes);
    Outcome { code, cert, notes }
}

pub fn cmd_exact(g: &Graph, limits: &SearchLimits, seed: Option<u64>) -> Outcome {
    let mut cert = Certificate::new(g, Mode::Exact, seed);
    let mut notes = Vec::new();
    let code = match attach_oracle(g, &mut cert, limits) {
        Ok(_) => EXIT_OK,
        Err(nodes) => {
            notes.push(format!("search budget exhausted after {nodes} nodes"));
            EXIT_UNDECIDED
        }
    };
    Outcome { code, cert, notes }
}

pub fn cmd_verify(g: &Graph, cert: &Certificate, limits: &SearchLimits) -> (i32, VerifyReport) {
    let report = verify_certificate(g, cert, limits);
    let code = if !report.mismatches.is_empty() {
        EXIT_NEGATIVE
    } else if report.undecided.is_some() {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    (code, report)
}

/// Human-readable summary of a certificate.
pub fn render_text(cert: &Certificate) -> String {
    let yn = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    let mut out = format!(
        "graph: n={} m={} graph6={}\ncubic: {}  l_free: {}\n",
        cert.input.n,
        cert.input.m,
        cert.input.graph6,
        yn(Some(cert.checks.cubic)),
        yn(cert.checks.l_free)
    );
    if let Some(w) = &cert.l_witness {
        out += &format!(
            "l_witness: center {} neighbors {:?} leaves {:?}\n",
            w.center, w.neighbors, w.leaves
        );
    }
    if let Some(pieces) = &cert.partition {
        let list: Vec<String> = pieces
            .iter()
            .map(|p| format!("{}{:?}", p.kind, p.vertices))
            .collect();
        out += &format!(
            "partition ({}): {}\n",
            yn(cert.checks.partition_valid),
            list.join(" ")
        );
    }
    if let Some(colors) = &cert.coloring {
        let s: String = colors.iter().map(|c| format!("{c:?}")).collect();
        out += &format!("coloring ({}): {}\n", yn(cert.checks.coupon_valid), s);
    }
    if let Some(o) = &cert.oracle {
        let d = o.d_t.map_or("?".to_string(), |d| d.to_string());
        out += &format!(
            "d_t: {d} (proven: {}, nodes: {}, {} ms)\n",
            yn(Some(o.proven)),
            o.nodes,
            o.time_ms
        );
    }
    out
}
