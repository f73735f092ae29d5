//! Batch runs of the construction over generated or supplied graphs.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use tdp_core::coloring::{two_coupon_color, verify_coupon};
use tdp_core::generators::{gen_named, gen_random_cubic, truncate, NamedGraph};
use tdp_core::motif::find_l_witness;
use tdp_core::partition::{f_partition, validate_partition};
use tdp_core::{validate_cubic, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// Truncations of random cubic graphs on `n_base` vertices.
    Truncated,
    /// Random cubic graphs on `n_base` vertices.
    Random,
    /// Prisms with `k = n_base + i`.
    Prism,
    /// Moebius ladders with `k = n_base + i`.
    Moebius,
}

/// The `count` graphs of a family; graph `i` uses seed `seed + i`.
pub fn family_graphs(
    family: Family,
    count: usize,
    n_base: usize,
    seed: u64,
) -> Result<Vec<Graph>, GraphError> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            match family {
                Family::Truncated => truncate(&gen_random_cubic(n_base, s)?),
                Family::Random => gen_random_cubic(n_base, s),
                Family::Prism => gen_named(NamedGraph::Prism(n_base + i)),
                Family::Moebius => gen_named(NamedGraph::MoebiusLadder(n_base + i)),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Colored,
    NotCubic,
    LWitness,
    Failed,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Colored => "colored",
            Status::NotCubic => "not-cubic",
            Status::LWitness => "l-witness",
            Status::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub pieces: Option<usize>,
    pub status: Status,
    pub detail: String,
    pub micros: u128,
}

/// Runs partition, coloring and both re-checks on one graph.
pub fn bench_graph(index: usize, g: &Graph) -> BenchRow {
    let start = Instant::now();
    let mut row = BenchRow {
        index,
        n: g.order(),
        m: g.size(),
        pieces: None,
        status: Status::Colored,
        detail: String::new(),
        micros: 0,
    };
    if let Err(e) = validate_cubic(g) {
        row.status = Status::NotCubic;
        row.detail = e.to_string();
    } else if let Some(w) = find_l_witness(g) {
        row.status = Status::LWitness;
        row.detail = format!("center {}", w.center);
    } else {
        match f_partition(g) {
            Ok(p) => {
                row.pieces = Some(p.pieces().len());
                let checked = validate_partition(g, p.pieces())
                    .map_err(|e| e.to_string())
                    .and_then(|_| two_coupon_color(g, &p).map_err(|e| e.to_string()))
                    .and_then(|c| verify_coupon(g, &c).map_err(|e| e.to_string()));
                match checked {
                    Ok(true) => {}
                    Ok(false) => {
                        row.status = Status::Failed;
                        row.detail = "coloring is not a 2-coupon coloring".to_string();
                    }
                    Err(e) => {
                        row.status = Status::Failed;
                        row.detail = e;
                    }
                }
            }
            Err(e) => {
                row.status = Status::Failed;
                row.detail = e.to_string();
            }
        }
    }
    row.micros = start.elapsed().as_micros();
    row
}

/// Benchmarks every graph; rows come back in input order.
pub fn run_bench(
    graphs: &[Graph],
    jobs: Option<usize>,
) -> Result<Vec<BenchRow>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()?;
    Ok(pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| bench_graph(i, g))
            .collect()
    }))
}

pub fn count(rows: &[BenchRow], status: Status) -> usize {
    rows.iter().filter(|r| r.status == status).count()
}

pub fn render_text(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>6} {:>6} {:>6} {:>6} {:>10} {:>10}  detail\n",
        "index", "n", "m", "pieces", "status", "time_us"
    );
    for r in rows {
        let pieces = r.pieces.map_or("-".to_string(), |p| p.to_string());
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>6} {:>6} {:>10} {:>10}  {}",
            r.index,
            r.n,
            r.m,
            pieces,
            r.status.name(),
            r.micros,
            r.detail
        );
    }
    let total: u128 = rows.iter().map(|r| r.micros).sum();
    let max = rows.iter().map(|r| r.micros).max().unwrap_or(0);
    let _ = writeln!(
        out,
        "graphs: {}  colored: {}  l-witness: {}  not-cubic: {}  failed: {}  total_us: {}  max_us: {}",
        rows.len(),
        count(rows, Status::Colored),
        count(rows, Status::LWitness),
        count(rows, Status::NotCubic),
        count(rows, Status::Failed),
        total,
        max
    );
    out
}

pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("index,n,m,pieces,status,time_us,detail\n");
    for r in rows {
        let pieces = r.pieces.map_or(String::new(), |p| p.to_string());
        let detail = r.detail.replace('"', "\"\"");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},\"{}\"",
            r.index,
            r.n,
            r.m,
            pieces,
            r.status.name(),
            r.micros,
            detail
        );
    }
    out
}
