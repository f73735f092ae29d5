//! The `tdp` command line: argument parsing, input handling and output rendering.
//!
//! [`run`] takes explicit streams so the whole tool can be driven in-process.

pub mod bench;
pub mod certificate;
pub mod commands;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tdp_core::formats::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6};
use tdp_core::generators::{gen_named, gen_random_cubic, truncate, NamedGraph};
use tdp_core::oracle::{SearchLimits, DEFAULT_DOMATIC_BUDGET};
use tdp_core::{Graph, GraphError};

use crate::bench::Family;
use crate::certificate::Certificate;
use crate::commands::{Outcome, EXIT_INPUT, EXIT_OK};

pub use crate::commands::{
    cmd_check, cmd_color, cmd_exact, cmd_verify, EXIT_NEGATIVE, EXIT_UNDECIDED,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "tdp",
    version,
    about = "Total domatic partitions and 2-coupon colorings of cubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    #[arg(long, short, default_value = "-")]
    input: String,
    /// graph6 input may hold one graph per line.
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Node budget of the exact search, per value of k.
    #[arg(long, env = "TDP_BUDGET")]
    budget: Option<u64>,
}

impl SearchArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits::with_budget(self.budget.unwrap_or(DEFAULT_DOMATIC_BUDGET))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check cubicity and search for an L subgraph.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Build a 2-coupon coloring with a certificate.
    Color {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        /// Recorded in the certificate.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compute the total domatic number by exhaustive search.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        /// Recorded in the certificate.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Re-check every claim of a certificate against a graph.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Generate graphs: k4, k33, petersen, heawood, prism:K, moebius:K, cycle:N, random:N.
    Gen {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Replace every vertex by a triangle.
        #[arg(long)]
        truncate: bool,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
    },
    /// Time the construction over a family of graphs or a graph6 file.
    Bench {
        /// graph6 file (one graph per line) instead of a generated family.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Family::Truncated)]
        family: Family,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 16)]
        n_base: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; all cores by default.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        output: TableFormat,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_source(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn out(&mut self, s: &str) {
        let _ = self.stdout.write_all(s.as_bytes());
    }

    fn err(&mut self, s: &str) {
        let _ = writeln!(self.stderr, "tdp: {s}");
    }
}

/// Parses the input into graphs; graph6 errors carry their line number.
fn parse_graphs(text: &str, format: InputFormat) -> Vec<Result<Graph, String>> {
    match format {
        InputFormat::Edges => vec![parse_edge_list(text).map_err(|e| e.to_string())],
        InputFormat::Graph6 => {
            let lines: Vec<(usize, &str)> = text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty())
                .collect();
            if lines.is_empty() {
                return vec![Err("no graph in input".to_string())];
            }
            lines
                .into_iter()
                .map(|(i, l)| parse_graph6(l).map_err(|e| format!("line {i}: {e}")))
                .collect()
        }
    }
}

fn emit(io: &mut Io<'_>, outcome: &Outcome, output: OutputFormat, multi: bool) {
    for note in &outcome.notes {
        io.err(note);
    }
    let s = match output {
        OutputFormat::Json if multi => outcome.cert.to_json_line() + "\n",
        OutputFormat::Json => outcome.cert.to_json() + "\n",
        OutputFormat::Text => commands::render_text(&outcome.cert),
    };
    io.out(&s);
}

/// Runs `f` on every input graph and returns the largest exit code.
fn per_graph(
    io: &mut Io<'_>,
    input: &InputArgs,
    output: OutputFormat,
    f: impl Fn(&Graph) -> Outcome,
) -> i32 {
    let text = match io.read_source(&input.input) {
        Ok(t) => t,
        Err(e) => {
            io.err(&e);
            return EXIT_INPUT;
        }
    };
    let graphs = parse_graphs(&text, input.format);
    let multi = graphs.len() > 1;
    let mut code = EXIT_OK;
    for g in graphs {
        let c = match g {
            Ok(g) => {
                let outcome = f(&g);
                emit(io, &outcome, output, multi);
                outcome.code
            }
            Err(e) => {
                io.err(&e);
                EXIT_INPUT
            }
        };
        code = code.max(c);
    }
    code
}

fn single_graph(io: &mut Io<'_>, input: &InputArgs) -> Result<Graph, String> {
    let text = io.read_source(&input.input)?;
    let mut graphs = parse_graphs(&text, input.format);
    if graphs.len() != 1 {
        return Err(format!("expected one graph, found {}", graphs.len()));
    }
    graphs.pop().expect("one graph")
}

fn verify(
    io: &mut Io<'_>,
    input: &InputArgs,
    cert: &PathBuf,
    output: OutputFormat,
    search: &SearchArgs,
) -> i32 {
    let g = match single_graph(io, input) {
        Ok(g) => g,
        Err(e) => {
            io.err(&e);
            return EXIT_INPUT;
        }
    };
    let cert: Certificate = match std::fs::read_to_string(cert)
        .map_err(|e| e.to_string())
        .and_then(|s| serde_json::from_str(&s).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => {
            io.err(&format!("{}: {e}", cert.display()));
            return EXIT_INPUT;
        }
    };
    let (code, report) = cmd_verify(&g, &cert, &search.limits());
    let s = match output {
        OutputFormat::Json => {
            let v = serde_json::json!({
                "ok": report.is_ok(),
                "mismatches": report.mismatches,
                "undecided": report.undecided,
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for m in &report.mismatches {
                s += &format!("mismatch: {m}\n");
            }
            if let Some(u) = &report.undecided {
                s += &format!("undecided: {u}\n");
            }
            if report.is_ok() {
                s += "ok\n";
            }
            s
        }
    };
    io.out(&s);
    code
}

/// `random:N`, `random(N)`, or any [`NamedGraph`] spelling.
fn generate(name: &str, seed: u64, index: usize) -> Result<Graph, GraphError> {
    let lower = name.trim().to_ascii_lowercase();
    let random_order = lower.strip_prefix("random:").or_else(|| {
        lower
            .strip_prefix("random(")
            .and_then(|r| r.strip_suffix(')'))
    });
    match random_order {
        Some(n) => {
            let n = n
                .trim()
                .parse()
                .map_err(|_| GraphError::Parse(format!("bad order in {name:?}")))?;
            gen_random_cubic(n, seed.wrapping_add(index as u64))
        }
        None => gen_named(name.parse::<NamedGraph>()?),
    }
}

fn gen(
    io: &mut Io<'_>,
    name: &str,
    seed: u64,
    count: usize,
    trunc: bool,
    format: InputFormat,
) -> i32 {
    if format == InputFormat::Edges && count != 1 {
        io.err("edge lists hold one graph; use --count 1");
        return EXIT_INPUT;
    }
    for i in 0..count {
        let g = generate(name, seed, i).and_then(|g| if trunc { truncate(&g) } else { Ok(g) });
        match g {
            Ok(g) => {
                let s = match format {
                    InputFormat::Graph6 => serialize_graph6(&g) + "\n",
                    InputFormat::Edges => serialize_edge_list(&g),
                };
                io.out(&s);
            }
            Err(e) => {
                io.err(&e.to_string());
                return EXIT_INPUT;
            }
        }
    }
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn bench(
    io: &mut Io<'_>,
    input: Option<&str>,
    family: Family,
    count: usize,
    n_base: usize,
    seed: u64,
    jobs: Option<usize>,
    output: TableFormat,
) -> i32 {
    let graphs = match input {
        Some(path) => {
            let text = match io.read_source(path) {
                Ok(t) => t,
                Err(e) => {
                    io.err(&e);
                    return EXIT_INPUT;
                }
            };
            match parse_graphs(&text, InputFormat::Graph6)
                .into_iter()
                .collect::<Result<Vec<_>, _>>()
            {
                Ok(gs) => gs,
                Err(e) => {
                    io.err(&e);
                    return EXIT_INPUT;
                }
            }
        }
        None => match bench::family_graphs(family, count, n_base, seed) {
            Ok(gs) => gs,
            Err(e) => {
                io.err(&e.to_string());
                return EXIT_INPUT;
            }
        },
    };
    let rows = match bench::run_bench(&graphs, jobs) {
        Ok(rows) => rows,
        Err(e) => {
            io.err(&e.to_string());
            return EXIT_INPUT;
        }
    };
    let s = match output {
        TableFormat::Text => bench::render_text(&rows),
        TableFormat::Csv => bench::render_csv(&rows),
    };
    io.out(&s);
    if bench::count(&rows, bench::Status::Failed) > 0 {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match cli.command {
        Command::Check { input, output } => per_graph(&mut io, &input, output, cmd_check),
        Command::Color {
            input,
            output,
            seed,
            search,
        } => {
            let limits = search.limits();
            per_graph(&mut io, &input, output, |g| cmd_color(g, &limits, seed))
        }
        Command::Exact {
            input,
            output,
            seed,
            search,
        } => {
            let limits = search.limits();
            per_graph(&mut io, &input, output, |g| cmd_exact(g, &limits, seed))
        }
        Command::Verify {
            input,
            cert,
            output,
            search,
        } => verify(&mut io, &input, &cert, output, &search),
        Command::Gen {
            name,
            seed,
            count,
            truncate,
            format,
        } => gen(&mut io, &name, seed, count, truncate, format),
        Command::Bench {
            input,
            family,
            count,
            n_base,
            seed,
            jobs,
            output,
        } => bench(
            &mut io,
            input.as_deref(),
            family,
            count,
            n_base,
            seed,
            jobs,
            output,
        ),
    }
}
