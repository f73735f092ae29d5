//! JSON certificates and their re-verification.
//!
//! Every `checks` field is recomputed from the graph when the certificate is built, and
//! [`verify_certificate`] recomputes all of them again from nothing but the graph and
//! the certificate.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use tdp_core::coloring::{verify_coupon, Color, Coloring};
use tdp_core::formats::serialize_graph6;
use tdp_core::motif::{find_l_witness, LWitness, PieceKind};
use tdp_core::oracle::{total_domatic_number, ExactResult, OracleError, SearchLimits};
use tdp_core::partition::{validate_partition, Piece};
use tdp_core::{validate_cubic, Graph};

pub const FORMAT: &str = "tdp-cert/1";
pub const TOOL_VERSION: &str = concat!("tdp ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Check,
    Color,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorTag {
    B,
    W,
}

impl From<Color> for ColorTag {
    fn from(c: Color) -> Self {
        match c {
            Color::Black => ColorTag::B,
            Color::White => ColorTag::W,
        }
    }
}

impl From<ColorTag> for Color {
    fn from(c: ColorTag) -> Self {
        match c {
            ColorTag::B => Color::Black,
            ColorTag::W => Color::White,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Piece cover plus colorings of the pieces.
    Construction,
    /// Witness of the exact search.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    /// SHA-256 of the graph6 string.
    pub sha256: String,
    pub edges: Vec<[usize; 2]>,
}

impl InputDescriptor {
    pub fn of(g: &Graph) -> Self {
        let graph6 = serialize_graph6(g);
        let sha256 = hex::encode(Sha256::digest(graph6.as_bytes()));
        InputDescriptor {
            n: g.order(),
            m: g.size(),
            graph6,
            sha256,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub center: usize,
    pub neighbors: [usize; 3],
    pub leaves: [[usize; 2]; 3],
}

impl From<&LWitness> for WitnessRecord {
    fn from(w: &LWitness) -> Self {
        WitnessRecord {
            center: w.center,
            neighbors: w.neighbors,
            leaves: w.leaves,
        }
    }
}

impl From<&WitnessRecord> for LWitness {
    fn from(w: &WitnessRecord) -> Self {
        LWitness {
            center: w.center,
            neighbors: w.neighbors,
            leaves: w.leaves,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceRecord {
    pub kind: String,
    /// Vertices in template role order.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub cubic: bool,
    /// `null` when the graph is not cubic.
    pub l_free: Option<bool>,
    pub partition_valid: Option<bool>,
    pub coupon_valid: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    /// `null` when the search ran out of budget.
    pub d_t: Option<usize>,
    pub proven: bool,
    pub nodes: u64,
    pub time_ms: u64,
    /// Class index per vertex for the `d_t` total dominating sets.
    pub witness: Option<Vec<usize>>,
}

impl OracleRecord {
    pub fn from_result(res: &Result<ExactResult, OracleError>, time_ms: u64) -> Self {
        match res {
            Ok(r) => OracleRecord {
                d_t: Some(r.d_t),
                proven: true,
                nodes: r.nodes,
                time_ms,
                witness: Some(r.witness.clone()),
            },
            Err(OracleError::BudgetExhausted { nodes } | OracleError::Cancelled { nodes }) => {
                OracleRecord {
                    d_t: None,
                    proven: false,
                    nodes: *nodes,
                    time_ms,
                    witness: None,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub tool_version: String,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub input: InputDescriptor,
    pub l_witness: Option<WitnessRecord>,
    pub partition: Option<Vec<PieceRecord>>,
    pub coloring: Option<Vec<ColorTag>>,
    pub coloring_source: Option<Source>,
    pub checks: Checks,
    pub oracle: Option<OracleRecord>,
}

impl Certificate {
    /// Certificate for `g` with `cubic` and `l_free` filled in; the witness is included
    /// when one exists.
    pub fn new(g: &Graph, mode: Mode, seed: Option<u64>) -> Self {
        let cubic = validate_cubic(g).is_ok();
        let witness = if cubic { find_l_witness(g) } else { None };
        Certificate {
            format: FORMAT.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            mode,
            seed,
            input: InputDescriptor::of(g),
            l_witness: witness.as_ref().map(WitnessRecord::from),
            partition: None,
            coloring: None,
            coloring_source: None,
            checks: Checks {
                cubic,
                l_free: cubic.then_some(witness.is_none()),
                partition_valid: None,
                coupon_valid: None,
            },
            oracle: None,
        }
    }

    /// Attaches a cover and records whether it re-validates against `g`.
    pub fn set_partition(&mut self, g: &Graph, pieces: &[Piece]) {
        self.partition = Some(
            pieces
                .iter()
                .map(|p| PieceRecord {
                    kind: p.kind.name().to_string(),
                    vertices: p.roles.clone(),
                })
                .collect(),
        );
        self.checks.partition_valid = Some(validate_partition(g, pieces).is_ok());
    }

    /// Attaches a complete coloring and records whether it re-verifies against `g`.
    pub fn set_coloring(&mut self, g: &Graph, colors: &[Color], source: Source) {
        self.coloring = Some(colors.iter().map(|&c| c.into()).collect());
        self.coloring_source = Some(source);
        self.checks.coupon_valid =
            Some(verify_coupon(g, &Coloring::from_colors(colors)).unwrap_or(false));
    }

    /// Copy with the wall-clock fields zeroed, for byte comparisons.
    pub fn without_timing(&self) -> Self {
        let mut c = self.clone();
        if let Some(o) = c.oracle.as_mut() {
            o.time_ms = 0;
        }
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }
}

/// Result of re-checking a certificate against a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Claims that did not re-verify.
    pub mismatches: Vec<String>,
    /// The oracle claim could not be re-derived within budget.
    pub undecided: Option<String>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty() && self.undecided.is_none()
    }
}

fn pieces_of(records: &[PieceRecord]) -> Result<Vec<Piece>, String> {
    records
        .iter()
        .map(|r| {
            r.kind
                .parse::<PieceKind>()
                .map(|kind| Piece::new(kind, r.vertices.clone()))
                .map_err(|e| e.to_string())
        })
        .collect()
}

/// Re-runs every check a certificate claims, using only `g` and the certificate.
/// Oracle values are re-derived by a fresh search under `limits`.
pub fn verify_certificate(g: &Graph, cert: &Certificate, limits: &SearchLimits) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut fail = |msg: String| report.mismatches.push(msg);

    if cert.format != FORMAT {
        fail(format!("unsupported format {:?}", cert.format));
    }
    let input = InputDescriptor::of(g);
    if cert.input != input {
        if cert.input.sha256 != input.sha256 {
            fail(format!(
                "input hash {} does not match the graph ({})",
                cert.input.sha256, input.sha256
            ));
        } else {
            fail("input descriptor does not match the graph".to_string());
        }
    }

    let cubic = validate_cubic(g).is_ok();
    if cert.checks.cubic != cubic {
        fail(format!(
            "cubic claimed {}, recomputed {cubic}",
            cert.checks.cubic
        ));
    }
    let l_free = cubic.then(|| find_l_witness(g).is_none());
    if cert.checks.l_free != l_free {
        fail(format!(
            "l_free claimed {:?}, recomputed {l_free:?}",
            cert.checks.l_free
        ));
    }
    if let Some(w) = &cert.l_witness {
        if !LWitness::from(w).verify(g) {
            fail(format!(
                "L witness at vertex {} is not a subgraph of the graph",
                w.center
            ));
        }
    }

    match (&cert.partition, cert.checks.partition_valid) {
        (Some(records), claimed) => {
            let valid = match pieces_of(records) {
                Ok(pieces) => validate_partition(g, &pieces).map_err(|e| e.to_string()),
                Err(e) => Err(e),
            };
            if claimed != Some(valid.is_ok()) {
                fail(format!(
                    "partition_valid claimed {claimed:?}, recomputed {:?}",
                    valid
                ));
            }
        }
        (None, Some(claimed)) => fail(format!("partition_valid = {claimed} without a partition")),
        (None, None) => {}
    }

    match (&cert.coloring, cert.checks.coupon_valid) {
        (Some(tags), claimed) => {
            let colors: Vec<Color> = tags.iter().map(|&t| t.into()).collect();
            let valid = verify_coupon(g, &Coloring::from_colors(&colors)).unwrap_or(false);
            if claimed != Some(valid) {
                fail(format!(
                    "coupon_valid claimed {claimed:?}, recomputed {valid}"
                ));
            }
        }
        (None, Some(claimed)) => fail(format!("coupon_valid = {claimed} without a coloring")),
        (None, None) => {}
    }

    if let Some(o) = &cert.oracle {
        if let (Some(d_t), Some(witness)) = (o.d_t, &o.witness) {
            let claimed = ExactResult {
                d_t,
                witness: witness.clone(),
                nodes: 0,
                elapsed: Default::default(),
            };
            if !claimed.verify_witness(g) {
                fail(format!(
                    "oracle witness does not give {d_t} total dominating sets"
                ));
            }
        }
        if o.proven {
            match total_domatic_number(g, limits) {
                Ok(r) if Some(r.d_t) == o.d_t => {}
                Ok(r) => fail(format!("d_t claimed {:?}, recomputed {}", o.d_t, r.d_t)),
                Err(e) => report.undecided = Some(format!("could not re-derive d_t: {e}")),
            }
        }
    }
    report
}
