//! Named graphs, vertex truncation and random cubic graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{validate_cubic, Graph, GraphError, Vertex};

/// Retries of the pairing model before giving up on a simple graph.
pub const MAX_PAIRING_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    K4,
    K33,
    Petersen,
    Heawood,
    /// Two `k`-cycles joined by a perfect matching.
    Prism(usize),
    /// A `2k`-cycle with its `k` long diagonals.
    MoebiusLadder(usize),
    Cycle(usize),
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    /// Accepts `k4`, `k33`, `petersen`, `heawood`, and `prism:K`, `moebius_ladder:K`,
    /// `cycle:N` (also written `prism(K)` etc.).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let (name, param) = match s.split_once([':', '(']) {
            Some((name, rest)) => {
                let digits = rest.trim_end_matches(')');
                let p = digits
                    .parse::<usize>()
                    .map_err(|_| GraphError::Generator(format!("bad parameter in {s:?}")))?;
                (name.to_string(), Some(p))
            }
            None => (s.clone(), None),
        };
        let bad = || GraphError::Generator(format!("unknown graph name {s:?}"));
        let need = |p: Option<usize>| {
            p.ok_or_else(|| {
                GraphError::Generator(format!("{name} needs a parameter, e.g. {name}:5"))
            })
        };
        let named = match name.as_str() {
            "k4" if param.is_none() => NamedGraph::K4,
            "k33" | "k3,3" if param.is_none() => NamedGraph::K33,
            "petersen" if param.is_none() => NamedGraph::Petersen,
            "heawood" if param.is_none() => NamedGraph::Heawood,
            "prism" => NamedGraph::Prism(need(param)?),
            "moebius" | "moebius_ladder" | "mobius" => NamedGraph::MoebiusLadder(need(param)?),
            "cycle" => NamedGraph::Cycle(need(param)?),
            _ => return Err(bad()),
        };
        Ok(named)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::K4 => write!(f, "k4"),
            NamedGraph::K33 => write!(f, "k33"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Heawood => write!(f, "heawood"),
            NamedGraph::Prism(k) => write!(f, "prism:{k}"),
            NamedGraph::MoebiusLadder(k) => write!(f, "moebius_ladder:{k}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
        }
    }
}

/// Builds a graph from LCF notation: a Hamiltonian cycle `0..n` plus, for each `i`,
/// a chord to `i + shifts[i % shifts.len()]`. Each chord must be listed from both ends.
pub fn lcf(n: usize, shifts: &[isize]) -> Result<Graph, GraphError> {
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn gen_named(name: NamedGraph) -> Result<Graph, GraphError> {
    let range = |what: &str, p: usize, min: usize| {
        if p < min {
            Err(GraphError::Generator(format!(
                "{what} requires parameter >= {min}, got {p}"
            )))
        } else {
            Ok(())
        }
    };
    match name {
        NamedGraph::K4 => Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        NamedGraph::K33 => Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))),
        NamedGraph::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        NamedGraph::Heawood => lcf(14, &[5, -5]),
        NamedGraph::Prism(k) => {
            range("prism", k, 3)?;
            let outer = (0..k).map(|i| (i, (i + 1) % k));
            let inner = (0..k).map(|i| (k + i, k + (i + 1) % k));
            let rungs = (0..k).map(|i| (i, i + k));
            Graph::from_edges(2 * k, outer.chain(inner).chain(rungs))
        }
        NamedGraph::MoebiusLadder(k) => {
            range("moebius_ladder", k, 3)?;
            let n = 2 * k;
            let rim = (0..n).map(|i| (i, (i + 1) % n));
            let diagonals = (0..k).map(|i| (i, i + k));
            Graph::from_edges(n, rim.chain(diagonals))
        }
        NamedGraph::Cycle(n) => {
            range("cycle", n, 3)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
    }
}

/// Vertex truncation of a cubic graph. Vertex `v` becomes the triangle
/// `3v, 3v+1, 3v+2`, where corner `3v+i` takes over the edge to the `i`-th
/// (sorted) neighbor of `v`.
pub fn truncate(g: &Graph) -> Result<Graph, GraphError> {
    validate_cubic(g)?;
    let mut edges = Vec::with_capacity(3 * g.order() + g.size());
    for v in g.vertices() {
        let base = 3 * v;
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
    }
    for (u, v) in g.edges() {
        let iu = g.neighbors(u).binary_search(&v).unwrap();
        let iv = g.neighbors(v).binary_search(&u).unwrap();
        edges.push((3 * u + iu, 3 * v + iv));
    }
    Graph::from_edges(3 * g.order(), edges)
}

/// Random cubic graph from the pairing (configuration) model: `3n` half-edges are
/// shuffled and matched consecutively, and the draw is rejected if it has a loop or
/// a repeated edge. Deterministic for a fixed seed.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::Generator(format!(
            "random cubic graphs need an even order >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..MAX_PAIRING_RETRIES {
        points.sort_unstable();
        points.shuffle(&mut rng);
        let pairs = points.chunks_exact(2).map(|c| (c[0], c[1]));
        if let Ok(g) = Graph::from_edges(n, pairs) {
            return Ok(g);
        }
    }
    Err(GraphError::Generator(format!(
        "pairing model produced no simple graph on {n} vertices in {MAX_PAIRING_RETRIES} attempts"
    )))
}
