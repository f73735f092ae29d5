//! Exact answers by exhaustive search, independent of the piece construction.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{verify_total_dominating, Color, Coloring};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::motif::{template_of, LWitness, PieceKind};
use crate::partition::Piece;

pub const DEFAULT_TWO_COLOR_BUDGET: u64 = 100_000_000;
pub const DEFAULT_DOMATIC_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("search cancelled after {nodes} nodes")]
    Cancelled { nodes: u64 },
}

/// Node budget and an optional cancellation flag, polled at every node.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    pub budget: u64,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl SearchLimits {
    pub fn with_budget(budget: u64) -> Self {
        SearchLimits {
            budget,
            cancel: None,
        }
    }
}

/// Open neighborhood hypergraph: one hyperedge `N(v)` per vertex, duplicates kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub order: usize,
    pub edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.order).all(|v| self.degree(v) == r)
    }

    /// No hyperedge is monochromatic.
    pub fn is_proper_two_coloring(&self, colors: &[Color]) -> bool {
        self.edges.iter().all(|e| {
            e.iter().any(|&v| colors[v] == Color::Black)
                && e.iter().any(|&v| colors[v] == Color::White)
        })
    }
}

pub fn onh(g: &Graph) -> Hypergraph {
    Hypergraph {
        order: g.order(),
        edges: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
    }
}

/// Outcome of a completed k-coupon search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouponSearch {
    /// Color class per vertex, if a k-coupon coloring exists.
    pub witness: Option<Vec<usize>>,
    pub nodes: u64,
}

struct CouponSolver<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// `count[u * k + c]`: neighbors of `u` with color `c`.
    count: Vec<u32>,
    free: Vec<u32>,
    used: usize,
    nodes: u64,
    limits: &'a SearchLimits,
}

impl CouponSolver<'_> {
    fn feasible(&self, u: Vertex) -> bool {
        let missing = (0..self.k)
            .filter(|&c| self.count[u * self.k + c] == 0)
            .count();
        missing as u32 <= self.free[u]
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = Some(c);
        for &u in self.g.neighbors(v) {
            self.count[u * self.k + c] += 1;
            self.free[u] -= 1;
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.color[v] = None;
        for &u in self.g.neighbors(v) {
            self.count[u * self.k + c] -= 1;
            self.free[u] += 1;
        }
    }

    /// Unassigned vertex with the most colored neighbors, least label on ties.
    fn pick(&self) -> Option<Vertex> {
        self.g
            .vertices()
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.g.degree(v) as u32 - self.free[v], std::cmp::Reverse(v)))
    }

    fn search(&mut self) -> Result<bool, OracleError> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        // Colors are interchangeable: one previously unused color suffices.
        for c in 0..self.k.min(self.used + 1) {
            self.nodes += 1;
            if self.nodes > self.limits.budget {
                return Err(OracleError::BudgetExhausted { nodes: self.nodes });
            }
            if self
                .limits
                .cancel
                .as_ref()
                .is_some_and(|f| f.load(Ordering::Relaxed))
            {
                return Err(OracleError::Cancelled { nodes: self.nodes });
            }
            let fresh = c == self.used;
            self.assign(v, c);
            if fresh {
                self.used += 1;
            }
            if self.g.neighbors(v).iter().all(|&u| self.feasible(u)) && self.search()? {
                return Ok(true);
            }
            if fresh {
                self.used -= 1;
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Exhaustive search for a coloring with `k` colors in which every open neighborhood
/// contains all `k` colors.
pub fn coupon_search(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<CouponSearch, OracleError> {
    let n = g.order();
    if k == 0 {
        return Ok(CouponSearch {
            witness: Some(vec![0; n]),
            nodes: 0,
        });
    }
    if g.vertices().any(|v| g.degree(v) < k) {
        return Ok(CouponSearch {
            witness: None,
            nodes: 0,
        });
    }
    let mut solver = CouponSolver {
        g,
        k,
        color: vec![None; n],
        count: vec![0; n * k],
        free: g.vertices().map(|v| g.degree(v) as u32).collect(),
        used: 0,
        nodes: 0,
        limits,
    };
    let found = solver.search()?;
    let witness = found.then(|| solver.color.iter().map(|c| c.expect("complete")).collect());
    Ok(CouponSearch {
        witness,
        nodes: solver.nodes,
    })
}

/// A 2-coloring in which every vertex sees both colors, or `None` once the search has
/// ruled one out.
pub fn exact_two_colorable(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Option<Coloring>, OracleError> {
    let res = coupon_search(g, 2, limits)?;
    Ok(res.witness.map(|w| {
        let colors: Vec<Color> = w
            .iter()
            .map(|&c| if c == 0 { Color::Black } else { Color::White })
            .collect();
        Coloring::from_colors(&colors)
    }))
}

/// Total domatic number with a witness partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub d_t: usize,
    /// Class index per vertex; each of the `d_t` classes is a total dominating set.
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl ExactResult {
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.witness.len();
        (0..self.d_t)
            .map(|c| VertexSet::from_iter_in(n, (0..n).filter(|&v| self.witness[v] == c)))
            .collect()
    }

    /// Every class is a total dominating set of `g`.
    pub fn verify_witness(&self, g: &Graph) -> bool {
        self.witness.len() == g.order()
            && self.witness.iter().all(|&c| c < self.d_t.max(1))
            && self.classes().iter().all(|s| verify_total_dominating(g, s))
    }
}

/// Largest `k` with a `k`-coupon coloring, trying `k` from the minimum degree down.
/// `limits.budget` applies to each `k` separately. A graph with an isolated vertex
/// (or no vertices) has `d_t = 0`.
pub fn total_domatic_number(g: &Graph, limits: &SearchLimits) -> Result<ExactResult, OracleError> {
    let start = Instant::now();
    let n = g.order();
    let min_degree = g.min_degree().unwrap_or(0);
    if min_degree == 0 {
        return Ok(ExactResult {
            d_t: 0,
            witness: vec![0; n],
            nodes: 0,
            elapsed: start.elapsed(),
        });
    }
    let mut nodes = 0;
    for k in (2..=min_degree).rev() {
        let res = coupon_search(g, k, limits).map_err(|e| match e {
            OracleError::BudgetExhausted { nodes: m } => {
                OracleError::BudgetExhausted { nodes: nodes + m }
            }
            OracleError::Cancelled { nodes: m } => OracleError::Cancelled { nodes: nodes + m },
        })?;
        nodes += res.nodes;
        if let Some(witness) = res.witness {
            return Ok(ExactResult {
                d_t: k,
                witness,
                nodes,
                elapsed: start.elapsed(),
            });
        }
    }
    Ok(ExactResult {
        d_t: 1,
        witness: vec![0; n],
        nodes,
        elapsed: start.elapsed(),
    })
}

/// All injective maps of `pattern`'s vertices into `host` carrying every pattern edge
/// onto a host edge, up to `limit` results.
pub fn subgraph_embeddings(pattern: &Graph, host: &Graph, limit: usize) -> Vec<Vec<Vertex>> {
    let k = pattern.order();
    // Map pattern vertices in an order where each one (after the first of its
    // component) has an already-mapped neighbor.
    let mut order: Vec<Vertex> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                (
                    pattern.neighbors(x).iter().filter(|&&y| placed[y]).count(),
                    std::cmp::Reverse(x),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; k];
    let mut taken = vec![false; host.order()];
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        order: &[Vertex],
        pattern: &Graph,
        host: &Graph,
        map: &mut [usize],
        taken: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == order.len() {
            out.push(map.to_vec());
            return;
        }
        let x = order[i];
        let anchor = pattern
            .neighbors(x)
            .iter()
            .find(|&&y| map[y] != usize::MAX)
            .map(|&y| map[y]);
        let candidates: Vec<Vertex> = match anchor {
            Some(a) => host.neighbors(a).to_vec(),
            None => host.vertices().collect(),
        };
        for c in candidates {
            if taken[c] {
                continue;
            }
            let fits = pattern
                .neighbors(x)
                .iter()
                .all(|&y| map[y] == usize::MAX || host.has_edge(map[y], c));
            if !fits {
                continue;
            }
            map[x] = c;
            taken[c] = true;
            rec(i + 1, order, pattern, host, map, taken, out, limit);
            taken[c] = false;
            map[x] = usize::MAX;
        }
    }
    rec(
        0, &order, pattern, host, &mut map, &mut taken, &mut out, limit,
    );
    out
}

/// The tree `L`: center 0, children 1..=3, leaves `4 + 2i`, `5 + 2i` under child `1 + i`.
pub fn l_pattern() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    for i in 0..3 {
        edges.extend([(1 + i, 4 + 2 * i), (1 + i, 5 + 2 * i)]);
    }
    Graph::from_edges(10, edges).expect("static pattern")
}

/// Some copy of `L` in `g` found by direct subgraph search.
pub fn search_l_embedding(g: &Graph) -> Option<LWitness> {
    let map = subgraph_embeddings(&l_pattern(), g, 1).pop()?;
    Some(LWitness {
        center: map[0],
        neighbors: [map[1], map[2], map[3]],
        leaves: [[map[4], map[5]], [map[6], map[7]], [map[8], map[9]]],
    })
}

fn template_graph(kind: PieceKind) -> Graph {
    let t = template_of(kind);
    Graph::from_edges(t.len(), t.edges.iter().copied()).expect("templates are simple")
}

/// Every distinct embedded piece of every kind, one role assignment per subgraph.
pub fn all_pieces(g: &Graph) -> Vec<Piece> {
    let mut pieces: Vec<Piece> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for kind in PieceKind::ALL {
        for roles in subgraph_embeddings(&template_graph(kind), g, usize::MAX) {
            let piece = Piece::new(kind, roles);
            if seen.insert(piece.canonical_key()) {
                pieces.push(piece);
            }
        }
    }
    pieces
}

/// Up to `cap` covers of `g` by vertex-disjoint pieces. Intended for small graphs.
pub fn enumerate_f_partitions(g: &Graph, cap: usize) -> Vec<Vec<Piece>> {
    let pieces = all_pieces(g);
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, p) in pieces.iter().enumerate() {
        for &v in &p.roles {
            containing[v].push(i);
        }
    }
    let mut covered = vec![false; g.order()];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    fn rec(
        pieces: &[Piece],
        containing: &[Vec<usize>],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Piece>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let Some(v) = covered.iter().position(|&c| !c) else {
            out.push(chosen.iter().map(|&i| pieces[i].clone()).collect());
            return;
        };
        for &i in &containing[v] {
            if pieces[i].roles.iter().any(|&u| covered[u]) {
                continue;
            }
            for &u in &pieces[i].roles {
                covered[u] = true;
            }
            chosen.push(i);
            rec(pieces, containing, covered, chosen, out, cap);
            chosen.pop();
            for &u in &pieces[i].roles {
                covered[u] = false;
            }
        }
    }
    rec(
        &pieces,
        &containing,
        &mut covered,
        &mut chosen,
        &mut out,
        cap,
    );
    out
}

/// Order-independent identity of a cover, for comparing against enumerated covers.
pub fn canonical_cover(pieces: &[Piece]) -> Vec<(PieceKind, Vec<(Vertex, Vertex)>)> {
    let mut keys: Vec<_> = pieces.iter().map(Piece::canonical_key).collect();
    keys.sort();
    keys
}
