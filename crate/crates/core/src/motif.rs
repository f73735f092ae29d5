//! Local structure around a vertex and the six piece shapes.
//!
//! In a cubic graph a vertex that lies on neither a triangle nor a 4-cycle has six
//! distinct vertices at distance two, so it roots a copy of `L` (the depth-2 tree
//! with three internal vertices and six leaves). Conversely every copy of `L` is
//! centered at such a vertex. `L`-detection is therefore a per-vertex check.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    C3,
    C4,
    K23,
    /// House: a square `a b c d` with an apex `w` on the edge `c d`.
    X,
    /// Domino: rows `a b c` and `d e f`, two squares sharing the edge `b e`.
    Y,
    /// Domino plus an apex `z` joined to the corners `a` and `c`.
    Z,
}

impl PieceKind {
    pub const ALL: [PieceKind; 6] = [
        PieceKind::C3,
        PieceKind::C4,
        PieceKind::K23,
        PieceKind::X,
        PieceKind::Y,
        PieceKind::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PieceKind::C3 => "C3",
            PieceKind::C4 => "C4",
            PieceKind::K23 => "K23",
            PieceKind::X => "X",
            PieceKind::Y => "Y",
            PieceKind::Z => "Z",
        }
    }

    pub fn template(self) -> &'static PieceTemplate {
        template_of(self)
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PieceKind {
    type Err = MotifError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PieceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| MotifError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotifError {
    #[error("{kind} has {expected} roles but {found} vertices were given")]
    Arity {
        kind: PieceKind,
        expected: usize,
        found: usize,
    },
    #[error("unknown piece kind {0:?}")]
    UnknownKind(String),
    #[error("template {kind}: {reason}")]
    Template { kind: PieceKind, reason: String },
}

/// Role indices, by kind. Roles are positions in a piece's vertex list.
pub mod role {
    pub const T0: usize = 0;
    pub const T1: usize = 1;
    pub const T2: usize = 2;

    pub const C0: usize = 0;
    pub const C1: usize = 1;
    pub const C2: usize = 2;
    pub const C3: usize = 3;

    pub const P0: usize = 0;
    pub const P1: usize = 1;
    pub const Q0: usize = 2;
    pub const Q1: usize = 3;
    pub const Q2: usize = 4;

    // X: square a b c d, apex w.
    pub const XA: usize = 0;
    pub const XB: usize = 1;
    pub const XC: usize = 2;
    pub const XD: usize = 3;
    pub const XW: usize = 4;

    // Y and Z share a..f; Z adds the apex z.
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    pub const F: usize = 5;
    pub const ZZ: usize = 6;
}

/// Canonical labeled copy of a piece shape plus its degree-2 metadata.
#[derive(Debug)]
pub struct PieceTemplate {
    pub kind: PieceKind,
    pub roles: &'static [&'static str],
    pub edges: &'static [(usize, usize)],
    /// Roles with exactly two template neighbors; only these may touch the rest of
    /// a cubic host graph.
    pub degree_two: &'static [usize],
    /// Adjacent pairs of degree-2 roles.
    pub adjacent_pairs: &'static [(usize, usize)],
    /// Non-adjacent degree-2 pairs `(x, y, via)` with a common neighbor `via`.
    pub distance_two: &'static [(usize, usize, usize)],
}

impl PieceTemplate {
    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x))
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, x: usize) -> usize {
        self.neighbors(x).count()
    }

    pub fn role_index(&self, name: &str) -> Option<usize> {
        self.roles.iter().position(|&r| r == name)
    }

    /// Recomputes the degree-2 metadata from the edge list and compares it with the
    /// declared tables.
    pub fn self_check(&self) -> Result<(), MotifError> {
        let fail = |reason: String| {
            Err(MotifError::Template {
                kind: self.kind,
                reason,
            })
        };
        let k = self.len();
        for &(a, b) in self.edges {
            if a >= k || b >= k || a == b {
                return fail(format!("bad edge ({a}, {b})"));
            }
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if self.edges[..i]
                .iter()
                .any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a))
            {
                return fail(format!("repeated edge ({a}, {b})"));
            }
        }
        if let Some(x) = (0..k).find(|&x| !(2..=3).contains(&self.degree(x))) {
            return fail(format!(
                "role {} has degree {}",
                self.roles[x],
                self.degree(x)
            ));
        }
        let deg2: Vec<usize> = (0..k).filter(|&x| self.degree(x) == 2).collect();
        if deg2 != self.degree_two {
            return fail(format!(
                "degree-2 roles are {deg2:?}, declared {:?}",
                self.degree_two
            ));
        }
        let mut adjacent = Vec::new();
        let mut distance_two = Vec::new();
        for (i, &x) in deg2.iter().enumerate() {
            for &y in &deg2[i + 1..] {
                if self.has_edge(x, y) {
                    adjacent.push((x, y));
                } else if self.neighbors(x).any(|z| self.has_edge(z, y)) {
                    distance_two.push((x, y));
                }
            }
        }
        if adjacent != self.adjacent_pairs {
            return fail(format!("adjacent pairs are {adjacent:?}"));
        }
        let declared: Vec<(usize, usize)> =
            self.distance_two.iter().map(|&(x, y, _)| (x, y)).collect();
        if declared != distance_two {
            return fail(format!(
                "distance-2 pairs are {distance_two:?}, declared {declared:?}"
            ));
        }
        for &(x, y, via) in self.distance_two {
            if !(self.has_edge(x, via) && self.has_edge(via, y)) {
                return fail(format!(
                    "{} is not a common neighbor of {} and {}",
                    via, x, y
                ));
            }
        }
        Ok(())
    }
}

use role::*;

static TEMPLATES: [PieceTemplate; 6] = [
    PieceTemplate {
        kind: PieceKind::C3,
        roles: &["t0", "t1", "t2"],
        edges: &[(T0, T1), (T1, T2), (T0, T2)],
        degree_two: &[T0, T1, T2],
        adjacent_pairs: &[(T0, T1), (T0, T2), (T1, T2)],
        distance_two: &[],
    },
    PieceTemplate {
        kind: PieceKind::C4,
        roles: &["c0", "c1", "c2", "c3"],
        edges: &[(C0, C1), (C1, C2), (C2, C3), (C3, C0)],
        degree_two: &[C0, C1, C2, C3],
        adjacent_pairs: &[(C0, C1), (C0, C3), (C1, C2), (C2, C3)],
        distance_two: &[(C0, C2, C1), (C1, C3, C2)],
    },
    PieceTemplate {
        kind: PieceKind::K23,
        roles: &["p0", "p1", "q0", "q1", "q2"],
        edges: &[(P0, Q0), (P0, Q1), (P0, Q2), (P1, Q0), (P1, Q1), (P1, Q2)],
        degree_two: &[Q0, Q1, Q2],
        adjacent_pairs: &[],
        distance_two: &[(Q0, Q1, P0), (Q0, Q2, P0), (Q1, Q2, P0)],
    },
    PieceTemplate {
        kind: PieceKind::X,
        roles: &["a", "b", "c", "d", "w"],
        edges: &[(XA, XB), (XB, XC), (XC, XD), (XD, XA), (XW, XC), (XW, XD)],
        degree_two: &[XA, XB, XW],
        adjacent_pairs: &[(XA, XB)],
        distance_two: &[(XA, XW, XD), (XB, XW, XC)],
    },
    PieceTemplate {
        kind: PieceKind::Y,
        roles: &["a", "b", "c", "d", "e", "f"],
        edges: &[(A, B), (B, C), (D, E), (E, F), (A, D), (B, E), (C, F)],
        degree_two: &[A, C, D, F],
        adjacent_pairs: &[(A, D), (C, F)],
        distance_two: &[(A, C, B), (D, F, E)],
    },
    PieceTemplate {
        kind: PieceKind::Z,
        roles: &["a", "b", "c", "d", "e", "f", "z"],
        edges: &[
            (A, B),
            (B, C),
            (D, E),
            (E, F),
            (A, D),
            (B, E),
            (C, F),
            (ZZ, A),
            (ZZ, C),
        ],
        degree_two: &[D, F, ZZ],
        adjacent_pairs: &[],
        distance_two: &[(D, F, E), (D, ZZ, A), (F, ZZ, C)],
    },
];

pub fn template_of(kind: PieceKind) -> &'static PieceTemplate {
    let t = &TEMPLATES[kind as usize];
    debug_assert_eq!(t.kind, kind);
    t
}

/// Runs [`PieceTemplate::self_check`] on every template once per process.
pub fn check_templates() -> Result<(), MotifError> {
    static CHECKED: OnceLock<Result<(), MotifError>> = OnceLock::new();
    CHECKED
        .get_or_init(|| {
            PieceKind::ALL
                .iter()
                .try_for_each(|&k| template_of(k).self_check())
        })
        .clone()
}

/// True iff `roles` is an injective map into `g` under which every template edge is
/// an edge of `g` (subgraph containment, chords allowed).
pub fn check_embedding(g: &Graph, kind: PieceKind, roles: &[Vertex]) -> Result<bool, MotifError> {
    let t = template_of(kind);
    if roles.len() != t.len() {
        return Err(MotifError::Arity {
            kind,
            expected: t.len(),
            found: roles.len(),
        });
    }
    let injective = roles
        .iter()
        .enumerate()
        .all(|(i, v)| !roles[..i].contains(v));
    Ok(injective && t.edges.iter().all(|&(x, y)| g.has_edge(roles[x], roles[y])))
}

/// Triangle `(v, w1, w2)` with `w1 < w2` the lexicographically least adjacent pair of
/// neighbors of `v`.
pub fn triangle_through(g: &Graph, v: Vertex) -> Option<[Vertex; 3]> {
    let nb = g.neighbors(v);
    nb.iter().enumerate().find_map(|(i, &w1)| {
        nb[i + 1..]
            .iter()
            .find(|&&w2| g.has_edge(w1, w2))
            .map(|&w2| [v, w1, w2])
    })
}

/// All 4-cycles through `v` as paths `(v, u1, u2, u3)` with `u1, u3` neighbors of `v`
/// and `u2` the antipode, in lexicographic order of `(u1, u2, u3)`. Each cycle appears
/// in both orientations.
pub fn c4s_through(g: &Graph, v: Vertex) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for &u1 in g.neighbors(v) {
        for &u2 in g.neighbors(u1) {
            if u2 == v {
                continue;
            }
            for &u3 in g.neighbors(u2) {
                if u3 != u1 && u3 != v && g.has_edge(u3, v) {
                    out.push([v, u1, u2, u3]);
                }
            }
        }
    }
    out
}

/// Lexicographically least 4-cycle through `v`, see [`c4s_through`].
pub fn c4_through(g: &Graph, v: Vertex) -> Option<[Vertex; 4]> {
    c4s_through(g, v).into_iter().next()
}

/// Embedding of `L` rooted at `center`: its three neighbors and, for each neighbor,
/// the two further vertices reached from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LWitness {
    pub center: Vertex,
    pub neighbors: [Vertex; 3],
    pub leaves: [[Vertex; 2]; 3],
}

impl LWitness {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = vec![self.center];
        vs.extend(self.neighbors);
        vs.extend(self.leaves.iter().flatten());
        vs
    }

    /// The nine edges of the tree.
    pub fn tree_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es: Vec<_> = self.neighbors.iter().map(|&x| (self.center, x)).collect();
        for (x, pair) in self.neighbors.iter().zip(&self.leaves) {
            es.extend(pair.iter().map(|&y| (*x, y)));
        }
        es
    }

    /// Ten distinct vertices of `g` carrying all tree edges.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        vs.iter().all(|&v| v < g.order())
            && vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
            && self.tree_edges().iter().all(|&(x, y)| g.has_edge(x, y))
    }
}

/// `L` rooted at `v`, if `v` has degree 3 and its depth-2 neighborhood is a tree with
/// ten distinct vertices.
pub fn l_witness_at(g: &Graph, v: Vertex) -> Option<LWitness> {
    let nb: [Vertex; 3] = g.neighbors(v).try_into().ok()?;
    let mut leaves = [[0; 2]; 3];
    for (slot, &x) in leaves.iter_mut().zip(&nb) {
        let rest: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&y| y != v).collect();
        *slot = rest.try_into().ok()?;
    }
    let w = LWitness {
        center: v,
        neighbors: nb,
        leaves,
    };
    w.verify(g).then_some(w)
}

/// True iff `v` lies on a triangle or a 4-cycle.
pub fn on_short_cycle(g: &Graph, v: Vertex) -> bool {
    triangle_through(g, v).is_some() || c4_through(g, v).is_some()
}

/// First vertex (by label) on no triangle and no 4-cycle, with its `L` embedding.
/// For cubic graphs, `None` means the graph has no subgraph isomorphic to `L`.
pub fn find_l_witness(g: &Graph) -> Option<LWitness> {
    g.vertices()
        .filter(|&v| !on_short_cycle(g, v))
        .find_map(|v| l_witness_at(g, v))
}
