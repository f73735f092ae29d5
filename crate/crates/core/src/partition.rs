//! Incremental construction of a cover of a cubic `L`-free graph by vertex-disjoint
//! pieces (`C3`, `C4`, `K23`, `X`, `Y`, `Z`).
//!
//! The covered set `H` grows one step at a time. Every covered vertex has at least two
//! neighbors inside its own piece, so it has at most one neighbor outside `H`; this is
//! what forces the uncovered neighbors of a new vertex to attach to a single piece in
//! one of a small number of ways, each handled by a row of the [`replacement_table`].

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{validate_cubic, Graph, GraphError, Vertex, VertexSet};
use crate::motif::{
    c4s_through, check_embedding, check_templates, find_l_witness, role::*, template_of,
    MotifError, PieceKind,
};

/// A piece of the cover: `roles[i]` is the vertex playing template role `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub kind: PieceKind,
    pub roles: Vec<Vertex>,
}

impl Piece {
    pub fn new(kind: PieceKind, roles: Vec<Vertex>) -> Self {
        Piece { kind, roles }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.roles
    }

    pub fn role_of(&self, v: Vertex) -> Option<usize> {
        self.roles.iter().position(|&x| x == v)
    }

    pub fn min_vertex(&self) -> Vertex {
        *self.roles.iter().min().expect("pieces are non-empty")
    }

    /// Template edges mapped into the host graph, as sorted `(u, v)` with `u < v`.
    pub fn image_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es: Vec<_> = template_of(self.kind)
            .edges
            .iter()
            .map(|&(x, y)| {
                let (u, v) = (self.roles[x], self.roles[y]);
                (u.min(v), u.max(v))
            })
            .collect();
        es.sort_unstable();
        es
    }

    /// Identifies the embedded subgraph regardless of which automorphism labels it.
    pub fn canonical_key(&self) -> (PieceKind, Vec<(Vertex, Vertex)>) {
        (self.kind, self.image_edges())
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind, self.roles)
    }
}

/// Pieces plus the vertex-to-piece map. The covered set is the union of the pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pieces: Vec<Piece>,
    owner: Vec<Option<usize>>,
}

impl Partition {
    pub fn new(n: usize) -> Self {
        Partition {
            pieces: Vec::new(),
            owner: vec![None; n],
        }
    }

    /// Builds a partition from pieces, checking only that they are disjoint and in range.
    pub fn from_pieces(n: usize, pieces: Vec<Piece>) -> Result<Self, PartitionViolation> {
        let mut p = Partition::new(n);
        for (i, piece) in pieces.into_iter().enumerate() {
            for &v in &piece.roles {
                if v >= n {
                    return Err(PartitionViolation::OutOfRange {
                        piece: i,
                        vertex: v,
                    });
                }
                if p.owner[v].is_some() {
                    return Err(PartitionViolation::Overlap { vertex: v });
                }
                p.owner[v] = Some(i);
            }
            p.pieces.push(piece);
        }
        Ok(p)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<Piece> {
        self.pieces
    }

    pub fn owner(&self, v: Vertex) -> Option<usize> {
        self.owner[v]
    }

    pub fn piece_of(&self, v: Vertex) -> Option<&Piece> {
        self.owner[v].map(|i| &self.pieces[i])
    }

    pub fn is_covered(&self, v: Vertex) -> bool {
        self.owner[v].is_some()
    }

    pub fn covered(&self) -> VertexSet {
        VertexSet::from_iter_in(
            self.owner.len(),
            (0..self.owner.len()).filter(|&v| self.is_covered(v)),
        )
    }

    pub fn is_complete(&self) -> bool {
        self.owner.iter().all(Option::is_some)
    }

    fn push(&mut self, piece: Piece) -> usize {
        let idx = self.pieces.len();
        for &v in &piece.roles {
            self.owner[v] = Some(idx);
        }
        self.pieces.push(piece);
        idx
    }

    /// Replaces piece `idx` by `replacement`, returning the indices now holding it.
    fn replace(&mut self, idx: usize, replacement: Vec<Piece>) -> Vec<usize> {
        let mut slots = Vec::with_capacity(replacement.len());
        let mut it = replacement.into_iter();
        let first = it.next().expect("replacement is non-empty");
        for &v in &first.roles {
            self.owner[v] = Some(idx);
        }
        self.pieces[idx] = first;
        slots.push(idx);
        for piece in it {
            slots.push(self.push(piece));
        }
        slots
    }
}

/// Which way the new vertices attach to an existing piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Two new adjacent vertices close a square on an adjacent degree-2 pair.
    GlueSquare,
    /// One new vertex joined to two degree-2 vertices at distance two.
    Apex,
    /// One new vertex closing a triangle on an adjacent degree-2 pair.
    GlueTriangle,
}

/// Vertex of the glued union: an old role of the piece, or one of the new vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Old(usize),
    New(usize),
}

use Slot::{New as N, Old as O};

/// One replacement: piece `from`, attached at the role pair `anchor` (`anchor.0 <
/// anchor.1`), becomes the pieces `into`.
///
/// New-vertex conventions: for [`Branch::GlueSquare`], `New(0)` is adjacent to
/// `anchor.0`, `New(1)` to `anchor.1`, and `New(0)`–`New(1)` is an edge. For the other
/// branches `New(0)` is adjacent to both anchor roles.
#[derive(Debug)]
pub struct Rule {
    pub branch: Branch,
    pub from: PieceKind,
    pub anchor: (usize, usize),
    pub into: &'static [(PieceKind, &'static [Slot])],
}

macro_rules! rule {
    ($branch:ident, $from:ident, ($x:expr, $y:expr) => $( $kind:ident [$($slot:expr),*] ),+ ) => {
        Rule {
            branch: Branch::$branch,
            from: PieceKind::$from,
            anchor: ($x, $y),
            into: &[ $( (PieceKind::$kind, &[$($slot),*]) ),+ ],
        }
    };
}

static RULES: &[Rule] = &[
    // Square glued onto an adjacent degree-2 pair.
    rule!(GlueSquare, C3, (T0, T1) => X[N(0), N(1), O(T1), O(T0), O(T2)]),
    rule!(GlueSquare, C3, (T0, T2) => X[N(0), N(1), O(T2), O(T0), O(T1)]),
    rule!(GlueSquare, C3, (T1, T2) => X[N(0), N(1), O(T2), O(T1), O(T0)]),
    rule!(GlueSquare, C4, (C0, C1) => Y[N(0), O(C0), O(C3), N(1), O(C1), O(C2)]),
    rule!(GlueSquare, C4, (C1, C2) => Y[N(0), O(C1), O(C0), N(1), O(C2), O(C3)]),
    rule!(GlueSquare, C4, (C2, C3) => Y[N(0), O(C2), O(C1), N(1), O(C3), O(C0)]),
    rule!(GlueSquare, C4, (C0, C3) => Y[N(0), O(C0), O(C1), N(1), O(C3), O(C2)]),
    rule!(GlueSquare, X, (XA, XB) => C3[O(XW), O(XC), O(XD)], C4[O(XA), O(XB), N(1), N(0)]),
    rule!(GlueSquare, Y, (A, D) => C4[O(A), O(D), N(1), N(0)], C4[O(B), O(C), O(F), O(E)]),
    rule!(GlueSquare, Y, (C, F) => C4[O(C), O(F), N(1), N(0)], C4[O(A), O(B), O(E), O(D)]),
    // New vertex joined to two degree-2 vertices at distance two.
    rule!(Apex, C4, (C0, C2) => K23[O(C0), O(C2), O(C1), O(C3), N(0)]),
    rule!(Apex, C4, (C1, C3) => K23[O(C1), O(C3), O(C0), O(C2), N(0)]),
    rule!(Apex, K23, (Q0, Q1) => Y[O(Q2), O(P0), O(Q1), O(P1), O(Q0), N(0)]),
    rule!(Apex, K23, (Q0, Q2) => Y[O(Q1), O(P0), O(Q2), O(P1), O(Q0), N(0)]),
    rule!(Apex, K23, (Q1, Q2) => Y[O(Q0), O(P0), O(Q2), O(P1), O(Q1), N(0)]),
    rule!(Apex, X, (XA, XW) => Y[O(XW), O(XD), O(XC), N(0), O(XA), O(XB)]),
    rule!(Apex, X, (XB, XW) => Y[O(XW), O(XC), O(XD), N(0), O(XB), O(XA)]),
    rule!(Apex, Y, (A, C) => Z[O(A), O(B), O(C), O(D), O(E), O(F), N(0)]),
    rule!(Apex, Y, (D, F) => Z[O(D), O(E), O(F), O(A), O(B), O(C), N(0)]),
    rule!(Apex, Z, (D, F) => C4[O(ZZ), O(A), O(B), O(C)], C4[O(D), O(E), O(F), N(0)]),
    rule!(Apex, Z, (D, ZZ) => C4[O(ZZ), O(A), O(D), N(0)], C4[O(B), O(C), O(F), O(E)]),
    rule!(Apex, Z, (F, ZZ) => C4[O(ZZ), O(C), O(F), N(0)], C4[O(A), O(B), O(E), O(D)]),
    // Triangle closed on an adjacent degree-2 pair.
    rule!(GlueTriangle, C3, (T0, T1) => C4[O(T2), O(T0), N(0), O(T1)]),
    rule!(GlueTriangle, C3, (T0, T2) => C4[O(T1), O(T0), N(0), O(T2)]),
    rule!(GlueTriangle, C3, (T1, T2) => C4[O(T0), O(T1), N(0), O(T2)]),
    rule!(GlueTriangle, C4, (C0, C1) => X[O(C3), O(C2), O(C1), O(C0), N(0)]),
    rule!(GlueTriangle, C4, (C1, C2) => X[O(C0), O(C3), O(C2), O(C1), N(0)]),
    rule!(GlueTriangle, C4, (C2, C3) => X[O(C1), O(C0), O(C3), O(C2), N(0)]),
    rule!(GlueTriangle, C4, (C0, C3) => X[O(C1), O(C2), O(C3), O(C0), N(0)]),
    rule!(GlueTriangle, X, (XA, XB) => C3[N(0), O(XA), O(XB)], C3[O(XC), O(XD), O(XW)]),
    rule!(GlueTriangle, Y, (A, D) => C3[N(0), O(A), O(D)], C4[O(B), O(C), O(F), O(E)]),
    rule!(GlueTriangle, Y, (C, F) => C3[N(0), O(C), O(F)], C4[O(A), O(B), O(E), O(D)]),
];

/// The fixed replacement rules. Validated on first use by [`validate_replacement_table`].
pub fn replacement_table() -> &'static [Rule] {
    RULES
}

impl Branch {
    fn new_vertices(self) -> usize {
        match self {
            Branch::GlueSquare => 2,
            Branch::Apex | Branch::GlueTriangle => 1,
        }
    }

    /// Anchor pairs the branch can meet on a piece of this kind.
    fn anchors(self, kind: PieceKind) -> Vec<(usize, usize)> {
        let t = template_of(kind);
        match self {
            Branch::GlueSquare | Branch::GlueTriangle => t.adjacent_pairs.to_vec(),
            Branch::Apex => t.distance_two.iter().map(|&(x, y, _)| (x, y)).collect(),
        }
    }
}

pub fn lookup_rule(
    branch: Branch,
    kind: PieceKind,
    anchor: (usize, usize),
) -> Option<&'static Rule> {
    RULES
        .iter()
        .find(|r| r.branch == branch && r.from == kind && r.anchor == anchor)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("replacement rule {branch:?} on {from} at {anchor:?}: {reason}")]
pub struct TableError {
    pub branch: Branch,
    pub from: PieceKind,
    pub anchor: (usize, usize),
    pub reason: String,
}

fn validate_rule(rule: &Rule) -> Result<(), String> {
    let t = template_of(rule.from);
    let (x, y) = rule.anchor;
    if x >= y || !rule.branch.anchors(rule.from).contains(&(x, y)) {
        return Err("anchor is not an admissible degree-2 pair".into());
    }
    let old = t.len();
    let new = rule.branch.new_vertices();
    let index = |s: Slot| match s {
        Slot::Old(r) => r,
        Slot::New(i) => old + i,
    };
    let mut glued: Vec<(usize, usize)> = t.edges.to_vec();
    match rule.branch {
        Branch::GlueSquare => glued.extend([(x, old), (y, old + 1), (old, old + 1)]),
        Branch::Apex | Branch::GlueTriangle => glued.extend([(x, old), (y, old)]),
    }
    let has = |a: usize, b: usize| glued.iter().any(|&e| e == (a, b) || e == (b, a));
    let mut used = vec![false; old + new];
    for &(kind, slots) in rule.into {
        let nt = template_of(kind);
        if slots.len() != nt.len() {
            return Err(format!(
                "{kind} needs {} slots, got {}",
                nt.len(),
                slots.len()
            ));
        }
        for &s in slots {
            let i = index(s);
            if i >= old + new {
                return Err(format!("slot {s:?} out of range"));
            }
            if std::mem::replace(&mut used[i], true) {
                return Err(format!("slot {s:?} used twice"));
            }
        }
        for &(a, b) in nt.edges {
            if !has(index(slots[a]), index(slots[b])) {
                return Err(format!(
                    "{kind} edge {}-{} missing in the glued union",
                    nt.roles[a], nt.roles[b]
                ));
            }
        }
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        return Err(format!("glued vertex {i} is not covered"));
    }
    Ok(())
}

/// Checks every rule (the new pieces embed in the glued union and cover it exactly)
/// and completeness: each admissible anchor pair on each kind has exactly one rule,
/// and apex rules never apply to `C3`.
pub fn validate_replacement_table() -> Result<(), TableError> {
    static CHECKED: OnceLock<Result<(), TableError>> = OnceLock::new();
    CHECKED
        .get_or_init(|| {
            for rule in RULES {
                validate_rule(rule).map_err(|reason| TableError {
                    branch: rule.branch,
                    from: rule.from,
                    anchor: rule.anchor,
                    reason,
                })?;
            }
            for branch in [Branch::GlueSquare, Branch::Apex, Branch::GlueTriangle] {
                for kind in PieceKind::ALL {
                    for anchor in branch.anchors(kind) {
                        let count = RULES
                            .iter()
                            .filter(|r| r.branch == branch && r.from == kind && r.anchor == anchor)
                            .count();
                        if count != 1 {
                            return Err(TableError {
                                branch,
                                from: kind,
                                anchor,
                                reason: format!("{count} rules for this anchor"),
                            });
                        }
                    }
                }
            }
            Ok(())
        })
        .clone()
}

/// What a single step of the construction did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    NewTriangle,
    GlueTriangle(PieceKind),
    NewSquare,
    GlueSquare(PieceKind),
    Apex(PieceKind),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub step: usize,
    pub vertex: Vertex,
    pub case: StepCase,
    pub added: Vec<Vertex>,
}

/// Machine-readable context of an internal invariant failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Breach {
    pub step: usize,
    pub vertex: Vertex,
    pub case: String,
    pub reason: String,
    pub pieces: Vec<Piece>,
    pub trace: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph contains L centered at vertex {0}")]
    ContainsL(Vertex),
    #[error(transparent)]
    Template(#[from] MotifError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("invariant breach at step {} (vertex {}, {}): {}", .0.step, .0.vertex, .0.case, .0.reason)]
    InvariantBreach(Box<Breach>),
}

struct Builder<'g> {
    g: &'g Graph,
    partition: Partition,
    trace: Vec<StepRecord>,
}

impl<'g> Builder<'g> {
    fn breach(
        &self,
        vertex: Vertex,
        case: &str,
        reason: String,
        involved: &[usize],
    ) -> PartitionError {
        PartitionError::InvariantBreach(Box::new(Breach {
            step: self.trace.len(),
            vertex,
            case: case.to_string(),
            reason,
            pieces: involved
                .iter()
                .map(|&i| self.partition.pieces[i].clone())
                .collect(),
            trace: self.trace.clone(),
        }))
    }

    fn record(&mut self, vertex: Vertex, case: StepCase, added: Vec<Vertex>) {
        let step = self.trace.len();
        self.trace.push(StepRecord {
            step,
            vertex,
            case,
            added,
        });
    }

    /// Every vertex of the touched pieces is embedded correctly and has at most one
    /// neighbor outside the covered set.
    fn check_pieces(
        &self,
        vertex: Vertex,
        case: &str,
        indices: &[usize],
    ) -> Result<(), PartitionError> {
        for &i in indices {
            let piece = &self.partition.pieces[i];
            if !check_embedding(self.g, piece.kind, &piece.roles)? {
                return Err(self.breach(vertex, case, format!("{piece} is not embedded"), indices));
            }
            for &u in &piece.roles {
                let outside = self
                    .g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| !self.partition.is_covered(w))
                    .count();
                if outside > 1 {
                    return Err(self.breach(
                        vertex,
                        case,
                        format!("vertex {u} has {outside} neighbors outside the covered set"),
                        indices,
                    ));
                }
            }
        }
        Ok(())
    }

    fn add_new(
        &mut self,
        vertex: Vertex,
        kind: PieceKind,
        roles: Vec<Vertex>,
        case: StepCase,
    ) -> Result<(), PartitionError> {
        let idx = self.partition.push(Piece::new(kind, roles.clone()));
        self.record(vertex, case, roles);
        self.check_pieces(vertex, &format!("{case:?}"), &[idx])
    }

    /// Applies the rule for `branch` to the piece owning the anchor vertices. For
    /// [`Branch::GlueSquare`], `fresh[i]` is the new vertex adjacent to `anchor[i]`;
    /// otherwise `fresh` holds the single new vertex.
    fn glue(
        &mut self,
        vertex: Vertex,
        branch: Branch,
        anchor: [Vertex; 2],
        fresh: &[Vertex],
    ) -> Result<(), PartitionError> {
        let label = format!("{branch:?}");
        let (Some(i), Some(j)) = (
            self.partition.owner(anchor[0]),
            self.partition.owner(anchor[1]),
        ) else {
            return Err(self.breach(
                vertex,
                &label,
                format!("anchor {anchor:?} is not covered"),
                &[],
            ));
        };
        if i != j {
            return Err(self.breach(
                vertex,
                &label,
                format!("anchor {anchor:?} spans two pieces"),
                &[i, j],
            ));
        }
        let piece = &self.partition.pieces[i];
        let kind = piece.kind;
        let (rx, ry) = (
            piece.role_of(anchor[0]).unwrap(),
            piece.role_of(anchor[1]).unwrap(),
        );
        let (key, fresh): ((usize, usize), Vec<Vertex>) = if rx < ry {
            ((rx, ry), fresh.to_vec())
        } else {
            ((ry, rx), fresh.iter().rev().copied().collect())
        };
        let Some(rule) = lookup_rule(branch, kind, key) else {
            let roles = template_of(kind).roles;
            return Err(self.breach(
                vertex,
                &label,
                format!(
                    "no rule for {kind} at roles ({}, {})",
                    roles[key.0], roles[key.1]
                ),
                &[i],
            ));
        };
        let old = piece.roles.clone();
        let resolve = |s: Slot| match s {
            Slot::Old(r) => old[r],
            Slot::New(k) => fresh[k],
        };
        let replacement: Vec<Piece> = rule
            .into
            .iter()
            .map(|&(k, slots)| Piece::new(k, slots.iter().map(|&s| resolve(s)).collect()))
            .collect();
        let case = match branch {
            Branch::GlueSquare => StepCase::GlueSquare(kind),
            Branch::Apex => StepCase::Apex(kind),
            Branch::GlueTriangle => StepCase::GlueTriangle(kind),
        };
        let touched = self.partition.replace(i, replacement);
        self.record(vertex, case, fresh);
        self.check_pieces(vertex, &format!("{case:?}"), &touched)
    }

    fn step(&mut self, v: Vertex) -> Result<(), PartitionError> {
        let g = self.g;
        let covered = |p: &Partition, x: Vertex| p.is_covered(x);
        if let Some([_, w1, w2]) = crate::motif::triangle_through(g, v) {
            return match (covered(&self.partition, w1), covered(&self.partition, w2)) {
                (false, false) => {
                    self.add_new(v, PieceKind::C3, vec![v, w1, w2], StepCase::NewTriangle)
                }
                (true, true) => self.glue(v, Branch::GlueTriangle, [w1, w2], &[v]),
                _ => Err(self.breach(
                    v,
                    "triangle",
                    format!("exactly one of {w1}, {w2} is covered"),
                    &[],
                )),
            };
        }
        let cycles = c4s_through(g, v);
        if cycles.is_empty() {
            return Err(self.breach(
                v,
                "square",
                "vertex lies on no triangle and no 4-cycle".into(),
                &[],
            ));
        }
        // The first cycle whose covered vertices form an admissible configuration.
        for &[_, u1, u2, u3] in &cycles {
            let inside = [u1, u2, u3].map(|u| covered(&self.partition, u));
            match inside {
                [false, false, false] => {
                    return self.add_new(
                        v,
                        PieceKind::C4,
                        vec![v, u1, u2, u3],
                        StepCase::NewSquare,
                    );
                }
                // u3 keeps v as its new neighbor, u2 gets u1.
                [false, true, true] => return self.glue(v, Branch::GlueSquare, [u3, u2], &[v, u1]),
                [true, true, false] => return self.glue(v, Branch::GlueSquare, [u1, u2], &[v, u3]),
                [true, true, true] => return self.glue(v, Branch::Apex, [u1, u3], &[v]),
                _ => {}
            }
        }
        let [_, u1, u2, u3] = cycles[0];
        Err(self.breach(
            v,
            "square",
            format!("no 4-cycle through {v} has an admissible covered pattern (first: {u1}, {u2}, {u3})"),
            &[],
        ))
    }
}

/// Covers a cubic `L`-free graph with pieces, taking the least uncovered vertex at
/// each step. Returns the partition and the step trace.
pub fn f_partition_traced(g: &Graph) -> Result<(Partition, Vec<StepRecord>), PartitionError> {
    check_templates()?;
    validate_replacement_table()?;
    validate_cubic(g)?;
    if let Some(w) = find_l_witness(g) {
        return Err(PartitionError::ContainsL(w.center));
    }
    let mut b = Builder {
        g,
        partition: Partition::new(g.order()),
        trace: Vec::new(),
    };
    let mut next = 0;
    while next < g.order() {
        if b.partition.is_covered(next) {
            next += 1;
            continue;
        }
        let before = b.partition.owner.iter().filter(|o| o.is_some()).count();
        b.step(next)?;
        let after = b.partition.owner.iter().filter(|o| o.is_some()).count();
        if !(before < after && after <= before + 4) {
            return Err(b.breach(
                next,
                "progress",
                format!("covered count went {before} -> {after}"),
                &[],
            ));
        }
    }
    if let Err(v) = validate_partition(g, b.partition.pieces()) {
        return Err(b.breach(g.order(), "final", v.to_string(), &[]));
    }
    Ok((b.partition, b.trace))
}

/// See [`f_partition_traced`].
pub fn f_partition(g: &Graph) -> Result<Partition, PartitionError> {
    f_partition_traced(g).map(|(p, _)| p)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("piece {piece} uses vertex {vertex} outside the graph")]
    OutOfRange { piece: usize, vertex: Vertex },
    #[error("piece {piece} is a {kind} with {found} vertices")]
    Arity {
        piece: usize,
        kind: PieceKind,
        found: usize,
    },
    #[error("vertex {vertex} lies in two pieces")]
    Overlap { vertex: Vertex },
    #[error("vertex {vertex} is not covered")]
    Uncovered { vertex: Vertex },
    #[error("piece {piece} ({kind}) is not a subgraph of the graph")]
    Embedding { piece: usize, kind: PieceKind },
}

/// Checks disjointness, coverage and that each piece is a subgraph of `g`.
pub fn validate_partition(g: &Graph, pieces: &[Piece]) -> Result<(), PartitionViolation> {
    let n = g.order();
    let mut seen = VertexSet::new(n);
    for (i, piece) in pieces.iter().enumerate() {
        let expected = template_of(piece.kind).len();
        if piece.roles.len() != expected {
            return Err(PartitionViolation::Arity {
                piece: i,
                kind: piece.kind,
                found: piece.roles.len(),
            });
        }
        for &v in &piece.roles {
            if v >= n {
                return Err(PartitionViolation::OutOfRange {
                    piece: i,
                    vertex: v,
                });
            }
            if !seen.insert(v) {
                return Err(PartitionViolation::Overlap { vertex: v });
            }
        }
        if !check_embedding(g, piece.kind, &piece.roles).unwrap_or(false) {
            return Err(PartitionViolation::Embedding {
                piece: i,
                kind: piece.kind,
            });
        }
    }
    match (0..n).find(|&v| !seen.contains(v)) {
        Some(v) => Err(PartitionViolation::Uncovered { vertex: v }),
        None => Ok(()),
    }
}
