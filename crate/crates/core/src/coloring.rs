//! Black/white colorings in which every vertex sees both colors.
//!
//! `C4`, `K23`, `X` and `Y` pieces admit such a coloring on their own edges. `C3` and
//! `Z` do not: each needs the color of one outside neighbor of a degree-2
//! "attachment" vertex, and the attachment always takes that same color. When two such
//! pieces are attached to each other through an edge, giving both endpoints black is
//! consistent with both lookups.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::motif::{template_of, PieceKind, PieceTemplate};
use crate::partition::{validate_partition, Partition, PartitionViolation, Piece};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<Color> {
        match c {
            'B' => Some(Color::Black),
            'W' => Some(Color::White),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{0} has no internal 2-coupon coloring")]
    NoBaseColoring(PieceKind),
    #[error("{0} pieces are colored from a fixed internal coloring")]
    NotDependent(PieceKind),
    #[error("role {role} of {kind} is not a degree-2 role")]
    NotAttachment { kind: PieceKind, role: usize },
    #[error("no table entry for {kind} attached at role {role} with color {color}")]
    MissingEntry {
        kind: PieceKind,
        role: usize,
        color: Color,
    },
    #[error("coloring is incomplete: vertex {0} has no color")]
    Incomplete(Vertex),
    #[error("coloring covers {found} vertices, graph has {expected}")]
    Length { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    Partition(#[from] PartitionViolation),
    #[error("{0}")]
    Chain(String),
}

/// Possibly partial vertex coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn unset(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_colors(colors: &[Color]) -> Self {
        Coloring {
            colors: colors.iter().copied().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// The complete color vector, or the first unset vertex.
    pub fn to_vec(&self) -> Result<Vec<Color>, ColoringError> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::Incomplete(v)))
            .collect()
    }

    pub fn flipped(&self) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|c| c.map(Color::flip)).collect(),
        }
    }

    pub fn class(&self, color: Color) -> VertexSet {
        VertexSet::from_iter_in(
            self.len(),
            (0..self.len()).filter(|&v| self.colors[v] == Some(color)),
        )
    }

    /// `B`/`W` string, `.` for unset vertices.
    pub fn symbols(&self) -> String {
        self.colors
            .iter()
            .map(|c| c.map_or('.', Color::symbol))
            .collect()
    }
}

/// True iff every vertex has a neighbor in `s`.
pub fn verify_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    g.vertices()
        .all(|v| g.neighbors(v).iter().any(|&w| s.contains(w)))
}

/// True iff both color classes are total dominating sets. Partial colorings are an
/// error rather than `false`.
pub fn verify_coupon(g: &Graph, coloring: &Coloring) -> Result<bool, ColoringError> {
    if coloring.len() != g.order() {
        return Err(ColoringError::Length {
            expected: g.order(),
            found: coloring.len(),
        });
    }
    coloring.to_vec()?;
    Ok(verify_total_dominating(g, &coloring.class(Color::Black))
        && verify_total_dominating(g, &coloring.class(Color::White)))
}

/// Every role sees both colors among its template neighbors; `extra` adds one
/// outside color seen by the given role.
fn sees_both(t: &PieceTemplate, colors: &[Color], extra: Option<(usize, Color)>) -> bool {
    (0..t.len()).all(|x| {
        let mut seen = [false; 2];
        for y in t.neighbors(x) {
            seen[colors[y] as usize] = true;
        }
        if let Some((role, c)) = extra {
            if role == x {
                seen[c as usize] = true;
            }
        }
        seen[0] && seen[1]
    })
}

/// Lexicographically least assignment (Black before White, role 0 first) satisfying
/// `accept`, by exhaustive enumeration.
fn least_assignment(len: usize, accept: impl Fn(&[Color]) -> bool) -> Option<Vec<Color>> {
    (0u32..1 << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        Color::Black
                    } else {
                        Color::White
                    }
                })
                .collect::<Vec<_>>()
        })
        .find(|colors| accept(colors))
}

const BASE_KINDS: [PieceKind; 4] = [PieceKind::C4, PieceKind::K23, PieceKind::X, PieceKind::Y];
const DEPENDENT_KINDS: [PieceKind; 2] = [PieceKind::C3, PieceKind::Z];

fn base_table() -> &'static HashMap<PieceKind, Vec<Color>> {
    static TABLE: OnceLock<HashMap<PieceKind, Vec<Color>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        PieceKind::ALL
            .into_iter()
            .filter_map(|kind| {
                let t = template_of(kind);
                least_assignment(t.len(), |c| c[0] == Color::Black && sees_both(t, c, None))
                    .map(|c| (kind, c))
            })
            .collect()
    })
}

/// Fixed internal coloring of a `C4`, `K23`, `X` or `Y` piece: the least assignment
/// with role 0 black in which every role sees both colors on template edges.
pub fn base_coloring(kind: PieceKind) -> Result<&'static [Color], ColoringError> {
    base_table()
        .get(&kind)
        .map(Vec::as_slice)
        .ok_or(ColoringError::NoBaseColoring(kind))
}

/// Colorings of `C3` and `Z` pieces keyed by attachment role and outside color.
#[derive(Debug)]
pub struct DependentColorTable {
    entries: HashMap<(PieceKind, usize, Color), Vec<Color>>,
}

impl DependentColorTable {
    /// Derives every entry by exhaustive search; fails on the first triple without a
    /// valid assignment.
    pub fn derive() -> Result<Self, ColoringError> {
        let mut entries = HashMap::new();
        for kind in DEPENDENT_KINDS {
            let t = template_of(kind);
            for &role in t.degree_two {
                for color in [Color::Black, Color::White] {
                    let found = least_assignment(t.len(), |c| {
                        c[role] == color && sees_both(t, c, Some((role, color)))
                    })
                    .ok_or(ColoringError::MissingEntry {
                        kind,
                        role,
                        color,
                    })?;
                    entries.insert((kind, role, color), found);
                }
            }
        }
        Ok(DependentColorTable { entries })
    }

    pub fn get(&self, kind: PieceKind, role: usize, color: Color) -> Option<&[Color]> {
        self.entries.get(&(kind, role, color)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-checks the three entry conditions on every entry.
    pub fn check(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(kind, role, color), colors)| is_valid_dependent(kind, role, color, colors))
    }
}

/// The attachment has the outside color, and with it every role sees both colors.
pub fn is_valid_dependent(kind: PieceKind, role: usize, color: Color, colors: &[Color]) -> bool {
    let t = template_of(kind);
    colors.len() == t.len()
        && t.degree_two.contains(&role)
        && colors[role] == color
        && sees_both(t, colors, Some((role, color)))
}

pub fn dependent_table() -> Result<&'static DependentColorTable, ColoringError> {
    static TABLE: OnceLock<Result<DependentColorTable, ColoringError>> = OnceLock::new();
    TABLE
        .get_or_init(DependentColorTable::derive)
        .as_ref()
        .map_err(Clone::clone)
}

/// Coloring of a `C3` or `Z` piece whose degree-2 role `role` has an outside neighbor
/// of color `color`.
pub fn dependent_coloring(
    kind: PieceKind,
    role: usize,
    color: Color,
) -> Result<&'static [Color], ColoringError> {
    if !DEPENDENT_KINDS.contains(&kind) {
        return Err(ColoringError::NotDependent(kind));
    }
    if !template_of(kind).degree_two.contains(&role) {
        return Err(ColoringError::NotAttachment { kind, role });
    }
    dependent_table()?
        .get(kind, role, color)
        .ok_or(ColoringError::MissingEntry { kind, role, color })
}

/// Checks that both tables derive: a base coloring for `C4`, `K23`, `X`, `Y` and a
/// dependent entry for every attachment of `C3` and `Z`.
pub fn check_tables() -> Result<(), ColoringError> {
    for kind in BASE_KINDS {
        base_coloring(kind)?;
    }
    let table = dependent_table()?;
    debug_assert!(table.check());
    Ok(())
}

/// The least vertex among degree-2 roles whose third neighbor is outside the piece,
/// with that neighbor.
fn attachment(g: &Graph, piece: &Piece) -> Option<(usize, Vertex, Vertex)> {
    let t = template_of(piece.kind);
    t.degree_two
        .iter()
        .filter_map(|&role| {
            let v = piece.roles[role];
            g.neighbors(v)
                .iter()
                .find(|w| !piece.roles.contains(w))
                .map(|&w| (role, v, w))
        })
        .min_by_key(|&(_, v, _)| v)
}

fn paint(coloring: &mut Coloring, piece: &Piece, colors: &[Color]) {
    for (&v, &c) in piece.roles.iter().zip(colors) {
        coloring.set(v, c);
    }
}

/// Colors the graph from a complete partition: fixed colorings for `C4`, `K23`, `X`,
/// `Y`, then `C3` and `Z` pieces in order of least vertex, each from the color of its
/// attachment's outside neighbor (black when that neighbor is still uncolored, in
/// which case the neighbor's own piece is colored right after).
pub fn two_coupon_color(g: &Graph, p: &Partition) -> Result<Coloring, ColoringError> {
    validate_partition(g, p.pieces())?;
    let mut coloring = Coloring::unset(g.order());
    let mut dependent = Vec::new();
    for (i, piece) in p.pieces().iter().enumerate() {
        if DEPENDENT_KINDS.contains(&piece.kind) {
            dependent.push(i);
        } else {
            paint(&mut coloring, piece, base_coloring(piece.kind)?);
        }
    }
    dependent.sort_by_key(|&i| p.pieces()[i].min_vertex());
    for i in dependent {
        let piece = &p.pieces()[i];
        if coloring.get(piece.roles[0]).is_some() {
            continue;
        }
        let (role, a, w) = attachment(g, piece).ok_or_else(|| {
            ColoringError::Chain(format!(
                "{piece} has no degree-2 vertex with an outside neighbor"
            ))
        })?;
        match coloring.get(w) {
            Some(c) => paint(
                &mut coloring,
                piece,
                dependent_coloring(piece.kind, role, c)?,
            ),
            None => {
                let other = p.piece_of(w).expect("partition is complete");
                let other_role = other.role_of(w).unwrap();
                paint(
                    &mut coloring,
                    piece,
                    dependent_coloring(piece.kind, role, Color::Black)?,
                );
                let back = coloring.get(a).unwrap();
                let colors = dependent_coloring(other.kind, other_role, back)?;
                if colors[other_role] != Color::Black {
                    return Err(ColoringError::Chain(format!(
                        "vertex {w} of {other} did not come out black"
                    )));
                }
                paint(&mut coloring, other, colors);
            }
        }
    }
    Ok(coloring)
}
