//! Signatures and the predicates behind the eight code kinds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Graph, Result, VertexSet};

/// Which signatures a separating set must tell apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Separation {
    /// Open signatures, outside the set only.
    L,
    /// Open signatures, all vertices.
    O,
    /// Closed signatures, all vertices.
    I,
    /// Open and closed signatures, all vertices.
    F,
}

impl Separation {
    pub const ALL: [Separation; 4] = [Separation::L, Separation::O, Separation::I, Separation::F];

    /// Smallest code size the extremal construction supports.
    pub const fn min_k(self) -> usize {
        match self {
            Separation::F => 4,
            _ => 2,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            Separation::L => 'L',
            Separation::O => 'O',
            Separation::I => 'I',
            Separation::F => 'F',
        }
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Separation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L" => Ok(Separation::L),
            "O" => Ok(Separation::O),
            "I" => Ok(Separation::I),
            "F" => Ok(Separation::F),
            _ => Err(Error::Unsupported(format!("unknown separation `{s}` (expected L, O, I or F)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Domination {
    /// Every closed neighborhood meets the code.
    D,
    /// Every open neighborhood meets the code.
    TD,
}

/// One of the eight identification problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeKind {
    pub separation: Separation,
    pub domination: Domination,
}

impl CodeKind {
    pub const LD: CodeKind = CodeKind::new(Separation::L, Domination::D);
    pub const LTD: CodeKind = CodeKind::new(Separation::L, Domination::TD);
    pub const OD: CodeKind = CodeKind::new(Separation::O, Domination::D);
    pub const OTD: CodeKind = CodeKind::new(Separation::O, Domination::TD);
    pub const ID: CodeKind = CodeKind::new(Separation::I, Domination::D);
    pub const ITD: CodeKind = CodeKind::new(Separation::I, Domination::TD);
    pub const FD: CodeKind = CodeKind::new(Separation::F, Domination::D);
    pub const FTD: CodeKind = CodeKind::new(Separation::F, Domination::TD);

    pub const ALL: [CodeKind; 8] = [
        CodeKind::LD,
        CodeKind::LTD,
        CodeKind::OD,
        CodeKind::OTD,
        CodeKind::ID,
        CodeKind::ITD,
        CodeKind::FD,
        CodeKind::FTD,
    ];

    pub const fn new(separation: Separation, domination: Domination) -> Self {
        CodeKind {
            separation,
            domination,
        }
    }

    pub const fn is_total(self) -> bool {
        matches!(self.domination, Domination::TD)
    }

    pub const fn name(self) -> &'static str {
        match (self.separation, self.domination) {
            (Separation::L, Domination::D) => "LD",
            (Separation::L, Domination::TD) => "LTD",
            (Separation::O, Domination::D) => "OD",
            (Separation::O, Domination::TD) => "OTD",
            (Separation::I, Domination::D) => "ID",
            (Separation::I, Domination::TD) => "ITD",
            (Separation::F, Domination::D) => "FD",
            (Separation::F, Domination::TD) => "FTD",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    /// Case-insensitive: `ld`, `Ld` and `LD` are the same kind.
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        CodeKind::ALL
            .into_iter()
            .find(|k| k.name() == upper)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

impl Serialize for CodeKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// `N(v) ∩ C`.
pub fn open_signature(g: &Graph, v: usize, c: VertexSet) -> Result<VertexSet> {
    Ok(g.open_neighborhood(v)?.intersection(c))
}

/// `N[v] ∩ C`.
pub fn closed_signature(g: &Graph, v: usize, c: VertexSet) -> Result<VertexSet> {
    Ok(g.closed_neighborhood(v)?.intersection(c))
}

/// Open and closed signatures of the members of a set, deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureFamilies {
    pub open: BTreeSet<VertexSet>,
    pub closed: BTreeSet<VertexSet>,
    pub union: BTreeSet<VertexSet>,
}

impl SignatureFamilies {
    pub fn is_disjoint(&self) -> bool {
        self.open.is_disjoint(&self.closed)
    }
}

pub fn signature_families(g: &Graph, c: VertexSet) -> Result<SignatureFamilies> {
    if c.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut open = BTreeSet::new();
    let mut closed = BTreeSet::new();
    for v in c {
        open.insert(open_signature(g, v, c)?);
        closed.insert(closed_signature(g, v, c)?);
    }
    let union = open.union(&closed).copied().collect();
    Ok(SignatureFamilies {
        open,
        closed,
        union,
    })
}

pub fn is_dominating(g: &Graph, c: VertexSet) -> bool {
    g.vertices()
        .iter()
        .all(|v| !g.neighbors(v).with(v).intersection(c).is_empty())
}

pub fn is_total_dominating(g: &Graph, c: VertexSet) -> bool {
    g.vertices()
        .iter()
        .all(|v| !g.neighbors(v).intersection(c).is_empty())
}

fn pairwise_distinct(sigs: &mut [u64]) -> bool {
    sigs.sort_unstable();
    sigs.windows(2).all(|w| w[0] != w[1])
}

fn open_distinct(g: &Graph, c: VertexSet, over: VertexSet) -> bool {
    let mut buf = [0u64; VertexSet::CAPACITY];
    let mut len = 0;
    for v in over {
        buf[len] = g.neighbors(v).intersection(c).bits();
        len += 1;
    }
    pairwise_distinct(&mut buf[..len])
}

fn closed_distinct(g: &Graph, c: VertexSet) -> bool {
    let mut buf = [0u64; VertexSet::CAPACITY];
    for (v, slot) in buf.iter_mut().enumerate().take(g.order()) {
        *slot = g.neighbors(v).with(v).intersection(c).bits();
    }
    pairwise_distinct(&mut buf[..g.order()])
}

pub fn is_separating(g: &Graph, c: VertexSet, s: Separation) -> bool {
    let all = g.vertices();
    match s {
        Separation::L => open_distinct(g, c, all.difference(c)),
        Separation::O => open_distinct(g, c, all),
        Separation::I => closed_distinct(g, c),
        Separation::F => open_distinct(g, c, all) && closed_distinct(g, c),
    }
}

pub fn is_code(g: &Graph, c: VertexSet, kind: CodeKind) -> bool {
    let dominated = match kind.domination {
        Domination::D => is_dominating(g, c),
        Domination::TD => is_total_dominating(g, c),
    };
    dominated && is_separating(g, c, kind.separation)
}

/// Whether some vertex set of `g` is `s`-separating, read off the twin
/// structure: open twins block O, closed twins block I, either blocks F.
pub fn admits_separating_set(g: &Graph, s: Separation) -> bool {
    match s {
        Separation::L => true,
        Separation::O => !g.has_open_twins(),
        Separation::I => !g.has_closed_twins(),
        Separation::F => !g.has_open_twins() && !g.has_closed_twins(),
    }
}

/// Whether `g` has any `kind`-code. Isolated vertices additionally block the
/// total kinds.
pub fn is_admissible(g: &Graph, kind: CodeKind) -> bool {
    (!kind.is_total() || g.is_isolate_free()) && admits_separating_set(g, kind.separation)
}
