//! Exact minimum codes, a brute-force oracle, order bounds and relation checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::LabeledGraphs;
use crate::separation::{is_admissible, is_code, CodeKind};
use crate::{Error, Graph, Result, VertexSet};

/// Default limit on the number of candidate sets a single solve may test.
pub const DEFAULT_BUDGET: u64 = 500_000_000;

/// Largest order accepted by [`oracle_min_code`].
pub const ORACLE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of candidate sets to test; `None` disables the limit.
    pub budget: Option<u64>,
    /// Start the search at the logarithmic lower bound instead of size 1.
    pub use_lower_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Some(DEFAULT_BUDGET),
            use_lower_bound: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub kind: CodeKind,
    pub admissible: bool,
    /// The X-number; absent when the graph has no code of this kind.
    pub number: Option<usize>,
    /// The lexicographically least minimum code.
    pub witness: Option<VertexSet>,
    pub subsets_tested: u64,
    pub lower_bound: usize,
}

fn floor_log2(n: usize) -> usize {
    debug_assert!(n >= 1);
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        floor_log2(n - 1) + 1
    }
}

/// Smallest possible code size for a graph on `n` vertices.
pub fn lower_bound(kind: CodeKind, n: usize) -> usize {
    assert!(n >= 1, "graphs have at least one vertex");
    match kind {
        CodeKind::LD | CodeKind::LTD => floor_log2(n),
        CodeKind::OD => ceil_log2(n),
        CodeKind::OTD | CodeKind::ID | CodeKind::ITD => ceil_log2(n + 1),
        CodeKind::FD => 1 + floor_log2(n),
        _ => 1 + floor_log2(n + 1),
    }
}

/// The largest order of a graph with a `kind`-code of size `k`, as a formula
/// valid for every `k >= 1` (saturating at 0).
pub fn order_bound(kind: CodeKind, k: usize) -> u128 {
    let p = 1u128 << k.min(100);
    let k = k as u128;
    match kind {
        CodeKind::LD | CodeKind::LTD => p + k - 1,
        CodeKind::OD => p,
        CodeKind::OTD | CodeKind::ID | CodeKind::ITD => p - 1,
        CodeKind::FD => p.saturating_sub(k),
        _ => p.saturating_sub(k + 1),
    }
}

/// [`order_bound`] restricted to the range where the extremal constructions
/// exist: `k >= 2`, or `k >= 4` for the F kinds.
pub fn max_order(kind: CodeKind, k: usize) -> Result<u128> {
    let min = kind.separation.min_k();
    if k < min {
        return Err(Error::KTooSmall {
            what: format!("{kind} order bound"),
            k,
            min,
        });
    }
    if k > 100 {
        return Err(Error::KTooLarge { k, max: 100 });
    }
    Ok(order_bound(kind, k))
}

fn spend(tested: &mut u64, budget: Option<u64>) -> Result<()> {
    *tested += 1;
    match budget {
        Some(b) if *tested > b => Err(Error::BudgetExceeded { budget: b }),
        _ => Ok(()),
    }
}

/// First `size`-subset (lexicographic order) that is a `kind`-code.
pub fn find_code_of_size(
    g: &Graph,
    kind: CodeKind,
    size: usize,
    budget: Option<u64>,
) -> Result<(Option<VertexSet>, u64)> {
    let mut tested = 0;
    for c in VertexSet::subsets_of_size(g.order(), size) {
        spend(&mut tested, budget)?;
        if is_code(g, c, kind) {
            return Ok((Some(c), tested));
        }
    }
    Ok((None, tested))
}

pub fn min_code(g: &Graph, kind: CodeKind) -> Result<SolveReport> {
    min_code_with(g, kind, SolveOptions::default())
}

/// Minimum `kind`-code by increasing size, lexicographic within a size.
pub fn min_code_with(g: &Graph, kind: CodeKind, opts: SolveOptions) -> Result<SolveReport> {
    let n = g.order();
    let lb = lower_bound(kind, n);
    let mut report = SolveReport {
        kind,
        admissible: is_admissible(g, kind),
        number: None,
        witness: None,
        subsets_tested: 0,
        lower_bound: lb,
    };
    if !report.admissible {
        return Ok(report);
    }
    let start = if opts.use_lower_bound { lb.max(1) } else { 1 };
    for size in start.min(n)..=n {
        let remaining = opts.budget.map(|b| b.saturating_sub(report.subsets_tested));
        let (found, tested) = find_code_of_size(g, kind, size, remaining)
            .map_err(|_| Error::BudgetExceeded {
                budget: opts.budget.unwrap_or(u64::MAX),
            })?;
        report.subsets_tested += tested;
        if let Some(c) = found {
            report.number = Some(size);
            report.witness = Some(c);
            return Ok(report);
        }
    }
    unreachable!("an admissible graph has the whole vertex set as a code")
}

/// Tests all `2^n` subsets and keeps the smallest code, ties going to the
/// lexicographically least.
pub fn oracle_min_code(g: &Graph, kind: CodeKind) -> Result<SolveReport> {
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(Error::Guard {
            what: "brute-force oracle",
            order: n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut best: Option<VertexSet> = None;
    for bits in 0..(1u64 << n) {
        let c = VertexSet::from_bits(bits);
        if !is_code(g, c, kind) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => c.len() < b.len() || (c.len() == b.len() && c.lex_cmp(b).is_lt()),
        };
        if better {
            best = Some(c);
        }
    }
    Ok(SolveReport {
        kind,
        admissible: best.is_some(),
        number: best.map(VertexSet::len),
        witness: best,
        subsets_tested: 1 << n,
        lower_bound: lower_bound(kind, n),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: &'static str,
    /// False when the graph lacks the admissibility the relation needs.
    pub applicable: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub numbers: Vec<SolveReport>,
    pub relations: Vec<Relation>,
}

impl RelationReport {
    pub fn number(&self, kind: CodeKind) -> Option<usize> {
        self.numbers.iter().find(|r| r.kind == kind).and_then(|r| r.number)
    }

    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| !r.applicable || r.holds)
    }
}

/// Solves all eight kinds and checks: LD is a lower bound for every
/// admissible kind, FTD an upper bound when admissible, and OD/OTD and FD/FTD
/// differ by at most one.
pub fn relation_check(g: &Graph, opts: SolveOptions) -> Result<RelationReport> {
    let numbers = CodeKind::ALL
        .iter()
        .map(|&kind| min_code_with(g, kind, opts))
        .collect::<Result<Vec<_>>>()?;
    let num = |kind: CodeKind| numbers.iter().find(|r| r.kind == kind).and_then(|r| r.number);
    let admissible: Vec<usize> = numbers.iter().filter_map(|r| r.number).collect();
    let ld = num(CodeKind::LD).expect("every graph has an LD-code");
    let close = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(a), Some(b)) => (true, a.abs_diff(b) <= 1),
        _ => (false, true),
    };

    let mut relations = vec![Relation {
        name: "LD <= X",
        applicable: true,
        holds: admissible.iter().all(|&x| ld <= x),
    }];
    let ftd = num(CodeKind::FTD);
    relations.push(Relation {
        name: "X <= FTD",
        applicable: ftd.is_some(),
        holds: ftd.is_none_or(|f| admissible.iter().all(|&x| x <= f)),
    });
    let (applicable, holds) = close(num(CodeKind::OD), num(CodeKind::OTD));
    relations.push(Relation {
        name: "|OD - OTD| <= 1",
        applicable,
        holds,
    });
    let (applicable, holds) = close(num(CodeKind::FD), ftd);
    relations.push(Relation {
        name: "|FD - FTD| <= 1",
        applicable,
        holds,
    });
    Ok(RelationReport { numbers, relations })
}

/// Distribution of the X-number over every labeled graph of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub kind: CodeKind,
    pub order: usize,
    pub graphs: u64,
    pub inadmissible: u64,
    /// X-number to number of labeled graphs.
    pub histogram: BTreeMap<usize, u64>,
}

#[derive(Default)]
struct Tally {
    inadmissible: u64,
    histogram: BTreeMap<usize, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.inadmissible += other.inadmissible;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self
    }
}

pub fn census(kind: CodeKind, order: usize, opts: SolveOptions) -> Result<Census> {
    let graphs = LabeledGraphs::new(order)?;
    let total = graphs.len() as u64;
    let tally = graphs
        .into_par_iter()
        .try_fold(Tally::default, |mut t, g| {
            match min_code_with(&g, kind, opts)?.number {
                Some(x) => *t.histogram.entry(x).or_default() += 1,
                None => t.inadmissible += 1,
            }
            Ok::<_, Error>(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(Census {
        kind,
        order,
        graphs: total,
        inadmissible: tally.inadmissible,
        histogram: tally.histogram,
    })
}
