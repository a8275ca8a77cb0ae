//! Families of graphs attaining the logarithmic bound, and audits that
//! compare them against exhaustive or sampled search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::blueprint::{check_k, check_twin_condition, eligible_labels, removal_cap};
use super::{ExtremalBlueprint, MaterializedExtremal, OuterPolicy};
use crate::enumerate::{LabeledGraphs, EXHAUSTIVE_LIMIT};
use crate::iso::{is_isomorphism, IsoClasses};
use crate::separation::{is_admissible, is_code, CodeKind};
use crate::solver::{find_code_of_size, lower_bound};
use crate::{Error, Graph, Result, VertexSet};

/// Largest order for sampled audits.
pub const SAMPLED_LIMIT: usize = 10;

/// At most this many counterexamples are listed in a report.
const EXAMPLE_LIMIT: usize = 10;

fn check_inner(kind: CodeKind, inner: &Graph) -> Result<()> {
    check_twin_condition(kind.separation, inner)?;
    if kind.is_total() && !inner.is_isolate_free() {
        return Err(Error::Blueprint(format!("{kind} needs an isolate-free inner graph")));
    }
    Ok(())
}

/// Every graph obtained from `G^S(k)` (with the given inner graph and outer
/// policy) by deleting at most the permitted number of outer vertices.
///
/// Deletions are produced by increasing size, lexicographically within a
/// size.
pub fn characterization_family(
    kind: CodeKind,
    inner: &Graph,
    outer: OuterPolicy,
) -> Result<CharacterizationFamily> {
    check_inner(kind, inner)?;
    let base = ExtremalBlueprint::new(kind.separation, inner.clone())
        .with_outer(outer)
        .materialize()?;
    let cap = removal_cap(kind, base.k, base.inner_has_isolated).min(base.outer.len());
    Ok(CharacterizationFamily {
        subsets: VertexSet::subsets_of_size(base.outer.len(), 0),
        size: 0,
        cap,
        base,
    })
}

pub struct CharacterizationFamily {
    base: MaterializedExtremal,
    cap: usize,
    size: usize,
    subsets: crate::vertex_set::SubsetsOfSize,
}

impl CharacterizationFamily {
    pub fn removal_cap(&self) -> usize {
        self.cap
    }

    pub fn base(&self) -> &MaterializedExtremal {
        &self.base
    }
}

impl Iterator for CharacterizationFamily {
    type Item = MaterializedExtremal;

    fn next(&mut self) -> Option<MaterializedExtremal> {
        loop {
            if let Some(drop) = self.subsets.next() {
                let labels: Vec<VertexSet> = drop.iter().map(|i| self.base.outer[i].label).collect();
                return Some(self.base.remove_outer(&labels).expect("labels are present"));
            }
            if self.size == self.cap {
                return None;
            }
            self.size += 1;
            self.subsets = VertexSet::subsets_of_size(self.base.outer.len(), self.size);
        }
    }
}

/// Every family member on exactly `n` vertices, over all valid labeled inner
/// graphs and all outer edge sets.
pub fn family_members_of_order(kind: CodeKind, k: usize, n: usize) -> Result<Vec<MaterializedExtremal>> {
    check_k(kind.separation, k)?;
    let mut members = Vec::new();
    for inner in LabeledGraphs::new(k)? {
        if check_inner(kind, &inner).is_err() {
            continue;
        }
        let labels = eligible_labels(kind.separation, &inner);
        let pool = labels.len();
        let Some(r) = (k + pool).checked_sub(n) else {
            continue;
        };
        if r > pool || r > removal_cap(kind, k, !inner.is_isolate_free()) {
            continue;
        }
        let kept = pool - r;
        let outer_graphs: Vec<Graph> = if kept == 0 {
            vec![]
        } else {
            LabeledGraphs::with_override(kept, true)?.collect()
        };
        for drop in VertexSet::subsets_of_size(pool, r) {
            let removals: Vec<VertexSet> = drop.iter().map(|i| labels[i]).collect();
            let kept_idx: Vec<usize> = (0..pool).filter(|i| !drop.contains(*i)).collect();
            let lifts: Vec<Graph> = if kept == 0 {
                vec![Graph::empty(pool)]
            } else {
                outer_graphs
                    .iter()
                    .map(|h| {
                        let edges = h.edges().map(|(a, b)| (kept_idx[a], kept_idx[b]));
                        Graph::new(pool, edges).expect("indices are in range")
                    })
                    .collect()
            };
            for lifted in lifts {
                let bp = ExtremalBlueprint::new(kind.separation, inner.clone())
                    .with_outer(OuterPolicy::Explicit(lifted))
                    .with_removals(removals.clone());
                members.push(bp.materialize()?);
            }
        }
    }
    Ok(members)
}

/// Reads `g` as a `G^S(k)` graph around the code `c`: code vertices become
/// `0..k` in ascending order, outer vertices are identified by their open
/// signatures, and missing labels become removals.
///
/// Returns the blueprint and the vertex map from `g` into its
/// materialization.
pub fn decompose(g: &Graph, c: VertexSet, kind: CodeKind) -> Result<(ExtremalBlueprint, Vec<usize>)> {
    let k = c.len();
    check_k(kind.separation, k)?;
    let code = c.to_vec();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in code.iter().enumerate() {
        index[v] = i;
    }
    let to_label = |s: VertexSet| -> VertexSet { s.iter().map(|v| index[v]).collect() };
    let inner = g.induced_subgraph(c)?;
    let labels = eligible_labels(kind.separation, &inner);

    let mut outer: Vec<(usize, usize)> = Vec::new(); // (vertex of g, pool index)
    for v in g.vertices().difference(c) {
        let label = to_label(g.neighbors(v).intersection(c));
        let pos = labels.binary_search_by_key(&label.bits(), |l| l.bits()).map_err(|_| {
            Error::Blueprint(format!("vertex {v} has signature {label}, which no outer vertex may carry"))
        })?;
        if outer.iter().any(|&(_, p)| p == pos) {
            return Err(Error::Blueprint(format!("two outer vertices share the signature {label}")));
        }
        outer.push((v, pos));
    }
    let present: VertexSet = outer.iter().map(|&(_, p)| p).collect();
    let removals: Vec<VertexSet> = (0..labels.len())
        .filter(|p| !present.contains(*p))
        .map(|p| labels[p])
        .collect();
    let mut outer_edges = Vec::new();
    for &(v, p) in &outer {
        for &(w, q) in &outer {
            if v < w && g.has_edge(v, w) {
                outer_edges.push((p, q));
            }
        }
    }
    let pool_graph = Graph::new(labels.len(), outer_edges)?;

    // in the materialization, kept outer vertices follow the code in pool order
    let rank = |p: usize| k + (0..p).filter(|&q| present.contains(q)).count();
    for &(v, p) in &outer {
        index[v] = rank(p);
    }
    let bp = ExtremalBlueprint {
        separation: kind.separation,
        k,
        inner,
        outer: OuterPolicy::Explicit(pool_graph),
        removals,
    };
    Ok((bp, index))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AuditMode {
    Exhaustive,
    Sampled { seed: u64, trials: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub kind: CodeKind,
    pub order: usize,
    pub k: usize,
    pub mode: AuditMode,
    pub graphs_examined: u64,
    /// Labeled graphs whose number equals the lower bound.
    pub attaining: u64,
    pub attaining_classes: usize,
    pub family_members: u64,
    pub family_classes: usize,
    /// graph6 of attaining graphs outside the family.
    pub unmatched: Vec<String>,
    /// graph6 of family members that do not attain the bound.
    pub missing: Vec<String>,
    pub passed: bool,
}

fn attains(g: &Graph, kind: CodeKind, k: usize) -> bool {
    is_admissible(g, kind) && find_code_of_size(g, kind, k, None).expect("no budget").0.is_some()
}

/// Compares the graphs on `n` vertices whose `kind`-number equals the
/// logarithmic bound `k` with the characterization family for `k`.
///
/// Exhaustive mode checks set equality up to isomorphism over every labeled
/// graph. Sampled mode draws random graphs and checks that each attaining
/// graph decomposes, around one of its minimum codes, into a family member.
pub fn audit_characterization(kind: CodeKind, n: usize, mode: AuditMode) -> Result<AuditReport> {
    let limit = match mode {
        AuditMode::Exhaustive => EXHAUSTIVE_LIMIT,
        AuditMode::Sampled { .. } => SAMPLED_LIMIT,
    };
    if n == 0 {
        return Err(Error::OrderOutOfRange(0));
    }
    if n > limit {
        return Err(Error::Guard {
            what: "characterization audit",
            order: n,
            limit,
        });
    }
    let k = lower_bound(kind, n);
    if k < kind.separation.min_k() {
        return Err(Error::KTooSmall {
            what: format!("{kind} characterization"),
            k,
            min: kind.separation.min_k(),
        });
    }
    match mode {
        AuditMode::Exhaustive => exhaustive(kind, n, k),
        AuditMode::Sampled { seed, trials } => sampled(kind, n, k, seed, trials),
    }
}

#[derive(Default)]
struct Hits {
    attaining: u64,
    matched: Vec<bool>,
    unmatched: Vec<String>,
}

impl Hits {
    fn merge(mut self, other: Hits) -> Hits {
        self.attaining += other.attaining;
        if self.matched.len() < other.matched.len() {
            self.matched.resize(other.matched.len(), false);
        }
        for (i, m) in other.matched.into_iter().enumerate() {
            self.matched[i] |= m;
        }
        self.unmatched.extend(other.unmatched);
        self
    }
}

fn exhaustive(kind: CodeKind, n: usize, k: usize) -> Result<AuditReport> {
    let members = family_members_of_order(kind, k, n)?;
    let mut classes = IsoClasses::new();
    for m in &members {
        classes.insert(m.graph.clone());
    }
    let class_count = classes.len();

    let graphs = LabeledGraphs::new(n)?;
    let examined = graphs.len() as u64;
    let hits = graphs
        .into_par_iter()
        .filter(|g| attains(g, kind, k))
        .fold(
            || Hits {
                matched: vec![false; class_count],
                ..Hits::default()
            },
            |mut h, g| {
                h.attaining += 1;
                match classes.find(&g) {
                    Some(i) => h.matched[i] = true,
                    None => h.unmatched.push(g.to_graph6()),
                }
                h
            },
        )
        .reduce(
            || Hits {
                matched: vec![false; class_count],
                ..Hits::default()
            },
            Hits::merge,
        );

    let mut unmatched = hits.unmatched;
    unmatched.sort();
    let attaining_classes = hits.matched.iter().filter(|&&m| m).count();
    let mut missing: Vec<String> = classes
        .representatives()
        .iter()
        .zip(&hits.matched)
        .filter(|(_, &m)| !m)
        .map(|(g, _)| g.to_graph6())
        .collect();
    missing.sort();
    let passed = unmatched.is_empty() && missing.is_empty();
    unmatched.truncate(EXAMPLE_LIMIT);
    missing.truncate(EXAMPLE_LIMIT);
    Ok(AuditReport {
        kind,
        order: n,
        k,
        mode: AuditMode::Exhaustive,
        graphs_examined: examined,
        attaining: hits.attaining,
        attaining_classes,
        family_members: members.len() as u64,
        family_classes: class_count,
        unmatched,
        missing,
        passed,
    })
}

/// Whether some minimum code of `g` exhibits it as a family member.
fn decomposes(g: &Graph, kind: CodeKind, k: usize) -> bool {
    VertexSet::subsets_of_size(g.order(), k)
        .filter(|&c| is_code(g, c, kind))
        .any(|c| {
            let Ok((bp, map)) = decompose(g, c, kind) else {
                return false;
            };
            let isolated = !bp.inner.is_isolate_free();
            if bp.removals.len() > removal_cap(kind, k, isolated) {
                return false;
            }
            match bp.materialize() {
                Ok(me) => is_isomorphism(g, &me.graph, &map),
                Err(_) => false,
            }
        })
}

fn sampled(kind: CodeKind, n: usize, k: usize, seed: u64, trials: u64) -> Result<AuditReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..trials)
        .map(|_| {
            let p = rng.random_range(0.05..0.95);
            Graph::random(&mut rng, n, p)
        })
        .collect();
    let results: Vec<Option<bool>> = graphs
        .par_iter()
        .map(|g| attains(g, kind, k).then(|| decomposes(g, kind, k)))
        .collect();
    let attaining = results.iter().filter(|r| r.is_some()).count() as u64;
    let mut unmatched: Vec<String> = graphs
        .iter()
        .zip(&results)
        .filter(|(_, r)| **r == Some(false))
        .map(|(g, _)| g.to_graph6())
        .collect();
    let passed = unmatched.is_empty();
    unmatched.truncate(EXAMPLE_LIMIT);
    Ok(AuditReport {
        kind,
        order: n,
        k,
        mode: AuditMode::Sampled { seed, trials },
        graphs_examined: trials,
        attaining,
        attaining_classes: 0,
        family_members: 0,
        family_classes: 0,
        unmatched,
        missing: Vec::new(),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::verify_extremal;
    use crate::Separation;

    #[test]
    fn family_sizes() {
        let fam = characterization_family(CodeKind::LD, &Graph::empty(2), OuterPolicy::Empty).unwrap();
        assert_eq!(fam.count(), 4);
        // pool of 7 - 3 = 4 outer vertices, up to 3 deletions
        let fam = characterization_family(CodeKind::ID, &Graph::empty(3), OuterPolicy::Empty).unwrap();
        assert_eq!(fam.removal_cap(), 3);
        assert_eq!(fam.count(), 1 + 4 + 6 + 4);
    }

    #[test]
    fn family_members_attain_k() {
        let cases = [
            (CodeKind::LD, Graph::path(3)),
            (CodeKind::LTD, Graph::path(3)),
            (CodeKind::OD, Graph::new(3, [(1, 2)]).unwrap()),
            (CodeKind::OD, Graph::complete(3)),
            (CodeKind::OTD, Graph::complete(3)),
            (CodeKind::ID, Graph::empty(3)),
            (CodeKind::ITD, Graph::path(3)),
        ];
        for (kind, inner) in cases {
            for outer in [OuterPolicy::Empty, OuterPolicy::Complete] {
                for me in characterization_family(kind, &inner, outer.clone()).unwrap() {
                    let c = verify_extremal(&me, kind, None).unwrap();
                    assert!(c.passed, "{kind} removed {:?}", me.removed);
                }
            }
        }
    }

    #[test]
    fn inner_must_suit_the_kind() {
        assert!(characterization_family(CodeKind::LTD, &Graph::empty(2), OuterPolicy::Empty).is_err());
        assert!(characterization_family(CodeKind::ID, &Graph::complete(2), OuterPolicy::Empty).is_err());
    }

    #[test]
    fn decompose_inverts_materialize() {
        let bp = ExtremalBlueprint::new(Separation::O, Graph::complete(3))
            .with_outer(OuterPolicy::Random { seed: 3, probability: 0.5 })
            .with_removals(vec![VertexSet::from_bits(7)]);
        let me = bp.materialize().unwrap();
        let perm = [4, 2, 0, 5, 1, 3];
        let g = me.graph.permuted(&perm);
        let c: VertexSet = (0..3).map(|v| perm[v]).collect();
        let (back, map) = decompose(&g, c, CodeKind::OD).unwrap();
        assert_eq!(back.removals, bp.removals);
        assert!(is_isomorphism(&g, &back.materialize().unwrap().graph, &map));
    }

    #[test]
    fn small_exhaustive_audits() {
        let r = audit_characterization(CodeKind::LD, 4, AuditMode::Exhaustive).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.attaining > 0);
        let r = audit_characterization(CodeKind::OD, 4, AuditMode::Exhaustive).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(audit_characterization(CodeKind::LD, 8, AuditMode::Exhaustive).is_err());
        assert!(matches!(
            audit_characterization(CodeKind::FD, 5, AuditMode::Exhaustive),
            Err(Error::KTooSmall { .. })
        ));
    }

    #[test]
    fn sampled_audit_runs() {
        let r = audit_characterization(CodeKind::ID, 7, AuditMode::Sampled { seed: 1, trials: 300 }).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.graphs_examined, 300);
        assert!(audit_characterization(CodeKind::ID, 11, AuditMode::Sampled { seed: 1, trials: 1 }).is_err());
    }
}
