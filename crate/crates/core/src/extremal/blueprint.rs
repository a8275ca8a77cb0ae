//! Blueprints for the extremal graphs `G^S(k)` and their materialization.
//!
//! The code `C` occupies vertices `0..k`. Every nonempty label `C' ⊆ C` that
//! the separation allows gets one outer vertex joined to exactly `C'`; outer
//! vertices follow the code in ascending bitmask order of their labels.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::separation::{signature_families, CodeKind, Domination, Separation};
use crate::{parse_graph6, Error, Graph, Result, VertexSet};

/// Largest supported code size.
pub const MAX_K: usize = 5;

/// Edges among the outer vertices.
#[derive(Clone, Debug, PartialEq)]
pub enum OuterPolicy {
    Empty,
    Complete,
    /// A graph on the outer vertices, indexed by their position in the pool.
    Explicit(Graph),
    Random { seed: u64, probability: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalBlueprint {
    pub separation: Separation,
    pub k: usize,
    /// The graph induced by the code, on vertices `0..k`.
    pub inner: Graph,
    pub outer: OuterPolicy,
    /// Labels (bitmasks over code indices) of outer vertices to delete.
    pub removals: Vec<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OuterVertex {
    pub vertex: usize,
    pub label: VertexSet,
}

/// A built extremal graph with its designated code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaterializedExtremal {
    pub separation: Separation,
    pub k: usize,
    #[serde(serialize_with = "as_graph6")]
    pub graph: Graph,
    pub code: VertexSet,
    /// Outer vertices present in `graph`, in vertex order.
    pub outer: Vec<OuterVertex>,
    pub inner_has_isolated: bool,
    pub removed: Vec<VertexSet>,
}

fn as_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

fn bp_err(msg: impl Into<String>) -> Error {
    Error::Blueprint(msg.into())
}

/// Checks `separation.min_k() <= k <= MAX_K`.
pub fn check_k(separation: Separation, k: usize) -> Result<()> {
    if k < separation.min_k() {
        return Err(Error::KTooSmall {
            what: format!("{separation} separation"),
            k,
            min: separation.min_k(),
        });
    }
    if k > MAX_K {
        return Err(Error::KTooLarge { k, max: MAX_K });
    }
    Ok(())
}

/// Rejects inner graphs with the twins `separation` forbids.
pub fn check_twin_condition(separation: Separation, inner: &Graph) -> Result<()> {
    let twins = inner.twin_report();
    let open = matches!(separation, Separation::O | Separation::F);
    let closed = matches!(separation, Separation::I | Separation::F);
    if open {
        if let Some(&(u, v)) = twins.open_twins.first() {
            return Err(bp_err(format!(
                "inner vertices {u} and {v} are open twins; {separation} separation needs an open-twin-free inner graph"
            )));
        }
    }
    if closed {
        if let Some(&(u, v)) = twins.closed_twins.first() {
            return Err(bp_err(format!(
                "inner vertices {u} and {v} are closed twins; {separation} separation needs a closed-twin-free inner graph"
            )));
        }
    }
    Ok(())
}

/// Nonempty labels that get an outer vertex, in ascending bitmask order:
/// all of them for L; those that are not an open (O), closed (I), or either
/// (F) signature of a code vertex otherwise.
pub fn eligible_labels(separation: Separation, inner: &Graph) -> Vec<VertexSet> {
    let k = inner.order();
    let fam = signature_families(inner, inner.vertices()).expect("inner graph is nonempty");
    let taken: BTreeSet<VertexSet> = match separation {
        Separation::L => BTreeSet::new(),
        Separation::O => fam.open,
        Separation::I => fam.closed,
        Separation::F => fam.union,
    };
    (1..1u64 << k)
        .map(VertexSet::from_bits)
        .filter(|c| !taken.contains(c))
        .collect()
}

/// Order of `G^S(k)` before any removal.
pub fn construction_order(separation: Separation, k: usize, inner_has_isolated: bool) -> usize {
    let p = 1usize << k;
    match (separation, inner_has_isolated) {
        (Separation::L, _) => p - 1 + k,
        (Separation::O, true) => p,
        (Separation::O, false) | (Separation::I, _) => p - 1,
        (Separation::F, true) => p - k,
        (Separation::F, false) => p - 1 - k,
    }
}

/// How many outer vertices may be deleted while `kind`'s number stays `k`.
pub fn removal_cap(kind: CodeKind, k: usize, inner_has_isolated: bool) -> usize {
    let half = 1usize << (k - 1);
    match (kind.separation, kind.domination, inner_has_isolated) {
        (Separation::L, _, _) => k - 1,
        (Separation::O, Domination::D, true) => half - 1,
        (Separation::O, Domination::D, false) => half - 2,
        (Separation::O, Domination::TD, _) | (Separation::I, _, _) => half - 1,
        (Separation::F, Domination::D, true) => half - k,
        (Separation::F, Domination::D, false) => half - 1 - k,
        (Separation::F, Domination::TD, _) => half - k,
    }
}

impl ExtremalBlueprint {
    /// Blueprint with the given inner graph, no outer edges and no removals.
    pub fn new(separation: Separation, inner: Graph) -> Self {
        ExtremalBlueprint {
            separation,
            k: inner.order(),
            inner,
            outer: OuterPolicy::Empty,
            removals: Vec::new(),
        }
    }

    #[must_use]
    pub fn with_outer(mut self, outer: OuterPolicy) -> Self {
        self.outer = outer;
        self
    }

    #[must_use]
    pub fn with_removals(mut self, removals: Vec<VertexSet>) -> Self {
        self.removals = removals;
        self
    }

    pub fn materialize(&self) -> Result<MaterializedExtremal> {
        let k = self.k;
        check_k(self.separation, k)?;
        if self.inner.order() != k {
            return Err(bp_err(format!(
                "inner graph has order {}, expected k = {k}",
                self.inner.order()
            )));
        }
        check_twin_condition(self.separation, &self.inner)?;

        let labels = eligible_labels(self.separation, &self.inner);
        let pool = labels.len();
        let mut removed = Vec::with_capacity(self.removals.len());
        for &r in &self.removals {
            if r.is_empty() || !r.is_subset(VertexSet::full(k)) {
                return Err(bp_err(format!("removal label {r} is not a nonempty subset of the code")));
            }
            if !labels.contains(&r) {
                return Err(bp_err(format!(
                    "removal label {r} names no outer vertex: it is a signature of a code vertex"
                )));
            }
            if removed.contains(&r) {
                return Err(bp_err(format!("removal label {r} is listed twice")));
            }
            removed.push(r);
        }

        let outer_graph = match &self.outer {
            OuterPolicy::Empty => Graph::empty(pool),
            OuterPolicy::Complete => Graph::complete(pool),
            OuterPolicy::Explicit(h) => {
                if h.order() != pool {
                    return Err(bp_err(format!(
                        "outer graph has order {}, but there are {pool} outer vertices",
                        h.order()
                    )));
                }
                h.clone()
            }
            OuterPolicy::Random { seed, probability } => {
                if !(0.0..=1.0).contains(probability) {
                    return Err(bp_err(format!("probability {probability} is outside [0, 1]")));
                }
                Graph::random(&mut ChaCha8Rng::seed_from_u64(*seed), pool, *probability)
            }
        };

        let order = k + pool;
        if order > crate::graph::MAX_ORDER {
            return Err(Error::CapacityExceeded(order));
        }
        let mut edges: Vec<(usize, usize)> = self.inner.edges().collect();
        for (i, label) in labels.iter().enumerate() {
            edges.extend(label.iter().map(|c| (c, k + i)));
        }
        edges.extend(outer_graph.edges().map(|(a, b)| (k + a, k + b)));
        let full = Graph::new(order, edges)?;

        let base = MaterializedExtremal {
            separation: self.separation,
            k,
            graph: full,
            code: VertexSet::full(k),
            outer: labels
                .iter()
                .enumerate()
                .map(|(i, &label)| OuterVertex { vertex: k + i, label })
                .collect(),
            inner_has_isolated: !self.inner.is_isolate_free(),
            removed: Vec::new(),
        };
        base.remove_outer(&removed)
    }

    /// Parses the `key=value` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sep: Option<Separation> = None;
        let mut k: Option<usize> = None;
        let mut inner: Option<(usize, String)> = None;
        let mut outer: Option<(usize, String)> = None;
        let mut removals = Vec::new();
        let syntax = |line: usize, msg: String| Error::BlueprintSyntax { line, msg };

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| syntax(line, format!("expected `key=value`, found `{content}`")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "sep" => {
                    sep = Some(value.parse().map_err(|_| {
                        syntax(line, format!("unknown separation `{value}` (expected L, O, I or F)"))
                    })?)
                }
                "k" => {
                    k = Some(value.parse().map_err(|_| syntax(line, format!("`{value}` is not a count")))?)
                }
                "inner" => inner = Some((line, value.to_string())),
                "outer" => outer = Some((line, value.to_string())),
                "remove" => {
                    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        let bits = match item.strip_prefix("0b") {
                            Some(b) => u64::from_str_radix(b, 2),
                            None => item.parse(),
                        }
                        .map_err(|_| syntax(line, format!("`{item}` is not a label bitmask")))?;
                        if bits >= 1 << VertexSet::CAPACITY {
                            return Err(syntax(line, format!("label `{item}` is too large")));
                        }
                        removals.push(VertexSet::from_bits(bits));
                    }
                }
                _ => return Err(syntax(line, format!("unknown key `{key}`"))),
            }
        }

        let sep = sep.ok_or_else(|| syntax(0, "missing `sep=`".into()))?;
        let k = k.ok_or_else(|| syntax(0, "missing `k=`".into()))?;
        check_k(sep, k)?;

        let inner = match inner {
            None => Graph::empty(k),
            Some((line, spec)) => match spec.as_str() {
                "empty" => Graph::empty(k),
                "complete" => Graph::complete(k),
                "path" => Graph::path(k),
                "matching" => Graph::matching(k),
                g6 => parse_graph6(g6.as_bytes())
                    .map_err(|e| syntax(line, format!("inner graph: {e}")))?,
            },
        };
        let outer = match outer {
            None => OuterPolicy::Empty,
            Some((line, spec)) => match spec.as_str() {
                "empty" => OuterPolicy::Empty,
                "complete" => OuterPolicy::Complete,
                s if s.starts_with("random:") => {
                    let mut parts = s.splitn(3, ':').skip(1);
                    let seed = parts.next().and_then(|x| x.parse().ok());
                    let probability = parts.next().and_then(|x| x.parse().ok());
                    match (seed, probability) {
                        (Some(seed), Some(probability)) => OuterPolicy::Random { seed, probability },
                        _ => return Err(syntax(line, format!("expected `random:<seed>:<prob>`, found `{s}`"))),
                    }
                }
                g6 => OuterPolicy::Explicit(
                    parse_graph6(g6.as_bytes()).map_err(|e| syntax(line, format!("outer graph: {e}")))?,
                ),
            },
        };
        Ok(ExtremalBlueprint {
            separation: sep,
            k,
            inner,
            outer,
            removals,
        })
    }

    /// Inverse of [`ExtremalBlueprint::parse`].
    pub fn to_text(&self) -> String {
        let outer = match &self.outer {
            OuterPolicy::Empty => "empty".to_string(),
            OuterPolicy::Complete => "complete".to_string(),
            OuterPolicy::Explicit(h) => h.to_graph6(),
            OuterPolicy::Random { seed, probability } => format!("random:{seed}:{probability}"),
        };
        let mut text = format!(
            "sep={}\nk={}\ninner={}\nouter={}\n",
            self.separation,
            self.k,
            self.inner.to_graph6(),
            outer
        );
        if !self.removals.is_empty() {
            let labels: Vec<String> = self.removals.iter().map(|r| r.bits().to_string()).collect();
            text.push_str(&format!("remove={}\n", labels.join(",")));
        }
        text
    }
}

impl MaterializedExtremal {
    /// Deletes the outer vertices with the given labels.
    pub fn remove_outer(&self, labels: &[VertexSet]) -> Result<MaterializedExtremal> {
        let mut drop = VertexSet::new();
        for &label in labels {
            let v = self
                .outer
                .iter()
                .find(|o| o.label == label)
                .ok_or_else(|| bp_err(format!("no outer vertex with label {label}")))?;
            if drop.contains(v.vertex) {
                return Err(bp_err(format!("removal label {label} is listed twice")));
            }
            drop.insert(v.vertex);
        }
        let keep = self.graph.vertices().difference(drop);
        let graph = self.graph.induced_subgraph(keep)?;
        let outer = self
            .outer
            .iter()
            .filter(|o| !drop.contains(o.vertex))
            .enumerate()
            .map(|(i, o)| OuterVertex {
                vertex: self.k + i,
                label: o.label,
            })
            .collect();
        let mut removed = self.removed.clone();
        removed.extend_from_slice(labels);
        Ok(MaterializedExtremal {
            graph,
            outer,
            removed,
            ..self.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// The graph induced by the code.
    pub fn inner(&self) -> Graph {
        self.graph.induced_subgraph(self.code).expect("code is nonempty")
    }
}
