//! Named constructions: bipartite, cobipartite and split graphs attaining
//! the logarithmic bound, and the disconnected OD example.

use std::fmt;

use serde::Serialize;

use super::{ExtremalBlueprint, MaterializedExtremal, OuterPolicy};
use crate::iso::is_isomorphism;
use crate::separation::{CodeKind, Separation};
use crate::solver::min_code;
use crate::{family_membership, Error, FamilyFlags, Graph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphFamily {
    Bipartite,
    Cobipartite,
    Split,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 3] = [GraphFamily::Bipartite, GraphFamily::Cobipartite, GraphFamily::Split];

    pub fn contains(self, flags: FamilyFlags) -> bool {
        match self {
            GraphFamily::Bipartite => flags.bipartite,
            GraphFamily::Cobipartite => flags.cobipartite,
            GraphFamily::Split => flags.split,
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFamily::Bipartite => "bipartite",
            GraphFamily::Cobipartite => "cobipartite",
            GraphFamily::Split => "split",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeChoice {
    Empty,
    Complete,
}

impl EdgeChoice {
    fn graph(self, k: usize) -> Graph {
        match self {
            EdgeChoice::Empty => Graph::empty(k),
            EdgeChoice::Complete => Graph::complete(k),
        }
    }

    fn policy(self) -> OuterPolicy {
        match self {
            EdgeChoice::Empty => OuterPolicy::Empty,
            EdgeChoice::Complete => OuterPolicy::Complete,
        }
    }
}

/// The construction realizing `kind` within `family`, if one is known.
fn recipe(kind: CodeKind, family: GraphFamily) -> Result<(Separation, EdgeChoice, EdgeChoice)> {
    use EdgeChoice::{Complete, Empty};
    use GraphFamily::{Bipartite, Cobipartite, Split};
    let r = match (kind, family) {
        (CodeKind::LD, Bipartite) => (Separation::L, Empty, Empty),
        (CodeKind::ID, Bipartite) => (Separation::I, Empty, Empty),
        (CodeKind::LD | CodeKind::LTD, Cobipartite) => (Separation::L, Complete, Complete),
        (CodeKind::OD | CodeKind::OTD, Cobipartite) => (Separation::O, Complete, Complete),
        (CodeKind::LD | CodeKind::LTD, Split) => (Separation::L, Complete, Empty),
        (CodeKind::OD | CodeKind::OTD, Split) => (Separation::O, Complete, Empty),
        (CodeKind::ID, Split) => (Separation::I, Empty, Complete),
        (CodeKind::LTD | CodeKind::OD | CodeKind::OTD, Bipartite) | (CodeKind::ID, Cobipartite) => {
            return Err(Error::Unsupported(format!(
                "no {family} graph is known to attain the {kind} lower bound"
            )))
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "tight {family} constructions cover LD, LTD, OD, OTD and ID only, not {kind}"
            )))
        }
    };
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightPreset {
    pub kind: CodeKind,
    pub family: GraphFamily,
    pub inner: EdgeChoice,
    pub outer: EdgeChoice,
    pub flags: FamilyFlags,
    pub extremal: MaterializedExtremal,
}

pub fn tight_preset(kind: CodeKind, family: GraphFamily, k: usize) -> Result<TightPreset> {
    let (sep, inner, outer) = recipe(kind, family)?;
    let extremal = ExtremalBlueprint::new(sep, inner.graph(k))
        .with_outer(outer.policy())
        .materialize()?;
    Ok(TightPreset {
        kind,
        family,
        inner,
        outer,
        flags: family_membership(&extremal.graph),
        extremal,
    })
}

/// Every known tight construction for `kind` at code size `k`.
pub fn tight_family_presets(kind: CodeKind, k: usize) -> Result<Vec<TightPreset>> {
    let presets: Vec<TightPreset> = GraphFamily::ALL
        .into_iter()
        .filter(|&f| recipe(kind, f).is_ok())
        .map(|f| tight_preset(kind, f, k))
        .collect::<Result<_>>()?;
    if presets.is_empty() {
        return recipe(kind, GraphFamily::Bipartite).map(|_| Vec::new());
    }
    Ok(presets)
}

/// `G^O(k)` with an isolated code vertex `u`, minus every outer vertex whose
/// label contains `u` except `v_{u}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisconnectionCase {
    pub extremal: MaterializedExtremal,
    pub removed: usize,
    /// `K2 + G^O(k-1)`.
    #[serde(skip)]
    pub reference: Graph,
    /// Vertex map from `extremal.graph` onto `reference`.
    pub map: Vec<usize>,
    pub isomorphic: bool,
    pub number: Option<usize>,
}

/// The case with inner graph `K1 + K_{k-1}`, vertex 0 isolated.
pub fn od_disconnection_case(k: usize) -> Result<DisconnectionCase> {
    if k < 3 {
        return Err(Error::KTooSmall {
            what: "OD disconnection case".into(),
            k,
            min: 3,
        });
    }
    let rest = (1..k).flat_map(|a| (a + 1..k).map(move |b| (a, b)));
    od_disconnection_case_with(Graph::new(k, rest)?)
}

pub fn od_disconnection_case_with(inner: Graph) -> Result<DisconnectionCase> {
    let k = inner.order();
    if k < 3 {
        return Err(Error::KTooSmall {
            what: "OD disconnection case".into(),
            k,
            min: 3,
        });
    }
    let isolated = inner.isolated_vertices();
    if isolated.len() != 1 {
        return Err(Error::Blueprint(format!(
            "the inner graph must have exactly one isolated vertex, found {}",
            isolated.len()
        )));
    }
    let u = isolated.min().expect("one isolated vertex");
    let full = ExtremalBlueprint::new(Separation::O, inner.clone()).materialize()?;
    let drop: Vec<VertexSet> = full
        .outer
        .iter()
        .map(|o| o.label)
        .filter(|l| l.contains(u) && l.len() > 1)
        .collect();
    let extremal = full.remove_outer(&drop)?;

    // G^O(k-1) on the remaining code vertices, relabeled in ascending order
    let others: Vec<usize> = (0..k).filter(|&v| v != u).collect();
    let sub_inner = inner.induced_subgraph(VertexSet::full(k).without(u))?;
    let sub = ExtremalBlueprint::new(Separation::O, sub_inner).materialize()?;
    let reference = Graph::complete(2).disjoint_union(&sub.graph)?;

    let shrink = |label: VertexSet| -> VertexSet {
        label
            .iter()
            .map(|c| others.iter().position(|&o| o == c).expect("label avoids u"))
            .collect()
    };
    let mut map = vec![usize::MAX; extremal.order()];
    map[u] = 0;
    for (i, &c) in others.iter().enumerate() {
        map[c] = 2 + i;
    }
    for o in &extremal.outer {
        map[o.vertex] = if o.label == VertexSet::singleton(u) {
            1
        } else {
            let target = shrink(o.label);
            sub.outer
                .iter()
                .find(|s| s.label == target)
                .map_or(usize::MAX, |s| 2 + s.vertex)
        };
    }
    let isomorphic = is_isomorphism(&extremal.graph, &reference, &map);
    let number = min_code(&extremal.graph, CodeKind::OD)?.number;
    Ok(DisconnectionCase {
        removed: drop.len(),
        extremal,
        reference,
        map,
        isomorphic,
        number,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::verify_extremal;
    use crate::is_isomorphic;
    use crate::solver::lower_bound;

    #[test]
    fn examples() {
        let p = tight_preset(CodeKind::LD, GraphFamily::Bipartite, 3).unwrap();
        assert!(p.flags.bipartite);
        assert_eq!(verify_extremal(&p.extremal, CodeKind::LD, None).unwrap().number, Some(3));
        let p = tight_preset(CodeKind::OD, GraphFamily::Cobipartite, 3).unwrap();
        assert!(p.flags.cobipartite);
        assert_eq!(verify_extremal(&p.extremal, CodeKind::OD, None).unwrap().number, Some(3));
        let p = tight_preset(CodeKind::ID, GraphFamily::Split, 3).unwrap();
        assert!(p.flags.split);
        assert_eq!(verify_extremal(&p.extremal, CodeKind::ID, None).unwrap().number, Some(3));
    }

    #[test]
    fn every_preset_is_tight() {
        for k in 2..=4 {
            for kind in [CodeKind::LD, CodeKind::LTD, CodeKind::OD, CodeKind::OTD, CodeKind::ID] {
                for p in tight_family_presets(kind, k).unwrap() {
                    assert!(p.family.contains(p.flags), "{kind} {}", p.family);
                    let c = verify_extremal(&p.extremal, kind, None).unwrap();
                    assert!(c.passed);
                    assert_eq!(c.number, Some(lower_bound(kind, p.extremal.order())));
                }
            }
        }
    }

    #[test]
    fn open_cells_error() {
        for (kind, fam) in [
            (CodeKind::LTD, GraphFamily::Bipartite),
            (CodeKind::OD, GraphFamily::Bipartite),
            (CodeKind::OTD, GraphFamily::Bipartite),
            (CodeKind::ID, GraphFamily::Cobipartite),
        ] {
            assert!(tight_preset(kind, fam, 3).is_err());
        }
        for kind in [CodeKind::ITD, CodeKind::FD, CodeKind::FTD] {
            assert!(tight_family_presets(kind, 4).is_err());
        }
        assert_eq!(tight_family_presets(CodeKind::LD, 3).unwrap().len(), 3);
        assert_eq!(tight_family_presets(CodeKind::ID, 3).unwrap().len(), 2);
    }

    #[test]
    fn disconnection_case() {
        let d = od_disconnection_case(3).unwrap();
        assert_eq!(d.removed, 3);
        assert!(d.isomorphic);
        let k2_k3 = Graph::complete(2).disjoint_union(&Graph::complete(3)).unwrap();
        assert!(is_isomorphic(&d.extremal.graph, &k2_k3).unwrap());
        assert_eq!(d.number, Some(3));

        let d = od_disconnection_case(4).unwrap();
        assert_eq!(d.removed, 7);
        assert_eq!(d.extremal.order(), 9);
        assert!(d.isomorphic);
        assert!(is_isomorphic(&d.extremal.graph, &d.reference).unwrap());
        assert_eq!(d.number, Some(4));

        let d = od_disconnection_case(5).unwrap();
        assert!(d.isomorphic);
        assert_eq!(d.number, Some(5));
    }

    #[test]
    fn disconnection_inner_is_checked() {
        assert!(od_disconnection_case(2).is_err());
        assert!(od_disconnection_case_with(Graph::path(3)).is_err());
        let two_isolated = Graph::new(4, [(2, 3)]).unwrap();
        assert!(od_disconnection_case_with(two_isolated).is_err());
        // isolated vertex in the middle of the labels
        let inner = Graph::new(4, [(0, 2), (2, 3), (0, 3)]).unwrap();
        let d = od_disconnection_case_with(inner).unwrap();
        assert!(d.isomorphic);
    }
}
