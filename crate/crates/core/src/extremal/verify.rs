use serde::Serialize;

use super::MaterializedExtremal;
use crate::separation::{is_code, CodeKind};
use crate::solver::{min_code_with, SolveOptions};
use crate::{Error, Result, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalCheck {
    pub kind: CodeKind,
    pub k: usize,
    pub order: usize,
    /// The designated code is a `kind`-code.
    pub code_valid: bool,
    pub number: Option<usize>,
    pub witness: Option<VertexSet>,
    pub subsets_tested: u64,
    pub passed: bool,
}

/// Checks that the designated code is a minimum `kind`-code.
///
/// The solver starts at size 1 rather than at the logarithmic bound, so
/// every smaller size is ruled out by search.
pub fn verify_extremal(me: &MaterializedExtremal, kind: CodeKind, budget: Option<u64>) -> Result<ExtremalCheck> {
    if kind.separation != me.separation {
        return Err(Error::Unsupported(format!(
            "{kind} does not match a G^{}({}) construction",
            me.separation, me.k
        )));
    }
    if kind.is_total() && me.inner_has_isolated {
        return Err(Error::Blueprint(format!(
            "{kind} needs an isolate-free inner graph"
        )));
    }
    let opts = SolveOptions {
        budget,
        use_lower_bound: false,
    };
    let report = min_code_with(&me.graph, kind, opts)?;
    let code_valid = is_code(&me.graph, me.code, kind);
    Ok(ExtremalCheck {
        kind,
        k: me.k,
        order: me.order(),
        code_valid,
        number: report.number,
        witness: report.witness,
        subsets_tested: report.subsets_tested,
        passed: code_valid && report.number == Some(me.k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{ExtremalBlueprint, OuterPolicy};
    use crate::{Graph, Separation};

    fn check(sep: Separation, inner: Graph, outer: OuterPolicy, kind: CodeKind) -> ExtremalCheck {
        let me = ExtremalBlueprint::new(sep, inner).with_outer(outer).materialize().unwrap();
        verify_extremal(&me, kind, None).unwrap()
    }

    #[test]
    fn examples() {
        let c = check(Separation::L, Graph::empty(2), OuterPolicy::Empty, CodeKind::LD);
        assert!(c.passed && c.number == Some(2));
        let c = check(Separation::I, Graph::empty(3), OuterPolicy::Empty, CodeKind::ID);
        assert!(c.passed && c.number == Some(3));
        let c = check(Separation::F, Graph::path(4), OuterPolicy::Empty, CodeKind::FTD);
        assert!(c.passed && c.number == Some(4));
    }

    #[test]
    fn mismatches_are_rejected() {
        let me = ExtremalBlueprint::new(Separation::L, Graph::empty(2)).materialize().unwrap();
        assert!(verify_extremal(&me, CodeKind::ID, None).is_err());
        assert!(verify_extremal(&me, CodeKind::LTD, None).is_err());
    }

    #[test]
    fn all_small_pairings() {
        for k in 2..=4 {
            for sep in Separation::ALL {
                if k < sep.min_k() {
                    continue;
                }
                for inner in crate::enumerate::enumerate_labeled_graphs(k).unwrap() {
                    let Ok(me) = ExtremalBlueprint::new(sep, inner).materialize() else {
                        continue;
                    };
                    for kind in crate::CodeKind::ALL.into_iter().filter(|c| c.separation == sep) {
                        if kind.is_total() && me.inner_has_isolated {
                            continue;
                        }
                        let c = verify_extremal(&me, kind, None).unwrap();
                        assert!(c.passed, "{kind} k={k} {:?}", me.graph);
                    }
                }
            }
        }
    }
}
