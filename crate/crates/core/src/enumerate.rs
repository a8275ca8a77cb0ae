//! Exhaustive enumeration of labeled graphs.
//!
//! Graphs on `n` vertices are indexed by their upper-triangle code (see
//! [`Graph::from_upper_triangle`]) and produced in ascending code order, so a
//! range of codes is a self-contained shard of the enumeration.

use std::ops::Range;

use rayon::prelude::*;

use crate::graph::{pair_count, MAX_ENCODABLE_ORDER};
use crate::{Error, Graph, Result};

/// Orders above this need an explicit override.
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// `2^(n choose 2)`, the number of labeled graphs on `n <= 11` vertices.
pub fn labeled_graph_count(order: usize) -> u64 {
    assert!(order <= MAX_ENCODABLE_ORDER);
    1u64 << pair_count(order)
}

fn check(order: usize, allow_large: bool) -> Result<()> {
    let limit = if allow_large {
        MAX_ENCODABLE_ORDER
    } else {
        EXHAUSTIVE_LIMIT
    };
    if order == 0 {
        return Err(Error::OrderOutOfRange(0));
    }
    if order > limit {
        return Err(Error::Guard {
            what: "labeled graph enumeration",
            order,
            limit,
        });
    }
    Ok(())
}

/// Every labeled graph on `order` vertices, each exactly once.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    order: usize,
    codes: Range<u64>,
}

impl LabeledGraphs {
    /// Enumerates all graphs on `order <= 7` vertices.
    pub fn new(order: usize) -> Result<Self> {
        Self::with_override(order, false)
    }

    /// As [`LabeledGraphs::new`]; with `allow_large` the guard rises to 11.
    pub fn with_override(order: usize, allow_large: bool) -> Result<Self> {
        check(order, allow_large)?;
        Ok(LabeledGraphs {
            order,
            codes: 0..labeled_graph_count(order),
        })
    }

    /// Restricts the stream to the codes in `range`.
    pub fn shard(mut self, range: Range<u64>) -> Self {
        let end = range.end.min(self.codes.end);
        self.codes = range.start.min(end)..end;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn codes(&self) -> Range<u64> {
        self.codes.clone()
    }

    /// Parallel view of the same stream; `collect` keeps code order.
    pub fn into_par_iter(self) -> impl IndexedParallelIterator<Item = Graph> {
        let order = self.order;
        let start = self.codes.start as usize;
        let end = self.codes.end as usize;
        (start..end)
            .into_par_iter()
            .map(move |code| decode(order, code as u64))
    }
}

fn decode(order: usize, code: u64) -> Graph {
    Graph::from_upper_triangle(order, code).expect("code within range")
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.codes.next().map(|code| decode(self.order, code))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.codes.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Shorthand for [`LabeledGraphs::new`].
pub fn enumerate_labeled_graphs(order: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
    }

    #[test]
    fn pairwise_distinct_up_to_five() {
        for n in 1..=5 {
            let all: HashSet<Graph> = enumerate_labeled_graphs(n).unwrap().collect();
            assert_eq!(all.len() as u64, labeled_graph_count(n));
        }
    }

    #[test]
    fn ascending_code_order() {
        let codes: Vec<u64> = enumerate_labeled_graphs(4)
            .unwrap()
            .map(|g| g.upper_triangle().unwrap())
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_labeled_graphs(8), Err(Error::Guard { limit: 7, .. })));
        assert!(LabeledGraphs::with_override(8, true).is_ok());
        assert!(LabeledGraphs::with_override(12, true).is_err());
        assert_eq!(enumerate_labeled_graphs(0).unwrap_err(), Error::OrderOutOfRange(0));
    }

    #[test]
    fn shards_partition_the_stream() {
        let whole: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        let mut parts: Vec<Graph> = Vec::new();
        for start in (0..64).step_by(10) {
            parts.extend(LabeledGraphs::new(4).unwrap().shard(start..start + 10));
        }
        assert_eq!(parts, whole);
        let par: Vec<Graph> = LabeledGraphs::new(4).unwrap().into_par_iter().collect();
        assert_eq!(par, whole);
    }
}
