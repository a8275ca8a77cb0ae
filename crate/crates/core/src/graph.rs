//! Immutable simple undirected graphs on at most 62 vertices.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::{Error, Result, VertexSet};

/// Largest supported graph order.
pub const MAX_ORDER: usize = VertexSet::CAPACITY;

/// Largest order whose upper-triangle adjacency fits in one `u64`.
pub const MAX_ENCODABLE_ORDER: usize = 11;

/// A simple undirected graph. Vertices are `0..order`; `adj[v]` is the open
/// neighborhood of `v`. The adjacency is symmetric and loop-free for every
/// value this type can hold.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Twin structure of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwinReport {
    /// Non-adjacent pairs `u < v` with `N(u) = N(v)`.
    pub open_twins: Vec<(usize, usize)>,
    /// Adjacent pairs `u < v` with `N[u] = N[v]`.
    pub closed_twins: Vec<(usize, usize)>,
    /// Vertices with empty open neighborhood.
    pub isolated: VertexSet,
}

impl TwinReport {
    pub fn is_twin_free(&self) -> bool {
        self.open_twins.is_empty() && self.closed_twins.is_empty()
    }
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(order))
    }
}

/// Number of vertex pairs, i.e. `n choose 2`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(order)?;
        let mut adj = vec![VertexSet::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from raw adjacency sets, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let order = adj.len();
        check_order(order)?;
        let all = VertexSet::full(order);
        for (v, &nbrs) in adj.iter().enumerate() {
            if let Some(w) = nbrs.difference(all).min() {
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
            if nbrs.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(w) = nbrs.iter().find(|&w| !adj[w].contains(v)) {
                return Err(Error::Unsupported(format!(
                    "asymmetric adjacency between {v} and {w}"
                )));
            }
        }
        Ok(Graph { adj })
    }

    /// Edgeless graph on `order` vertices.
    ///
    /// # Panics
    /// If `order` is outside `[1, 62]`; the same holds for the other named
    /// constructors below.
    pub fn empty(order: usize) -> Self {
        check_order(order).expect("invalid order");
        Graph {
            adj: vec![VertexSet::new(); order],
        }
    }

    pub fn complete(order: usize) -> Self {
        check_order(order).expect("invalid order");
        let all = VertexSet::full(order);
        Graph {
            adj: (0..order).map(|v| all.without(v)).collect(),
        }
    }

    /// Path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Self {
        Graph::new(order, (1..order).map(|v| (v - 1, v))).expect("invalid order")
    }

    /// Cycle on `order >= 3` vertices.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least 3 vertices");
        Graph::new(order, (0..order).map(|v| (v, (v + 1) % order))).expect("invalid order")
    }

    /// Edges `{0,1}, {2,3}, ...`; with odd order the last vertex is isolated.
    pub fn matching(order: usize) -> Self {
        Graph::new(order, (0..order / 2).map(|i| (2 * i, 2 * i + 1))).expect("invalid order")
    }

    /// Erdős–Rényi graph `G(order, p)`, pairs visited in `(u, v)`, `u < v` order.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, order: usize, p: f64) -> Self {
        check_order(order).expect("invalid order");
        let mut adj = vec![VertexSet::new(); order];
        for v in 1..order {
            for u in 0..v {
                if rng.random_bool(p) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { adj }
    }

    /// Decodes the upper-triangle bit encoding: bit `i` of `code` is the
    /// `i`-th pair in column order `(0,1), (0,2), (1,2), (0,3), ...`, which is
    /// the bit order graph6 uses.
    pub fn from_upper_triangle(order: usize, code: u64) -> Result<Self> {
        check_order(order)?;
        if order > MAX_ENCODABLE_ORDER {
            return Err(Error::Guard {
                what: "upper-triangle encoding",
                order,
                limit: MAX_ENCODABLE_ORDER,
            });
        }
        let pairs = pair_count(order);
        if pairs < 64 && code >> pairs != 0 {
            return Err(Error::Unsupported(format!(
                "code {code} has bits beyond the {pairs} pairs of order {order}"
            )));
        }
        let mut adj = vec![VertexSet::new(); order];
        let mut bit = 0;
        for v in 1..order {
            for u in 0..v {
                if (code >> bit) & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        Ok(Graph { adj })
    }

    /// Inverse of [`Graph::from_upper_triangle`]; `None` above order 11.
    pub fn upper_triangle(&self) -> Option<u64> {
        if self.order() > MAX_ENCODABLE_ORDER {
            return None;
        }
        let mut code = 0u64;
        let mut bit = 0;
        for v in 1..self.order() {
            for u in 0..v {
                if self.adj[v].contains(u) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(code)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood of `v`.
    ///
    /// # Panics
    /// If `v` is out of range. [`Graph::open_neighborhood`] is the checked form.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|s| s.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|s| !s.is_empty())
    }

    /// Whether two non-adjacent vertices share an open neighborhood.
    pub fn has_open_twins(&self) -> bool {
        (0..self.order()).any(|v| (0..v).any(|u| !self.adj[u].contains(v) && self.adj[u] == self.adj[v]))
    }

    /// Whether two adjacent vertices share a closed neighborhood.
    pub fn has_closed_twins(&self) -> bool {
        (0..self.order()).any(|v| {
            self.adj[v]
                .iter()
                .take_while(|&u| u < v)
                .any(|u| self.adj[u].with(u) == self.adj[v].with(v))
        })
    }

    pub fn twin_report(&self) -> TwinReport {
        let mut report = TwinReport {
            isolated: self.isolated_vertices(),
            ..TwinReport::default()
        };
        for u in 0..self.order() {
            for v in u + 1..self.order() {
                if self.adj[u].contains(v) {
                    if self.adj[u].with(u) == self.adj[v].with(v) {
                        report.closed_twins.push((u, v));
                    }
                } else if self.adj[u] == self.adj[v] {
                    report.open_twins.push((u, v));
                }
            }
        }
        report
    }

    /// Subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = s.difference(self.vertices()).min() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let kept = s.to_vec();
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| position[w]).collect())
            .collect();
        Ok(Graph { adj })
    }

    /// `self + other`: `other`'s vertices are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order() + other.order();
        if order > MAX_ORDER {
            return Err(Error::CapacityExceeded(order));
        }
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| VertexSet::from_bits(s.bits() << shift)),
        );
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (0..self.order())
                .map(|v| all.difference(self.adj[v]).without(v))
                .collect(),
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let image: VertexSet = perm.iter().copied().collect();
        assert_eq!(image, self.vertices(), "not a permutation");
        let mut adj = vec![VertexSet::new(); self.order()];
        for (v, &pv) in perm.iter().enumerate() {
            adj[pv] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::new(), |acc, v| acc.union(self.adj[v]))
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_graph_examples() {
        assert_eq!(p3(), Graph::path(3));
        assert_eq!(Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap(), Graph::complete(3));
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::new(63, []), Err(Error::OrderOutOfRange(63)));
        // duplicates collapse
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn neighborhoods() {
        let g = p3();
        assert_eq!(g.open_neighborhood(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(g.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(g.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        let k1 = Graph::empty(1);
        assert!(k1.open_neighborhood(0).unwrap().is_empty());
        assert_eq!(k1.closed_neighborhood(0).unwrap().to_vec(), vec![0]);
        assert_eq!(Graph::complete(3).open_neighborhood(0).unwrap().to_vec(), vec![1, 2]);
        assert!(matches!(g.open_neighborhood(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn twin_report_examples() {
        let k2 = Graph::complete(2);
        let r = k2.twin_report();
        assert!(r.open_twins.is_empty());
        assert_eq!(r.closed_twins, vec![(0, 1)]);
        assert!(r.isolated.is_empty());

        let r = Graph::empty(2).twin_report();
        assert_eq!(r.open_twins, vec![(0, 1)]);
        assert!(r.closed_twins.is_empty());
        assert_eq!(r.isolated.to_vec(), vec![0, 1]);

        // N(0)={1}, N(1)={0,2}, N(2)={1,3}, N(3)={2}: no two equal
        let r = Graph::path(4).twin_report();
        assert!(r.is_twin_free());
        assert!(r.isolated.is_empty());
    }

    #[test]
    fn fast_twin_checks_agree_with_report() {
        for code in 0..1024 {
            let g = Graph::from_upper_triangle(5, code).unwrap();
            let r = g.twin_report();
            assert_eq!(g.has_open_twins(), !r.open_twins.is_empty());
            assert_eq!(g.has_closed_twins(), !r.closed_twins.is_empty());
            assert_eq!(g.is_isolate_free(), r.isolated.is_empty());
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.induced_subgraph([0, 1].into_iter().collect()).unwrap(), Graph::complete(2));
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph([0, 3].into_iter().collect()).unwrap(), Graph::empty(2));
        assert_eq!(p4.induced_subgraph([0, 1, 2].into_iter().collect()).unwrap(), p3());
        assert_eq!(p4.induced_subgraph(VertexSet::new()), Err(Error::EmptyVertexSet));
        // relabelling keeps ascending order: {1,3} in P4 has no edge, {1,2} has one
        let g = p4.induced_subgraph([1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = Graph::complete(2);
        let g = k2.disjoint_union(&k2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(Graph::empty(1).disjoint_union(&Graph::empty(1)).unwrap(), Graph::empty(2));
        let p4 = Graph::path(4);
        let g = p4.disjoint_union(&p4).unwrap();
        assert_eq!((g.order(), g.edge_count()), (8, 6));
        let big = Graph::empty(40);
        assert_eq!(big.disjoint_union(&big), Err(Error::CapacityExceeded(80)));
    }

    #[test]
    fn upper_triangle_roundtrip_and_order() {
        // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2)
        let g = Graph::from_upper_triangle(3, 0b100).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        for code in 0..64 {
            let g = Graph::from_upper_triangle(4, code).unwrap();
            assert_eq!(g.upper_triangle(), Some(code));
        }
        assert!(Graph::from_upper_triangle(3, 8).is_err());
    }

    #[test]
    fn complement_and_connectivity() {
        assert_eq!(Graph::path(4).complement(), Graph::new(4, [(0, 2), (0, 3), (1, 3)]).unwrap());
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::matching(4).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn from_adjacency_validates() {
        let bad = vec![VertexSet::singleton(1), VertexSet::new()];
        assert!(Graph::from_adjacency(bad).is_err());
        let looped = vec![VertexSet::singleton(0)];
        assert_eq!(Graph::from_adjacency(looped), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn permutation_relabels_edges() {
        let g = Graph::path(3).permuted(&[1, 0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }
}
