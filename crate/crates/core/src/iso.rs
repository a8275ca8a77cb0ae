//! Isomorphism testing for small graphs.
//!
//! Backtracking over vertex bijections. Candidate images are restricted to
//! vertices with the same local invariant (degree plus sorted neighbor
//! degrees), and every partial map is checked for adjacency consistency
//! before it is extended.

use std::collections::HashMap;

use crate::{Error, Graph, Result, VertexSet};

/// Largest order accepted by [`is_isomorphic`] and [`find_isomorphism`].
pub const ISOMORPHISM_LIMIT: usize = 10;

fn guard(g: &Graph) -> Result<()> {
    if g.order() > ISOMORPHISM_LIMIT {
        return Err(Error::Guard {
            what: "isomorphism test",
            order: g.order(),
            limit: ISOMORPHISM_LIMIT,
        });
    }
    Ok(())
}

/// Degree and sorted neighbor degrees of every vertex.
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Isomorphism-invariant summary. Isomorphic graphs have equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    order: usize,
    edges: usize,
    vertices: Vec<(usize, Vec<usize>)>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let mut vertices = vertex_invariants(g);
    vertices.sort_unstable();
    Fingerprint {
        order: g.order(),
        edges: g.edge_count(),
        vertices,
    }
}

/// True iff `map` (vertex `v` of `g` goes to `map[v]` of `h`) is an isomorphism.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.order() != h.order() || map.len() != g.order() {
        return false;
    }
    let image: VertexSet = map.iter().copied().filter(|&v| v < h.order()).collect();
    if image != h.vertices() {
        return false;
    }
    (0..g.order()).all(|v| {
        let mapped: VertexSet = g.neighbors(v).iter().map(|w| map[w]).collect();
        mapped == h.neighbors(map[v])
    })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An isomorphism from `g` onto `h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    guard(g)?;
    guard(h)?;
    Ok(search(g, h))
}

/// Unguarded search; exponential in the worst case.
pub(crate) fn search(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let gi = vertex_invariants(g);
    let hi = vertex_invariants(h);
    let n = g.order();
    let candidates: Vec<VertexSet> = (0..n)
        .map(|v| (0..n).filter(|&w| gi[v] == hi[w]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    // most constrained vertices first, ties broken toward neighbors of
    // already-placed vertices
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = VertexSet::new();
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| {
                (
                    candidates[v].len(),
                    usize::MAX - g.neighbors(v).intersection(placed).len(),
                    v,
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed.insert(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new();
    extend(g, h, &order, &candidates, 0, &mut map, &mut used).then_some(map)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    candidates: &[VertexSet],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in candidates[v].difference(*used) {
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g, h, order, candidates, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
    }
    map[v] = usize::MAX;
    false
}

/// Isomorphism classes of a growing collection of graphs.
#[derive(Clone, Debug, Default)]
pub struct IsoClasses {
    representatives: Vec<Graph>,
    buckets: HashMap<Fingerprint, Vec<usize>>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the class containing `g`, if any.
    pub fn find(&self, g: &Graph) -> Option<usize> {
        self.find_with(&fingerprint(g), g)
    }

    fn find_with(&self, fp: &Fingerprint, g: &Graph) -> Option<usize> {
        self.buckets
            .get(fp)?
            .iter()
            .copied()
            .find(|&i| search(&self.representatives[i], g).is_some())
    }

    /// Adds `g`, returning its class index and whether the class is new.
    pub fn insert(&mut self, g: Graph) -> (usize, bool) {
        let fp = fingerprint(&g);
        if let Some(i) = self.find_with(&fp, &g) {
            return (i, false);
        }
        let i = self.representatives.len();
        self.representatives.push(g);
        self.buckets.entry(fp).or_default().push(i);
        (i, true)
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[Graph] {
        &self.representatives
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_labeled_graphs;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Tries all n! bijections.
    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn go(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            if perm.len() == g.order() {
                return g.permuted(perm) == *h;
            }
            for w in 0..g.order() {
                if !used[w] {
                    used[w] = true;
                    perm.push(w);
                    if go(g, h, perm, used) {
                        return true;
                    }
                    perm.pop();
                    used[w] = false;
                }
            }
            false
        }
        g.order() == h.order() && go(g, h, &mut Vec::new(), &mut vec![false; g.order()])
    }

    #[test]
    fn examples() {
        let p3 = Graph::path(3);
        let star = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(is_isomorphic(&p3, &star).unwrap());
        assert!(!is_isomorphic(&Graph::complete(3), &p3).unwrap());
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
        assert!(!is_isomorphic(&two_k2, &Graph::path(4)).unwrap());
    }

    #[test]
    fn guard_applies() {
        let big = Graph::empty(11);
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::Guard { limit: 10, .. })));
        assert!(is_isomorphic(&Graph::empty(10), &Graph::empty(10)).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_four_vertices() {
        let all: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        for g in &all {
            for h in &all {
                assert_eq!(is_isomorphic(g, h).unwrap(), brute_isomorphic(g, h), "{g:?} {h:?}");
            }
        }
    }

    #[test]
    fn class_counts_match_known_values() {
        // unlabeled graphs on 1..=6 vertices: 1, 2, 4, 11, 34, 156
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let mut classes = IsoClasses::new();
            for g in enumerate_labeled_graphs(n).unwrap() {
                classes.insert(g);
            }
            assert_eq!(classes.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn returned_map_is_an_isomorphism() {
        let g = Graph::cycle(6);
        let h = g.permuted(&[3, 5, 0, 1, 4, 2]);
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &map));
        assert!(!is_isomorphism(&g, &h, &[0, 0, 1, 2, 3, 4]));
    }

    proptest! {
        #[test]
        fn equivalence_relation(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.9) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            perm.shuffle(&mut rng);
            let k = h.permuted(&perm);
            prop_assert!(is_isomorphic(&g, &g).unwrap());
            prop_assert!(is_isomorphic(&g, &h).unwrap());
            prop_assert!(is_isomorphic(&h, &g).unwrap());
            prop_assert!(is_isomorphic(&h, &k).unwrap());
            prop_assert!(is_isomorphic(&g, &k).unwrap());
            let other = Graph::random(&mut rng, n, p);
            prop_assert_eq!(is_isomorphic(&g, &other).unwrap(), is_isomorphic(&other, &g).unwrap());
            if n <= 7 {
                prop_assert_eq!(is_isomorphic(&g, &other).unwrap(), brute_isomorphic(&g, &other));
            }
        }
    }
}
