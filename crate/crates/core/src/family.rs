//! Recognition of bipartite, cobipartite and split graphs.

use serde::Serialize;

use crate::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyFlags {
    /// Two independent sets cover the vertices.
    pub bipartite: bool,
    /// Two cliques cover the vertices.
    pub cobipartite: bool,
    /// A clique and an independent set cover the vertices.
    pub split: bool,
}

pub fn family_membership(g: &Graph) -> FamilyFlags {
    FamilyFlags {
        bipartite: is_bipartite(g),
        cobipartite: is_bipartite(&g.complement()),
        split: is_split(g),
    }
}

/// Breadth-first 2-coloring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color: Vec<Option<bool>> = vec![None; g.order()];
    for start in 0..g.order() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let c = color[v].expect("queued vertices are colored");
            for w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Degree-sequence test: with degrees `d_1 >= ... >= d_n` and `m` the largest
/// index with `d_m >= m - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let d = g.degree_sequence();
    let m = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * (m - 1) + tail
}

/// Whether `s` is a clique of `g`.
pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(g.neighbors(v)))
}

/// Whether `s` is an independent set of `g`.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).intersection(s).is_empty())
}
