//! Counts of small graphs admitting each separation, and of the extremal
//! constructions they generate.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::blueprint::{check_k, MAX_K};
use crate::enumerate::LabeledGraphs;
use crate::graph::pair_count;
use crate::separation::{admits_separating_set, Separation};
use crate::{Error, Graph, Result};

/// One count per separation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeparationCounts {
    pub l: u64,
    pub o: u64,
    pub i: u64,
    pub f: u64,
}

impl SeparationCounts {
    pub fn get(&self, s: Separation) -> u64 {
        match s {
            Separation::L => self.l,
            Separation::O => self.o,
            Separation::I => self.i,
            Separation::F => self.f,
        }
    }

    fn add(self, o: SeparationCounts) -> SeparationCounts {
        SeparationCounts {
            l: self.l + o.l,
            o: self.o + o.o,
            i: self.i + o.i,
            f: self.f + o.f,
        }
    }

    fn of(g: &Graph) -> SeparationCounts {
        let c = |s| u64::from(admits_separating_set(g, s));
        SeparationCounts {
            l: c(Separation::L),
            o: c(Separation::O),
            i: c(Separation::I),
            f: c(Separation::F),
        }
    }
}

fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Number of `G^S(k)` graphs per separation, from the product formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionCounts {
    #[serde(serialize_with = "big")]
    pub l: BigUint,
    #[serde(serialize_with = "big")]
    pub o: BigUint,
    #[serde(serialize_with = "big")]
    pub i: BigUint,
    #[serde(serialize_with = "big")]
    pub f: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub k: usize,
    /// Labeled graphs on `k` vertices.
    pub eta: u64,
    /// Labeled graphs on `k` vertices admitting each separation.
    pub eta_s: SeparationCounts,
    /// The same, restricted to isolate-free graphs.
    pub eta_bar_s: SeparationCounts,
    /// Isolate-free counts on `k - 1` vertices.
    pub eta_bar_s_prev: SeparationCounts,
    pub constructions: ConstructionCounts,
}

/// `2^(m choose 2)`.
pub fn eta(m: usize) -> BigUint {
    BigUint::from(1u8) << pair_count(m)
}

/// Admission counts over all labeled graphs on `k` vertices: all graphs,
/// then isolate-free graphs only.
pub fn separation_counts(k: usize) -> Result<(SeparationCounts, SeparationCounts)> {
    Ok(LabeledGraphs::new(k)?
        .into_par_iter()
        .map(|g| {
            let c = SeparationCounts::of(&g);
            let bar = if g.is_isolate_free() { c } else { SeparationCounts::default() };
            (c, bar)
        })
        .reduce(
            || (SeparationCounts::default(), SeparationCounts::default()),
            |a, b| (a.0.add(b.0), a.1.add(b.1)),
        ))
}

pub fn counting(k: usize) -> Result<CountReport> {
    if k < 2 {
        return Err(Error::KTooSmall {
            what: "counting".into(),
            k,
            min: 2,
        });
    }
    check_k(Separation::L, k)?;
    debug_assert!(k <= MAX_K);
    let (eta_s, eta_bar_s) = separation_counts(k)?;
    let (_, eta_bar_s_prev) = separation_counts(k - 1)?;

    let p = 1usize << k;
    let b = |x: u64| BigUint::from(x);
    // a term with a negative number of outer vertices describes no graph
    let eta_of = |m: isize| if m < 0 { BigUint::ZERO } else { eta(m as usize) };
    let (p, k_i) = (p as isize, k as isize);
    let constructions = ConstructionCounts {
        l: eta(k) * eta_of(p - 1),
        o: b(eta_bar_s.o) * eta_of(p - 1 - k_i) + b(eta_bar_s_prev.o) * eta_of(p - k_i),
        i: b(eta_s.i) * eta_of(p - 1 - k_i),
        f: b(eta_bar_s.f) * eta_of(p - 1 - 2 * k_i) + b(eta_bar_s_prev.f) * eta_of(p - 2 * k_i),
    };
    Ok(CountReport {
        k,
        eta: 1 << pair_count(k),
        eta_s,
        eta_bar_s,
        eta_bar_s_prev,
        constructions,
    })
}
