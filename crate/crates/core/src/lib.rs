//! Identifying codes, locating-dominating sets and their relatives.
//!
//! The eight problems combine a separation property (L, O, I, F) with
//! domination or total domination. The crate provides exact solvers, the
//! extremal constructions `G^S(k)` that attain the logarithmic lower bounds,
//! and exhaustive audits of the graphs that attain them.

pub mod enumerate;
mod error;
pub mod extremal;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod separation;
pub mod solver;
pub mod vertex_set;

pub use error::{Error, Result};
pub use family::{family_membership, FamilyFlags};
pub use graph::{Graph, TwinReport};
pub use graph6::{emit_graph6, parse_graph, parse_graph6};
pub use iso::{find_isomorphism, is_isomorphic};
pub use separation::{is_admissible, is_code, CodeKind, Domination, Separation};
pub use solver::{lower_bound, max_order, min_code, min_code_with, oracle_min_code, SolveOptions, SolveReport};
pub use vertex_set::VertexSet;
