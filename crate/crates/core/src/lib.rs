//! Orientation control matchings.
//!
//! A control matching of a digraph is a set of arcs in which every node is the
//! head of at most one arc and the tail of at most one. This crate computes:
//!
//! * maximum (and maximum-weight) control matchings of a fixed digraph,
//! * OCM: an orientation of an undirected graph maximising the control
//!   matching, via maximum simple 2-matchings,
//! * AOCM: the weighted variant, by exhaustive search, an exact independent-set
//!   search, or a greedy heuristic,
//! * the reductions from directed 3-cycle cover and cubic independent set,
//!   with decoders and certificate checks.
//!
//! Everything weighted is generic over [`Weight`]; [`Instance`] and
//! [`ExactInstance`] fix it to `f64` and `i64`.

pub mod aocm;
pub mod control_matching;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod mwis;
pub mod ocm;
pub mod oracles;
pub mod reductions;
pub mod scalar;

mod assignment;
mod blossom;

pub use aocm::{solve_aocm_brute, solve_aocm_exact, solve_aocm_greedy, AocmSolution, BruteOptions};
pub use control_matching::{
    driver_count, is_control_matching, max_control_matching, max_weight_control_matching, ControlMatching,
};
pub use error::{Error, Result};
pub use graph::{
    build_undirected, is_cubic, validate_orientation, AocmInstance, Arc, ArcSet, Digraph, Orientation,
    UndirectedGraph,
};
pub use ocm::{max_simple_two_matching, solve_ocm, OcmSolution, TwoMatching};
pub use scalar::Weight;

pub type Instance = AocmInstance<f64>;
pub type ExactInstance = AocmInstance<i64>;
pub type Solution = AocmSolution<f64>;
pub type ExactSolution = AocmSolution<i64>;
pub type Gadget = reductions::GadgetInstance<f64>;
pub type ExactGadget = reductions::GadgetInstance<i64>;
