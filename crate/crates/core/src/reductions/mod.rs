//! Executable reductions with checkable certificates.
//!
//! * [`conflict`]: AOCM to maximum-weight independent set.
//! * [`dcc`]: directed 3-cycle cover to AOCM.
//! * [`gadget`]: maximum independent set on cubic graphs to AOCM, with the
//!   solution decoder and the quantities of its approximation-preservation
//!   argument.

pub mod conflict;
pub mod dcc;
pub mod gadget;

pub use conflict::{aocm_to_wis, wis_to_aocm_solution, ConflictGraph};
pub use dcc::{dcc3_to_aocm, extract_cycle_cover, CycleCover};
pub use gadget::{
    build_gadget_f, check_lemma3, check_lreduction, classify_vertex_cases, decode_g, ArcAssociation,
    decode_matching, ArcRole, GadgetInstance, LReductionChecker, LReductionReport, Lemma3Check, VertexCase,
    VertexCasePartition, ALPHA, BETA,
};
