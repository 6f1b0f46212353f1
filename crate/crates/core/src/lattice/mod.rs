//! Lattice-point sets of invariant tuples: closed forms, enumerated
//! counterparts, witnesses, convexity and inequality audits.

mod audit;
mod closed;
mod convex;
mod enumerate;
mod set;
mod witness;

pub use audit::*;
pub use closed::{closed_form_set, half_bound_violation, in_general_region};
pub use convex::{is_convex, Gap};
pub use enumerate::{
    enumerate_cw_sets, enumerate_graph_pair_set, CwEnumeration, GraphSource, PairEnumeration,
    MAX_CW_SET_N,
};
pub use set::{diff_sets, format_diff, LatticePointSet, Provenance, SetKind};
pub use witness::{witness_for_point, PointKind, Witness, MAX_CW_WITNESS_N, MAX_GRAPH_WITNESS_N};
