//! Cameron-Walker graphs: structure shapes, recognition, closed-form
//! invariants, the `f(V)` depth sweep and the named constructions.

mod construct;
mod depth;
mod enumerate;
mod recognize;
mod shape;

pub use construct::{construct, Family};
pub use depth::{cw_invariants, depth_via_fv, f_value, witness_set, DepthWitness, MAX_SWEEP_M};
pub use enumerate::{enumerate_cw_shapes, MAX_SHAPE_VERTICES};
pub use recognize::{
    is_cameron_walker_semantic, is_star, is_star_triangle, recognize_cw, structural_shape,
};
pub use shape::{build_cw, CwLayout, CwShape};

/// Which depth-2 template a shape matches, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthTwoType {
    E1,
    E2,
    E3,
}

pub fn depth_two_type(shape: &CwShape) -> Option<DepthTwoType> {
    let (m, p) = (shape.m(), shape.p());
    if m == 2 && shape.t().iter().all(|&t| t == 0) {
        Some(DepthTwoType::E1)
    } else if m == 1 && p == 1 && shape.t()[0] == 1 {
        Some(DepthTwoType::E2)
    } else if m == 1 && p == 1 && shape.t()[0] >= 2 && shape.s()[0] == 1 {
        Some(DepthTwoType::E3)
    } else {
        None
    }
}
