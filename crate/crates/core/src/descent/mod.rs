//! Descent objects, their 1- and 2-morphisms with diagram checkers, refinements and the
//! limit over covers.

mod context;
mod gauge;
mod morphism;
mod object;
mod pairing;
mod refine;

pub use context::DescentContext;
pub use gauge::gauge;
pub use morphism::{check_descent_1mor, check_descent_2mor, compose_descent, forget_v, forget_v_1mor, DescentOneMor, DescentTwoMor};
pub use object::{check_descent_object, is_normalized, DescentObject};
pub use pairing::DescentPairing;
pub use refine::{
    common_refinement, fibre_product, limit_compose, limit_eq, restrict, restrict_1mor, restrict_2mor, LimitObject, LimitOneMor,
    LimitTwoMor, Refinement, Structure,
};
