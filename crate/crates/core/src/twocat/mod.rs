//! Finite 2-categories, 2-functors, pseudonatural transformations and modifications
//! stored as explicit tables, with exhaustive axiom checkers.

mod check;
mod funct;
mod functor;
mod pseudonat;
mod table;
mod term;

pub use check::{check_two_category, check_two_category_bounded, zigzags_hold};
pub use funct::{functor_2category, FunctorCategory, DEFAULT_BUDGET};
pub use functor::{check_normalized_two_functor, check_two_functor, TwoFunctorData};
pub use pseudonat::{
    check_modification, check_pseudonatural, check_weak_inverse, CellEquivalence, EquivalenceBundle,
    ModificationData, PseudoNatData,
};
pub use table::{LabelIndex, ObjId, OneCell, TwoCategoryTable, TwoCell, C1, C2, NONE};
pub use term::{evaluate_term, Cell, Term};
