//! The codescent 2-groupoid as a term algebra, jump normalization, lifts and the section
//! 2-functor.

mod eval;
mod identities;
mod normalize;
mod section;
mod term;

pub use eval::Pairing;
pub use identities::Identification;
pub use normalize::Rewriter;
pub use section::{Section, SectionChoice};
pub use term::{Atom, CTerm1, CTerm2, Codescent};
