//! Trivialized functors, extraction, reconstruction, the round-trip witnesses and holonomy.

mod batch;
mod extract;
mod holonomy;
mod reconstruct;
mod trivialized;
mod witness;

pub use batch::batch;
pub use extract::{extract, extract_1mor, extract_2mor, extract_unchecked, extraction_compositor, extraction_unitor};
pub use holonomy::{holonomy, TransportQuery};
pub use reconstruct::{pairing_r_1mor, reconstruct, reconstruct_1mor, reconstruct_2mor, Reconstruction};
pub use trivialized::{random_functor, random_trivialization, random_trivialized, TransformationBundle, TrivializedFunctor};
pub use witness::{choice_comparison, eta, rho};
