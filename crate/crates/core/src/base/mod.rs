//! Base spaces: computads, the free path 2-groupoid, covers and their fibre products.

pub mod cellmap;
pub mod computad;
pub mod cover;
pub mod fiber;
pub mod free;
pub mod functor;
pub mod path;

pub use cellmap::CellMap;
pub use computad::{Computad, Edge, Face};
pub use cover::{CoverSpec, Patch};
pub use fiber::{build_fiber_spaces, FiberSpace, FiberTower, MAX_FIBER};
pub use free::{free_path_2groupoid, FreePath2Groupoid};
pub use functor::{
    check_path_functor, check_path_modification, check_path_transformation, inverse1, PathFunctor, PathModification,
    PathTransformation,
};
pub use path::{BigonStep, BigonTerm, Letter, PathTerm};
