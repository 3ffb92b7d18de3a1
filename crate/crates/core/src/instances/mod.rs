//! Concrete target 2-categories: crossed-module 2-groups, deloopings of monoidal
//! tables and the trivial 2-groupoid.

mod crossed;
mod group;
mod monoidal;

pub use crossed::{enumerate_crossed_modules, two_group_from_crossed_module, CrossedModule};
pub use group::FiniteGroup;
pub use monoidal::{delooping, trivial_2groupoid, MonoidalTable, Morphism};
