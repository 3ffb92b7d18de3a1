//! Local-to-global reconstruction of 2-functors on finite combinatorial data.
//!
//! The crate models finite 2-categories as tables, crossed-module 2-groups and
//! monoidal deloopings as targets, cell complexes with patch covers as base spaces,
//! and provides descent data, the codescent 2-groupoid, extraction, reconstruction
//! and the witnesses relating the two.

pub mod error;
pub mod format;
pub mod report;
pub mod instances;
pub mod twocat;
pub mod base;
pub mod codescent;
pub mod descent;
pub mod transport;

pub use error::{CoreError, Result};
pub use report::{Report, Violation};
