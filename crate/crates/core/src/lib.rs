//! Chain-level algebraic 2- and 3-complexes over integral group rings of finite groups.

pub mod error;
pub mod group;
pub mod complex;
pub mod format;
pub mod fox;
pub mod lattice;
pub mod moves;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
