pub mod cli;
pub mod duality;
pub mod error;
pub mod format;
pub mod lattice;
pub mod poset;
pub mod theorems;

pub use error::{Error, Result};
pub use lattice::{Lattice, LatticeIdeal};
pub use poset::{PointSet, Poset};
