//! Exact finite-dimensional algebra workbench.

pub mod algebra;
pub mod brauer;
pub mod error;
pub mod factor;
pub mod hecke;
pub mod field;
pub mod linalg;
pub mod module;
pub mod partition;
pub mod poly;
pub mod skew;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals, SimpleExtension};
pub use linalg::{Matrix, SparseMatrix, Subspace};
pub use algebra::FdAlgebra;
pub use module::{FdModule, ProjDim};
