//! Exact scalars, dense Kronecker calculus and string-diagram evaluation.

pub mod diagram;
mod elim;
pub mod linmap;
pub mod scalar;

pub use diagram::{comp, tens, Diagram, Equation};
pub use linmap::{total, unflatten, LinMap, SparseVec};
pub use scalar::{Field, Scalar};

pub(crate) use elim::{solve_sparse, SolveFailure};
