//! Exact computational algebra for finite-dimensional Hopf quasigroups and
//! Hopf coquasigroups over Q or F_p.

pub mod error;
pub mod catalog;
pub mod exactlin;
pub mod factor;
pub mod format;
pub mod hopf;
pub mod loops;
pub mod par;
pub mod products;
pub mod report;
pub mod table;

pub use error::{Error, Result};
pub use exactlin::{comp, tens, Diagram, Equation, Field, LinMap, Scalar, SparseVec};
pub use hopf::{HopfCoquasigroupData, HopfMaps, HopfQuasigroupData};
pub use loops::{FiniteGroup, FiniteLoop};
pub use par::Exec;
pub use report::{CheckEntry, ValidationReport, Witness};
