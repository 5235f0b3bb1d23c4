//! Exact-arithmetic kernel for two-term bracket algebras.
//!
//! Everything is computed over the rationals by structure constants: brackets
//! that are skew-symmetric only up to a chain homotopy, their representations,
//! the associated cochain complexes, and homotopy-transfer between them. All
//! ranks and cohomology dimensions are exact; nothing here floats.

pub mod error;
pub mod linalg;
pub mod graded;
pub mod report;
pub mod leibniz;
pub mod hemistrict;
pub mod rep;
pub mod standard;
pub mod semistrict;
pub mod bundled;
pub mod sampling;

pub use error::Error;
pub use linalg::{Mat, Rat};
