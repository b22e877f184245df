//! Exact verification of duality between braided Hopf algebras in
//! Yetter-Drinfeld categories over a finite-dimensional Hopf algebra.
//!
//! Everything is computed over `Q` or a prime field with dense structure
//! tensors; graded infinite-dimensional objects are truncated at a degree
//! bound and only compared where truncation cannot interfere.

pub mod algebra;
pub mod axioms;
pub mod base_hopf;
pub mod braided;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod graded;
pub mod linmap;
pub mod pairing;
pub mod report;
pub mod scenario;
pub mod scalar;
pub mod space;
pub mod tensor;
pub mod yd;

pub use error::{Error, Result};
pub use linmap::LinMap;
pub use scalar::{Field, Scalar};
pub use space::{BasedSpace, Space};
