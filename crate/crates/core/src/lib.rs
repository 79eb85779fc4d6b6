//! Exact homological computations for finite-dimensional algebras given by
//! bound quivers over prime fields.

pub mod algebra;
pub mod ar;
pub mod config;
pub mod corpus;
pub mod decompose;
pub mod dsl;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod opext;
pub mod oracle;
pub mod parts;
pub mod presentation;
pub mod tilting;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use linalg::{Field, Mat};
