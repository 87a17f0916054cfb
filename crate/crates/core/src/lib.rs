//! Exact computations for twisted group algebras.
//!
//! Circle values are carried as exact rotation numbers ([`torus`]), so
//! cocycle identities, regularity and condition K are decided without
//! floating point. The only float computation is the SVD-based center
//! dimension in [`algebra`], kept as an independent cross-check.

pub mod algebra;
pub mod direct;
pub mod error;
pub mod free_product;
pub mod group;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod multiplier;
pub mod regularity;
pub mod torus;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use multiplier::{Cocycle, Multiplier, SampleDomain};
pub use torus::{IrrationalBasis, RotationNumber};
