//! Exact rational calculus for degree-3 identities of nonassociative algebras:
//! polarization into a commutative and an anticommutative product, implication
//! tests over Σ3, arity-3 operad dimensions, super sign rules and hom-Lie brackets.

pub mod algebra;
pub mod cli;
pub mod depolarization;
pub mod error;
pub mod format;
pub mod homlie;
pub mod identity;
pub mod linalg;
pub mod operad;
pub mod sigma3;
pub mod superalgebra;

pub use error::{Error, Result};
pub use identity::Identity;
pub use linalg::{Matrix, Rational};
