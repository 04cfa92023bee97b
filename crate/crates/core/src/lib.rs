//! Exact-arithmetic matroid library: the Tutte polynomial by several
//! interchangeable algorithms, the Schmitt matroid Hopf algebra with its
//! character calculus, and a registry of verification checks that test the
//! algebraic identities relating them on a built-in corpus of matroids.

pub mod checks;
pub mod corpus;
pub mod error;
pub mod hopf;
pub mod matroid;
pub mod poly;
pub mod tutte;

pub use error::CapExceeded;
pub use matroid::{ElementKind, GroundSubset, Matroid, MatroidError};
pub use poly::{MultiPoly, Var};
