//! Exact finite category theory, executable.
//!
//! The crate builds symmetric monoidal categories whose objects and
//! morphisms are finite exact data (matrices over `F_p` or `Q`, finite
//! sets), the category-of-operators construction over pointed finite sets,
//! algebras / bialgebras / Hopf algebras with the shear-map calculus,
//! truncated simplicial sets with nerves and horn filling, and the
//! homotopy-coherent nerve at bounded dimension. Everything is decided by
//! exact equality of finite data; there is no floating point and no
//! approximation. Claims about simplicial sets are always bounded by an
//! explicit dimension, and claims of the form "is an ∞-category" mean "all
//! inner horns fill up to that bound".

pub mod error;
pub mod monoidal;
pub mod operators;
pub mod algebra;
pub mod report;

pub use error::FincatError;
