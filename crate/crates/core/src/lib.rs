//! Exact-arithmetic machinery for semi-canonical embeddings of affine
//! T-varieties built from polyhedral divisors: polyhedral combinatorics,
//! Gröbner bases over ℚ, cone-lifting certificates, arrangement varieties,
//! torus quotients and hypertoric total spaces.

pub mod exactmath;
pub mod polyhedra;
pub mod polyalg;
pub mod semicanonical;
pub mod arrangement;
pub mod quotients;

pub use exactmath::{Int, Rat};
