//! Multivariate polynomials over ℚ with multigrading: Gröbner bases,
//! initial forms and ideals in the min convention, saturation, elimination
//! kernels, binomial primality certificates and circuits.

mod groebner;
mod ideal;
mod poly;

pub use groebner::{buchberger, normal_form, MonomialOrder};
pub use ideal::{
    algebra_map_kernel, circuits, combinations, ideal_equals, initial_ideal, is_binomial_prime,
    is_homogeneous, saturate, saturate_by_all_vars, BinomialPrimality, InitialIdealResult,
    PolynomialIdeal,
};
pub use poly::{parse_polynomial, Monomial, Polynomial, Ring};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("initial form of the zero polynomial")]
    ZeroPolynomial,
    #[error("generator with {0} terms is not a binomial")]
    NotBinomial(usize),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("weight vector length {got} does not match variable count {want}")]
    WeightLength { got: usize, want: usize },
    #[error("valuation matrix does not have full rank")]
    NotFullRank,
    #[error("parse error at offset {0}: {1}")]
    Parse(usize, String),
}
