//! Exact rational arithmetic and dense polynomial algebra over abstract fields.

mod field;
mod poly;
mod rational;

pub use field::{Coeff, Extension, Field, Rationals};
pub use poly::{
    add, compose, derivative, divmod, eval, gcd, map_coeffs, monic, mul, neg, powmod, product, rem, scale, sub, xgcd,
    Poly, QPoly,
};
pub use rational::{int, parse_rational, q, resultant};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient is not invertible")]
    NonInvertible,
    #[error("modulus must be nonconstant")]
    ConstantModulus,
    #[error("division is not exact")]
    Inexact,
}
