//! Exact arithmetic over Q and over cyclotomic fields Q(ζ_m).

mod cyclopoly;
mod cyclotomic;

pub use cyclopoly::{cyclotomic_polynomial, euler_phi};
pub use cyclotomic::{max_order, set_max_order, Cyclotomic, DEFAULT_MAX_ORDER};

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {from} does not divide target order {to}")]
    IncompatibleOrder { from: u32, to: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("cyclotomic order {order} exceeds the configured bound {bound}")]
    OrderBound { order: u64, bound: u32 },
}
