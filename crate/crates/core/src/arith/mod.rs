//! Exact scalars, univariate polynomials, small number fields and row
//! reduction. Nothing in the crate uses floating point.

mod linalg;
mod number_field;
mod poly;
mod rational;

pub use linalg::{kernel, Echelon};
pub use number_field::{NfElem, NumberField, MAX_FIELD_DEGREE};
pub use poly::Poly;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    ZeroGcd,
    #[error("division leaves a nonzero remainder")]
    Inexact,
    #[error("element shares a factor with the field modulus; the modulus is reducible")]
    ReducibleModulus,
    #[error("unsupported field modulus: {0}")]
    BadModulus(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Greatest common divisor of two non-negative machine integers.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
