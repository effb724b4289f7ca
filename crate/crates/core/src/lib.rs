//! Generalized section rings `R(X, D) = ⊕ H⁰(X, O_X(nD))Tⁿ` of Q-divisors on
//! curves, and their homogeneous principal prime ideals.
//!
//! Everything is exact: rationals, polynomials over `Q`, and small number
//! fields for points such as `i` or a primitive cube root of unity.

pub mod arith;
pub mod divisor;
pub mod elliptic;
pub mod p1;
pub mod primes;
pub mod section_ring;
pub mod semigroup;

pub use arith::{NfElem, NumberField, Poly, Rational};
pub use divisor::{Curve, CurvePoint, QDivisor};
pub use elliptic::{ec_is_principal, ec_prime_exists, EcPoint, EcVerdict, WeierstrassCurve};
pub use p1::{div_of_function, principal_function, rr_basis, RationalFunctionP1};
pub use primes::{
    construct_prime, enumerate_primes, necessary_check, primality_oracle, quotient_profile, veronese_transform,
    OracleVerdict, PrimeCandidate, PrimeClass, PrimeVerdict, QuotientProfile,
};
pub use section_ring::{build_ring, find_relations, graded_dim, hilbert_series, HilbertSeries, SectionRingModel};
pub use semigroup::{a_invariant_semigroup, frobenius, ratsing_criterion, sg_from_profile, NumericalSemigroup};
