//! The function field of P¹ in the affine coordinate `w = u/v`: divisors of
//! rational functions, Riemann–Roch spaces and functions with a prescribed
//! principal divisor.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{ArithError, Poly, Rational};
use crate::divisor::{CurvePoint, QDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum P1Error {
    #[error("the zero function has no divisor")]
    ZeroFunction,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} has zeros that are not rational points")]
    IrrationalZeros(String),
    #[error("divisor is not on P1")]
    NotOnP1,
    #[error("divisor is not integral")]
    NotIntegral,
    #[error("divisor has degree {0}, expected 0")]
    NonzeroDegree(Rational),
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `numer(w) / denom(w)` with `denom` monic and the two coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionP1 {
    numer: Poly,
    denom: Poly,
}

impl RationalFunctionP1 {
    pub fn new(numer: Poly, denom: Poly) -> Result<Self, P1Error> {
        if denom.is_zero() {
            return Err(P1Error::ZeroDenominator);
        }
        if numer.is_zero() {
            return Ok(RationalFunctionP1::zero());
        }
        let g = numer.gcd(&denom)?;
        let numer = numer.div_exact(&g)?;
        let denom = denom.div_exact(&g)?;
        let lc = denom.leading().expect("nonzero").recip()?;
        Ok(RationalFunctionP1 {
            numer: numer.scale(&lc),
            denom: denom.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunctionP1 {
            numer: p,
            denom: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunctionP1::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RationalFunctionP1::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunctionP1::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn mul(&self, other: &RationalFunctionP1) -> RationalFunctionP1 {
        RationalFunctionP1::new(&self.numer * &other.numer, &self.denom * &other.denom)
            .expect("product of valid functions")
    }

    pub fn scale(&self, c: &Rational) -> RationalFunctionP1 {
        RationalFunctionP1::new(self.numer.scale(c), self.denom.clone()).expect("valid")
    }

    pub fn inv(&self) -> Result<RationalFunctionP1, P1Error> {
        if self.is_zero() {
            return Err(P1Error::ZeroFunction);
        }
        RationalFunctionP1::new(self.denom.clone(), self.numer.clone())
    }

    pub fn pow(&self, exp: i32) -> Result<RationalFunctionP1, P1Error> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(RationalFunctionP1 {
            numer: base.numer.pow(e),
            denom: base.denom.pow(e),
        })
    }

    /// Order of vanishing at `∞`: `deg denom − deg numer`.
    pub fn ord_infinity(&self) -> Option<i64> {
        let n = self.numer.degree()? as i64;
        Some(self.denom.degree().unwrap_or(0) as i64 - n)
    }

    /// `div(g)`: zeros with positive, poles with negative multiplicity.
    pub fn divisor(&self) -> Result<QDivisor, P1Error> {
        div_of_function(self)
    }
}

impl fmt::Display for RationalFunctionP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RationalFunctionP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunctionP1({self})")
    }
}

fn positive_divisors(n: &BigUint) -> Vec<BigUint> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigUint::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let q = n / &i;
            if q != i {
                large.push(q);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots with multiplicity, and the cofactor free of rational roots.
pub fn rational_roots(p: &Poly) -> (Vec<(Rational, u32)>, Poly) {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult as u32));
        rest = Poly::new(rest.coeffs()[zero_mult..].to_vec());
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    // candidates come from the squarefree part, whose coefficients stay small
    let sqf = rest
        .div_exact(&rest.gcd(&rest.derivative()).expect("nonzero"))
        .expect("gcd divides");
    let lcm = sqf
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sqf
        .coeffs()
        .iter()
        .map(|c| (c * &Rational::from_integer(lcm.clone())).numer().clone())
        .collect();
    let a0 = ints[0].abs().to_biguint().expect("nonnegative");
    let an = ints.last().expect("nonzero").abs().to_biguint().expect("nonnegative");
    let nums = positive_divisors(&a0);
    let dens = positive_divisors(&an);
    let mut candidates: Vec<Rational> = Vec::new();
    for n in &nums {
        for d in &dens {
            if n.gcd(d).is_one() {
                let q = Rational::new(BigInt::from(n.clone()), BigInt::from(d.clone()));
                candidates.push(-&q);
                candidates.push(q);
            }
        }
    }
    for c in candidates {
        if !sqf.eval(&c).is_zero() {
            continue;
        }
        let lin = Poly::linear(&c);
        let mut mult = 0;
        loop {
            let (q, r) = rest.divrem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        roots.push((c, mult));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, rest)
}

/// `div(g)` for a nonzero function whose numerator and denominator split into
/// linear factors over `Q`.
pub fn div_of_function(g: &RationalFunctionP1) -> Result<QDivisor, P1Error> {
    if g.is_zero() {
        return Err(P1Error::ZeroFunction);
    }
    let (zeros, zrest) = rational_roots(g.numer());
    let (poles, prest) = rational_roots(g.denom());
    if zrest.degree().unwrap_or(0) > 0 || prest.degree().unwrap_or(0) > 0 {
        return Err(P1Error::IrrationalZeros(g.to_string()));
    }
    let at_inf = g.ord_infinity().expect("nonzero");
    let terms = zeros
        .into_iter()
        .map(|(a, m)| (CurvePoint::P1Finite(a), Rational::from(i64::from(m))))
        .chain(
            poles
                .into_iter()
                .map(|(a, m)| (CurvePoint::P1Finite(a), Rational::from(-i64::from(m)))),
        )
        .chain([(CurvePoint::P1Infinity, Rational::from(at_inf))]);
    Ok(QDivisor::on_p1(terms))
}

fn small_exponent(c: &Rational) -> Result<i64, P1Error> {
    c.to_i64()
        .filter(|e| e.unsigned_abs() <= u32::MAX as u64)
        .ok_or(P1Error::ExponentTooLarge)
}

/// `Π_{q finite} (w − q)^{e_q}` split into numerator and denominator.
fn finite_part(e: &QDivisor) -> Result<(Poly, Poly), P1Error> {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (p, c) in e.iter() {
        if let CurvePoint::P1Finite(q) = p {
            let k = small_exponent(c)?;
            let f = Poly::linear(q).pow(k.unsigned_abs() as u32);
            if k > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
    }
    Ok((num, den))
}

fn require_integral_p1(e: &QDivisor) -> Result<(), P1Error> {
    if !e.is_on_p1() {
        return Err(P1Error::NotOnP1);
    }
    if !e.is_integral() {
        return Err(P1Error::NotIntegral);
    }
    Ok(())
}

/// Basis of `H⁰(P¹, O(E))` for an integral divisor `E`.
///
/// The `j`-th element is `w^j · Π (w − q)^{−E(q)}` over finite `q`, for
/// `j = 0, …, deg E`; empty when `deg E < 0`.
pub fn rr_basis(e: &QDivisor) -> Result<Vec<RationalFunctionP1>, P1Error> {
    require_integral_p1(e)?;
    let deg = small_exponent(&e.degree())?;
    if deg < 0 {
        return Ok(Vec::new());
    }
    // zeros forced at negative coefficients, poles allowed at positive ones
    let (pos, neg) = finite_part(e)?;
    (0..=deg as usize)
        .map(|j| RationalFunctionP1::new(neg.shift(j), pos.clone()))
        .collect()
}

/// The monic-over-monic function `g` with `div(g) = A` for an integral
/// degree-0 divisor `A` on P¹.
pub fn principal_function(a: &QDivisor) -> Result<RationalFunctionP1, P1Error> {
    require_integral_p1(a)?;
    let deg = a.degree();
    if !deg.is_zero() {
        return Err(P1Error::NonzeroDegree(deg));
    }
    let (num, den) = finite_part(a)?;
    RationalFunctionP1::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn pt(a: i64) -> CurvePoint {
        CurvePoint::p1(a)
    }

    fn inf() -> CurvePoint {
        CurvePoint::P1Infinity
    }

    fn lin(a: i64) -> Poly {
        Poly::linear(&r(a))
    }

    #[test]
    fn divisor_of_polynomial() {
        let g = RationalFunctionP1::from_poly(&Poly::x().pow(2) * &lin(1));
        let expected = QDivisor::on_p1([(pt(0), r(2)), (pt(1), r(1)), (inf(), r(-3))]);
        assert_eq!(div_of_function(&g).unwrap(), expected);
    }

    #[test]
    fn divisor_of_quotient() {
        let g = RationalFunctionP1::new(&lin(1) * &lin(5), Poly::x()).unwrap();
        let expected = QDivisor::on_p1([
            (pt(1), r(1)),
            (pt(5), r(1)),
            (pt(0), r(-1)),
            (inf(), r(-1)),
        ]);
        assert_eq!(div_of_function(&g).unwrap(), expected);
        assert!(div_of_function(&RationalFunctionP1::one()).unwrap().is_zero());
    }

    #[test]
    fn irrational_zeros_are_rejected() {
        let g = RationalFunctionP1::from_poly(Poly::from_ints(&[1, 0, 1]));
        assert!(matches!(div_of_function(&g), Err(P1Error::IrrationalZeros(_))));
        assert_eq!(div_of_function(&RationalFunctionP1::zero()), Err(P1Error::ZeroFunction));
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2w - 1)^2 (3w + 2)
        let p = &Poly::from_ints(&[-1, 2]).pow(2) * &Poly::from_ints(&[2, 3]);
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![(Rational::new(-2, 3), 1), (Rational::new(1, 2), 2)]);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn rr_basis_examples() {
        assert_eq!(
            rr_basis(&QDivisor::zero(crate::divisor::Curve::ProjectiveLine)).unwrap(),
            vec![RationalFunctionP1::one()]
        );
        let e = QDivisor::on_p1([(inf(), r(3)), (pt(0), r(-2)), (pt(1), r(-1))]);
        assert_eq!(
            rr_basis(&e).unwrap(),
            vec![RationalFunctionP1::from_poly(&Poly::x().pow(2) * &lin(1))]
        );
        let e = QDivisor::on_p1([(pt(0), r(1)), (inf(), r(1))]);
        let b = rr_basis(&e).unwrap();
        assert_eq!(
            b,
            vec![
                RationalFunctionP1::new(Poly::one(), Poly::x()).unwrap(),
                RationalFunctionP1::one(),
                RationalFunctionP1::from_poly(Poly::x()),
            ]
        );
        let neg = QDivisor::on_p1([(pt(0), r(-1))]);
        assert!(rr_basis(&neg).unwrap().is_empty());
        let frac = QDivisor::on_p1([(pt(0), Rational::new(1, 2))]);
        assert_eq!(rr_basis(&frac), Err(P1Error::NotIntegral));
    }

    #[test]
    fn principal_function_examples() {
        let a = QDivisor::on_p1([(pt(2), r(1)), (inf(), r(-21)), (pt(0), r(14)), (pt(1), r(6))]);
        let expected = &(&Poly::x().pow(14) * &lin(1).pow(6)) * &lin(2);
        assert_eq!(
            principal_function(&a).unwrap(),
            RationalFunctionP1::from_poly(expected)
        );
        assert_eq!(
            principal_function(&QDivisor::zero(crate::divisor::Curve::ProjectiveLine)).unwrap(),
            RationalFunctionP1::one()
        );
        let a = QDivisor::on_p1([(pt(1), r(1)), (pt(0), r(2)), (inf(), r(-3))]);
        assert_eq!(
            principal_function(&a).unwrap(),
            RationalFunctionP1::from_poly(&Poly::x().pow(2) * &lin(1))
        );
        let bad = QDivisor::on_p1([(pt(1), r(1))]);
        assert_eq!(principal_function(&bad), Err(P1Error::NonzeroDegree(r(1))));
    }

    fn split_function() -> impl Strategy<Value = RationalFunctionP1> {
        (
            prop::collection::vec((-3i64..=3, 1i64..=3), 0..4),
            prop::collection::vec((-3i64..=3, 1i64..=3), 0..4),
            1i64..=5,
        )
            .prop_map(|(zs, ps, c)| {
                let build = |fs: &[(i64, i64)]| {
                    fs.iter().fold(Poly::one(), |acc, &(a, d)| {
                        &acc * &Poly::linear(&Rational::new(a, d))
                    })
                };
                RationalFunctionP1::new(build(&zs).scale(&Rational::from(c)), build(&ps)).unwrap()
            })
    }

    pub(crate) fn integral_p1_divisor(max_points: usize) -> impl Strategy<Value = QDivisor> {
        prop::collection::vec((prop::option::of(-4i64..=4), -6i64..=6), 0..=max_points).prop_map(
            |terms| {
                QDivisor::on_p1(terms.into_iter().map(|(p, n)| {
                    (p.map_or(CurvePoint::P1Infinity, CurvePoint::p1), Rational::from(n))
                }))
            },
        )
    }

    proptest! {
        #[test]
        fn divisor_is_additive(g in split_function(), h in split_function()) {
            let dg = div_of_function(&g).unwrap();
            let dh = div_of_function(&h).unwrap();
            prop_assert_eq!(div_of_function(&g.mul(&h)).unwrap(), dg.add(&dh).unwrap());
            prop_assert_eq!(div_of_function(&g.inv().unwrap()).unwrap(), dg.neg());
            prop_assert!(dg.degree().is_zero());
        }

        #[test]
        fn rr_dimension_formula(e in integral_p1_divisor(5)) {
            let deg = e.degree().to_i64().unwrap();
            let basis = rr_basis(&e).unwrap();
            prop_assert_eq!(basis.len() as i64, (deg + 1).max(0));
            for g in &basis {
                prop_assert!(div_of_function(g).unwrap().add(&e).unwrap().is_effective());
            }
        }

        #[test]
        fn principal_round_trip(e in integral_p1_divisor(5)) {
            let deg = e.degree();
            let a = e.add(&QDivisor::on_p1([(CurvePoint::P1Infinity, -deg)])).unwrap();
            let g = principal_function(&a).unwrap();
            prop_assert_eq!(div_of_function(&g).unwrap(), a);
        }
    }
}
