//! Q-divisors on a curve: finite formal sums of points with rational
//! coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::arith::{NfElem, Rational};
use crate::elliptic::WeierstrassCurve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("point {point} does not belong to the curve {curve}")]
    WrongCurve { point: String, curve: String },
    #[error("point {0} does not satisfy the curve equation")]
    NotOnCurve(String),
    #[error("divisors live on different curves")]
    CurveMismatch,
}

/// The curve a divisor lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Curve {
    ProjectiveLine,
    Elliptic(WeierstrassCurve),
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::ProjectiveLine => write!(f, "P1"),
            Curve::Elliptic(c) => write!(f, "{c}"),
        }
    }
}

/// A closed point. On P¹ finite points are given by the affine coordinate
/// `w = u/v`; on a Weierstrass curve `EcOrigin` is the point at infinity.
///
/// The derived ordering puts finite P¹ points (by coordinate) before ∞.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    P1Finite(Rational),
    P1Infinity,
    EcAffine(NfElem, NfElem),
    EcOrigin,
}

impl CurvePoint {
    pub fn p1(a: impl Into<Rational>) -> Self {
        CurvePoint::P1Finite(a.into())
    }

    pub fn is_on_p1(&self) -> bool {
        matches!(self, CurvePoint::P1Finite(_) | CurvePoint::P1Infinity)
    }

    fn belongs_to(&self, curve: &Curve) -> Result<(), DivisorError> {
        let wrong = || DivisorError::WrongCurve {
            point: self.to_string(),
            curve: curve.to_string(),
        };
        match (curve, self) {
            (Curve::ProjectiveLine, p) if p.is_on_p1() => Ok(()),
            (Curve::Elliptic(_), CurvePoint::EcOrigin) => Ok(()),
            (Curve::Elliptic(e), CurvePoint::EcAffine(x, y)) => {
                if x.field() != e.field() || y.field() != e.field() {
                    return Err(wrong());
                }
                if e.contains_xy(x, y) {
                    Ok(())
                } else {
                    Err(DivisorError::NotOnCurve(self.to_string()))
                }
            }
            _ => Err(wrong()),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::P1Finite(a) => write!(f, "{a}"),
            CurvePoint::P1Infinity => write!(f, "inf"),
            CurvePoint::EcAffine(x, y) => write!(f, "[{x} : {y} : 1]"),
            CurvePoint::EcOrigin => write!(f, "O"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ n_i V_i` with distinct points and nonzero rational `n_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct QDivisor {
    curve: Curve,
    entries: BTreeMap<CurvePoint, Rational>,
}

impl QDivisor {
    /// Repeated points have their coefficients summed; zero terms are dropped.
    pub fn new<I>(curve: Curve, terms: I) -> Result<Self, DivisorError>
    where
        I: IntoIterator<Item = (CurvePoint, Rational)>,
    {
        let mut entries: BTreeMap<CurvePoint, Rational> = BTreeMap::new();
        for (p, c) in terms {
            p.belongs_to(&curve)?;
            *entries.entry(p).or_default() += &c;
        }
        entries.retain(|_, c| !c.is_zero());
        Ok(QDivisor { curve, entries })
    }

    /// Divisor on P¹; every point is valid there, so this cannot fail.
    pub fn on_p1<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (CurvePoint, Rational)>,
    {
        QDivisor::new(Curve::ProjectiveLine, terms).expect("P1 points")
    }

    pub fn zero(curve: Curve) -> Self {
        QDivisor {
            curve,
            entries: BTreeMap::new(),
        }
    }

    pub fn point(curve: Curve, p: CurvePoint) -> Result<Self, DivisorError> {
        QDivisor::new(curve, [(p, Rational::one())])
    }

    fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut entries = BTreeMap::new();
        for (p, c) in &self.entries {
            let c = f(c);
            if !c.is_zero() {
                entries.insert(p.clone(), c);
            }
        }
        QDivisor {
            curve: self.curve.clone(),
            entries,
        }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn is_on_p1(&self) -> bool {
        self.curve == Curve::ProjectiveLine
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, p: &CurvePoint) -> Rational {
        self.entries.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> BTreeSet<CurvePoint> {
        self.entries.keys().cloned().collect()
    }

    /// `⌊D⌋ = Σ ⌊n_i⌋ V_i`.
    pub fn floor(&self) -> Self {
        self.map_coeffs(|c| Rational::from_integer(c.floor()))
    }

    pub fn degree(&self) -> Rational {
        self.entries.values().sum()
    }

    pub fn scale(&self, n: i64) -> Self {
        let n = Rational::from(n);
        self.map_coeffs(|c| c * &n)
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map_coeffs(|c| c * q)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn add(&self, other: &QDivisor) -> Result<Self, DivisorError> {
        if self.curve != other.curve {
            return Err(DivisorError::CurveMismatch);
        }
        let mut entries = self.entries.clone();
        for (p, c) in &other.entries {
            *entries.entry(p.clone()).or_default() += c;
        }
        entries.retain(|_, c| !c.is_zero());
        Ok(QDivisor {
            curve: self.curve.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &QDivisor) -> Result<Self, DivisorError> {
        self.add(&other.neg())
    }

    /// `supp(frac(D))`: the points whose coefficient is not an integer.
    pub fn frac_support(&self) -> BTreeSet<CurvePoint> {
        self.entries
            .iter()
            .filter(|(_, c)| !c.is_integer())
            .map(|(p, _)| p.clone())
            .collect()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(Rational::is_integer)
    }

    /// Least common denominator of the coefficients (1 for the zero divisor).
    pub fn common_denominator(&self) -> BigInt {
        self.entries
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The point `P` when the divisor is exactly `1·P`.
    pub fn as_single_point(&self) -> Option<&CurvePoint> {
        match self.entries.iter().next() {
            Some((p, c)) if self.entries.len() == 1 && c.is_one() => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.entries.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QDivisor[{}]({self})", self.curve)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::NumberField;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn inf() -> CurvePoint {
        CurvePoint::P1Infinity
    }

    fn pt(a: i64) -> CurvePoint {
        CurvePoint::p1(a)
    }

    /// ½(∞) − ⅓(0) − ⅐(1)
    fn e8() -> QDivisor {
        QDivisor::on_p1([(inf(), r(1, 2)), (pt(0), r(-1, 3)), (pt(1), r(-1, 7))])
    }

    /// ½(0) + ½(∞) − ½(1)
    fn half() -> QDivisor {
        QDivisor::on_p1([(pt(0), r(1, 2)), (inf(), r(1, 2)), (pt(1), r(-1, 2))])
    }

    #[test]
    fn floor_examples() {
        let expected = QDivisor::on_p1([(inf(), r(3, 1)), (pt(0), r(-2, 1)), (pt(1), r(-1, 1))]);
        assert_eq!(e8().scale(6).floor(), expected);
        assert_eq!(expected.floor(), expected);
        assert_eq!(half().floor(), QDivisor::on_p1([(pt(1), r(-1, 1))]));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(e8().degree(), r(1, 42));
        assert_eq!(half().degree(), r(1, 2));
        assert_eq!(QDivisor::zero(Curve::ProjectiveLine).degree(), Rational::zero());
    }

    #[test]
    fn scale_examples() {
        let two = QDivisor::on_p1([(pt(0), r(1, 1)), (inf(), r(1, 1)), (pt(1), r(-1, 1))]);
        assert_eq!(half().scale(2), two);
        assert!(e8().scale(0).is_zero());
        let expected = QDivisor::on_p1([(inf(), r(21, 1)), (pt(0), r(-14, 1)), (pt(1), r(-6, 1))]);
        assert_eq!(e8().scale(42), expected);
        assert!(!expected.is_effective());
        assert!(expected.is_integral());
    }

    #[test]
    fn frac_support_examples() {
        assert_eq!(half().frac_support(), [pt(0), pt(1), inf()].into_iter().collect());
        assert!(half().scale(2).frac_support().is_empty());
        let z = QDivisor::zero(Curve::ProjectiveLine);
        assert!(z.is_effective() && z.is_integral());
    }

    #[test]
    fn point_minus_multiple_is_not_effective() {
        let d = QDivisor::point(Curve::ProjectiveLine, pt(1))
            .unwrap()
            .sub(&e8().scale(2))
            .unwrap();
        assert!(!d.is_effective());
    }

    #[test]
    fn canonical_order_puts_infinity_last() {
        let d = QDivisor::on_p1([(inf(), r(1, 1)), (pt(5), r(1, 1)), (pt(-2, ), r(1, 1))]);
        let pts: Vec<_> = d.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(pts, vec![pt(-2), pt(5), inf()]);
        assert_eq!(d.to_string(), "(-2) + (5) + (inf)");
    }

    #[test]
    fn mixing_curves_is_rejected() {
        let k = NumberField::rationals();
        let e = WeierstrassCurve::new(NfElem::zero(&k), NfElem::from_int(&k, -1)).unwrap();
        let bad = QDivisor::new(Curve::Elliptic(e.clone()), [(pt(0), Rational::one())]);
        assert!(matches!(bad, Err(DivisorError::WrongCurve { .. })));
        let off = CurvePoint::EcAffine(NfElem::from_int(&k, 2), NfElem::from_int(&k, 2));
        assert!(matches!(
            QDivisor::new(Curve::Elliptic(e.clone()), [(off, Rational::one())]),
            Err(DivisorError::NotOnCurve(_))
        ));
        let on_e = QDivisor::point(Curve::Elliptic(e), CurvePoint::EcOrigin).unwrap();
        assert_eq!(on_e.add(&half()), Err(DivisorError::CurveMismatch));
    }

    fn small_divisor() -> impl Strategy<Value = QDivisor> {
        prop::collection::vec((prop::option::of(-3i64..=3), -12i64..=12, 1i64..=6), 0..5).prop_map(
            |terms| {
                QDivisor::on_p1(terms.into_iter().map(|(p, n, d)| {
                    (p.map_or(CurvePoint::P1Infinity, CurvePoint::p1), Rational::new(n, d))
                }))
            },
        )
    }

    fn integral_divisor() -> impl Strategy<Value = QDivisor> {
        prop::collection::vec((prop::option::of(-3i64..=3), -5i64..=5), 0..5).prop_map(|terms| {
            QDivisor::on_p1(terms.into_iter().map(|(p, n)| {
                (p.map_or(CurvePoint::P1Infinity, CurvePoint::p1), Rational::from(n))
            }))
        })
    }

    proptest! {
        #[test]
        fn floor_commutes_with_integral_shift(d in small_divisor(), e in integral_divisor()) {
            prop_assert_eq!(d.add(&e).unwrap().floor(), d.floor().add(&e).unwrap());
        }

        #[test]
        fn degree_is_linear(d in small_divisor(), n in -9i64..=9) {
            prop_assert_eq!(d.scale(n).degree(), &d.degree() * &Rational::from(n));
        }

        #[test]
        fn common_denominator_clears_fractions(d in small_divisor()) {
            let n: i64 = d.common_denominator().try_into().unwrap();
            prop_assert!(d.scale(n).frac_support().is_empty());
        }
    }
}
