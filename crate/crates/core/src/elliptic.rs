//! Short Weierstrass curves `y² = x³ + a·x + b` over `Q` or a declared number
//! field, with the chord–tangent group law and linear-equivalence verdicts for
//! Q-divisors.
//!
//! A projective curve `v²w = u³ + a·uw² + b·w³` is entered through the chart
//! `x = u/w`, `y = v/w`; the point `[0 : 1 : 0]` is [`EcPoint::Origin`].

use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::{ArithError, NfElem, NumberField, Rational};
use crate::divisor::{Curve, CurvePoint, QDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("singular curve: 4a^3 + 27b^2 = 0")]
    Singular,
    #[error("point {0} is not on the curve")]
    OffCurve(String),
    #[error("divisor does not live on a Weierstrass curve")]
    NotElliptic,
    #[error("divisor is not integral")]
    NotIntegral,
    #[error("coefficient too large for group-law summation")]
    CoefficientTooLarge,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: NfElem,
    b: NfElem,
}

impl WeierstrassCurve {
    pub fn new(a: NfElem, b: NfElem) -> Result<Self, EllipticError> {
        assert!(a.field() == b.field(), "curve coefficients from different fields");
        let k = a.field();
        let disc = &(&NfElem::from_int(k, 4) * &(&a.square() * &a))
            + &(&NfElem::from_int(k, 27) * &b.square());
        if disc.is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(WeierstrassCurve { a, b })
    }

    pub fn a(&self) -> &NfElem {
        &self.a
    }

    pub fn b(&self) -> &NfElem {
        &self.b
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.a.field()
    }

    pub fn discriminant(&self) -> NfElem {
        let k = self.field();
        let inner = &(&NfElem::from_int(k, 4) * &(&self.a.square() * &self.a))
            + &(&NfElem::from_int(k, 27) * &self.b.square());
        &NfElem::from_int(k, -16) * &inner
    }

    pub fn contains_xy(&self, x: &NfElem, y: &NfElem) -> bool {
        let rhs = &(&(&x.square() * x) + &(&self.a * x)) + &self.b;
        y.square() == rhs
    }

    pub fn contains(&self, p: &EcPoint) -> bool {
        match p {
            EcPoint::Origin => true,
            EcPoint::Affine(x, y) => self.contains_xy(x, y),
        }
    }

    fn require(&self, p: &EcPoint) -> Result<(), EllipticError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(EllipticError::OffCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Origin => EcPoint::Origin,
            EcPoint::Affine(x, y) => EcPoint::Affine(x.clone(), -y),
        }
    }

    /// Chord–tangent addition.
    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> Result<EcPoint, EllipticError> {
        self.require(p)?;
        self.require(q)?;
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Origin, _) => return Ok(q.clone()),
            (_, EcPoint::Origin) => return Ok(p.clone()),
            (EcPoint::Affine(x1, y1), EcPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let k = self.field();
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return Ok(EcPoint::Origin);
            }
            // doubling; y1 != 0 here
            let num = &(&NfElem::from_int(k, 3) * &x1.square()) + &self.a;
            num.div(&(&NfElem::from_int(k, 2) * y1))?
        } else {
            (y2 - y1).div(&(x2 - x1))?
        };
        let x3 = &(&slope.square() - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        Ok(EcPoint::Affine(x3, y3))
    }

    /// `n·P` by double-and-add; negative `n` uses `-P`.
    pub fn mul(&self, p: &EcPoint, n: i64) -> Result<EcPoint, EllipticError> {
        self.require(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = EcPoint::Origin;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Group-law sum `⊕ n_P·P` of an integral divisor on this curve.
    pub fn divisor_sum(&self, e: &QDivisor) -> Result<EcPoint, EllipticError> {
        let mut acc = EcPoint::Origin;
        for (p, c) in e.iter() {
            if !c.is_integer() {
                return Err(EllipticError::NotIntegral);
            }
            let n = c.numer().to_i64().ok_or(EllipticError::CoefficientTooLarge)?;
            let pt = EcPoint::try_from(p)?;
            acc = self.add(&acc, &self.mul(&pt, n)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", self.a, self.b)?;
        if !self.field().is_rationals() {
            write!(f, " over {:?}", self.field())?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EcPoint {
    Affine(NfElem, NfElem),
    Origin,
}

impl EcPoint {
    pub fn affine(x: NfElem, y: NfElem) -> Self {
        EcPoint::Affine(x, y)
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&CurvePoint::from(self.clone()), f)
    }
}

impl From<EcPoint> for CurvePoint {
    fn from(p: EcPoint) -> Self {
        match p {
            EcPoint::Affine(x, y) => CurvePoint::EcAffine(x, y),
            EcPoint::Origin => CurvePoint::EcOrigin,
        }
    }
}

impl TryFrom<&CurvePoint> for EcPoint {
    type Error = EllipticError;

    fn try_from(p: &CurvePoint) -> Result<Self, Self::Error> {
        match p {
            CurvePoint::EcAffine(x, y) => Ok(EcPoint::Affine(x.clone(), y.clone())),
            CurvePoint::EcOrigin => Ok(EcPoint::Origin),
            _ => Err(EllipticError::NotElliptic),
        }
    }
}

fn curve_of(d: &QDivisor) -> Result<&WeierstrassCurve, EllipticError> {
    match d.curve() {
        Curve::Elliptic(e) => Ok(e),
        Curve::ProjectiveLine => Err(EllipticError::NotElliptic),
    }
}

/// Abel–Jacobi test: an integral divisor on a genus-1 curve is principal iff
/// it has degree 0 and its points sum to the origin.
pub fn ec_is_principal(e: &QDivisor) -> Result<bool, EllipticError> {
    let curve = curve_of(e)?;
    if !e.is_integral() {
        return Err(EllipticError::NotIntegral);
    }
    if !e.degree().is_zero() {
        return Ok(false);
    }
    Ok(curve.divisor_sum(e)? == EcPoint::Origin)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EcReason {
    /// `dD` is not an integral divisor of degree 1.
    NotLinearlyEquivalentToPoint,
    /// The only point linearly equivalent to `dD` carries a fractional coefficient of `D`.
    InFracSupport,
    OutsideFracSupport,
}

impl EcReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            EcReason::NotLinearlyEquivalentToPoint => "not_linearly_equivalent_to_point",
            EcReason::InFracSupport => "in_frac_support",
            EcReason::OutsideFracSupport => "outside_frac_support",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EcVerdict {
    pub degree: u32,
    pub exists: bool,
    pub point: Option<EcPoint>,
    pub reason: EcReason,
}

/// Decides whether `D` admits a homogeneous prime of degree `d` built from a
/// point linearly equivalent to `dD`.
///
/// On a genus-1 curve a degree-1 divisor is linearly equivalent to exactly one
/// point, the group-law sum of its terms, so that point is the only candidate.
/// The verdict covers degree `d` only.
pub fn ec_prime_exists(d: &QDivisor, degree: u32) -> Result<EcVerdict, EllipticError> {
    let curve = curve_of(d)?;
    let dd = d.scale(i64::from(degree));
    if !dd.is_integral() || dd.degree() != Rational::one() {
        return Ok(EcVerdict {
            degree,
            exists: false,
            point: None,
            reason: EcReason::NotLinearlyEquivalentToPoint,
        });
    }
    let p = curve.divisor_sum(&dd)?;
    let in_frac = d.frac_support().contains(&CurvePoint::from(p.clone()));
    Ok(EcVerdict {
        degree,
        exists: !in_frac,
        point: Some(p),
        reason: if in_frac {
            EcReason::InFracSupport
        } else {
            EcReason::OutsideFracSupport
        },
    })
}
