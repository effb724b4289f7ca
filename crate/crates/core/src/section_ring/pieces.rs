//! Graded pieces `R_n = H⁰(P¹, O(⌊nD⌋))Tⁿ` in explicit coordinates.
//!
//! A section of degree `n` is stored as a polynomial `h(w)` of degree at most
//! `deg ⌊nD⌋`, standing for the function `h(w) · Π_q (w − q)^{−⌊n·c_q⌋}` where
//! `q` runs over the finite points of `supp D` with coefficients `c_q`. The
//! coordinates of a section are the coefficients of `h`, so `w^j` is the
//! `j`-th basis vector. With this choice multiplication only needs the
//! correction factor `Π (w − q)^{⌊(a+b)c⌋ − ⌊ac⌋ − ⌊bc⌋}`, whose exponents
//! are 0 or 1.

use num_traits::ToPrimitive;

use crate::arith::{Poly, Rational};
use crate::divisor::{CurvePoint, QDivisor};
use crate::p1::RationalFunctionP1;

use super::RingError;

/// A coefficient `num/den` of `D`, small enough for machine arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SmallCoeff {
    num: i64,
    den: i64,
}

impl SmallCoeff {
    fn from_rational(c: &Rational) -> Result<Self, RingError> {
        let num = c.numer().to_i64().ok_or(RingError::CoefficientTooLarge)?;
        let den = c.denom().to_i64().ok_or(RingError::CoefficientTooLarge)?;
        Ok(SmallCoeff { num, den })
    }

    /// `⌊n · num/den⌋`
    fn floor_mul(self, n: u32) -> i64 {
        let p = i128::from(self.num) * i128::from(n);
        p.div_euclid(i128::from(self.den)) as i64
    }

    fn is_integer(self) -> bool {
        self.den == 1
    }
}

/// Element of `R_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    degree: u32,
    poly: Poly,
}

impl Section {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The polynomial `h` in the twisted representation.
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Section {
        Section {
            degree: self.degree,
            poly: self.poly.scale(c),
        }
    }
}

/// The closed-form description of every graded piece of `R(P¹, D)`.
#[derive(Clone, Debug)]
pub struct GradedPieces {
    divisor: QDivisor,
    finite: Vec<(Rational, SmallCoeff)>,
    infinity: Option<SmallCoeff>,
}

impl GradedPieces {
    pub fn new(divisor: &QDivisor) -> Result<Self, RingError> {
        if !divisor.is_on_p1() {
            return Err(RingError::NotProjectiveLine);
        }
        let mut finite = Vec::new();
        let mut infinity = None;
        for (p, c) in divisor.iter() {
            let c = SmallCoeff::from_rational(c)?;
            match p {
                CurvePoint::P1Finite(q) => finite.push((q.clone(), c)),
                CurvePoint::P1Infinity => infinity = Some(c),
                _ => return Err(RingError::NotProjectiveLine),
            }
        }
        Ok(GradedPieces {
            divisor: divisor.clone(),
            finite,
            infinity,
        })
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    /// Number of points in `supp D`, counting ∞ when present.
    pub fn support_len(&self) -> usize {
        self.finite.len() + usize::from(self.infinity.is_some())
    }

    /// Number of points whose coefficient is not an integer.
    pub(crate) fn fractional_points(&self) -> usize {
        self.finite.iter().filter(|(_, c)| !c.is_integer()).count()
            + usize::from(self.infinity.is_some_and(|c| !c.is_integer()))
    }

    /// `deg ⌊nD⌋`.
    pub fn floor_degree(&self, n: u32) -> i64 {
        self.finite.iter().map(|(_, c)| c.floor_mul(n)).sum::<i64>()
            + self.infinity.map_or(0, |c| c.floor_mul(n))
    }

    /// `dim R_n = max(deg ⌊nD⌋ + 1, 0)`.
    pub fn dim(&self, n: u32) -> usize {
        (self.floor_degree(n) + 1).max(0) as usize
    }

    /// `⌊nD⌋` as a divisor.
    pub fn floor_divisor(&self, n: u32) -> QDivisor {
        self.divisor.scale(i64::from(n)).floor()
    }

    /// Per-point increments `⌊(a+b)c⌋ − ⌊ac⌋ − ⌊bc⌋`, finite points first
    /// and ∞ last (when in the support). Each entry is 0 or 1.
    pub(crate) fn carries(&self, a: u32, b: u32) -> Vec<u8> {
        let carry = |c: SmallCoeff| (c.floor_mul(a + b) - c.floor_mul(a) - c.floor_mul(b)) as u8;
        self.finite
            .iter()
            .map(|(_, c)| carry(*c))
            .chain(self.infinity.map(carry))
            .collect()
    }

    pub(crate) fn finite_points(&self) -> impl Iterator<Item = &Rational> {
        self.finite.iter().map(|(q, _)| q)
    }

    pub(crate) fn has_infinity(&self) -> bool {
        self.infinity.is_some()
    }

    /// The `j`-th basis vector of `R_n`.
    pub fn basis_section(&self, n: u32, j: usize) -> Section {
        debug_assert!(j < self.dim(n));
        Section {
            degree: n,
            poly: Poly::monomial(Rational::one(), j),
        }
    }

    pub fn coords(&self, s: &Section) -> Vec<Rational> {
        (0..self.dim(s.degree)).map(|i| s.poly.coeff(i)).collect()
    }

    pub fn section_from_coords(&self, n: u32, coords: Vec<Rational>) -> Section {
        debug_assert!(coords.len() <= self.dim(n));
        Section {
            degree: n,
            poly: Poly::new(coords),
        }
    }

    /// Product in `R`.
    pub fn mul(&self, a: &Section, b: &Section) -> Section {
        let mut poly = &a.poly * &b.poly;
        if !poly.is_zero() {
            for (q, c) in &self.finite {
                let e = c.floor_mul(a.degree + b.degree) - c.floor_mul(a.degree) - c.floor_mul(b.degree);
                if e > 0 {
                    poly = &poly * &Poly::linear(q);
                }
            }
        }
        Section {
            degree: a.degree + b.degree,
            poly,
        }
    }

    /// Exponents `⌊n·c_q⌋` split into (positive part, negative part) products.
    fn twist(&self, n: u32) -> (Poly, Poly) {
        let mut pos = Poly::one();
        let mut neg = Poly::one();
        for (q, c) in &self.finite {
            let e = c.floor_mul(n);
            let f = Poly::linear(q).pow(e.unsigned_abs() as u32);
            if e > 0 {
                pos = &pos * &f;
            } else if e < 0 {
                neg = &neg * &f;
            }
        }
        (pos, neg)
    }

    /// The rational function a section stands for.
    pub fn to_function(&self, s: &Section) -> RationalFunctionP1 {
        let (pos, neg) = self.twist(s.degree);
        RationalFunctionP1::new(&s.poly * &neg, pos).expect("nonzero denominator")
    }

    /// `g·Tⁿ` as a section, or `None` when `div(g) + nD` is not effective.
    pub fn from_function(&self, n: u32, g: &RationalFunctionP1) -> Option<Section> {
        let (pos, neg) = self.twist(n);
        let num = g.numer() * &pos;
        let den = g.denom() * &neg;
        let (h, r) = num.divrem(&den).ok()?;
        if !r.is_zero() {
            return None;
        }
        match h.degree() {
            Some(d) if d as i64 > self.floor_degree(n) => None,
            _ => Some(Section { degree: n, poly: h }),
        }
    }

    /// Explicit basis of `R_n` as rational functions, in coordinate order.
    pub fn basis_functions(&self, n: u32) -> Vec<RationalFunctionP1> {
        (0..self.dim(n))
            .map(|j| self.to_function(&self.basis_section(n, j)))
            .collect()
    }
}
