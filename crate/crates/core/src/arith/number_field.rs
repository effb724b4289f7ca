//! Simple number fields `Q[y]/(m(y))` for a caller-declared irreducible monic
//! integer polynomial `m` of degree at most 4.
//!
//! Irreducibility is trusted. The only check is at inversion time: a
//! representative that shares a factor with `m` is reported as
//! [`ArithError::ReducibleModulus`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ArithError, Poly, Rational};

pub const MAX_FIELD_DEGREE: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumberField {
    min_poly: Poly,
}

impl NumberField {
    pub fn new(min_poly: Poly) -> Result<Arc<Self>, ArithError> {
        let deg = min_poly.degree().unwrap_or(0);
        if deg == 0 || deg > MAX_FIELD_DEGREE {
            return Err(ArithError::BadModulus(format!(
                "degree {deg} is outside 1..={MAX_FIELD_DEGREE}"
            )));
        }
        if !min_poly.is_monic() {
            return Err(ArithError::BadModulus("not monic".into()));
        }
        if !min_poly.coeffs().iter().all(Rational::is_integer) {
            return Err(ArithError::BadModulus("non-integer coefficient".into()));
        }
        Ok(Arc::new(NumberField { min_poly }))
    }

    /// `Q` itself, presented as `Q[y]/(y)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            min_poly: Poly::x(),
        })
    }

    /// `Q(i)`, with `i^2 = -1`.
    pub fn gaussian() -> Arc<Self> {
        NumberField::new(Poly::from_ints(&[1, 0, 1])).expect("valid modulus")
    }

    /// `Q(θ)` for a primitive cube root of unity, `θ^2 + θ + 1 = 0`.
    pub fn eisenstein() -> Arc<Self> {
        NumberField::new(Poly::from_ints(&[1, 1, 1])).expect("valid modulus")
    }

    pub fn min_poly(&self) -> &Poly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap_or(0)
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[y]/({})", self.min_poly.to_string().replace('w', "y"))
    }
}

/// Element of a [`NumberField`], stored by its coordinates in the power basis
/// `1, y, ..., y^{k-1}`.
#[derive(Clone)]
pub struct NfElem {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl NfElem {
    /// Reduces an arbitrary polynomial representative modulo the field modulus.
    pub fn from_poly(field: &Arc<NumberField>, rep: &Poly) -> Self {
        let (_, r) = rep.divrem(&field.min_poly).expect("modulus is nonzero");
        let mut coords = r.into_coeffs();
        coords.resize(field.degree(), Rational::zero());
        NfElem {
            field: Arc::clone(field),
            coords,
        }
    }

    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        NfElem::from_poly(field, &Poly::new(coords))
    }

    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> Self {
        NfElem::from_poly(field, &Poly::constant(r))
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        NfElem::from_rational(field, Rational::from(n))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        NfElem::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        NfElem::from_rational(field, Rational::one())
    }

    /// The class of `y`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        NfElem::from_poly(field, &Poly::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn rep(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    fn check_field(&self, other: &NfElem) {
        assert!(
            self.field == other.field,
            "arithmetic between elements of different number fields"
        );
    }

    /// Multiplicative inverse through the extended gcd with the modulus.
    pub fn invert(&self) -> Result<NfElem, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (g, s, _) = self.rep().ext_gcd(&self.field.min_poly)?;
        if !g.is_one() {
            return Err(ArithError::ReducibleModulus);
        }
        Ok(NfElem::from_poly(&self.field, &s))
    }

    pub fn div(&self, other: &NfElem) -> Result<NfElem, ArithError> {
        Ok(self * &other.invert()?)
    }

    pub fn square(&self) -> NfElem {
        self * self
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Eq for NfElem {}

impl std::hash::Hash for NfElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coords.hash(state);
    }
}

impl PartialOrd for NfElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed: by modulus, then coordinates lexicographically.
impl Ord for NfElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl Add for &NfElem {
    type Output = NfElem;
    fn add(self, rhs: &NfElem) -> NfElem {
        self.check_field(rhs);
        NfElem {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &NfElem {
    type Output = NfElem;
    fn sub(self, rhs: &NfElem) -> NfElem {
        self.check_field(rhs);
        NfElem {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &NfElem {
    type Output = NfElem;
    fn mul(self, rhs: &NfElem) -> NfElem {
        self.check_field(rhs);
        NfElem::from_poly(&self.field, &(&self.rep() * &rhs.rep()))
    }
}

impl Neg for &NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{}", self.rep().to_string().replace('w', "y"))
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
