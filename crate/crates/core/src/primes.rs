//! Homogeneous principal prime elements `x = g·T^d` of `R(P¹, D)`.
//!
//! A prime `x` of degree `d` forces `gcd(d, s) = 1`, `deg D = 1/(sd)` and
//! `sdD ~ P` for a single point `P`, where `s` is the gcd of the degrees in
//! which `R/xR` is nonzero. Conversely, when `dD ~ P` with `P` outside the
//! fractional support of `D`, the function `g` with `div(g) = P − dD` gives a
//! prime. Every verdict here is also checked against [`primality_oracle`],
//! which works directly with the graded pieces of `R/xR`.

use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::arith::{gcd_u64, divisors_u64, Echelon, Rational};
use crate::divisor::{CurvePoint, DivisorError, QDivisor};
use crate::p1::{div_of_function, principal_function, P1Error, RationalFunctionP1};
use crate::section_ring::{build_ring, default_bound, GradedPieces, RingError, Section, SectionRingModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Function(#[from] P1Error),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("the zero function is not a prime candidate")]
    ZeroFunction,
    #[error("function does not lie in the degree {0} piece")]
    NotInPiece(u32),
    #[error("negative quotient dimension in degree {0}")]
    NegativeDim(u32),
    #[error("quotient vanishes in all positive degrees up to {0}")]
    EmptyQuotient(u32),
    #[error("oracle bound {bound} is below the required {required}")]
    BoundTooSmall { bound: u32, required: u32 },
    #[error("{0} lies in the fractional support of D")]
    HypothesisViolated(CurvePoint),
    #[error("dD is not an integral divisor of degree 1")]
    NotLinearlyEquivalent,
    #[error("the grading of R is not irredundant")]
    NotIrredundant,
    #[error("constructed element failed the primality oracle: {0:?}")]
    OracleRefuted(Witness),
}

/// `x = g·T^d` with `div(g) + dD ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCandidate {
    function: RationalFunctionP1,
    degree: u32,
}

impl PrimeCandidate {
    pub fn new(divisor: &QDivisor, function: RationalFunctionP1, degree: u32) -> Result<Self, PrimeError> {
        if degree == 0 {
            return Err(PrimeError::ZeroDegree);
        }
        if function.is_zero() {
            return Err(PrimeError::ZeroFunction);
        }
        let pieces = GradedPieces::new(divisor)?;
        if pieces.from_function(degree, &function).is_none() {
            return Err(PrimeError::NotInPiece(degree));
        }
        Ok(PrimeCandidate { function, degree })
    }

    pub fn function(&self) -> &RationalFunctionP1 {
        &self.function
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn scale(&self, c: &Rational) -> PrimeCandidate {
        assert!(!c.is_zero(), "scaling by zero");
        PrimeCandidate {
            function: self.function.scale(c),
            degree: self.degree,
        }
    }

    fn section(&self, pieces: &GradedPieces) -> Result<Section, PrimeError> {
        pieces
            .from_function(self.degree, &self.function)
            .ok_or(PrimeError::NotInPiece(self.degree))
    }
}

/// Graded dimensions of `R/xR`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProfile {
    pub d: u32,
    /// `dims[n] = dim R_n − dim R_{n−d}` for `n = 0..=bound`.
    pub dims: Vec<usize>,
    pub s: u32,
}

impl QuotientProfile {
    pub fn support(&self) -> Vec<u32> {
        (0..self.dims.len() as u32)
            .filter(|&n| self.dims[n as usize] != 0)
            .collect()
    }
}

pub fn quotient_profile(model: &SectionRingModel, x: &PrimeCandidate) -> Result<QuotientProfile, PrimeError> {
    profile_up_to(model.pieces(), x, model.bound())
}

fn profile_up_to(pieces: &GradedPieces, x: &PrimeCandidate, bound: u32) -> Result<QuotientProfile, PrimeError> {
    x.section(pieces)?;
    let d = x.degree;
    let mut dims = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        let below = if n >= d { pieces.dim(n - d) } else { 0 };
        dims.push(
            pieces
                .dim(n)
                .checked_sub(below)
                .ok_or(PrimeError::NegativeDim(n))?,
        );
    }
    let s = (1..=bound)
        .filter(|&n| dims[n as usize] != 0)
        .fold(0u64, |g, n| gcd_u64(g, u64::from(n)));
    if s == 0 {
        return Err(PrimeError::EmptyQuotient(bound));
    }
    Ok(QuotientProfile { d, dims, s: s as u32 })
}

/// `dim (R/xR)_n` for `n = 0..=bound`, as the corank of `x·R_{n−d}` in `R_n`.
pub fn quotient_piece_dims(pieces: &GradedPieces, x: &PrimeCandidate, bound: u32) -> Result<Vec<usize>, PrimeError> {
    let xs = x.section(pieces)?;
    Ok((0..=bound)
        .map(|n| {
            let mut e = Echelon::new(pieces.dim(n));
            if n >= x.degree {
                for j in 0..pieces.dim(n - x.degree) {
                    e.insert(pieces.coords(&pieces.mul(&xs, &pieces.basis_section(n - x.degree, j))));
                }
            }
            pieces.dim(n) - e.rank()
        })
        .collect())
}

/// `D ↦ sD`, the divisor of the Veronese subring `R^{(s)}`.
pub fn veronese_transform(divisor: &QDivisor, s: u32) -> QDivisor {
    assert!(s >= 1, "Veronese index must be positive");
    divisor.scale(i64::from(s))
}

/// What a prime `x` of degree `d` must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryReport {
    pub d: u32,
    pub s: u32,
    pub gcd_ok: bool,
    /// `sdD`
    pub sd_divisor: QDivisor,
    pub sd_integral: bool,
    pub sd_degree_one: bool,
    /// `deg D == 1/(sd)`
    pub degree_matches: bool,
    /// `s·div(g) + sdD`
    pub point_divisor: QDivisor,
    /// The point `P` when `point_divisor` is a single point with coefficient 1.
    pub point: Option<CurvePoint>,
    /// Whether `P` lies in the fractional support of `sD`.
    pub point_in_frac_support: Option<bool>,
}

impl NecessaryReport {
    pub fn passes(&self) -> bool {
        self.gcd_ok && self.sd_integral && self.sd_degree_one && self.degree_matches && self.point.is_some()
    }

    /// Whether the constructive direction applies to `x^s` in `R^{(s)}`.
    pub fn converse_applies(&self) -> bool {
        self.passes() && self.point_in_frac_support == Some(false)
    }
}

pub fn necessary_check(model: &SectionRingModel, x: &PrimeCandidate) -> Result<NecessaryReport, PrimeError> {
    let profile = quotient_profile(model, x)?;
    let (d, s) = (x.degree, profile.s);
    let divisor = model.divisor();
    let sd = i64::from(s) * i64::from(d);
    let sd_divisor = divisor.scale(sd);
    let point_divisor = div_of_function(&x.function)?
        .scale(i64::from(s))
        .add(&sd_divisor)?;
    let point = point_divisor.as_single_point().cloned();
    let point_in_frac_support = point
        .as_ref()
        .map(|p| veronese_transform(divisor, s).frac_support().contains(p));
    Ok(NecessaryReport {
        d,
        s,
        gcd_ok: gcd_u64(u64::from(d), u64::from(s)) == 1,
        sd_integral: sd_divisor.is_integral(),
        sd_degree_one: sd_divisor.degree().is_one(),
        degree_matches: divisor.degree() == Rational::new(1, sd),
        sd_divisor,
        point_divisor,
        point,
        point_in_frac_support,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `R/xR` has a piece of dimension above 1, so it is not a graded domain
    /// of this shape.
    Dimension { degree: u32, dim: usize },
    /// The product of nonzero elements of degrees `a` and `b` lies in `xR`.
    ZeroProduct { a: u32, b: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// No zero divisor of `R/xR` in degrees up to `bound`.
    Prime { bound: u32 },
    NotPrime(Witness),
}

impl OracleVerdict {
    pub fn is_prime(&self) -> bool {
        matches!(self, OracleVerdict::Prime { .. })
    }
}

/// `2·(largest generator degree) + d`.
pub fn required_oracle_bound(model: &SectionRingModel, d: u32) -> u32 {
    2 * model.generator_degrees().into_iter().max().unwrap_or(0) + d
}

/// Decides up to a degree bound whether `R/xR` is a domain, by exact linear
/// algebra in each piece `R_n / x·R_{n−d}`.
pub fn primality_oracle(
    model: &SectionRingModel,
    x: &PrimeCandidate,
    bound: Option<u32>,
) -> Result<OracleVerdict, PrimeError> {
    let required = required_oracle_bound(model, x.degree);
    let bound = bound.unwrap_or(required);
    if bound < required {
        return Err(PrimeError::BoundTooSmall { bound, required });
    }
    let pieces = model.pieces();
    let xs = x.section(pieces)?;
    let d = x.degree;
    let mut ideal: Vec<Echelon> = Vec::with_capacity(bound as usize + 1);
    let mut reps: Vec<Option<Section>> = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        let dim = pieces.dim(n);
        let mut e = Echelon::new(dim);
        if n >= d {
            for j in 0..pieces.dim(n - d) {
                let m = pieces.mul(&xs, &pieces.basis_section(n - d, j));
                e.insert(pieces.coords(&m));
            }
        }
        let free = e.free_columns();
        if free.len() > 1 {
            return Ok(OracleVerdict::NotPrime(Witness::Dimension {
                degree: n,
                dim: free.len(),
            }));
        }
        reps.push(free.first().map(|&j| pieces.basis_section(n, j)));
        ideal.push(e);
    }
    for total in 2..=bound {
        for a in 1..=total / 2 {
            let b = total - a;
            let (Some(ra), Some(rb)) = (&reps[a as usize], &reps[b as usize]) else {
                continue;
            };
            let prod = pieces.mul(ra, rb);
            if ideal[total as usize].contains(&pieces.coords(&prod)) {
                return Ok(OracleVerdict::NotPrime(Witness::ZeroProduct { a, b }));
            }
        }
    }
    Ok(OracleVerdict::Prime { bound })
}

/// `x = g·T^d` with `div(g) = P − dD`, confirmed by the oracle.
pub fn construct_prime(divisor: &QDivisor, d: u32, point: &CurvePoint) -> Result<PrimeCandidate, PrimeError> {
    let x = construct_unchecked(divisor, d, point)?;
    let model = build_ring(divisor, default_bound(divisor))?;
    match primality_oracle(&model, &x, None)? {
        OracleVerdict::Prime { .. } => Ok(x),
        OracleVerdict::NotPrime(w) => Err(PrimeError::OracleRefuted(w)),
    }
}

fn construct_unchecked(divisor: &QDivisor, d: u32, point: &CurvePoint) -> Result<PrimeCandidate, PrimeError> {
    if d == 0 {
        return Err(PrimeError::ZeroDegree);
    }
    let dd = divisor.scale(i64::from(d));
    if !dd.is_integral() || !dd.degree().is_one() {
        return Err(PrimeError::NotLinearlyEquivalent);
    }
    if divisor.frac_support().contains(point) {
        return Err(PrimeError::HypothesisViolated(point.clone()));
    }
    let p = QDivisor::point(divisor.curve().clone(), point.clone())?;
    let g = principal_function(&p.sub(&dd)?)?;
    PrimeCandidate::new(divisor, g, d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeClass {
    /// Exactly one prime ideal in this degree.
    UniquePoint {
        point: CurvePoint,
        function: RationalFunctionP1,
    },
    /// One prime `(g_P)` for every point `P` outside `excluded`, where
    /// `div(g_P) = P − dD`.
    OneParameterFamily {
        excluded: BTreeSet<CurvePoint>,
        base: QDivisor,
        samples: Vec<(CurvePoint, RationalFunctionP1)>,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub degree: u32,
    pub s: u32,
    pub class: PrimeClass,
    pub oracle_bound: u32,
}

impl PrimeVerdict {
    pub fn has_primes(&self) -> bool {
        !matches!(self.class, PrimeClass::None)
    }
}

/// Number of family members confirmed by the oracle.
const FAMILY_SAMPLES: usize = 2;

/// All degrees carrying homogeneous principal primes, one verdict per degree
/// `d` with `d | N` and `gcd(d, N/d) = 1`, where `deg D = 1/N`. Empty when
/// the numerator of `deg D` is not 1.
///
/// For `s = N/d > 1` the prime `x` has `x^s` prime in `R^{(s)}`, whose
/// divisor is `sD`; so `div(g) = (P − N·D)/s` must be integral, which pins
/// `P` down by congruences on the coefficients of `N·D`.
pub fn enumerate_primes(divisor: &QDivisor, oracle_bound: Option<u32>) -> Result<Vec<PrimeVerdict>, PrimeError> {
    let model = build_ring(divisor, default_bound(divisor))?;
    if !model.is_irredundant() {
        return Err(PrimeError::NotIrredundant);
    }
    let deg = divisor.degree();
    if !deg.numer().is_one() {
        return Ok(Vec::new());
    }
    let n = deg.denom().to_u64().ok_or(RingError::CoefficientTooLarge)?;
    let nd = divisor.scale(n as i64);
    if !nd.is_integral() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for d in divisors_u64(n) {
        let s = n / d;
        if gcd_u64(d, s) != 1 {
            continue;
        }
        let (d, s) = (d as u32, s as u32);
        let required = required_oracle_bound(&model, d);
        let bound = oracle_bound.unwrap_or(required).max(required);
        let confirm = |x: &PrimeCandidate| -> Result<bool, PrimeError> {
            if !primality_oracle(&model, x, Some(bound))?.is_prime() {
                return Ok(false);
            }
            Ok(profile_up_to(model.pieces(), x, bound)?.s == s)
        };
        let class = if s == 1 {
            let excluded = divisor.frac_support();
            let mut samples = Vec::new();
            for lambda in 1i64.. {
                let p = CurvePoint::p1(lambda);
                if excluded.contains(&p) {
                    continue;
                }
                let x = construct_unchecked(divisor, d, &p)?;
                if !confirm(&x)? {
                    break;
                }
                samples.push((p, x.function));
                if samples.len() == FAMILY_SAMPLES {
                    break;
                }
            }
            if samples.len() == FAMILY_SAMPLES {
                PrimeClass::OneParameterFamily {
                    excluded,
                    base: nd.clone(),
                    samples,
                }
            } else {
                PrimeClass::None
            }
        } else {
            match congruence_point(&nd, s) {
                Some(p) if !veronese_transform(divisor, s).frac_support().contains(&p) => {
                    let a = QDivisor::point(divisor.curve().clone(), p.clone())?
                        .sub(&nd)?
                        .scale_rational(&Rational::new(1, i64::from(s)));
                    let x = PrimeCandidate::new(divisor, principal_function(&a)?, d)?;
                    if confirm(&x)? {
                        PrimeClass::UniquePoint {
                            point: p,
                            function: x.function,
                        }
                    } else {
                        PrimeClass::None
                    }
                }
                _ => PrimeClass::None,
            }
        };
        out.push(PrimeVerdict {
            degree: d,
            s,
            class,
            oracle_bound: bound,
        });
    }
    Ok(out)
}

/// The point where the integral divisor `nd` has coefficient `≡ 1 (mod s)`,
/// provided every other coefficient is `≡ 0 (mod s)`.
fn congruence_point(nd: &QDivisor, s: u32) -> Option<CurvePoint> {
    let s = num_bigint::BigInt::from(s);
    let mut found = None;
    for (p, c) in nd.iter() {
        let r = num_integer::Integer::mod_floor(c.numer(), &s);
        if r.is_one() && found.is_none() {
            found = Some(p.clone());
        } else if !num_traits::Zero::is_zero(&r) {
            return None;
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn hypersurface_223() -> QDivisor {
        QDivisor::on_p1([
            (CurvePoint::p1(0), r(1, 2)),
            (CurvePoint::P1Infinity, r(1, 2)),
            (CurvePoint::p1(1), r(-1, 2)),
        ])
    }

    fn e8() -> QDivisor {
        QDivisor::on_p1([
            (CurvePoint::P1Infinity, r(1, 2)),
            (CurvePoint::p1(0), r(-1, 3)),
            (CurvePoint::p1(1), r(-1, 7)),
        ])
    }

    fn scroll() -> QDivisor {
        QDivisor::on_p1([(CurvePoint::p1(0), r(5, 7)), (CurvePoint::P1Infinity, r(-4, 7))])
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn func(n: &[i64], d: &[i64]) -> RationalFunctionP1 {
        RationalFunctionP1::new(poly(n), poly(d)).unwrap()
    }

    /// `w²(w − 1)`
    fn e8_z() -> RationalFunctionP1 {
        func(&[0, 0, -1, 1], &[1])
    }

    fn degrees_with_primes(v: &[PrimeVerdict]) -> Vec<u32> {
        v.iter().filter(|v| v.has_primes()).map(|v| v.degree).collect()
    }

    #[test]
    fn candidate_membership() {
        assert!(PrimeCandidate::new(&e8(), e8_z(), 6).is_ok());
        assert_eq!(PrimeCandidate::new(&e8(), e8_z(), 5), Err(PrimeError::NotInPiece(5)));
        assert_eq!(PrimeCandidate::new(&e8(), e8_z(), 0), Err(PrimeError::ZeroDegree));
    }

    #[test]
    fn profiles() {
        let m = build_ring(&e8(), 60).unwrap();
        let z = PrimeCandidate::new(&e8(), e8_z(), 6).unwrap();
        let p = quotient_profile(&m, &z).unwrap();
        assert_eq!(p.s, 7);
        assert_eq!(p.support(), vec![0, 14, 21, 28, 35, 42, 49, 56]);

        let m = build_ring(&hypersurface_223(), 12).unwrap();
        let x = construct_prime(&hypersurface_223(), 2, &CurvePoint::p1(2)).unwrap();
        assert_eq!(quotient_profile(&m, &x).unwrap().s, 1);
    }

    #[test]
    fn constructions() {
        let x = construct_prime(&hypersurface_223(), 2, &CurvePoint::p1(2)).unwrap();
        // (w - 1)(w - 2)/w
        assert_eq!(x.function(), &func(&[2, -3, 1], &[0, 1]));
        let x = construct_prime(&e8(), 42, &CurvePoint::p1(2)).unwrap();
        let expected = Poly::monomial(Rational::one(), 14)
            * Poly::from_ints(&[-1, 1]).pow(6)
            * Poly::from_ints(&[-2, 1]);
        assert_eq!(x.function(), &RationalFunctionP1::from_poly(expected));
        let x = construct_prime(&scroll(), 7, &CurvePoint::p1(1)).unwrap();
        assert_eq!(x.function(), &func(&[-1, 1], &[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            construct_prime(&hypersurface_223(), 2, &CurvePoint::p1(0)),
            Err(PrimeError::HypothesisViolated(CurvePoint::p1(0)))
        );
        assert_eq!(
            construct_prime(&hypersurface_223(), 1, &CurvePoint::p1(2)),
            Err(PrimeError::NotLinearlyEquivalent)
        );
    }

    #[test]
    fn oracle_verdicts() {
        let d = hypersurface_223();
        let m = build_ring(&d, 12).unwrap();
        let xgen = PrimeCandidate::new(&d, func(&[-1, 1], &[1]), 2).unwrap();
        assert_eq!(
            primality_oracle(&m, &xgen, None).unwrap(),
            OracleVerdict::NotPrime(Witness::ZeroProduct { a: 3, b: 3 })
        );
        let x2y = construct_prime(&d, 2, &CurvePoint::p1(2)).unwrap();
        assert!(primality_oracle(&m, &x2y, None).unwrap().is_prime());
        assert!(primality_oracle(&m, &x2y.scale(&r(-3, 5)), None).unwrap().is_prime());
        assert_eq!(
            primality_oracle(&m, &x2y, Some(3)),
            Err(PrimeError::BoundTooSmall { bound: 3, required: 8 })
        );

        let m = build_ring(&e8(), 50).unwrap();
        let z = PrimeCandidate::new(&e8(), e8_z(), 6).unwrap();
        assert!(primality_oracle(&m, &z, None).unwrap().is_prime());
    }

    #[test]
    fn dimension_witness() {
        // the square of a degree-1 generator of a polynomial ring
        let d = QDivisor::on_p1([(CurvePoint::P1Infinity, Rational::one())]);
        let m = build_ring(&d, 4).unwrap();
        let sq = PrimeCandidate::new(&d, func(&[0, 0, 1], &[1]), 2).unwrap();
        assert_eq!(
            primality_oracle(&m, &sq, None).unwrap(),
            OracleVerdict::NotPrime(Witness::Dimension { degree: 1, dim: 2 })
        );
    }

    #[test]
    fn necessary_reports() {
        let m = build_ring(&e8(), 60).unwrap();
        let z = PrimeCandidate::new(&e8(), e8_z(), 6).unwrap();
        let rep = necessary_check(&m, &z).unwrap();
        assert!(rep.passes() && rep.converse_applies());
        assert_eq!(rep.s, 7);
        assert_eq!(rep.point, Some(CurvePoint::p1(1)));

        let d = hypersurface_223();
        let m = build_ring(&d, 12).unwrap();
        let xgen = PrimeCandidate::new(&d, func(&[-1, 1], &[1]), 2).unwrap();
        let rep = necessary_check(&m, &xgen).unwrap();
        assert!(rep.passes());
        assert_eq!(rep.point, Some(CurvePoint::p1(0)));
        assert_eq!(rep.point_in_frac_support, Some(true));
        assert!(!rep.converse_applies());
    }

    #[test]
    fn enumerations() {
        let v = enumerate_primes(&e8(), None).unwrap();
        assert_eq!(degrees_with_primes(&v), vec![6, 14, 21, 42]);
        let divs: Vec<String> = v
            .iter()
            .filter_map(|v| match &v.class {
                PrimeClass::UniquePoint { function, .. } => Some(div_of_function(function).unwrap().to_string()),
                _ => None,
            })
            .collect();
        assert_eq!(divs, ["2(0) + (1) - 3(inf)", "5(0) + 2(1) - 7(inf)", "7(0) + 3(1) - 10(inf)"]);
        assert!(matches!(v.last().unwrap().class, PrimeClass::OneParameterFamily { .. }));

        let v = enumerate_primes(&hypersurface_223(), None).unwrap();
        assert_eq!(degrees_with_primes(&v), vec![2]);
        match &v[1].class {
            PrimeClass::OneParameterFamily { excluded, .. } => assert_eq!(
                excluded,
                &BTreeSet::from([CurvePoint::p1(0), CurvePoint::p1(1), CurvePoint::P1Infinity])
            ),
            other => panic!("expected a family, got {other:?}"),
        }

        let v = enumerate_primes(&scroll(), None).unwrap();
        assert_eq!(degrees_with_primes(&v), vec![7]);

        let poly_ring = QDivisor::on_p1([(CurvePoint::p1(0), Rational::one())]);
        assert_eq!(degrees_with_primes(&enumerate_primes(&poly_ring, None).unwrap()), vec![1]);

        let deg_two = QDivisor::on_p1([(CurvePoint::p1(0), Rational::from(2))]);
        assert!(enumerate_primes(&deg_two, None).unwrap().is_empty());
    }

    #[test]
    fn veronese() {
        let v = veronese_transform(&e8(), 7);
        assert_eq!(v.to_string(), "-7/3(0) - (1) + 7/2(inf)");
        let pcs = GradedPieces::new(&v).unwrap();
        assert_eq!(pcs.dim(2), GradedPieces::new(&e8()).unwrap().dim(14));
        assert_eq!(veronese_transform(&e8(), 1), e8());
        assert!(veronese_transform(&hypersurface_223(), 2).is_integral());
    }
}
