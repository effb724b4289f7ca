//! The graded ring `R(P¹, D) = ⊕ H⁰(P¹, O(⌊nD⌋))Tⁿ` up to a degree bound.

mod hilbert;
mod pieces;
mod relations;

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::{gcd_u64, Echelon, Rational};
use crate::divisor::QDivisor;
use crate::p1::RationalFunctionP1;

pub use hilbert::{hilbert_series, HilbertSeries, FIT_MARGIN};
pub use pieces::{GradedPieces, Section};
pub use relations::{find_relations, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("divisor is not on the projective line")]
    NotProjectiveLine,
    #[error("divisor coefficient does not fit in 64 bits")]
    CoefficientTooLarge,
    #[error("divisor of degree {0} is not ample")]
    NotAmple(Rational),
    #[error("degree bound must be at least 1")]
    ZeroBound,
    #[error("no polynomial numerator matches the graded dimensions")]
    FitFailed,
    #[error("pole order at t = 1 is {found:?}, expected {expected}")]
    PoleOrderMismatch { expected: u32, found: Option<i64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingWarning {
    /// A generator was found in the top degree, so later ones may be missing.
    BoundTooSmall { bound: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub degree: u32,
    pub section: Section,
}

#[derive(Debug, Clone)]
pub struct SectionRingModel {
    pieces: GradedPieces,
    bound: u32,
    generators: Vec<Generator>,
    irredundant: bool,
    warnings: Vec<RingWarning>,
}

/// `dim H⁰(P¹, O(⌊nD⌋))`.
pub fn graded_dim(divisor: &QDivisor, n: u32) -> Result<usize, RingError> {
    Ok(GradedPieces::new(divisor)?.dim(n))
}

/// Three times the least common denominator of the coefficients.
pub fn default_bound(divisor: &QDivisor) -> u32 {
    (divisor.common_denominator() * 3u32).to_u32().unwrap_or(u32::MAX)
}

/// Builds the ring and finds a minimal system of homogeneous generators in
/// degrees `1..=bound`.
pub fn build_ring(divisor: &QDivisor, bound: u32) -> Result<SectionRingModel, RingError> {
    let pieces = GradedPieces::new(divisor)?;
    let deg = divisor.degree();
    if !deg.is_positive() {
        return Err(RingError::NotAmple(deg));
    }
    if bound == 0 {
        return Err(RingError::ZeroBound);
    }
    let mut generators = Vec::new();
    for n in 1..=bound {
        for j in new_generator_columns(&pieces, n) {
            generators.push(Generator {
                degree: n,
                section: pieces.basis_section(n, j),
            });
        }
    }
    let g = (1..=bound)
        .filter(|&n| pieces.dim(n) > 0)
        .fold(0u64, |g, n| gcd_u64(g, u64::from(n)));
    let mut warnings = Vec::new();
    if generators.last().is_some_and(|g| g.degree == bound) {
        warnings.push(RingWarning::BoundTooSmall { bound });
    }
    Ok(SectionRingModel {
        pieces,
        bound,
        generators,
        irredundant: g == 1,
        warnings,
    })
}

/// Columns `j` such that the `w^j` complete the span of `Σ_{a+b=n} R_a R_b`
/// to all of `R_n`: the free columns of its reduced echelon form.
///
/// `R_a R_b` is the space of `h` with `deg h ≤ K = deg ⌊nD⌋` that vanish at
/// each finite point with carry 1, and whose `w^K` coefficient vanishes when
/// ∞ has carry 1. When every condition that occurs is independent of the
/// others, the sum of these spaces is cut out by the conditions common to
/// all of them, and its complement sits at the pivots of that condition
/// matrix chosen from the right.
fn new_generator_columns(pieces: &GradedPieces, n: u32) -> Vec<usize> {
    let dim = pieces.dim(n);
    if dim == 0 {
        return Vec::new();
    }
    let npts = pieces.support_len();
    let mut patterns = BTreeSet::new();
    for a in (1..=n / 2).filter(|&a| pieces.dim(a) > 0 && pieces.dim(n - a) > 0) {
        let p = pieces.carries(a, n - a);
        if p.iter().all(|&c| c == 0) {
            // R_a R_{n−a} is already all of R_n
            return Vec::new();
        }
        patterns.insert(p);
    }
    if patterns.is_empty() {
        return (0..dim).collect();
    }
    let union: Vec<bool> = (0..npts)
        .map(|i| patterns.iter().any(|p| p[i] == 1))
        .collect();
    let common: Vec<bool> = (0..npts)
        .map(|i| patterns.iter().all(|p| p[i] == 1))
        .collect();
    if union.iter().filter(|&&u| u).count() <= dim {
        right_pivots(&condition_rows(pieces, &common, dim), dim)
    } else {
        product_span(pieces, &patterns, dim).free_columns()
    }
}

/// One row per selected condition on the coefficients of `h`.
fn condition_rows(pieces: &GradedPieces, selected: &[bool], dim: usize) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for (q, _) in pieces.finite_points().zip(selected).filter(|(_, &s)| s) {
        let mut row = Vec::with_capacity(dim);
        let mut p = Rational::one();
        for _ in 0..dim {
            row.push(p.clone());
            p = &p * q;
        }
        rows.push(row);
    }
    if pieces.has_infinity() && selected[selected.len() - 1] {
        let mut row = vec![Rational::zero(); dim];
        row[dim - 1] = Rational::one();
        rows.push(row);
    }
    rows
}

fn right_pivots(rows: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    let reversed = rows.iter().map(|r| r.iter().rev().cloned().collect());
    let mut piv: Vec<usize> = Echelon::from_rows(dim, reversed)
        .pivots()
        .into_iter()
        .map(|j| dim - 1 - j)
        .collect();
    piv.sort_unstable();
    piv
}

/// Explicit span of the products, one pattern of carries at a time.
fn product_span(pieces: &GradedPieces, patterns: &BTreeSet<Vec<u8>>, dim: usize) -> Echelon {
    let mut ech = Echelon::new(dim);
    let nfin = pieces.finite_points().count();
    for pat in patterns {
        let mut base = crate::arith::Poly::one();
        for (q, _) in pieces.finite_points().zip(pat).filter(|(_, &c)| c == 1) {
            base = &base * &crate::arith::Poly::linear(q);
        }
        let top_free = !(pieces.has_infinity() && pat[nfin] == 1);
        let base_deg = base.degree().unwrap_or(0) as i64;
        let max_deg = dim as i64 - if top_free { 1 } else { 2 };
        for i in 0..(max_deg - base_deg + 1).max(0) as usize {
            let h = base.shift(i);
            let row = (0..dim).map(|k| h.coeff(k)).collect();
            ech.insert(row);
            if ech.rank() == dim {
                return ech;
            }
        }
    }
    ech
}

impl SectionRingModel {
    pub fn divisor(&self) -> &QDivisor {
        self.pieces.divisor()
    }

    pub fn pieces(&self) -> &GradedPieces {
        &self.pieces
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `dim R_n` for `n = 0..=bound`.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.bound).map(|n| self.pieces.dim(n)).collect()
    }

    pub fn dim(&self, n: u32) -> usize {
        self.pieces.dim(n)
    }

    /// Basis of `R_n` as rational functions.
    pub fn piece_basis(&self, n: u32) -> Vec<RationalFunctionP1> {
        self.pieces.basis_functions(n)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// The generators as rational functions `g`, standing for `g·T^degree`.
    pub fn generator_functions(&self) -> Vec<RationalFunctionP1> {
        self.generators
            .iter()
            .map(|g| self.pieces.to_function(&g.section))
            .collect()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    /// Whether the nonzero degrees up to the bound have gcd 1.
    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    pub fn warnings(&self) -> &[RingWarning] {
        &self.warnings
    }

    /// A degree from which on `dim R_n = deg ⌊nD⌋ + 1` holds with no
    /// truncation at zero.
    pub fn stabilization_degree(&self) -> u32 {
        let k = self.pieces.fractional_points() as i64;
        if k <= 1 {
            return 0;
        }
        let q = Rational::from(k - 1) / self.divisor().degree();
        q.ceil().to_u32().unwrap_or(u32::MAX)
    }

    /// Checks by explicit multiplication that every `R_n`, `n ≤ upto`, is
    /// spanned by monomials in the generators.
    pub fn verify_generation(&self, upto: u32) -> bool {
        let upto = upto.min(self.bound);
        let mut spans: Vec<Vec<Section>> = vec![vec![self.pieces.basis_section(0, 0)]];
        for n in 1..=upto {
            let dim = self.pieces.dim(n);
            let mut ech = Echelon::new(dim);
            let mut basis = Vec::new();
            let push = |s: Section, ech: &mut Echelon, basis: &mut Vec<Section>| {
                if ech.insert(self.pieces.coords(&s)) {
                    basis.push(s);
                }
            };
            for g in self.generators.iter().filter(|g| g.degree <= n) {
                for m in &spans[(n - g.degree) as usize] {
                    push(self.pieces.mul(&g.section, m), &mut ech, &mut basis);
                }
            }
            if ech.rank() != dim {
                return false;
            }
            spans.push(basis);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::CurvePoint;
    use crate::p1::div_of_function;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    pub(crate) fn hypersurface_223() -> QDivisor {
        QDivisor::on_p1([
            (CurvePoint::p1(0), r(1, 2)),
            (CurvePoint::P1Infinity, r(1, 2)),
            (CurvePoint::p1(1), r(-1, 2)),
        ])
    }

    pub(crate) fn e8() -> QDivisor {
        QDivisor::on_p1([
            (CurvePoint::P1Infinity, r(1, 2)),
            (CurvePoint::p1(0), r(-1, 3)),
            (CurvePoint::p1(1), r(-1, 7)),
        ])
    }

    pub(crate) fn scroll() -> QDivisor {
        QDivisor::on_p1([
            (CurvePoint::p1(0), r(5, 7)),
            (CurvePoint::P1Infinity, r(-4, 7)),
        ])
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim(&e8(), 6).unwrap(), 1);
        assert_eq!(graded_dim(&e8(), 0).unwrap(), 1);
        assert_eq!(graded_dim(&scroll(), 7).unwrap(), 2);
        assert_eq!(default_bound(&e8()), 126);
    }

    #[test]
    fn generator_degrees() {
        let m = build_ring(&hypersurface_223(), 12).unwrap();
        assert_eq!(m.generator_degrees(), vec![2, 2, 3]);
        let m = build_ring(&e8(), 50).unwrap();
        assert_eq!(m.generator_degrees(), vec![6, 14, 21]);
        let m = build_ring(&scroll(), 25).unwrap();
        assert_eq!(m.generator_degrees(), vec![3, 5, 7, 7]);
        assert!(m.warnings().is_empty());
        assert!(m.is_irredundant());
    }

    #[test]
    fn generator_functions_have_expected_divisors() {
        let m = build_ring(&e8(), 50).unwrap();
        let divs: Vec<String> = m
            .generator_functions()
            .iter()
            .map(|g| div_of_function(g).unwrap().to_string())
            .collect();
        assert_eq!(divs, ["2(0) + (1) - 3(inf)", "5(0) + 2(1) - 7(inf)", "7(0) + 3(1) - 10(inf)"]);
    }

    #[test]
    fn generators_span_every_piece() {
        for (d, b) in [(hypersurface_223(), 20), (e8(), 90), (scroll(), 30)] {
            let m = build_ring(&d, b).unwrap();
            assert!(m.verify_generation(b));
        }
    }

    #[test]
    fn structured_and_explicit_discovery_agree() {
        let d = QDivisor::on_p1([
            (CurvePoint::p1(0), r(2, 3)),
            (CurvePoint::p1(1), r(-1, 5)),
            (CurvePoint::p1(2), r(-1, 4)),
            (CurvePoint::P1Infinity, r(3, 7)),
        ]);
        let pcs = GradedPieces::new(&d).unwrap();
        for n in 1..60 {
            let dim = pcs.dim(n);
            if dim == 0 {
                continue;
            }
            let patterns: BTreeSet<Vec<u8>> = (1..=n / 2)
                .filter(|&a| pcs.dim(a) > 0 && pcs.dim(n - a) > 0)
                .map(|a| pcs.carries(a, n - a))
                .collect();
            let expected = if patterns.is_empty() {
                (0..dim).collect()
            } else {
                product_span(&pcs, &patterns, dim).free_columns()
            };
            assert_eq!(new_generator_columns(&pcs, n), expected, "degree {n}");
        }
    }

    #[test]
    fn fitted_hilbert_series() {
        let h = hilbert_series(&build_ring(&hypersurface_223(), 12).unwrap()).unwrap();
        assert_eq!(h, HilbertSeries::complete_intersection(&[2, 2, 3], &[6]));
        assert_eq!(h.tomari_limit(2).unwrap(), r(1, 2));
        let h = hilbert_series(&build_ring(&e8(), 50).unwrap()).unwrap();
        assert_eq!(h, HilbertSeries::complete_intersection(&[6, 14, 21], &[42]));
        let h = hilbert_series(&build_ring(&scroll(), 25).unwrap()).unwrap();
        assert_eq!(h.a_invariant(), -3);
        assert_eq!(h.tomari_limit(2).unwrap(), r(1, 7));
    }

    #[test]
    fn incomplete_generators_fail_the_fit() {
        let m = build_ring(&e8(), 10).unwrap();
        assert_eq!(hilbert_series(&m), Err(RingError::FitFailed));
    }

    #[test]
    fn polynomial_ring() {
        let d = QDivisor::on_p1([(CurvePoint::p1(0), Rational::one())]);
        let m = build_ring(&d, 8).unwrap();
        assert_eq!(m.generator_degrees(), vec![1, 1]);
        assert_eq!(m.stabilization_degree(), 0);
    }

    #[test]
    fn errors_and_warnings() {
        let zero = QDivisor::on_p1(std::iter::empty::<(CurvePoint, Rational)>());
        assert!(matches!(build_ring(&zero, 5), Err(RingError::NotAmple(_))));
        assert_eq!(build_ring(&e8(), 0).unwrap_err(), RingError::ZeroBound);
        let m = build_ring(&e8(), 21).unwrap();
        assert_eq!(m.warnings(), [RingWarning::BoundTooSmall { bound: 21 }]);
    }
}
