//! Hilbert series `P(R, t) = numerator(t) / Π_j (1 − t^{e_j})`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;

use super::{RingError, SectionRingModel};

/// Extra degrees past the fitted numerator that must also match.
pub const FIT_MARGIN: u32 = 10;

#[derive(Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    denom_exponents: Vec<u32>,
}

impl HilbertSeries {
    /// Trailing zero coefficients of `numerator` are dropped.
    pub fn new(mut numerator: Vec<BigInt>, denom_exponents: Vec<u32>) -> Self {
        while numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        assert!(
            denom_exponents.iter().all(|&e| e > 0),
            "denominator exponents must be positive"
        );
        HilbertSeries {
            numerator,
            denom_exponents,
        }
    }

    /// Series of a weighted complete intersection: `Π(1 − t^{r_k}) / Π(1 − t^{w_i})`.
    pub fn complete_intersection(weights: &[u32], relation_degrees: &[u32]) -> Self {
        let mut num = vec![BigInt::one()];
        for &r in relation_degrees {
            num = mul_one_minus(&num, r);
        }
        HilbertSeries::new(num, weights.to_vec())
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denom_exponents(&self) -> &[u32] {
        &self.denom_exponents
    }

    /// Coefficients of `t^0 … t^upto` in the power-series expansion.
    pub fn expand(&self, upto: usize) -> Vec<BigInt> {
        let mut s: Vec<BigInt> = (0..=upto)
            .map(|i| self.numerator.get(i).cloned().unwrap_or_default())
            .collect();
        for &e in &self.denom_exponents {
            let e = e as usize;
            for i in e..=upto {
                let prev = s[i - e].clone();
                s[i] += prev;
            }
        }
        s
    }

    /// `lim_{t→1} (1 − t)^dim · P(R, t)`.
    ///
    /// Each `1 − t^e` is `(1 − t)(1 + t + ⋯ + t^{e−1})`, so the limit is the
    /// value at `t = 1` of the numerator with its `(1 − t)` factors removed,
    /// over `Π e_j`, provided the pole order at `t = 1` is exactly `dim`.
    pub fn tomari_limit(&self, dim: u32) -> Result<Rational, RingError> {
        if self.numerator.is_empty() {
            return Err(RingError::PoleOrderMismatch {
                expected: dim,
                found: None,
            });
        }
        let mut q = self.numerator.clone();
        let mut removed = 0u32;
        // divide by (1 - t) while t = 1 is a root
        while q.iter().sum::<BigInt>().is_zero() {
            q = div_one_minus_t(&q);
            removed += 1;
        }
        let pole = self.denom_exponents.len() as i64 - i64::from(removed);
        if pole != i64::from(dim) {
            return Err(RingError::PoleOrderMismatch {
                expected: dim,
                found: Some(pole),
            });
        }
        let value: BigInt = q.iter().sum();
        let denom: BigInt = self.denom_exponents.iter().map(|&e| BigInt::from(e)).product();
        Ok(Rational::new(value, denom))
    }

    /// Degree of `P(R, t)` as a rational function. Equals the a-invariant
    /// when the ring is Cohen–Macaulay.
    pub fn a_invariant(&self) -> i64 {
        let deg = self.numerator.len() as i64 - 1;
        deg - self.denom_exponents.iter().map(|&e| i64::from(e)).sum::<i64>()
    }
}

fn mul_one_minus(p: &[BigInt], e: u32) -> Vec<BigInt> {
    let e = e as usize;
    let mut out = vec![BigInt::zero(); p.len() + e];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + e] -= c;
    }
    out
}

/// Exact quotient `p(t) / (1 − t)`; requires `p(1) = 0`.
fn div_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    // p = (1 - t) q  =>  q_i = Σ_{k ≤ i} p_k
    let mut acc = BigInt::zero();
    let mut q: Vec<BigInt> = p
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    q.pop();
    q
}

/// Fits `P(R, t)` with the generator degrees as denominator exponents.
///
/// The Hilbert function of `R(P¹, D)` agrees with the quasi-polynomial
/// `deg ⌊nD⌋ + 1` from some degree `n₀` on, so the numerator has degree below
/// `n₀ + Σ e_j`. The fit takes the product series up to that degree and then
/// requires the next [`FIT_MARGIN`] coefficients to vanish.
pub fn hilbert_series(model: &SectionRingModel) -> Result<HilbertSeries, RingError> {
    let exps: Vec<u32> = model.generators().iter().map(|g| g.degree).collect();
    if exps.is_empty() {
        return Err(RingError::FitFailed);
    }
    let n0 = model.stabilization_degree();
    let sum_e: u32 = exps.iter().sum();
    let top = (n0 + sum_e) as usize;
    let window = top + FIT_MARGIN as usize;
    let pieces = model.pieces();
    let mut s: Vec<BigInt> = (0..=window as u32)
        .map(|n| BigInt::from(pieces.dim(n)))
        .collect();
    for &e in &exps {
        let e = e as usize;
        for i in (e..=window).rev() {
            let prev = s[i - e].clone();
            s[i] -= prev;
        }
    }
    if s[top + 1..].iter().any(|c| !c.is_zero()) {
        return Err(RingError::FitFailed);
    }
    s.truncate(top + 1);
    Ok(HilbertSeries::new(s, exps))
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "(")?;
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")/(")?;
        let mut exps = self.denom_exponents.clone();
        exps.sort_unstable();
        let mut i = 0;
        let mut parts = Vec::new();
        while i < exps.len() {
            let e = exps[i];
            let k = exps[i..].iter().take_while(|&&x| x == e).count();
            let base = if e == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{e})") };
            parts.push(if k > 1 { format!("{base}^{k}") } else { base });
            i += k;
        }
        write!(f, "{})", parts.join(""))
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tomari_of_weighted_hypersurfaces() {
        let h = HilbertSeries::complete_intersection(&[4, 5, 6], &[16]);
        assert_eq!(h.tomari_limit(2).unwrap(), Rational::new(2, 15));
        let h = HilbertSeries::complete_intersection(&[3, 2, 1], &[6]);
        assert_eq!(h.tomari_limit(2).unwrap(), Rational::one());
        let h = HilbertSeries::complete_intersection(&[6, 14, 21], &[42]);
        assert_eq!(h.tomari_limit(2).unwrap(), Rational::new(1, 42));
    }

    #[test]
    fn pole_order_mismatch() {
        let h = HilbertSeries::complete_intersection(&[1, 1], &[]);
        assert!(matches!(
            h.tomari_limit(3),
            Err(RingError::PoleOrderMismatch { expected: 3, found: Some(2) })
        ));
    }

    #[test]
    fn a_invariants() {
        assert_eq!(HilbertSeries::complete_intersection(&[3, 2, 1], &[6]).a_invariant(), 0);
        assert_eq!(HilbertSeries::complete_intersection(&[1, 1], &[]).a_invariant(), -2);
        assert_eq!(HilbertSeries::complete_intersection(&[6, 14, 21], &[42]).a_invariant(), 1);
    }

    #[test]
    fn expansion_and_display() {
        let h = HilbertSeries::complete_intersection(&[2, 2, 3], &[6]);
        let dims: Vec<i64> = h.expand(8).iter().map(|c| c.try_into().unwrap()).collect();
        // (1 + t^3)/(1 - t^2)^2
        assert_eq!(dims, vec![1, 0, 2, 1, 3, 2, 4, 3, 5]);
        assert_eq!(h.to_string(), "(1 - t^6)/((1 - t^2)^2(1 - t^3))");
    }
}
