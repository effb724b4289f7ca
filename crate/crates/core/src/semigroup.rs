//! Numerical semigroups `H ⊂ N` and the degree-chain criterion for rational
//! singularities.

use thiserror::Error;

use crate::arith::gcd_u64;
use crate::primes::QuotientProfile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no positive generators")]
    Empty,
    #[error("generators have gcd {0}")]
    GcdNotOne(u64),
    #[error("quotient piece of degree {degree} has dimension {dim}")]
    NotSemigroupLike { degree: u32, dim: usize },
    #[error("degree {0} is not a multiple of the quotient gcd")]
    OffLattice(u32),
    #[error("need at least two generators")]
    TooFewGenerators,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    gaps: Vec<u32>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`. Zeros are ignored.
    pub fn new(gens: &[u32]) -> Result<Self, SemigroupError> {
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let g = gens.iter().fold(0, |g, &x| gcd_u64(g, u64::from(x)));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let m = gens[0] as usize;
        // membership sieve; stops after m consecutive elements
        let mut member = vec![true];
        let mut run = 1;
        let mut gaps = Vec::new();
        let mut n = 0usize;
        while run < m {
            n += 1;
            let inside = gens
                .iter()
                .any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(inside);
            if inside {
                run += 1;
            } else {
                run = 0;
                gaps.push(n as u32);
            }
        }
        let mut minimal: Vec<u32> = Vec::new();
        for &g in &gens {
            if !representable(g, &minimal) {
                minimal.push(g);
            }
        }
        Ok(NumericalSemigroup {
            generators: minimal,
            gaps,
        })
    }

    /// Minimal generators, increasing.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn contains(&self, n: u32) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// Largest integer outside `H`; `−1` for `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| i64::from(g))
    }

    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }
}

fn representable(n: u32, gens: &[u32]) -> bool {
    let mut ok = vec![false; n as usize + 1];
    ok[0] = true;
    for i in 1..=n as usize {
        ok[i] = gens.iter().any(|&g| (g as usize) <= i && ok[i - g as usize]);
    }
    ok[n as usize]
}

pub fn frobenius(h: &NumericalSemigroup) -> i64 {
    h.frobenius()
}

/// The semigroup of degrees of `R/xR`, with degrees divided by `s`.
pub fn sg_from_profile(profile: &QuotientProfile) -> Result<NumericalSemigroup, SemigroupError> {
    let mut gens = Vec::new();
    for (n, &dim) in profile.dims.iter().enumerate().skip(1) {
        let n = n as u32;
        match dim {
            0 => {}
            1 if n.is_multiple_of(profile.s) => gens.push(n / profile.s),
            1 => return Err(SemigroupError::OffLattice(n)),
            _ => return Err(SemigroupError::NotSemigroupLike { degree: n, dim }),
        }
    }
    NumericalSemigroup::new(&gens)
}

/// `a(R) = F(H) − deg x₀` when `R/x₀R ≅ F[H]`.
pub fn a_invariant_semigroup(h: &NumericalSemigroup, deg_x0: u32) -> i64 {
    h.frobenius() - i64::from(deg_x0)
}

/// Ring-theoretic hypotheses of the criterion. They are not verified, only
/// carried into the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub x0_prime: bool,
    pub x0_in_minimal_reduction: bool,
    pub quotient_irredundant: bool,
}

impl Default for Hypotheses {
    fn default() -> Self {
        Hypotheses {
            x0_prime: true,
            x0_in_minimal_reduction: true,
            quotient_irredundant: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSingReport {
    pub x0_degree: u32,
    /// `deg x₁ ≥ ⋯ ≥ deg x_r`.
    pub degrees: Vec<u32>,
    pub r: usize,
    pub chain_holds: bool,
    pub duplicate_degrees: bool,
    pub a_invariant: i64,
    pub frobenius: i64,
    pub minimal_multiplicity: bool,
    pub hypotheses: Hypotheses,
}

/// Evaluates `r + deg x₀ > deg x₁ > ⋯ > deg x_r = r` for the degrees of a
/// minimal generating system `x₀, …, x_r`, along with the semigroup `H`
/// generated by `deg x₁, …, deg x_r`.
pub fn ratsing_criterion(
    x0_degree: u32,
    others: &[u32],
    hypotheses: Hypotheses,
) -> Result<RatSingReport, SemigroupError> {
    if others.is_empty() {
        return Err(SemigroupError::TooFewGenerators);
    }
    let h = NumericalSemigroup::new(others)?;
    let mut degrees = others.to_vec();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let r = degrees.len();
    let duplicate_degrees = degrees.windows(2).any(|w| w[0] == w[1]);
    let chain_holds = !duplicate_degrees
        && r as u64 + u64::from(x0_degree) > u64::from(degrees[0])
        && degrees[r - 1] as usize == r;
    Ok(RatSingReport {
        x0_degree,
        degrees,
        r,
        chain_holds,
        duplicate_degrees,
        a_invariant: a_invariant_semigroup(&h, x0_degree),
        frobenius: h.frobenius(),
        minimal_multiplicity: h.multiplicity() as usize == h.embedding_dimension(),
        hypotheses,
    })
}
