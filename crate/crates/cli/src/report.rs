//! JSON encodings of results. Exact values are strings; degrees, dimensions
//! and small invariants are JSON integers.

use homprime::divisor::{CurvePoint, QDivisor};
use homprime::primes::{NecessaryReport, OracleVerdict, QuotientProfile, Witness};
use homprime::semigroup::{Hypotheses, NumericalSemigroup, RatSingReport};
use homprime::{NfElem, Poly, RationalFunctionP1};
use serde_json::{json, Value};

fn scalar(x: &NfElem) -> Value {
    match x.as_rational() {
        Some(r) => json!(r.to_string()),
        None => json!({ "nf": x.coords().iter().map(ToString::to_string).collect::<Vec<_>>() }),
    }
}

pub fn point(p: &CurvePoint) -> Value {
    match p {
        CurvePoint::P1Finite(a) => json!(a.to_string()),
        CurvePoint::P1Infinity => json!("inf"),
        CurvePoint::EcOrigin => json!("O"),
        CurvePoint::EcAffine(x, y) => json!({ "xy": [scalar(x), scalar(y)] }),
    }
}

pub fn divisor(d: &QDivisor) -> Value {
    d.iter()
        .map(|(p, c)| json!({ "point": point(p), "coeff": c.to_string() }))
        .collect()
}

fn poly(p: &Poly) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    if coeffs.is_empty() {
        json!(["0"])
    } else {
        json!(coeffs)
    }
}

/// `{"numer", "denom", "text"}` plus `div(g)` when it splits over Q.
pub fn function(g: &RationalFunctionP1) -> Value {
    let mut v = json!({
        "numer": poly(g.numer()),
        "denom": poly(g.denom()),
        "text": g.to_string(),
    });
    if let Ok(d) = g.divisor() {
        v["divisor"] = divisor(&d);
    }
    v
}

pub fn profile(p: &QuotientProfile) -> Value {
    json!({ "d": p.d, "s": p.s, "dims": p.dims, "support": p.support() })
}

pub fn necessary(r: &NecessaryReport) -> Value {
    json!({
        "passes": r.passes(),
        "converse_applies": r.converse_applies(),
        "gcd_ok": r.gcd_ok,
        "sd_divisor": divisor(&r.sd_divisor),
        "sd_integral": r.sd_integral,
        "sd_degree_one": r.sd_degree_one,
        "degree_matches": r.degree_matches,
        "point_divisor": divisor(&r.point_divisor),
        "point": r.point.as_ref().map(point),
        "point_in_frac_support": r.point_in_frac_support,
    })
}

pub fn oracle(v: &OracleVerdict, oracle_bound: u32) -> Value {
    match v {
        OracleVerdict::Prime { bound } => json!({
            "prime": true,
            "oracle_bound": bound,
            "scope": "no zero divisors of R/xR up to the oracle bound",
        }),
        OracleVerdict::NotPrime(w) => json!({
            "prime": false,
            "oracle_bound": oracle_bound,
            "witness": witness(w),
        }),
    }
}

fn witness(w: &Witness) -> Value {
    match *w {
        Witness::Dimension { degree, dim } => json!({ "kind": "dimension", "degree": degree, "dim": dim }),
        Witness::ZeroProduct { a, b } => json!({ "kind": "zero_product", "degrees": [a, b] }),
    }
}

pub fn semigroup(h: &NumericalSemigroup) -> Value {
    json!({
        "generators": h.generators(),
        "gaps": h.gaps(),
        "frobenius": h.frobenius(),
        "multiplicity": h.multiplicity(),
        "embedding_dimension": h.embedding_dimension(),
    })
}

fn hypotheses(h: &Hypotheses) -> Value {
    json!({
        "x0_prime": h.x0_prime,
        "x0_in_minimal_reduction": h.x0_in_minimal_reduction,
        "quotient_irredundant": h.quotient_irredundant,
    })
}

pub fn criterion(r: &RatSingReport) -> Value {
    json!({
        "x0_degree": r.x0_degree,
        "degrees": r.degrees,
        "r": r.r,
        "criterion": r.chain_holds,
        "duplicate_degrees": r.duplicate_degrees,
        "a_invariant": r.a_invariant,
        "frobenius": r.frobenius,
        "minimal_multiplicity": r.minimal_multiplicity,
        "hypotheses_asserted": hypotheses(&r.hypotheses),
    })
}
