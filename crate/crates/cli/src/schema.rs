//! Job files: JSON in, domain values out. All rationals are strings `"p/q"`.

use std::sync::Arc;

use homprime::divisor::{Curve, CurvePoint, QDivisor};
use homprime::elliptic::WeierstrassCurve;
use homprime::semigroup::Hypotheses;
use homprime::{NfElem, NumberField, Poly, Rational, RationalFunctionP1};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub curve: Option<CurveJson>,
    #[serde(default)]
    pub divisor: Option<Vec<TermJson>>,
    /// Degree of a prime candidate or of an elliptic verdict.
    #[serde(default)]
    pub degree: Option<u32>,
    #[serde(default)]
    pub point: Option<PointJson>,
    #[serde(default)]
    pub function: Option<FunctionJson>,
    /// Weighted complete intersection: generator weights and relation degrees.
    #[serde(default)]
    pub weights: Option<Vec<u32>>,
    #[serde(default)]
    pub relations: Option<Vec<u32>>,
    /// Semigroup generators, or the degrees of `x₁, …, x_r`.
    #[serde(default)]
    pub generators: Option<Vec<u32>>,
    #[serde(default)]
    pub x0_degree: Option<u32>,
    #[serde(default)]
    pub hypotheses: Option<HypothesesJson>,
    #[serde(default)]
    pub profile: Option<ProfileJson>,
    /// Divisors to test for principality on an elliptic curve.
    #[serde(default)]
    pub principal: Option<Vec<Vec<TermJson>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CurveJson {
    Named(String),
    Weierstrass {
        a: ScalarJson,
        b: ScalarJson,
        #[serde(default)]
        field: Option<FieldJson>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    /// Coefficients of the minimal polynomial, constant term first.
    pub min_poly: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Rational(String),
    Nf { nf: Vec<String> },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    /// `"inf"`, `"O"` or a rational coordinate on P¹.
    Named(String),
    Xy { xy: [ScalarJson; 2] },
    Nf { nf: Vec<String> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub point: PointJson,
    pub coeff: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionJson {
    pub numer: Vec<String>,
    #[serde(default)]
    pub denom: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypothesesJson {
    #[serde(default = "yes")]
    pub x0_prime: bool,
    #[serde(default = "yes")]
    pub x0_in_minimal_reduction: bool,
    #[serde(default = "yes")]
    pub quotient_irredundant: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Deserialize)]
pub struct ProfileJson {
    pub d: u32,
    pub s: u32,
    pub dims: Vec<usize>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn rational(s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|_| input(format!("not a rational number: {s:?}")))
}

fn rationals(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|s| rational(s)).collect()
}

impl Job {
    pub fn require<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T, CliError> {
        field.as_ref().ok_or_else(|| input(format!("missing field \"{name}\"")))
    }

    pub fn curve(&self) -> Result<Curve, CliError> {
        match &self.curve {
            None => Ok(Curve::ProjectiveLine),
            Some(c) => c.to_curve(),
        }
    }

    pub fn divisor(&self) -> Result<QDivisor, CliError> {
        let terms = Job::require(&self.divisor, "divisor")?;
        divisor(&self.curve()?, terms)
    }

    pub fn point(&self) -> Result<CurvePoint, CliError> {
        Job::require(&self.point, "point")?.to_point(&self.curve()?)
    }

    pub fn function(&self) -> Result<RationalFunctionP1, CliError> {
        let f = Job::require(&self.function, "function")?;
        let numer = Poly::new(rationals(&f.numer)?);
        let denom = match &f.denom {
            Some(d) => Poly::new(rationals(d)?),
            None => Poly::one(),
        };
        RationalFunctionP1::new(numer, denom).map_err(|e| input(e.to_string()))
    }

    pub fn hypotheses(&self) -> Hypotheses {
        self.hypotheses.as_ref().map_or_else(Hypotheses::default, |h| Hypotheses {
            x0_prime: h.x0_prime,
            x0_in_minimal_reduction: h.x0_in_minimal_reduction,
            quotient_irredundant: h.quotient_irredundant,
        })
    }
}

pub fn divisor(curve: &Curve, terms: &[TermJson]) -> Result<QDivisor, CliError> {
    let terms = terms
        .iter()
        .map(|t| Ok((t.point.to_point(curve)?, rational(&t.coeff)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    QDivisor::new(curve.clone(), terms).map_err(|e| input(e.to_string()))
}

impl CurveJson {
    fn to_curve(&self) -> Result<Curve, CliError> {
        match self {
            CurveJson::Named(name) if name.eq_ignore_ascii_case("p1") => Ok(Curve::ProjectiveLine),
            CurveJson::Named(name) => Err(input(format!("unknown curve {name:?}"))),
            CurveJson::Weierstrass { a, b, field } => {
                let k = match field {
                    None => NumberField::rationals(),
                    Some(f) => NumberField::new(Poly::new(rationals(&f.min_poly)?))
                        .map_err(|e| input(e.to_string()))?,
                };
                let e = WeierstrassCurve::new(a.to_elem(&k)?, b.to_elem(&k)?)
                    .map_err(|e| input(e.to_string()))?;
                Ok(Curve::Elliptic(e))
            }
        }
    }
}

impl ScalarJson {
    fn to_elem(&self, k: &Arc<NumberField>) -> Result<NfElem, CliError> {
        match self {
            ScalarJson::Rational(s) => Ok(NfElem::from_rational(k, rational(s)?)),
            ScalarJson::Nf { nf } => {
                if nf.len() > k.degree() {
                    return Err(input(format!(
                        "field element has {} coordinates, field degree is {}",
                        nf.len(),
                        k.degree()
                    )));
                }
                Ok(NfElem::from_coords(k, rationals(nf)?))
            }
        }
    }
}

impl PointJson {
    fn to_point(&self, curve: &Curve) -> Result<CurvePoint, CliError> {
        match (curve, self) {
            (Curve::ProjectiveLine, PointJson::Named(s)) if s == "inf" => Ok(CurvePoint::P1Infinity),
            (Curve::ProjectiveLine, PointJson::Named(s)) => Ok(CurvePoint::p1(rational(s)?)),
            (Curve::ProjectiveLine, PointJson::Nf { nf }) => Err(input(format!(
                "P1 points must be rational, got number field coordinates {nf:?}"
            ))),
            (Curve::ProjectiveLine, PointJson::Xy { .. }) => Err(input("P1 points are \"inf\" or a rational coordinate")),
            (Curve::Elliptic(_), PointJson::Named(s)) if s == "O" => Ok(CurvePoint::EcOrigin),
            (Curve::Elliptic(e), PointJson::Xy { xy: [x, y] }) => {
                let k = e.field();
                Ok(CurvePoint::EcAffine(x.to_elem(k)?, y.to_elem(k)?))
            }
            (Curve::Elliptic(_), _) => Err(input("points of an elliptic curve must be \"O\" or {\"xy\": [x, y]}")),
        }
    }
}
