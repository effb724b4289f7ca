use std::collections::BTreeMap;

use homprime::divisor::QDivisor;
use homprime::primes::{quotient_profile, required_oracle_bound, PrimeCandidate, PrimeClass};
use homprime::section_ring::{default_bound, RingWarning};
use homprime::{
    build_ring, construct_prime, ec_is_principal, ec_prime_exists, enumerate_primes, find_relations, hilbert_series,
    necessary_check, primality_oracle, ratsing_criterion, sg_from_profile, HilbertSeries, NumericalSemigroup, QuotientProfile,
    SectionRingModel,
};
use serde_json::{json, Map, Value};

use crate::schema::{self, Job};
use crate::{report, CliError, Emit, Options};

/// A command's JSON result and any warnings raised along the way.
pub struct Outcome {
    pub value: Value,
    pub warnings: Vec<String>,
}

fn model(divisor: &QDivisor, opts: &Options) -> Result<(SectionRingModel, Vec<String>), CliError> {
    let bound = opts.bound.unwrap_or_else(|| default_bound(divisor));
    let m = build_ring(divisor, bound)?;
    let warnings = m
        .warnings()
        .iter()
        .map(|w| match w {
            RingWarning::BoundTooSmall { bound } => {
                format!("bound_too_small: a generator sits at the bound {bound}; higher generators may be missing")
            }
        })
        .collect();
    Ok((m, warnings))
}

fn series(h: &HilbertSeries, dim: u32, emit: &[Emit], out: &mut Map<String, Value>) -> Result<(), CliError> {
    if emit.contains(&Emit::Hilbert) {
        out.insert(
            "hilbert".into(),
            json!({
                "numerator": h.numerator().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "denominators": h.denom_exponents(),
                "text": h.to_string(),
            }),
        );
    }
    if emit.contains(&Emit::AInvariant) {
        out.insert("a_invariant".into(), json!(h.a_invariant()));
    }
    if emit.contains(&Emit::Tomari) {
        out.insert("tomari".into(), json!(h.tomari_limit(dim)?.to_string()));
    }
    Ok(())
}

pub fn ring(job: &Job, opts: &Options) -> Result<Outcome, CliError> {
    let emit = opts.emit();
    let mut out = Map::new();
    if let Some(weights) = &job.weights {
        let rels = job.relations.clone().unwrap_or_default();
        if rels.len() >= weights.len() {
            return Err(CliError::Input("need more weights than relations".into()));
        }
        if weights.contains(&0) {
            return Err(CliError::Input("weights must be positive".into()));
        }
        let h = HilbertSeries::complete_intersection(weights, &rels);
        out.insert("weights".into(), json!(weights));
        out.insert("relation_degrees".into(), json!(rels));
        series(&h, (weights.len() - rels.len()) as u32, &emit, &mut out)?;
        return Ok(Outcome {
            value: Value::Object(out),
            warnings: Vec::new(),
        });
    }
    let d = job.divisor()?;
    let (m, warnings) = model(&d, opts)?;
    out.insert("divisor".into(), report::divisor(&d));
    out.insert("degree".into(), json!(d.degree().to_string()));
    out.insert("bound".into(), json!(m.bound()));
    if emit.contains(&Emit::Dims) {
        out.insert("dims".into(), json!(m.dims()));
    }
    if emit.contains(&Emit::Generators) {
        let gens: Vec<Value> = m
            .generator_degrees()
            .into_iter()
            .zip(m.generator_functions())
            .map(|(deg, g)| json!({ "degree": deg, "function": report::function(&g) }))
            .collect();
        out.insert("generator_degrees".into(), json!(m.generator_degrees()));
        out.insert("generators".into(), json!(gens));
    }
    if emit.contains(&Emit::Relations) {
        let rels: Vec<Value> = find_relations(&m)
            .iter()
            .map(|r| json!({ "degree": r.degree, "polynomial": r.to_string() }))
            .collect();
        out.insert("relations".into(), json!(rels));
    }
    if emit.iter().any(|e| matches!(e, Emit::Hilbert | Emit::AInvariant | Emit::Tomari)) {
        series(&hilbert_series(&m)?, 2, &emit, &mut out)?;
    }
    out.insert("warnings".into(), json!(warnings));
    Ok(Outcome {
        value: Value::Object(out),
        warnings,
    })
}

pub fn primes_enumerate(job: &Job, opts: &Options) -> Result<Outcome, CliError> {
    let d = job.divisor()?;
    let verdicts = enumerate_primes(&d, opts.oracle_bound)?;
    let mut summary = BTreeMap::new();
    let mut list = Vec::new();
    for v in &verdicts {
        let mut entry = json!({ "degree": v.degree, "s": v.s, "oracle_bound": v.oracle_bound });
        let method = if v.s == 1 { "point_construction" } else { "congruence_then_oracle" };
        entry["method"] = json!(method);
        match &v.class {
            PrimeClass::UniquePoint { point, function } => {
                summary.insert(v.degree.to_string(), "unique");
                entry["class"] = json!("unique");
                entry["point"] = report::point(point);
                entry["function"] = report::function(function);
            }
            PrimeClass::OneParameterFamily {
                excluded,
                base,
                samples,
            } => {
                summary.insert(v.degree.to_string(), "family");
                entry["class"] = json!("family");
                entry["excluded_points"] = excluded.iter().map(report::point).collect();
                entry["base_divisor"] = report::divisor(base);
                entry["samples"] = samples
                    .iter()
                    .map(|(p, g)| json!({ "point": report::point(p), "function": report::function(g) }))
                    .collect();
            }
            PrimeClass::None => entry["class"] = json!("none"),
        }
        list.push(entry);
    }
    Ok(Outcome {
        value: json!({
            "divisor": report::divisor(&d),
            "degree": d.degree().to_string(),
            "summary": summary,
            "verdicts": list,
        }),
        warnings: Vec::new(),
    })
}

pub fn primes_check(job: &Job, opts: &Options) -> Result<Outcome, CliError> {
    let d = job.divisor()?;
    let deg = *Job::require(&job.degree, "degree")?;
    let (m, warnings) = model(&d, opts)?;
    let x = PrimeCandidate::new(&d, job.function()?, deg)?;
    let bound = opts.oracle_bound.unwrap_or_else(|| required_oracle_bound(&m, deg));
    let verdict = primality_oracle(&m, &x, Some(bound))?;
    let profile = quotient_profile(&m, &x)?;
    let necessary = necessary_check(&m, &x)?;
    Ok(Outcome {
        value: json!({
            "degree": deg,
            "function": report::function(x.function()),
            "bound": m.bound(),
            "oracle": report::oracle(&verdict, bound),
            "profile": report::profile(&profile),
            "necessary": report::necessary(&necessary),
            "warnings": warnings,
        }),
        warnings,
    })
}

pub fn primes_construct(job: &Job, opts: &Options) -> Result<Outcome, CliError> {
    let d = job.divisor()?;
    let deg = *Job::require(&job.degree, "degree")?;
    let p = job.point()?;
    let x = construct_prime(&d, deg, &p)?;
    let (m, warnings) = model(&d, opts)?;
    let bound = opts.oracle_bound.unwrap_or_else(|| required_oracle_bound(&m, deg));
    let verdict = primality_oracle(&m, &x, Some(bound))?;
    Ok(Outcome {
        value: json!({
            "degree": deg,
            "point": report::point(&p),
            "function": report::function(x.function()),
            "oracle": report::oracle(&verdict, bound),
            "warnings": warnings,
        }),
        warnings,
    })
}

pub fn semigroup(job: &Job) -> Result<Outcome, CliError> {
    let (h, x0) = match (&job.profile, &job.generators) {
        (Some(p), None) => {
            let profile = QuotientProfile {
                d: p.d,
                dims: p.dims.clone(),
                s: p.s,
            };
            (sg_from_profile(&profile)?, job.x0_degree.unwrap_or(p.d))
        }
        (None, Some(gens)) => (
            NumericalSemigroup::new(gens)?,
            *Job::require(&job.x0_degree, "x0_degree")?,
        ),
        _ => return Err(CliError::Input("give exactly one of \"generators\" and \"profile\"".into())),
    };
    let others = job.generators.clone().unwrap_or_else(|| h.generators().to_vec());
    let rep = ratsing_criterion(x0, &others, job.hypotheses())?;
    let mut value = report::criterion(&rep);
    value["semigroup"] = report::semigroup(&h);
    Ok(Outcome {
        value,
        warnings: Vec::new(),
    })
}

pub fn ec_verdict(job: &Job) -> Result<Outcome, CliError> {
    if job.degree.is_none() && job.principal.is_none() {
        return Err(CliError::Input("give \"degree\", \"principal\" or both".into()));
    }
    let d = job.divisor()?;
    let mut value = json!({ "divisor": report::divisor(&d), "degree_of_divisor": d.degree().to_string() });
    if let Some(deg) = job.degree {
        let v = ec_prime_exists(&d, deg)?;
        value["verdict"] = json!({
            "degree": v.degree,
            "exists": v.exists,
            "point": v.point.map(|p| report::point(&p.into())),
            "reason": v.reason.as_str(),
            "scope": "complete for the degrees permitted by deg D",
        });
    }
    if let Some(list) = &job.principal {
        let curve = job.curve()?;
        let checks = list
            .iter()
            .map(|terms| {
                let e = schema::divisor(&curve, terms)?;
                Ok(json!({ "divisor": report::divisor(&e), "principal": ec_is_principal(&e)? }))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        value["principal"] = json!(checks);
    }
    Ok(Outcome {
        value,
        warnings: Vec::new(),
    })
}
