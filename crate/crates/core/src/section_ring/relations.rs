//! Relations among the generators, degree by degree.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{kernel, Echelon, Rational};

use super::{Section, SectionRingModel};

/// A homogeneous polynomial in the generators that vanishes in `R`.
///
/// Terms are `(exponents, coefficient)`, exponents indexed like
/// [`SectionRingModel::generators`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub degree: u32,
    pub terms: Vec<(Vec<u32>, Rational)>,
}

/// Exponent vectors of weighted degree `n`, largest power of the first
/// generator first.
fn monomials(weights: &[u32], n: u32) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in (0..=left / weights[i]).rev() {
            cur.push(k);
            go(weights, i + 1, left - k * weights[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, n, &mut Vec::new(), &mut out);
    out
}

struct Evaluator<'a> {
    model: &'a SectionRingModel,
    memo: HashMap<Vec<u32>, Section>,
}

impl Evaluator<'_> {
    fn eval(&mut self, e: &[u32]) -> Section {
        if let Some(s) = self.memo.get(e) {
            return s.clone();
        }
        let pieces = self.model.pieces();
        let s = match e.iter().position(|&k| k > 0) {
            None => pieces.basis_section(0, 0),
            Some(i) => {
                let mut rest = e.to_vec();
                rest[i] -= 1;
                let tail = self.eval(&rest);
                pieces.mul(&self.model.generators()[i].section, &tail)
            }
        };
        self.memo.insert(e.to_vec(), s.clone());
        s
    }
}

/// Minimal relations in each degree up to the model's bound: kernel vectors
/// of the evaluation map on monomials that are not consequences of
/// relations found in lower degrees.
pub fn find_relations(model: &SectionRingModel) -> Vec<Relation> {
    let weights = model.generator_degrees();
    if weights.is_empty() {
        return Vec::new();
    }
    let mut ev = Evaluator {
        model,
        memo: HashMap::new(),
    };
    let mut found: Vec<Relation> = Vec::new();
    for n in 1..=model.bound() {
        let monos = monomials(&weights, n);
        if monos.len() < 2 {
            continue;
        }
        let index: HashMap<&[u32], usize> =
            monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let dim = model.dim(n);
        let mut columns = Vec::with_capacity(monos.len());
        for m in &monos {
            columns.push(model.pieces().coords(&ev.eval(m)));
        }
        let rows: Vec<Vec<Rational>> = (0..dim)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        let ker = kernel(&rows, monos.len());
        if ker.is_empty() {
            continue;
        }
        let mut known = Echelon::new(monos.len());
        for rel in &found {
            for mult in monomials(&weights, n - rel.degree) {
                let mut v = vec![Rational::zero(); monos.len()];
                for (e, c) in &rel.terms {
                    let prod: Vec<u32> = e.iter().zip(&mult).map(|(a, b)| a + b).collect();
                    v[index[prod.as_slice()]] += c;
                }
                known.insert(v);
            }
        }
        if known.rank() == ker.len() {
            continue;
        }
        for v in ker {
            if known.insert(v.clone()) {
                let terms = v
                    .into_iter()
                    .zip(&monos)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, m)| (m.clone(), c))
                    .collect();
                found.push(Relation { degree: n, terms });
            }
        }
    }
    found
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| if k == 1 { format!("x{j}") } else { format!("x{j}^{k}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{e8, hypersurface_223, scroll};
    use super::super::build_ring;
    use super::*;
    use crate::divisor::{CurvePoint, QDivisor};

    fn degrees(rels: &[Relation]) -> Vec<u32> {
        rels.iter().map(|r| r.degree).collect()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(&[2, 2, 3], 6).len(), 5);
        assert_eq!(monomials(&[2, 3], 1), Vec::<Vec<u32>>::new());
        assert_eq!(monomials(&[1, 1], 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn hypersurface_has_one_sextic_relation() {
        let m = build_ring(&hypersurface_223(), 12).unwrap();
        let rels = find_relations(&m);
        assert_eq!(degrees(&rels), vec![6]);
        assert!(rels[0].terms.iter().any(|(e, _)| e == &vec![0, 0, 2]));
    }

    #[test]
    fn e8_relation_in_degree_42() {
        let m = build_ring(&e8(), 50).unwrap();
        assert_eq!(degrees(&find_relations(&m)), vec![42]);
    }

    #[test]
    fn scroll_has_three_quadric_minors() {
        let m = build_ring(&scroll(), 25).unwrap();
        assert_eq!(degrees(&find_relations(&m)), vec![10, 12, 14]);
    }

    #[test]
    fn polynomial_ring_is_free() {
        let d = QDivisor::on_p1([(CurvePoint::p1(0), Rational::one())]);
        let m = build_ring(&d, 8).unwrap();
        assert!(find_relations(&m).is_empty());
    }
}
