//! Exact row reduction over `Rational`.

use super::Rational;

/// A subspace of `Q^n` kept as a fully reduced row-echelon basis.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the pivot
/// columns of all other rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Rational>>>(ncols: usize, rows: I) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Columns carrying no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after subtracting its projection onto the pivots.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span. Returns `false` when it was already contained.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Basis of the right kernel `{x : A x = 0}` of the matrix with the given rows.
///
/// One basis vector per free column, with a 1 in that column; ordered by the
/// free column.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let e = Echelon::from_rows(ncols, rows.iter().cloned());
    let mut out = Vec::new();
    for f in e.free_columns() {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            v[p] = -&row[f];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let e = Echelon::from_rows(3, vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[1, 3, 4])));
        assert!(!e.contains(&v(&[0, 0, 1])));
        assert_eq!(e.pivots(), vec![0, 1]);
        assert_eq!(e.free_columns(), vec![2]);
    }

    #[test]
    fn kernel_is_annihilated() {
        let rows = vec![v(&[1, 1, 0, 2]), v(&[0, 1, 1, 1])];
        let k = kernel(&rows, 4);
        assert_eq!(k.len(), 2);
        for x in &k {
            for r in &rows {
                let dot: Rational = r.iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
