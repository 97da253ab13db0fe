use crate::error::{Error, Result};
use crate::exact::Rational;

use super::polymat::{PolyMat, RfMatrix};
use super::sparse::QMat;

pub type QVec = Vec<Rational>;

pub fn zero_vec(n: usize) -> QVec {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVec {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Incrementally maintained row-echelon basis of a subspace of ℚ^dim.
///
/// Each stored row is zero at the pivots of all earlier rows and has a 1 at its own pivot,
/// so one pass in insertion order reduces any vector. Optionally tracks every row as a
/// combination of the inserted vectors, which gives coordinates in the inserted basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, QVec)>,
    combos: Option<Vec<QVec>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), combos: None, inserted: 0 }
    }

    /// Variant that records coordinates with respect to the accepted vectors.
    pub fn with_coordinates(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), combos: Some(Vec::new()), inserted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the basis; returns the residual and the multipliers of each row.
    fn reduce_with(&self, v: &[Rational]) -> (QVec, Vec<Rational>) {
        let mut r = v.to_vec();
        let mut mult = Vec::with_capacity(self.rows.len());
        for (p, row) in &self.rows {
            let c = r[*p].clone();
            if !c.is_zero() {
                for (k, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        r[k] -= &c * x;
                    }
                }
            }
            mult.push(c);
        }
        (r, mult)
    }

    pub fn reduce(&self, v: &[Rational]) -> QVec {
        self.reduce_with(v).0
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns `true` when it was independent of the current span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let (mut r, mult) = self.reduce_with(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        if let Some(combos) = &mut self.combos {
            // row = (v - Σ mult_k row_k) / pivot, expressed in inserted vectors
            let idx = self.inserted;
            let mut c = zero_vec(idx + 1);
            c[idx] = Rational::one();
            for (k, m) in mult.iter().enumerate() {
                if !m.is_zero() {
                    for (t, x) in combos[k].iter().enumerate() {
                        if !x.is_zero() {
                            c[t] -= m * x;
                        }
                    }
                }
            }
            for x in c.iter_mut() {
                *x *= &inv;
            }
            combos.push(c);
        }
        self.inserted += 1;
        self.rows.push((p, r));
        true
    }

    /// Coordinates of `v` in the accepted vectors, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<QVec> {
        let combos = self.combos.as_ref().expect("coordinate tracking enabled");
        let (r, mult) = self.reduce_with(v);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = zero_vec(self.inserted);
        for (k, m) in mult.iter().enumerate() {
            if !m.is_zero() {
                for (t, x) in combos[k].iter().enumerate() {
                    out[t] += m * x;
                }
            }
        }
        Some(out)
    }

    /// Basis rows in reduced row-echelon form, sorted by pivot.
    pub fn rref_basis(&self) -> Vec<QVec> {
        let mut rows: Vec<(usize, QVec)> = self.rows.clone();
        rows.sort_by_key(|r| r.0);
        for i in (0..rows.len()).rev() {
            let (p, ri) = rows[i].clone();
            for (_, rj) in rows.iter_mut().take(i) {
                let c = rj[p].clone();
                if !c.is_zero() {
                    for (k, x) in ri.iter().enumerate() {
                        if !x.is_zero() {
                            rj[k] -= &c * x;
                        }
                    }
                }
            }
        }
        rows.into_iter().map(|r| r.1).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r.0).collect();
        p.sort_unstable();
        p
    }
}

/// Kernel basis of a rational matrix given by rows, in reduced echelon form:
/// one vector per free column, with a 1 in that column.
pub fn kernel_q(m: &[QVec]) -> Vec<QVec> {
    let ncols = m.first().map_or(0, |r| r.len());
    kernel_of_rows(ncols, m.iter().map(|r| r.as_slice()))
}

fn kernel_of_rows<'a>(ncols: usize, rows: impl Iterator<Item = &'a [Rational]>) -> Vec<QVec> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            return Vec::new();
        }
    }
    kernel_from_echelon(&e)
}

fn kernel_from_echelon(e: &Echelon) -> Vec<QVec> {
    let ncols = e.dim();
    let rref = e.rref_basis();
    let pivots = e.pivots();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vec(ncols);
            v[f] = Rational::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Kernel of a list of sparse matrices stacked vertically.
pub fn kernel_stacked(ncols: usize, mats: &[&QMat]) -> Vec<QVec> {
    let mut e = Echelon::new(ncols);
    for m in mats {
        assert_eq!(m.ncols(), ncols, "stacked kernel width");
        for r in m.rows() {
            if r.is_empty() {
                continue;
            }
            let mut v = zero_vec(ncols);
            for (c, x) in r {
                v[*c] = x.clone();
            }
            e.insert(&v);
            if e.is_full() {
                return Vec::new();
            }
        }
    }
    kernel_from_echelon(&e)
}

/// Constant vectors `v` with `m(u)·v = 0` identically in `u`.
pub fn kernel_rf(m: &RfMatrix) -> Vec<QVec> {
    let mats: Vec<&QMat> = m.num().coeffs().iter().collect();
    kernel_stacked(m.ncols(), &mats)
}

pub fn rank_q(m: &[QVec]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut e = Echelon::new(ncols);
    for r in m {
        e.insert(r);
    }
    e.rank()
}

/// Matrix of a constant operator on an invariant subspace with the given (independent) basis.
pub fn restrict_q(op: &QMat, basis: &[QVec]) -> Result<QMat> {
    let solver = span_solver(op.ncols(), basis)?;
    restrict_with(op, basis, &solver)
}

fn span_solver(dim: usize, basis: &[QVec]) -> Result<Echelon> {
    let mut solver = Echelon::with_coordinates(dim);
    for b in basis {
        if !solver.insert(b) {
            return Err(Error::Precondition("restriction basis is linearly dependent".into()));
        }
    }
    Ok(solver)
}

fn restrict_with(op: &QMat, basis: &[QVec], solver: &Echelon) -> Result<QMat> {
    let k = basis.len();
    let mut out = QMat::zeros(k, k);
    for (j, b) in basis.iter().enumerate() {
        let img = op.matvec(b);
        let c = solver.coordinates(&img).ok_or(Error::NotInvariant { index: j })?;
        for (i, x) in c.into_iter().enumerate() {
            if !x.is_zero() {
                out.set(i, j, x);
            }
        }
    }
    Ok(out)
}

/// Matrix of an operator-valued function on an invariant subspace; the common denominator is kept.
pub fn restrict_to_subspace(op: &RfMatrix, basis: &[QVec]) -> Result<RfMatrix> {
    let solver = span_solver(op.ncols(), basis)?;
    let coeffs = op
        .num()
        .coeffs()
        .iter()
        .map(|c| restrict_with(c, basis, &solver))
        .collect::<Result<Vec<_>>>()?;
    RfMatrix::new(PolyMat::new(basis.len(), basis.len(), coeffs), op.den().clone())
}

/// Smallest subspace containing `seeds` and stable under all `gens`; basis in discovery order.
pub fn closure_span(dim: usize, seeds: &[QVec], gens: &[&QMat]) -> Vec<QVec> {
    let mut e = Echelon::new(dim);
    let mut basis: Vec<QVec> = Vec::new();
    for s in seeds {
        if e.insert(s) {
            basis.push(s.clone());
        }
    }
    let mut next = 0;
    while next < basis.len() && !e.is_full() {
        let v = basis[next].clone();
        next += 1;
        for g in gens {
            let w = g.matvec(&v);
            if is_zero_vec(&w) {
                continue;
            }
            if e.insert(&w) {
                basis.push(w);
                if e.is_full() {
                    break;
                }
            }
        }
    }
    basis
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

pub fn scale_vec(v: &[Rational], c: &Rational) -> QVec {
    v.iter().map(|x| x * c).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `Some(c)` when `a = c·b` (with `b ≠ 0`).
pub fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    fn v(x: &[i64]) -> QVec {
        x.iter().map(|&a| qi(a)).collect()
    }

    #[test]
    fn kernels() {
        assert!(kernel_q(&[v(&[1, 0]), v(&[0, 1])]).is_empty());
        assert_eq!(kernel_q(&[v(&[0, 0]), v(&[0, 0])]).len(), 2);
        assert_eq!(kernel_q(&[v(&[1, 1]), v(&[2, 2])]), vec![v(&[-1, 1])]);
    }

    #[test]
    fn coordinates_in_inserted_basis() {
        let mut e = Echelon::with_coordinates(3);
        assert!(e.insert(&v(&[1, 1, 0])));
        assert!(e.insert(&v(&[0, 1, 1])));
        assert!(!e.insert(&v(&[1, 2, 1])));
        assert_eq!(e.coordinates(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(e.coordinates(&v(&[0, 0, 1])), None);
    }

    #[test]
    fn closure_of_nilpotent() {
        let n = QMat::from_triplets(3, 3, [(1, 0, qi(1)), (2, 1, qi(1))]);
        assert_eq!(closure_span(3, &[v(&[1, 0, 0])], &[&n]).len(), 3);
        assert_eq!(closure_span(3, &[v(&[0, 0, 1])], &[&n]).len(), 1);
    }
}
