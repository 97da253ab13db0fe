use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Rational;

/// Ring operations needed by the sparse kernels.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += *o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= *o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        *self * *o
    }
    fn neg_ref(&self) -> Self {
        -*self
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Sparse matrix in row-compressed form; each row is sorted by column and holds no zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

pub type QMat = SparseMat<Rational>;

impl<T: Scalar> SparseMat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.rows[i].push((i, c.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, t: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (r, c, v) in t {
            m.add_at(r, c, &v);
        }
        m
    }

    pub fn from_dense(d: &[Vec<T>]) -> Self {
        let nrows = d.len();
        let ncols = d.first().map_or(0, |r| r.len());
        let rows = d
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        SparseMat { nrows, ncols, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                d[r][*c] = v.clone();
            }
        }
        d
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec<(usize, T)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_row_nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                if v.is_zero() {
                    row.remove(i);
                } else {
                    row[i].1 = v;
                }
            }
            Err(i) => {
                if !v.is_zero() {
                    row.insert(i, (c, v));
                }
            }
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &T) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1.add_assign_ref(v);
                if row[i].1.is_zero() {
                    row.remove(i);
                }
            }
            Err(i) => row.insert(i, (c, v.clone())),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> SparseMat<S> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter_map(|(c, v)| {
                        let w = f(v);
                        (!w.is_zero()).then_some((*c, w))
                    })
                    .collect()
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|v| v.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg_ref())
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows }
    }

    fn merge(&self, other: &Self, sign_other: bool) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch in sum");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
                    let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
                    if take_a {
                        out.push(a[i].clone());
                        i += 1;
                    } else if take_b {
                        let v = if sign_other { b[j].1.neg_ref() } else { b[j].1.clone() };
                        out.push((b[j].0, v));
                        j += 1;
                    } else {
                        let mut v = a[i].1.clone();
                        if sign_other {
                            v.sub_assign_ref(&b[j].1);
                        } else {
                            v.add_assign_ref(&b[j].1);
                        }
                        if !v.is_zero() {
                            out.push((a[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    /// Adds `c·other` in place.
    pub fn axpy(&mut self, c: &T, other: &Self) {
        if c.is_zero() {
            return;
        }
        let scaled = other.scale(c);
        *self = self.add(&scaled);
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let mut acc: Vec<T> = vec![T::zero(); other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.ncols];
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    if !mark[*j] {
                        mark[*j] = true;
                        touched.push(*j);
                    }
                    acc[*j].add_assign_ref(&a.mul_ref(b));
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = std::mem::replace(&mut acc[j], T::zero());
                mark[j] = false;
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            touched.clear();
            rows.push(out);
        }
        SparseMat { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (ca, va) in ra {
                    for (cb, vb) in rb {
                        out.push((ca * other.ncols + cb, va.mul_ref(vb)));
                    }
                }
                rows.push(out);
            }
        }
        SparseMat { nrows, ncols, rows }
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.ncols, "shape mismatch in matvec");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        acc.add_assign_ref(&a.mul_ref(&v[*c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vecmat(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.nrows, "shape mismatch in vecmat");
        let mut out = vec![T::zero(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            if v[r].is_zero() {
                continue;
            }
            for (c, a) in row {
                out[*c].add_assign_ref(&v[r].mul_ref(a));
            }
        }
        out
    }

    /// Extracts the submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut colmap = vec![usize::MAX; self.ncols];
        for (k, c) in cols.iter().enumerate() {
            colmap[*c] = k;
        }
        let out_rows = rows
            .iter()
            .map(|&r| {
                let mut row: Vec<(usize, T)> = self.rows[r]
                    .iter()
                    .filter(|(c, _)| colmap[*c] != usize::MAX)
                    .map(|(c, v)| (colmap[*c], v.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        SparseMat { nrows: rows.len(), ncols: cols.len(), rows: out_rows }
    }

    /// Diagonal entries if the matrix is diagonal.
    pub fn diagonal(&self) -> Option<Vec<T>> {
        if self.nrows != self.ncols {
            return None;
        }
        let mut d = Vec::with_capacity(self.nrows);
        for (r, row) in self.rows.iter().enumerate() {
            match row.as_slice() {
                [] => d.push(T::zero()),
                [(c, v)] if *c == r => d.push(v.clone()),
                _ => return None,
            }
        }
        Some(d)
    }

    /// Conjugation `diag(s)^{-1} · self · diag(s)` expressed through the entrywise factor
    /// `f(row, col)`.
    pub fn map_indexed(&self, f: impl Fn(usize, usize, &T) -> T) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .filter_map(|(c, v)| {
                        let w = f(r, *c, v);
                        (!w.is_zero()).then_some((*c, w))
                    })
                    .collect()
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }
}

impl QMat {
    /// Integer matrices `s·M_k` for one common positive integer `s` clearing all denominators.
    pub fn integerize(mats: &[&QMat]) -> (Vec<SparseMat<BigInt>>, BigInt) {
        let s = Rational::lcm_of_denominators(mats.iter().flat_map(|m| m.iter().map(|(_, _, v)| v)));
        let out = mats
            .iter()
            .map(|m| m.map(|v| v.numer() * (&s / v.denom())))
            .collect();
        (out, s)
    }
}

impl SparseMat<BigInt> {
    pub fn max_abs(&self) -> BigInt {
        self.iter().map(|(_, _, v)| v.abs()).max().unwrap_or_else(<BigInt as Zero>::zero)
    }

    pub fn to_i128(&self) -> Option<SparseMat<i128>> {
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            let mut out = Vec::with_capacity(row.len());
            for (c, v) in row {
                out.push((*c, v.to_i128()?));
            }
            rows.push(out);
        }
        Some(SparseMat { nrows: self.nrows, ncols: self.ncols, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    fn m(d: &[&[i64]]) -> QMat {
        QMat::from_dense(&d.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn product_and_sum() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.matmul(&b), m(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.sub(&a), QMat::zeros(2, 2));
        assert_eq!(a.add(&b), m(&[&[1, 3], &[1, 1]]));
    }

    #[test]
    fn kron_of_matrix_units() {
        let e11 = m(&[&[1, 0], &[0, 0]]);
        let e22 = m(&[&[0, 0], &[0, 1]]);
        let k = e11.kron(&e22);
        assert_eq!(k.nnz(), 1);
        assert_eq!(k.get(1, 1), qi(1));
        assert_eq!(QMat::identity(2).kron(&QMat::identity(2)), QMat::identity(4));
    }

    #[test]
    fn vec_products() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.matvec(&[qi(1), qi(1)]), vec![qi(3), qi(7)]);
        assert_eq!(a.vecmat(&[qi(1), qi(1)]), vec![qi(4), qi(6)]);
    }
}
