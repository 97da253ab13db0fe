use crate::error::{Error, Result};
use crate::exact::{series_of, Poly, Rational, RationalFunction};

use super::sparse::QMat;

/// Matrix polynomial `Σ_k C_k u^k` with sparse rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero matrix has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMat {
    nrows: usize,
    ncols: usize,
    coeffs: Vec<QMat>,
}

impl PolyMat {
    pub fn new(nrows: usize, ncols: usize, mut coeffs: Vec<QMat>) -> Self {
        for c in &coeffs {
            assert_eq!((c.nrows(), c.ncols()), (nrows, ncols), "coefficient shape");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyMat { nrows, ncols, coeffs }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMat { nrows, ncols, coeffs: Vec::new() }
    }

    pub fn constant(m: QMat) -> Self {
        PolyMat::new(m.nrows(), m.ncols(), vec![m])
    }

    pub fn identity(n: usize) -> Self {
        PolyMat::constant(QMat::identity(n))
    }

    /// `p(u)·M` for a scalar polynomial `p` and constant `M`.
    pub fn from_poly_times(p: &Poly, m: &QMat) -> Self {
        PolyMat::new(m.nrows(), m.ncols(), p.coeffs().iter().map(|c| m.scale(c)).collect())
    }

    /// Builds from entrywise polynomials.
    pub fn from_entries(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Poly)>) -> Self {
        let mut coeffs: Vec<QMat> = Vec::new();
        for (r, c, p) in entries {
            for (k, v) in p.coeffs().iter().enumerate() {
                while coeffs.len() <= k {
                    coeffs.push(QMat::zeros(nrows, ncols));
                }
                coeffs[k].add_at(r, c, v);
            }
        }
        PolyMat::new(nrows, ncols, coeffs)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn coeffs(&self) -> &[QMat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QMat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| QMat::zeros(self.nrows, self.ncols))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero matrix reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn entry(&self, r: usize, c: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|m| m.get(r, c)).collect())
    }

    /// Positions that are nonzero in some coefficient, sorted.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut s: Vec<(usize, usize)> = self.coeffs.iter().flat_map(|m| m.iter().map(|(r, c, _)| (r, c))).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn eval(&self, x: &Rational) -> QMat {
        let mut acc = QMat::zeros(self.nrows, self.ncols);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    pub fn add(&self, o: &PolyMat) -> PolyMat {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyMat::new(self.nrows, self.ncols, (0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &PolyMat) -> PolyMat {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyMat::new(self.nrows, self.ncols, (0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn neg(&self) -> PolyMat {
        PolyMat { nrows: self.nrows, ncols: self.ncols, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, c: &Rational) -> PolyMat {
        PolyMat::new(self.nrows, self.ncols, self.coeffs.iter().map(|m| m.scale(c)).collect())
    }

    pub fn mul_poly(&self, p: &Poly) -> PolyMat {
        if p.is_zero() || self.is_zero() {
            return PolyMat::zeros(self.nrows, self.ncols);
        }
        let mut out = vec![QMat::zeros(self.nrows, self.ncols); self.coeffs.len() + p.deg0()];
        for (i, m) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[i + j].axpy(c, m);
                }
            }
        }
        PolyMat::new(self.nrows, self.ncols, out)
    }

    pub fn mul(&self, o: &PolyMat) -> PolyMat {
        if self.is_zero() || o.is_zero() {
            return PolyMat::zeros(self.nrows, o.ncols);
        }
        let mut out = vec![QMat::zeros(self.nrows, o.ncols); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                let p = a.matmul(b);
                out[i + j] = out[i + j].add(&p);
            }
        }
        PolyMat::new(self.nrows, o.ncols, out)
    }

    pub fn mul_const_left(&self, m: &QMat) -> PolyMat {
        PolyMat::new(m.nrows(), self.ncols, self.coeffs.iter().map(|c| m.matmul(c)).collect())
    }

    pub fn mul_const_right(&self, m: &QMat) -> PolyMat {
        PolyMat::new(self.nrows, m.ncols(), self.coeffs.iter().map(|c| c.matmul(m)).collect())
    }

    pub fn kron(&self, o: &PolyMat) -> PolyMat {
        let (nr, nc) = (self.nrows * o.nrows, self.ncols * o.ncols);
        if self.is_zero() || o.is_zero() {
            return PolyMat::zeros(nr, nc);
        }
        let mut out = vec![QMat::zeros(nr, nc); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.kron(b));
            }
        }
        PolyMat::new(nr, nc, out)
    }

    /// `M(scale·u + c)`.
    pub fn compose_affine(&self, scale: &Rational, c: &Rational) -> PolyMat {
        let lin = Poly::new(vec![c.clone(), scale.clone()]);
        let mut acc = PolyMat::zeros(self.nrows, self.ncols);
        for m in self.coeffs.iter().rev() {
            acc = acc.mul_poly(&lin).add(&PolyMat::constant(m.clone()));
        }
        acc
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::new(self.ncols, self.nrows, self.coeffs.iter().map(|m| m.transpose()).collect())
    }

    /// Applies a coefficientwise linear map.
    pub fn map_coeffs(&self, f: impl Fn(&QMat) -> QMat) -> PolyMat {
        let coeffs: Vec<QMat> = self.coeffs.iter().map(f).collect();
        let (nr, nc) = coeffs.first().map_or((self.nrows, self.ncols), |m| (m.nrows(), m.ncols()));
        PolyMat::new(nr, nc, coeffs)
    }

    /// Coefficient matrices divided by a scalar polynomial, which must divide every entry.
    pub fn div_exact_poly(&self, p: &Poly) -> Result<PolyMat> {
        let entries = self
            .support()
            .into_iter()
            .map(|(r, c)| Ok((r, c, self.entry(r, c).div_exact(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMat::from_entries(self.nrows, self.ncols, entries))
    }

    /// Monic gcd of `p` with all entries.
    pub fn content_gcd(&self, p: &Poly) -> Poly {
        let mut g = p.monic();
        for (r, c) in self.support() {
            if g.is_constant() {
                break;
            }
            g = g.gcd(&self.entry(r, c));
        }
        g
    }
}

/// Matrix of rational functions stored as `num(u)/den(u)` with one monic common denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RfMatrix {
    num: PolyMat,
    den: Poly,
}

impl RfMatrix {
    pub fn new(num: PolyMat, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = den.leading();
        let inv = lc.recip()?;
        Ok(RfMatrix { num: num.scale(&inv), den: den.monic() })
    }

    pub fn from_polymat(num: PolyMat) -> Self {
        RfMatrix { num, den: Poly::one() }
    }

    pub fn constant(m: QMat) -> Self {
        RfMatrix::from_polymat(PolyMat::constant(m))
    }

    pub fn identity(n: usize) -> Self {
        RfMatrix::constant(QMat::identity(n))
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RfMatrix::from_polymat(PolyMat::zeros(nrows, ncols))
    }

    /// `f(u)·M` for a constant matrix `M`.
    pub fn scalar_times(f: &RationalFunction, m: &QMat) -> Self {
        RfMatrix { num: PolyMat::from_poly_times(f.num(), m), den: f.den().clone() }
    }

    /// Builds from entrywise rational functions; the denominator is the lcm of the entry denominators.
    pub fn from_entries(nrows: usize, ncols: usize, entries: &[(usize, usize, RationalFunction)]) -> Self {
        let den = entries.iter().fold(Poly::one(), |acc, (_, _, f)| acc.lcm(f.den()));
        let polys = entries.iter().map(|(r, c, f)| {
            let k = den.div_exact(f.den()).expect("lcm is divisible");
            (*r, *c, f.num() * &k)
        });
        RfMatrix { num: PolyMat::from_entries(nrows, ncols, polys), den }
    }

    pub fn from_dense(d: &[Vec<RationalFunction>]) -> Self {
        let nrows = d.len();
        let ncols = d.first().map_or(0, |r| r.len());
        let entries: Vec<_> = d
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(|(_, f)| !f.is_zero()).map(move |(c, f)| (r, c, f.clone())))
            .collect();
        RfMatrix::from_entries(nrows, ncols, &entries)
    }

    pub fn to_dense(&self) -> Vec<Vec<RationalFunction>> {
        (0..self.nrows()).map(|r| (0..self.ncols()).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn num(&self) -> &PolyMat {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nrows(&self) -> usize {
        self.num.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.num.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn entry(&self, r: usize, c: usize) -> RationalFunction {
        RationalFunction::new(self.num.entry(r, c), self.den.clone()).expect("nonzero denominator")
    }

    /// Nonzero entries in canonical form.
    pub fn entries(&self) -> Vec<(usize, usize, RationalFunction)> {
        self.num.support().into_iter().map(|(r, c)| (r, c, self.entry(r, c))).collect()
    }

    /// Value at `x`, or `None` at a root of the denominator.
    pub fn eval(&self, x: &Rational) -> Option<QMat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).scale(&d.recip().ok()?))
    }

    /// Cancels common factors of the denominator and all numerator entries.
    pub fn reduced(&self) -> RfMatrix {
        let g = self.num.content_gcd(&self.den);
        if g.is_constant() {
            return self.clone();
        }
        if self.num.is_zero() {
            return RfMatrix::zeros(self.nrows(), self.ncols());
        }
        RfMatrix {
            num: self.num.div_exact_poly(&g).expect("gcd divides"),
            den: self.den.div_exact(&g).expect("gcd divides"),
        }
    }

    fn over_common(&self, o: &RfMatrix) -> (PolyMat, PolyMat, Poly) {
        if self.den == o.den {
            return (self.num.clone(), o.num.clone(), self.den.clone());
        }
        let l = self.den.lcm(&o.den);
        let a = self.num.mul_poly(&l.div_exact(&self.den).expect("lcm"));
        let b = o.num.mul_poly(&l.div_exact(&o.den).expect("lcm"));
        (a, b, l)
    }

    pub fn add(&self, o: &RfMatrix) -> RfMatrix {
        let (a, b, l) = self.over_common(o);
        RfMatrix { num: a.add(&b), den: l }
    }

    pub fn sub(&self, o: &RfMatrix) -> RfMatrix {
        let (a, b, l) = self.over_common(o);
        RfMatrix { num: a.sub(&b), den: l }
    }

    pub fn neg(&self) -> RfMatrix {
        RfMatrix { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> RfMatrix {
        RfMatrix { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn scale_rf(&self, f: &RationalFunction) -> RfMatrix {
        RfMatrix { num: self.num.mul_poly(f.num()), den: &self.den * f.den() }.reduced()
    }

    pub fn mul(&self, o: &RfMatrix) -> RfMatrix {
        RfMatrix { num: self.num.mul(&o.num), den: &self.den * &o.den }
    }

    pub fn kron(&self, o: &RfMatrix) -> RfMatrix {
        RfMatrix { num: self.num.kron(&o.num), den: &self.den * &o.den }
    }

    pub fn transpose(&self) -> RfMatrix {
        RfMatrix { num: self.num.transpose(), den: self.den.clone() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QMat) -> QMat) -> RfMatrix {
        RfMatrix { num: self.num.map_coeffs(f), den: self.den.clone() }
    }

    /// `M(scale·u + c)`.
    pub fn compose_affine(&self, scale: &Rational, c: &Rational) -> RfMatrix {
        RfMatrix::new(self.num.compose_affine(scale, c), self.den.compose_affine(scale, c)).expect("nonzero scale")
    }

    /// `M(u - a)`.
    pub fn shift(&self, a: &Rational) -> RfMatrix {
        self.compose_affine(&Rational::one(), &-a)
    }

    /// Exact equality as matrices of rational functions.
    pub fn equals(&self, o: &RfMatrix) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul_poly(&o.den) == o.num.mul_poly(&self.den)
    }

    /// Whether every entry has degree of numerator at most degree of denominator.
    pub fn is_proper(&self) -> bool {
        self.num.is_zero() || self.num.coeffs().len() <= self.den.deg0() + 1
    }

    /// Expansion coefficients `M^{(0)}, ..., M^{(order)}` of `M(u) = Σ M^{(r)} u^{-r}` at infinity.
    pub fn series(&self, order: usize) -> Result<Vec<QMat>> {
        if !self.is_proper() {
            return Err(Error::Precondition("improper matrix has no expansion in u^-1".into()));
        }
        let d = self.den.deg0();
        // 1/den = Σ_j e_j u^{-d-j}
        let e = series_of(&Poly::one(), &self.den, order + d);
        let e: Vec<Rational> = e.into_iter().skip(d).collect();
        let mut out = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = QMat::zeros(self.nrows(), self.ncols());
            for (k, nk) in self.num.coeffs().iter().enumerate() {
                // term u^{k-d-j} = u^{-m}  ⇔  j = m + k - d
                if m + k < d {
                    continue;
                }
                let j = m + k - d;
                if j < e.len() {
                    acc.axpy(&e[j], nk);
                }
            }
            out.push(acc);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn series_of_resolvent() {
        // 1/(u-1) on a 1×1 matrix
        let m = RfMatrix::from_entries(1, 1, &[(0, 0, RationalFunction::pole(&qi(1)))]);
        let s = m.series(3).unwrap();
        let v: Vec<Rational> = s.iter().map(|x| x.get(0, 0)).collect();
        assert_eq!(v, vec![qi(0), qi(1), qi(1), qi(1)]);
    }

    #[test]
    fn affine_substitution() {
        let m = RfMatrix::from_entries(1, 1, &[(0, 0, RationalFunction::pole(&qi(0)))]);
        let h = m.compose_affine(&q(1, 2), &qi(0));
        assert_eq!(h.entry(0, 0), RationalFunction::pole(&qi(0)).scale(&qi(2)));
    }

    #[test]
    fn equality_across_denominators() {
        let f = RationalFunction::pole(&qi(2));
        let a = RfMatrix::scalar_times(&f, &QMat::identity(2));
        let b = RfMatrix::new(a.num().mul_poly(&Poly::from_ints(&[1, 1])), a.den() * &Poly::from_ints(&[1, 1])).unwrap();
        assert!(a.equals(&b));
        assert_eq!(b.reduced(), a);
    }
}
