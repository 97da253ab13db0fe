use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Rational function `num/den` in canonical form: `den` monic, `gcd(num, den) = 1`,
/// zero stored as `0/1`. Structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RfRepr", into = "RfRepr")]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Serialize, Deserialize)]
struct RfRepr {
    num: Poly,
    den: Poly,
}

impl TryFrom<RfRepr> for RationalFunction {
    type Error = Error;
    fn try_from(r: RfRepr) -> Result<Self> {
        RationalFunction::new(r.num, r.den)
    }
}

impl From<RationalFunction> for RfRepr {
    fn from(f: RationalFunction) -> Self {
        RfRepr { num: f.num, den: f.den }
    }
}

/// Limit at `u → ∞` of a rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueAtInfinity {
    Finite(Rational),
    Divergent,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let l = den.leading();
        if !l.is_one() {
            let inv = l.recip().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// `1/(u - r)`.
    pub fn pole(r: &Rational) -> Self {
        RationalFunction { num: Poly::one(), den: Poly::linear_root(r) }
    }

    /// `∏(u - a)/∏(u - b)` from root lists.
    pub fn from_roots(num_roots: &[Rational], den_roots: &[Rational]) -> Self {
        Self::normalize(Poly::from_roots(num_roots), Poly::from_roots(den_roots))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_proper(&self) -> bool {
        self.num.deg0() <= self.den.deg0()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `f(scale·u + c)`.
    pub fn shift(&self, c: &Rational, scale: &Rational) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::Precondition("substitution scale must be nonzero".into()));
        }
        Ok(Self::normalize(
            self.num.compose_affine(scale, c),
            self.den.compose_affine(scale, c),
        ))
    }

    /// `f(u + c)`.
    pub fn shifted(&self, c: &Rational) -> Self {
        self.shift(c, &Rational::one()).expect("unit scale")
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn value_at_infinity(&self) -> ValueAtInfinity {
        let dn = self.num.deg0();
        let dd = self.den.deg0();
        if self.num.is_zero() || dn < dd {
            ValueAtInfinity::Finite(Rational::zero())
        } else if dn == dd {
            ValueAtInfinity::Finite(self.num.leading() / self.den.leading())
        } else {
            ValueAtInfinity::Divergent
        }
    }

    /// Coefficients `c_0..=c_order` of the expansion `Σ c_k u^{-k}` at infinity.
    pub fn series_coefficients(&self, order: usize) -> Result<Vec<Rational>> {
        if !self.is_proper() {
            return Err(Error::Precondition(format!("{self} is not proper")));
        }
        Ok(series_of(&self.num, &self.den, order))
    }

    /// Poles of the function if its denominator splits over ℚ.
    pub fn poles(&self) -> Option<Vec<Rational>> {
        self.den.rational_roots()
    }

    /// Reconstructs a proper rational function of denominator degree at most `max_den_degree`
    /// from its expansion at infinity. Needs `2·max_den_degree + 1` coefficients.
    pub fn from_series(coeffs: &[Rational], max_den_degree: usize) -> Result<Self> {
        if coeffs.len() < 2 * max_den_degree + 1 {
            return Err(Error::Precondition(format!(
                "need {} coefficients, got {}",
                2 * max_den_degree + 1,
                coeffs.len()
            )));
        }
        for d in 0..=max_den_degree {
            if let Some(f) = try_pade(coeffs, d) {
                return Ok(f);
            }
        }
        Err(Error::Inexact("series is not that of a rational function of the given degree".into()))
    }
}

/// Expansion coefficients of `num/den` at infinity (`num` proper relative to `den`).
pub(crate) fn series_of(num: &Poly, den: &Poly, order: usize) -> Vec<Rational> {
    let d = den.deg0();
    let lead_inv = den.leading().recip().expect("nonzero denominator");
    let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut v = if m <= d { num.coeff(d - m) } else { Rational::zero() };
        for (k, ck) in c.iter().enumerate() {
            // coefficient b_{d-m+k}, present only when d-m+k >= 0
            if d + k >= m {
                let b = den.coeff(d + k - m);
                if !b.is_zero() {
                    v -= &b * ck;
                }
            }
        }
        c.push(v * &lead_inv);
    }
    c
}

fn try_pade(c: &[Rational], d: usize) -> Option<RationalFunction> {
    // unknowns b_0..b_{d-1}, b_d = 1; equations for m = d+1..=2d:
    // sum_{k=m-d}^{m} b_{d-m+k} c_k = 0
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in d + 1..=2 * d {
        let mut row = vec![Rational::zero(); d + 1];
        for k in m - d..=m {
            let idx = d + k - m;
            if idx < d {
                row[idx] += &c[k];
            } else {
                row[d] -= &c[k];
            }
        }
        rows.push(row);
    }
    let b = solve_square(rows, d)?;
    let mut den = b;
    den.push(Rational::one());
    let den = Poly::new(den);
    // numerator coefficients a_{d-m} = sum_{k=0}^{m} b_{d-m+k} c_k for m = 0..=d
    let mut a = vec![Rational::zero(); d + 1];
    for m in 0..=d {
        let mut v = Rational::zero();
        for (k, ck) in c.iter().enumerate().take(m + 1) {
            v += den.coeff(d - m + k) * ck;
        }
        a[d - m] = v;
    }
    let f = RationalFunction::new(Poly::new(a), den).ok()?;
    let check = f.series_coefficients(c.len() - 1).ok()?;
    (check == c).then_some(f)
}

/// Solves an `n × n` system given as augmented rows; `None` if singular.
fn solve_square(mut rows: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, piv);
        let inv = rows[col][col].recip().ok()?;
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for k in col..=n {
                    let t = &f * &rows[col][k];
                    rows[r][k] -= t;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rf[{self}]")
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.recip()?)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_rf_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}

owned_rf_ops!(Add, add);
owned_rf_ops!(Sub, sub);
owned_rf_ops!(Mul, mul);

/// Binary operation selector for [`rf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(a: &RationalFunction, b: &RationalFunction, op: RfOp) -> Result<RationalFunction> {
    Ok(match op {
        RfOp::Add => a + b,
        RfOp::Sub => a - b,
        RfOp::Mul => a * b,
        RfOp::Div => (a / b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    fn u_inv() -> RationalFunction {
        RationalFunction::pole(&qi(0))
    }

    #[test]
    fn like_terms() {
        let s = &u_inv() + &u_inv();
        assert_eq!(s, u_inv().scale(&qi(2)));
    }

    #[test]
    fn difference_of_squares() {
        let one = RationalFunction::one();
        let p = &(&one - &u_inv()) * &(&one + &u_inv());
        let expect = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn self_division() {
        let f = RationalFunction::from_roots(&[qi(1)], &[qi(2)]);
        assert!((&f / &f).unwrap().is_one());
        assert!((&f / &RationalFunction::zero()).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(u_inv().shift(&qi(-1), &qi(1)).unwrap(), RationalFunction::pole(&qi(1)));
        assert_eq!(u_inv().shift(&qi(0), &q(1, 2)).unwrap(), u_inv().scale(&qi(2)));
        let f = RationalFunction::from_roots(&[qi(1)], &[qi(2)]);
        let g = f.shift(&q(1, 2), &qi(1)).unwrap();
        assert_eq!(g, RationalFunction::from_roots(&[q(1, 2)], &[q(3, 2)]));
    }

    #[test]
    fn infinity_values() {
        let f = RationalFunction::from_roots(&[qi(-1)], &[qi(0)]);
        assert_eq!(f.value_at_infinity(), ValueAtInfinity::Finite(qi(1)));
        let g = u_inv().pow(2).unwrap();
        assert_eq!(g.value_at_infinity(), ValueAtInfinity::Finite(qi(0)));
        let h = RationalFunction::from_poly(Poly::x());
        assert_eq!(h.value_at_infinity(), ValueAtInfinity::Divergent);
    }

    #[test]
    fn series_examples() {
        let f = RationalFunction::pole(&qi(1));
        assert_eq!(f.series_coefficients(3).unwrap(), vec![qi(0), qi(1), qi(1), qi(1)]);
        let g = RationalFunction::from_roots(&[qi(-1)], &[qi(0)]);
        assert_eq!(g.series_coefficients(2).unwrap(), vec![qi(1), qi(1), qi(0)]);
        let h = &RationalFunction::one() - &RationalFunction::pole(&q(-1, 2)).pow(2).unwrap();
        assert_eq!(h.series_coefficients(3).unwrap(), vec![qi(1), qi(0), qi(-1), qi(1)]);
        assert!(RationalFunction::from_poly(Poly::x()).series_coefficients(2).is_err());
    }

    #[test]
    fn pade_round_trip() {
        let f = RationalFunction::from_roots(&[qi(3), q(1, 2)], &[qi(1), qi(-2)]);
        let c = f.series_coefficients(4).unwrap();
        assert_eq!(RationalFunction::from_series(&c, 2).unwrap(), f);
    }
}
