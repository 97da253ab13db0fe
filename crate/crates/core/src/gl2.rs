//! Y(gl₂): evaluation modules, the quantum determinant, highest vectors and Drinfeld polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::linalg::{kernel_stacked, PolyMat, QMat, QVec, RfMatrix};
use crate::yangian::{RepKind, TRep};

/// Parameters of the evaluation module L(α, β) pulled back through τ_shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gl2EvalParams {
    alpha: Rational,
    beta: Rational,
    shift: Rational,
}

impl Gl2EvalParams {
    pub fn new(alpha: Rational, beta: Rational, shift: Rational) -> Result<Self> {
        let diff = &alpha - &beta;
        if !diff.is_integer() || diff.is_negative() {
            return Err(Error::NotFinite(format!("alpha - beta = {diff} is not a nonnegative integer")));
        }
        Ok(Gl2EvalParams { alpha, beta, shift })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    /// α − β, the highest weight of the underlying sl₂-module.
    pub fn length(&self) -> usize {
        (&self.alpha - &self.beta).to_i64().expect("checked") as usize
    }
}

/// Matrices `E_11, E_12, E_21, E_22` of L(α, β) in the basis `(E_21)^r ζ`, `r = 0..α−β`.
pub fn gl2_matrices(alpha: &Rational, beta: &Rational) -> Result<[QMat; 4]> {
    let p = Gl2EvalParams::new(alpha.clone(), beta.clone(), Rational::zero())?;
    let m = p.length();
    let d = m + 1;
    let e11 = QMat::from_triplets(d, d, (0..d).map(|r| (r, r, alpha - Rational::from_int(r as i64))));
    let e22 = QMat::from_triplets(d, d, (0..d).map(|r| (r, r, beta + Rational::from_int(r as i64))));
    let e21 = QMat::from_triplets(d, d, (0..m).map(|r| (r + 1, r, Rational::one())));
    // E_12 (E_21)^r ζ = r(α−β−r+1) (E_21)^{r−1} ζ
    let e12 = QMat::from_triplets(d, d, (1..d).map(|r| (r - 1, r, Rational::from_int((r * (m + 1 - r)) as i64))));
    Ok([e11, e12, e21, e22])
}

/// The evaluation module: `T_ij(u) ↦ δ_ij + E_ij (u − shift)^{-1}`.
pub fn gl2_eval_module(p: &Gl2EvalParams) -> TRep {
    let [e11, e12, e21, e22] = gl2_matrices(&p.alpha, &p.beta).expect("validated parameters");
    let d = e11.nrows();
    let den = Poly::linear_root(&p.shift);
    let diag = |e: &QMat| PolyMat::from_poly_times(&den, &QMat::identity(d)).add(&PolyMat::constant(e.clone()));
    let num = vec![diag(&e11), PolyMat::constant(e12), PolyMat::constant(e21), diag(&e22)];
    TRep::new(RepKind::Gl(2), d, den, num).expect("evaluation module is normalized")
}

/// `D(u) = T_11(u)T_22(u−1) − T_21(u)T_12(u−1)`.
pub fn quantum_determinant(rep: &TRep) -> Result<RfMatrix> {
    if rep.kind() != RepKind::Gl(2) {
        return Err(Error::KindMismatch("quantum determinant needs a Y(gl2) module".into()));
    }
    let s = rep.shift(&Rational::one());
    let m = rep.t(1, 1).mul(&s.t(2, 2)).sub(&rep.t(2, 1).mul(&s.t(1, 2)));
    Ok(m.reduced())
}

/// A vector killed by all raising operators, with its weight when it is a common eigenvector.
#[derive(Clone, Debug)]
pub struct HighestVector {
    pub vector: QVec,
    /// `λ_i(u)` for every label in order, or `None` when the vector is not a common eigenvector of the `t_ii(u)`.
    pub weights: Option<Vec<RationalFunction>>,
}

/// Eigenvalue of an operator-valued function on a constant vector, if it is an eigenvector.
pub fn eigenvalue_on(m: &RfMatrix, v: &[Rational]) -> Option<RationalFunction> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let mut coeffs = Vec::new();
    for c in m.num().coeffs() {
        let w = c.matvec(v);
        let lam = &w[k] / &v[k];
        if w.iter().zip(v).any(|(a, b)| *a != &lam * b) {
            return None;
        }
        coeffs.push(lam);
    }
    Some(RationalFunction::new(Poly::new(coeffs), m.den().clone()).expect("nonzero"))
}

/// Basis of the common kernel of all `t_ij(u)`, `i < j`, with eigenvalues of the `t_ii(u)`.
pub fn highest_weight_vectors(rep: &TRep) -> Vec<HighestVector> {
    let labels = rep.kind().labels();
    let mut mats: Vec<&QMat> = Vec::new();
    for (a, &i) in labels.iter().enumerate() {
        for &j in &labels[a + 1..] {
            mats.extend(rep.num(i, j).coeffs().iter());
        }
    }
    let ker = if mats.is_empty() {
        (0..rep.dim()).map(|i| crate::linalg::unit_vec(rep.dim(), i)).collect()
    } else {
        kernel_stacked(rep.dim(), &mats)
    };
    ker.into_iter()
        .map(|v| {
            let weights = labels.iter().map(|&i| eigenvalue_on(&rep.t(i, i), &v)).collect::<Option<Vec<_>>>();
            HighestVector { vector: v, weights }
        })
        .collect()
}

/// Monic polynomials classifying a finite-dimensional irreducible module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldTuple {
    pub polys: Vec<Poly>,
}

impl DrinfeldTuple {
    pub fn new(polys: Vec<Poly>) -> Result<Self> {
        if polys.iter().any(|p| !p.is_monic()) {
            return Err(Error::Precondition("Drinfeld polynomials must be monic".into()));
        }
        Ok(DrinfeldTuple { polys })
    }

    /// Entrywise product.
    pub fn product(&self, o: &DrinfeldTuple) -> Result<DrinfeldTuple> {
        if self.polys.len() != o.polys.len() {
            return Err(Error::Shape("tuples of different length".into()));
        }
        Ok(DrinfeldTuple { polys: self.polys.iter().zip(&o.polys).map(|(a, b)| a * b).collect() })
    }
}

/// `P(u) = ∏_i (u+β_i)(u+β_i+1)···(u+α_i−1)`.
pub fn drinfeld_from_pairs(alphas: &[Rational], betas: &[Rational]) -> Result<DrinfeldTuple> {
    if alphas.len() != betas.len() {
        return Err(Error::Shape("alphas and betas differ in length".into()));
    }
    let mut p = Poly::one();
    for (a, b) in alphas.iter().zip(betas) {
        let diff = a - b;
        if !diff.is_integer() || diff.is_negative() {
            return Err(Error::NotFinite(format!("alpha - beta = {diff} is not a nonnegative integer")));
        }
        let m = diff.to_i64().expect("integer");
        for k in 0..m {
            p = &p * &Poly::linear_root(&-(b + Rational::from_int(k)));
        }
    }
    DrinfeldTuple::new(vec![p])
}

/// `μ₁(u)/μ₂(u) = P(u+step)/P(u)` exactly.
pub fn drinfeld_ratio_check(mu1: &RationalFunction, mu2: &RationalFunction, p: &Poly, step: &Rational) -> bool {
    if !p.is_monic() || mu2.is_zero() {
        return false;
    }
    let lhs = (mu1 / mu2).expect("nonzero");
    let rhs = RationalFunction::new(p.shift(step), p.clone()).expect("nonzero");
    lhs == rhs
}

/// Re-pairing of the parameters so that, at every position `i`, if some `α_p − β_q` with
/// `p, q ≥ i` is a nonnegative integer then `α_i − β_i` is the least such value.
/// Returns the chosen indices into `alphas` and `betas`; ties go to the smaller original index.
pub fn decomptp_order(alphas: &[Rational], betas: &[Rational]) -> Result<(Vec<usize>, Vec<usize>)> {
    if alphas.len() != betas.len() {
        return Err(Error::Shape("alphas and betas differ in length".into()));
    }
    let mut ra: Vec<usize> = (0..alphas.len()).collect();
    let mut rb: Vec<usize> = (0..betas.len()).collect();
    let (mut oa, mut ob) = (Vec::new(), Vec::new());
    while !ra.is_empty() {
        let mut best: Option<(Rational, usize, usize)> = None;
        for (x, &p) in ra.iter().enumerate() {
            for (y, &q) in rb.iter().enumerate() {
                let d = &alphas[p] - &betas[q];
                if d.is_integer() && !d.is_negative() && best.as_ref().map_or(true, |b| d < b.0) {
                    best = Some((d, x, y));
                }
            }
        }
        let (x, y) = best.map_or((0, 0), |b| (b.1, b.2));
        oa.push(ra.remove(x));
        ob.push(rb.remove(y));
    }
    Ok((oa, ob))
}

/// Whether the pairing satisfies the ordering condition.
pub fn satisfies_decomptp(alphas: &[Rational], betas: &[Rational]) -> bool {
    let k = alphas.len();
    (0..k).all(|i| {
        let mins = (i..k)
            .flat_map(|p| (i..k).map(move |q| (p, q)))
            .map(|(p, q)| &alphas[p] - &betas[q])
            .filter(|d| d.is_integer() && !d.is_negative())
            .min();
        match mins {
            None => true,
            Some(m) => alphas[i].clone() - &betas[i] == m,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn l10_module() {
        let r = gl2_eval_module(&Gl2EvalParams::new(qi(1), qi(0), qi(0)).unwrap());
        assert_eq!(r.dim(), 2);
        let hv = highest_weight_vectors(&r);
        assert_eq!(hv.len(), 1);
        let w = hv[0].weights.clone().unwrap();
        assert_eq!(w[0], RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::x()).unwrap());
        assert!(w[1].is_one());
    }

    #[test]
    fn ladder() {
        let [_, e12, e21, _] = gl2_matrices(&qi(2), &qi(0)).unwrap();
        let v = e12.matmul(&e21);
        assert_eq!(v.get(0, 0), qi(2));
    }

    #[test]
    fn drinfeld_examples() {
        assert_eq!(drinfeld_from_pairs(&[qi(1)], &[qi(0)]).unwrap().polys[0], Poly::x());
        assert_eq!(drinfeld_from_pairs(&[qi(2)], &[qi(0)]).unwrap().polys[0], Poly::from_ints(&[0, 1, 1]));
        assert!(drinfeld_from_pairs(&[qi(0)], &[qi(1)]).is_err());
    }

    #[test]
    fn ordering() {
        let (a, b) = decomptp_order(&[qi(2), qi(1)], &[qi(0), qi(0)]).unwrap();
        assert_eq!((a, b), (vec![1, 0], vec![0, 1]));
        let (a, _) = decomptp_order(&[qi(1)], &[qi(0)]).unwrap();
        assert_eq!(a, vec![0]);
    }
}
