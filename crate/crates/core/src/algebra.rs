//! The three classical series: index sets, θ, κ, the generators F_ij, the operators P and Q,
//! the R-matrices R(u) and R°(u), and the Yang–Baxter equation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::report::CheckOutcome;
use crate::linalg::{
    fits_i128, prove_identity_grid, GridSpec, LegOperator, PolyMat, ProofReport, QMat, RfMatrix, Scalar, SpaceIndex,
    SparseMat, TransposeKind,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    /// o_{2n+1}
    B,
    /// sp_{2n}
    C,
    /// o_{2n}
    D,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// One of o_{2n+1}, sp_{2n}, o_{2n}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraKind {
    pub family: Family,
    pub n: usize,
}

impl AlgebraKind {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if n < min {
            return Err(Error::Precondition(format!("rank {n} too small for family {family:?}")));
        }
        Ok(AlgebraKind { family, n })
    }

    pub fn b(n: usize) -> Self {
        AlgebraKind::new(Family::B, n).expect("valid rank")
    }

    pub fn c(n: usize) -> Self {
        AlgebraKind::new(Family::C, n).expect("valid rank")
    }

    pub fn d(n: usize) -> Self {
        AlgebraKind::new(Family::D, n).expect("valid rank")
    }

    /// Kind whose defining representation has dimension `n_dim` (`"o5"`, `"sp4"` style names also parse).
    pub fn from_name(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown algebra {name:?}"));
        if let Some(r) = name.strip_prefix("sp") {
            let m: usize = r.parse().map_err(|_| bad())?;
            if m % 2 != 0 {
                return Err(bad());
            }
            return AlgebraKind::new(Family::C, m / 2);
        }
        if let Some(r) = name.strip_prefix('o') {
            let m: usize = r.parse().map_err(|_| bad())?;
            return if m % 2 == 1 { AlgebraKind::new(Family::B, m / 2) } else { AlgebraKind::new(Family::D, m / 2) };
        }
        Err(bad())
    }

    pub fn is_symplectic(&self) -> bool {
        self.family == Family::C
    }

    pub fn has_zero(&self) -> bool {
        self.family == Family::B
    }

    /// Dimension N of the vector representation.
    pub fn dim(&self) -> usize {
        if self.has_zero() {
            2 * self.n + 1
        } else {
            2 * self.n
        }
    }

    /// `+1` for orthogonal, `-1` for symplectic (the upper/lower sign of `±`).
    pub fn sign(&self) -> i64 {
        if self.is_symplectic() {
            -1
        } else {
            1
        }
    }

    /// κ = N/2 ∓ 1.
    pub fn kappa(&self) -> Rational {
        Rational::new(self.dim() as i64, 2) - Rational::from_int(self.sign())
    }

    pub fn index(&self) -> SpaceIndex {
        SpaceIndex::symmetric(self.n, self.has_zero())
    }

    /// Labels `-n..n` in order.
    pub fn labels(&self) -> Vec<i32> {
        self.index().labels().to_vec()
    }

    pub fn pos(&self, i: i32) -> Result<usize> {
        self.index().pos(i)
    }

    pub fn theta(&self, i: i32, j: i32) -> Result<i64> {
        self.pos(i)?;
        self.pos(j)?;
        Ok(theta_unchecked(self.is_symplectic(), i, j))
    }

    pub fn transpose_kind(&self) -> TransposeKind {
        TransposeKind::Theta { symplectic: self.is_symplectic() }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::C => format!("sp{}", self.dim()),
            _ => format!("o{}", self.dim()),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn theta_unchecked(symplectic: bool, i: i32, j: i32) -> i64 {
    if symplectic {
        (i.signum() * j.signum()) as i64
    } else {
        1
    }
}

/// θ_ij.
pub fn theta(kind: &AlgebraKind, i: i32, j: i32) -> Result<i64> {
    kind.theta(i, j)
}

fn flip_matrix(d: usize) -> QMat {
    QMat::from_triplets(d * d, d * d, (0..d).flat_map(|i| (0..d).map(move |j| (i * d + j, j * d + i, Rational::one()))))
}

fn q_matrix(kind: &AlgebraKind) -> QMat {
    let idx = kind.index();
    let d = idx.dim();
    let mut trip = Vec::new();
    for &i in idx.labels() {
        for &j in idx.labels() {
            let th = theta_unchecked(kind.is_symplectic(), i, j);
            let r = idx.pos(i).unwrap() * d + idx.pos(-i).unwrap();
            let c = idx.pos(j).unwrap() * d + idx.pos(-j).unwrap();
            trip.push((r, c, Rational::from_int(th)));
        }
    }
    QMat::from_triplets(d * d, d * d, trip)
}

/// Permutation operator P on ℂᴺ⊗ℂᴺ.
pub fn build_p(kind: &AlgebraKind) -> LegOperator {
    let idx = kind.index();
    LegOperator::constant(vec![idx.clone(), idx.clone()], flip_matrix(idx.dim())).expect("shape")
}

/// Q = P^{t₁}.
pub fn build_q(kind: &AlgebraKind) -> LegOperator {
    let idx = kind.index();
    LegOperator::constant(vec![idx.clone(), idx], q_matrix(kind)).expect("shape")
}

/// Permutation operator on ℂᴺ⊗ℂᴺ with indices 1..N.
pub fn build_p_gl(n: usize) -> LegOperator {
    let idx = SpaceIndex::range(n);
    LegOperator::constant(vec![idx.clone(), idx], flip_matrix(n)).expect("shape")
}

/// `1 − P/u + c·Q/(u − κ')` with explicit κ' and Q-coefficient `c`.
pub fn r_matrix_with(kind: &AlgebraKind, kappa: &Rational, q_coeff: &Rational) -> LegOperator {
    let idx = kind.index();
    let d = idx.dim();
    let one = QMat::identity(d * d);
    let p = flip_matrix(d);
    let q = q_matrix(kind);
    // numerator over u(u−κ): u(u−κ)·1 − (u−κ)·P + c·u·Q
    let u = Poly::x();
    let u_k = Poly::linear_root(kappa);
    let num = PolyMat::from_poly_times(&(&u * &u_k), &one)
        .sub(&PolyMat::from_poly_times(&u_k, &p))
        .add(&PolyMat::from_poly_times(&u.scale(q_coeff), &q));
    let mat = RfMatrix::new(num, &u * &u_k).expect("nonzero denominator");
    LegOperator::new(vec![idx.clone(), idx], mat).expect("shape")
}

/// R(u) = 1 − P/u + Q/(u − κ).
pub fn r_matrix(kind: &AlgebraKind) -> LegOperator {
    r_matrix_with(kind, &kind.kappa(), &Rational::one())
}

/// R°(u) = 1 − P/u for gl_N.
pub fn r_matrix_gl(n: usize) -> LegOperator {
    let idx = SpaceIndex::range(n);
    let d = n * n;
    let num = PolyMat::from_poly_times(&Poly::x(), &QMat::identity(d)).sub(&PolyMat::constant(flip_matrix(n)));
    let mat = RfMatrix::new(num, Poly::x()).expect("nonzero denominator");
    LegOperator::new(vec![idx.clone(), idx], mat).expect("shape")
}

fn embed13<T: Scalar>(a: &SparseMat<T>, n: usize) -> SparseMat<T> {
    let d = n * n * n;
    let mut trip = Vec::with_capacity(a.nnz() * n);
    for (r, c, v) in a.iter() {
        let (i, j) = (r / n, r % n);
        let (k, l) = (c / n, c % n);
        for x in 0..n {
            trip.push(((i * n + x) * n + j, (k * n + x) * n + l, v.clone()));
        }
    }
    SparseMat::from_triplets(d, d, trip)
}

fn ybe_holds<T: Scalar>(a: &SparseMat<T>, b: &SparseMat<T>, c: &SparseMat<T>, n: usize) -> bool {
    let id = SparseMat::<T>::identity(n);
    let r12 = a.kron(&id);
    let r13 = embed13(b, n);
    let r23 = id.kron(c);
    r12.matmul(&r13).matmul(&r23) == r23.matmul(&r13).matmul(&r12)
}

/// Proves `R₁₂(u)R₁₃(u+v)R₂₃(v) = R₂₃(v)R₁₃(u+v)R₁₂(u)` for an R-matrix on ℂᴺ⊗ℂᴺ.
///
/// With `R(u) = M(u)/d(u)` the identity is equivalent to the same identity for the numerator
/// `M`, a polynomial of degree `2·deg M` in each of `u` and `v`.
pub fn check_ybe(r: &LegOperator, name: &str) -> ProofReport {
    let n = r.legs()[0].dim();
    let mat = r.matrix();
    let num = mat.num();
    let deg = num.degree();
    let mut spec = GridSpec::new(2 * deg, 2 * deg);
    let roots = mat.den().rational_roots().unwrap_or_default();
    spec.bad_u = roots.clone();
    spec.bad_v = roots.clone();
    spec.bad_sum = roots;
    prove_identity_grid(name, &spec, |u, v| {
        let s = u + v;
        let mats = [num.eval(u), num.eval(&s), num.eval(v)];
        let (ints, _) = QMat::integerize(&[&mats[0], &mats[1], &mats[2]]);
        let nnz = ints.iter().map(|m| m.max_row_nnz().max(1) as u64).max().unwrap_or(1);
        let bound: u64 = ints.iter().map(|m| m.max_abs().bits()).sum::<u64>() + 2 * (64 - nnz.leading_zeros() as u64) + 1;
        let ok = if fits_i128(bound) {
            let small: Vec<SparseMat<i128>> = ints.iter().map(|m| m.to_i128().expect("bounded")).collect();
            ybe_holds(&small[0], &small[1], &small[2], n)
        } else {
            ybe_holds(&ints[0], &ints[1], &ints[2], n)
        };
        (!ok).then(|| "both sides differ".to_string())
    })
}

/// `P² = 1`, `PQ = QP = ±Q`, `Q² = NQ` and `R(u)R(−u) = (1 − u⁻²)·1`, exactly.
pub fn operator_identities(kind: &AlgebraKind) -> Vec<CheckOutcome> {
    let d = kind.dim();
    let p = build_p(kind);
    let q = build_q(kind);
    let id = LegOperator::identity(p.legs().to_vec());
    let signed_q = q.scale(&Rational::from_int(kind.sign()));
    let pq = p.mul(&q).expect("same legs");
    let qp = q.mul(&p).expect("same legs");
    let q2 = q.mul(&q).expect("same legs");
    let r = r_matrix(kind);
    let r_neg = r.map_matrix(|m| m.compose_affine(&-Rational::one(), &Rational::zero()));
    let rr = r.mul(&r_neg).expect("same legs");
    let unitarity = RationalFunction::from_roots(&[Rational::one(), -Rational::one()], &[Rational::zero(), Rational::zero()]);
    let want = id.map_matrix(|m| m.scale_rf(&unitarity));
    let tag = kind.name();
    vec![
        CheckOutcome::from_bool(format!("P^2 = 1 ({tag})"), p.mul(&p).expect("same legs").equals(&id), || "P^2 differs from 1".into()),
        CheckOutcome::from_bool(format!("PQ = QP = ±Q ({tag})"), pq.equals(&signed_q) && qp.equals(&signed_q), || {
            "PQ or QP differs from ±Q".into()
        }),
        CheckOutcome::from_bool(format!("Q^2 = NQ ({tag})"), q2.equals(&q.scale(&Rational::from_int(d as i64))), || {
            "Q^2 differs from NQ".into()
        }),
        CheckOutcome::from_bool(format!("R(u)R(-u) = 1 - 1/u^2 ({tag})"), rr.equals(&want), || "unitarity fails".into()),
    ]
}

/// The generators F_ij in the vector representation.
#[derive(Clone, Debug)]
pub struct LieGenerators {
    pub kind: AlgebraKind,
    mats: Vec<QMat>,
}

impl LieGenerators {
    /// Builds from a function giving the matrix of F_ij.
    pub fn from_fn(kind: AlgebraKind, f: impl Fn(i32, i32) -> QMat) -> Self {
        let labels = kind.labels();
        let mats = labels.iter().flat_map(|&i| labels.iter().map(move |&j| (i, j))).map(|(i, j)| f(i, j)).collect();
        LieGenerators { kind, mats }
    }

    pub fn get(&self, i: i32, j: i32) -> &QMat {
        let n = self.kind.dim();
        &self.mats[self.kind.pos(i).expect("label") * n + self.kind.pos(j).expect("label")]
    }

    pub fn module_dim(&self) -> usize {
        self.mats.first().map_or(0, |m| m.nrows())
    }

    /// F_ij + θ_ij F_{−j,−i} = 0 for all i, j.
    pub fn check_fsym(&self) -> bool {
        let labels = self.kind.labels();
        labels.iter().all(|&i| {
            labels.iter().all(|&j| {
                let th = Rational::from_int(theta_unchecked(self.kind.is_symplectic(), i, j));
                self.get(i, j).add(&self.get(-j, -i).scale(&th)).is_zero()
            })
        })
    }

    /// The commutation relations of the F_ij for every quadruple of indices.
    pub fn check_comrel(&self) -> bool {
        let labels = self.kind.labels();
        let d = self.module_dim();
        let sp = self.kind.is_symplectic();
        for &i in &labels {
            for &j in &labels {
                let th = Rational::from_int(theta_unchecked(sp, i, j));
                for &k in &labels {
                    for &l in &labels {
                        let lhs = self.get(i, j).matmul(self.get(k, l)).sub(&self.get(k, l).matmul(self.get(i, j)));
                        let mut rhs = QMat::zeros(d, d);
                        if k == j {
                            rhs = rhs.add(self.get(i, l));
                        }
                        if i == l {
                            rhs = rhs.sub(self.get(k, j));
                        }
                        if k == -i {
                            rhs = rhs.sub(&self.get(-j, l).scale(&th));
                        }
                        if l == -j {
                            rhs = rhs.add(&self.get(k, -i).scale(&th));
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The matrices F_11, ..., F_nn.
    pub fn cartan(&self) -> Vec<QMat> {
        (1..=self.kind.n as i32).map(|i| self.get(i, i).clone()).collect()
    }
}

/// F_ij = E_ij − θ_ij E_{−j,−i} on ℂᴺ.
pub fn lie_generators(kind: &AlgebraKind) -> LieGenerators {
    let idx = kind.index();
    let d = idx.dim();
    LieGenerators::from_fn(*kind, |i, j| {
        let th = theta_unchecked(kind.is_symplectic(), i, j);
        QMat::from_triplets(
            d,
            d,
            [
                (idx.pos(i).unwrap(), idx.pos(j).unwrap(), Rational::one()),
                (idx.pos(-j).unwrap(), idx.pos(-i).unwrap(), Rational::from_int(-th)),
            ],
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn kappa_values() {
        assert_eq!(AlgebraKind::b(2).kappa(), q(3, 2));
        assert_eq!(AlgebraKind::c(2).kappa(), qi(3));
        assert_eq!(AlgebraKind::d(3).kappa(), qi(2));
        assert!(AlgebraKind::new(Family::D, 1).is_err());
    }

    #[test]
    fn theta_table() {
        let sp4 = AlgebraKind::c(2);
        assert_eq!(sp4.theta(1, -2).unwrap(), -1);
        assert_eq!(sp4.theta(-1, -2).unwrap(), 1);
        assert_eq!(AlgebraKind::b(1).theta(1, -1).unwrap(), 1);
        assert!(sp4.theta(0, 1).is_err());
    }

    #[test]
    fn sp2_r_matrix_factorizes() {
        // R(u) = (u−1)/(u−2)·(1 − 2P/u)
        let k = AlgebraKind::c(1);
        let r = r_matrix(&k);
        let p = build_p(&k).matrix().eval(&qi(0)).unwrap();
        let f = RationalFunction::new(Poly::from_ints(&[-1, 1]), Poly::from_ints(&[-2, 1])).unwrap();
        let inner = RfMatrix::identity(4).sub(&RfMatrix::scalar_times(&RationalFunction::pole(&qi(0)).scale(&qi(2)), &p));
        assert!(r.matrix().equals(&inner.scale_rf(&f)));
    }

    #[test]
    fn operator_algebra() {
        for k in [AlgebraKind::b(1), AlgebraKind::c(1), AlgebraKind::d(2), AlgebraKind::c(2)] {
            assert!(crate::report::all_passed(&operator_identities(&k)), "{k}");
        }
    }

    #[test]
    fn f_sp2() {
        let g = lie_generators(&AlgebraKind::c(1));
        assert_eq!(g.get(1, -1).get(1, 0), qi(2));
        assert!(g.check_fsym());
        assert!(g.check_comrel());
        assert!(lie_generators(&AlgebraKind::b(1)).get(0, 0).is_zero());
    }
}
