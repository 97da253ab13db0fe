//! Concrete representations of X(a) and Y(gl_N): matrices `t_ij(u)` of rational functions,
//! the defining-relation prover, the central series z(u), coproduct tensor products and twists.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{theta_unchecked, AlgebraKind, LieGenerators};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::linalg::{
    fits_i128, kernel_q, prove_identity_grid, restrict_q, restrict_to_subspace, GridSpec, PolyMat, ProofReport, QMat,
    QVec, RfMatrix, Scalar, SpaceIndex, SparseMat,
};

/// The algebra a representation is defined over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    /// The extended Yangian X(a).
    X(AlgebraKind),
    /// The Yangian Y(gl_N).
    Gl(usize),
}

impl RepKind {
    pub fn index(&self) -> SpaceIndex {
        match self {
            RepKind::X(k) => k.index(),
            RepKind::Gl(n) => SpaceIndex::range(*n),
        }
    }

    pub fn labels(&self) -> Vec<i32> {
        self.index().labels().to_vec()
    }

    /// Size N of the matrix T(u).
    pub fn size(&self) -> usize {
        self.index().dim()
    }

    pub fn algebra(&self) -> Result<AlgebraKind> {
        match self {
            RepKind::X(k) => Ok(*k),
            RepKind::Gl(_) => Err(Error::KindMismatch("expected a representation of X(a)".into())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            RepKind::X(k) => format!("X({k})"),
            RepKind::Gl(n) => format!("Y(gl{n})"),
        }
    }
}

/// A representation: `t_ij(u) = num_ij(u)/den(u)` acting on a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRep {
    kind: RepKind,
    dim: usize,
    den: Poly,
    num: Vec<PolyMat>,
    verified: bool,
}

impl TRep {
    /// Builds from numerators over one monic common denominator, listed row-major over the labels.
    /// Every `t_ij(u)` must be proper with value `δ_ij` at infinity.
    pub fn new(kind: RepKind, dim: usize, den: Poly, num: Vec<PolyMat>) -> Result<Self> {
        let n = kind.size();
        if num.len() != n * n {
            return Err(Error::Shape(format!("expected {} matrices, got {}", n * n, num.len())));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = den.leading().recip()?;
        let num: Vec<PolyMat> = num.into_iter().map(|m| m.scale(&lc)).collect();
        let den = den.monic();
        let d = den.deg0();
        for (k, m) in num.iter().enumerate() {
            if (m.nrows(), m.ncols()) != (dim, dim) {
                return Err(Error::Shape(format!("matrix {k} is not {dim}x{dim}")));
            }
            if m.coeffs().len() > d + 1 {
                return Err(Error::Precondition("t_ij(u) must be proper".into()));
            }
            let expected = if k / n == k % n { QMat::identity(dim) } else { QMat::zeros(dim, dim) };
            if m.coeff(d) != expected {
                return Err(Error::Precondition("t_ij(u) must tend to δ_ij at infinity".into()));
            }
        }
        Ok(TRep { kind, dim, den, num, verified: false })
    }

    /// Builds from one rational-function matrix per `(i, j)` (row-major over the labels).
    pub fn from_matrices(kind: RepKind, dim: usize, mats: Vec<RfMatrix>) -> Result<Self> {
        let den = mats.iter().fold(Poly::one(), |acc, m| acc.lcm(m.den()));
        let num = mats
            .iter()
            .map(|m| m.num().mul_poly(&den.div_exact(m.den()).expect("lcm")))
            .collect();
        TRep::new(kind, dim, den, num)
    }

    /// Builds from a function `(i, j) ↦ t_ij(u)`.
    pub fn from_fn(kind: RepKind, dim: usize, f: impl Fn(i32, i32) -> RfMatrix) -> Result<Self> {
        let labels = kind.labels();
        let mats = labels.iter().flat_map(|&i| labels.iter().map(move |&j| (i, j))).map(|(i, j)| f(i, j)).collect();
        TRep::from_matrices(kind, dim, mats)
    }

    /// The counit: `t_ij(u) ↦ δ_ij` on a space of dimension `dim`.
    pub fn trivial(kind: RepKind, dim: usize) -> Self {
        let n = kind.size();
        let num = (0..n * n)
            .map(|k| if k / n == k % n { PolyMat::identity(dim) } else { PolyMat::zeros(dim, dim) })
            .collect();
        TRep { kind, dim, den: Poly::one(), num, verified: false }
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    fn slot(&self, i: i32, j: i32) -> usize {
        let idx = self.kind.index();
        idx.pos(i).expect("label") * idx.dim() + idx.pos(j).expect("label")
    }

    pub fn num(&self, i: i32, j: i32) -> &PolyMat {
        &self.num[self.slot(i, j)]
    }

    pub fn nums(&self) -> &[PolyMat] {
        &self.num
    }

    /// The matrix of `t_ij(u)`.
    pub fn t(&self, i: i32, j: i32) -> RfMatrix {
        RfMatrix::new(self.num(i, j).clone(), self.den.clone()).expect("monic denominator")
    }

    /// Maximal numerator degree.
    pub fn num_degree(&self) -> usize {
        self.num.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Series coefficient matrices `t_ij^{(r)}` for `r = 0..=order`.
    pub fn series(&self, i: i32, j: i32, order: usize) -> Vec<QMat> {
        self.t(i, j).series(order).expect("proper by construction")
    }

    /// `t_ij^{(r)}`.
    pub fn coeff(&self, i: i32, j: i32, r: usize) -> QMat {
        self.series(i, j, r).pop().expect("nonempty")
    }

    /// All numerator coefficient matrices; their span equals the span of all series coefficients.
    pub fn generator_matrices(&self) -> Vec<&QMat> {
        self.num.iter().flat_map(|m| m.coeffs().iter()).collect()
    }

    /// Coproduct: `t_ij(u) ↦ Σ_a t_ia(u) ⊗ t_aj(u)`.
    pub fn tensor(&self, o: &TRep) -> Result<TRep> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch(format!("{} vs {}", self.kind.name(), o.kind.name())));
        }
        let labels = self.kind.labels();
        let mut num = Vec::with_capacity(labels.len() * labels.len());
        for &i in &labels {
            for &j in &labels {
                let mut acc = PolyMat::zeros(self.dim * o.dim, self.dim * o.dim);
                for &a in &labels {
                    let (x, y) = (self.num(i, a), o.num(a, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.kron(y));
                    }
                }
                num.push(acc);
            }
        }
        let rep = TRep { kind: self.kind, dim: self.dim * o.dim, den: &self.den * &o.den, num, verified: false };
        Ok(rep)
    }

    /// `T(u) ↦ T(scale·u + c)`.
    pub fn substitute(&self, scale: &Rational, c: &Rational) -> TRep {
        let den = self.den.compose_affine(scale, c);
        let lc = den.leading().recip().expect("nonzero scale");
        let num = self.num.iter().map(|m| m.compose_affine(scale, c).scale(&lc)).collect();
        TRep { kind: self.kind, dim: self.dim, den: den.monic(), num, verified: false }
    }

    /// τ_a: `T(u) ↦ T(u − a)`.
    pub fn shift(&self, a: &Rational) -> TRep {
        self.substitute(&Rational::one(), &-a)
    }

    /// μ_f: `T(u) ↦ f(u)·T(u)`; requires `f(∞) = 1`.
    pub fn twist(&self, f: &RationalFunction) -> Result<TRep> {
        let fd = f.den().deg0();
        if f.num().deg0() != fd || f.num().leading() != Rational::one() {
            return Err(Error::Precondition("twisting series must tend to 1 at infinity".into()));
        }
        let num = self.num.iter().map(|m| m.mul_poly(f.num())).collect();
        Ok(TRep { kind: self.kind, dim: self.dim, den: &self.den * f.den(), num, verified: false }.reduced())
    }

    /// Cancels common factors between the denominator and all numerators.
    pub fn reduced(&self) -> TRep {
        let mut g = self.den.clone();
        for m in &self.num {
            if g.is_constant() {
                break;
            }
            g = m.content_gcd(&g);
        }
        if g.is_constant() {
            return self.clone();
        }
        let num = self.num.iter().map(|m| m.div_exact_poly(&g).expect("common factor")).collect();
        TRep { kind: self.kind, dim: self.dim, den: self.den.div_exact(&g).expect("common factor"), num, verified: self.verified }
    }

    /// Same kind and equal action of every `t_ij(u)`.
    pub fn same_action(&self, o: &TRep) -> bool {
        self.kind == o.kind
            && self.dim == o.dim
            && self.num.iter().zip(&o.num).all(|(a, b)| a.mul_poly(&o.den) == b.mul_poly(&self.den))
    }

    /// Applies the same linear map to every numerator coefficient (e.g. a change of basis).
    pub fn map_matrices(&self, dim: usize, f: impl Fn(&QMat) -> QMat) -> Result<TRep> {
        let num: Vec<PolyMat> = self
            .num
            .iter()
            .map(|m| if m.is_zero() { PolyMat::zeros(dim, dim) } else { m.map_coeffs(&f) })
            .collect();
        TRep::new(self.kind, dim, self.den.clone(), num)
    }

    /// Restriction to an invariant subspace with the given basis.
    pub fn restrict(&self, basis: &[QVec]) -> Result<TRep> {
        let k = basis.len();
        let num = self
            .num
            .iter()
            .map(|m| {
                if m.is_zero() {
                    return Ok(PolyMat::zeros(k, k));
                }
                Ok(restrict_to_subspace(&RfMatrix::new(m.clone(), self.den.clone())?, basis)?.num().clone())
            })
            .collect::<Result<Vec<_>>>()?;
        TRep::new(self.kind, k, self.den.clone(), num)
    }

    /// Runs [`check_defining_relations`] and records the outcome.
    pub fn verify(&mut self) -> ProofReport {
        let r = check_defining_relations(self);
        self.verified = r.proven();
        r
    }

    /// Matrices of `F_ij = (t_ij^{(1)} − θ_ij t_{−j,−i}^{(1)})/2`.
    pub fn lie_action(&self) -> Result<LieGenerators> {
        let kind = self.kind.algebra()?;
        let first: BTreeMap<(i32, i32), QMat> = kind
            .labels()
            .iter()
            .flat_map(|&i| kind.labels().into_iter().map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), self.coeff(i, j, 1)))
            .collect();
        let half = Rational::half();
        Ok(LieGenerators::from_fn(kind, |i, j| {
            let th = Rational::from_int(theta_unchecked(kind.is_symplectic(), i, j));
            first[&(i, j)].sub(&first[&(-j, -i)].scale(&th)).scale(&half)
        }))
    }

    /// Matrices of `E_ij = T_ij^{(1)}` for a Y(gl_N) representation.
    pub fn gl_action(&self) -> Vec<QMat> {
        let labels = self.kind.labels();
        labels.iter().flat_map(|&i| labels.iter().map(move |&j| (i, j))).map(|(i, j)| self.coeff(i, j, 1)).collect()
    }

    /// `[F_ij, t_kl(u)] = δ_kj t_il(u) − δ_il t_kj(u) − δ_{k,−i}θ_ij t_{−j,l}(u) + δ_{l,−j}θ_ij t_{k,−i}(u)`
    /// as an exact identity of matrix polynomials.
    pub fn check_lie_covariance(&self) -> Result<bool> {
        let kind = self.kind.algebra()?;
        let f = self.lie_action()?;
        let labels = kind.labels();
        for &i in &labels {
            for &j in &labels {
                let fij = f.get(i, j);
                let th = Rational::from_int(theta_unchecked(kind.is_symplectic(), i, j));
                for &k in &labels {
                    for &l in &labels {
                        let t = self.num(k, l);
                        let lhs = t.mul_const_left(fij).sub(&t.mul_const_right(fij));
                        let mut rhs = PolyMat::zeros(self.dim, self.dim);
                        if k == j {
                            rhs = rhs.add(self.num(i, l));
                        }
                        if i == l {
                            rhs = rhs.sub(self.num(k, j));
                        }
                        if k == -i {
                            rhs = rhs.sub(&self.num(-j, l).scale(&th));
                        }
                        if l == -j {
                            rhs = rhs.add(&self.num(k, -i).scale(&th));
                        }
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Simultaneous eigenvalues of `F_11, ..., F_nn` with multiplicities.
    pub fn weight_decomposition(&self) -> Result<BTreeMap<Vec<Rational>, usize>> {
        let f = self.lie_action()?;
        weight_multiset(&f.cartan(), self.dim)
    }

    /// JSON form with canonical entries.
    pub fn to_json(&self) -> TRepJson {
        let labels = self.kind.labels();
        let mut entries = Vec::new();
        for &i in &labels {
            for &j in &labels {
                let m = self.num(i, j);
                for (r, c) in m.support() {
                    let value = RationalFunction::new(m.entry(r, c), self.den.clone()).expect("monic");
                    entries.push(EntryJson { i, j, row: r, col: c, value });
                }
            }
        }
        TRepJson { kind: self.kind, dim: self.dim, den: self.den.clone(), entries }
    }

    pub fn from_json(j: &TRepJson) -> Result<TRep> {
        let kind = j.kind;
        let idx = kind.index();
        let n = idx.dim();
        let mut buckets: Vec<Vec<(usize, usize, Poly)>> = vec![Vec::new(); n * n];
        for e in &j.entries {
            let k = idx.pos(e.i)? * n + idx.pos(e.j)?;
            if e.row >= j.dim || e.col >= j.dim {
                return Err(Error::Shape(format!("entry ({}, {}) outside dimension {}", e.row, e.col, j.dim)));
            }
            let factor = j.den.div_exact(e.value.den())?;
            buckets[k].push((e.row, e.col, e.value.num() * &factor));
        }
        let num = buckets.into_iter().map(|b| PolyMat::from_entries(j.dim, j.dim, b)).collect();
        TRep::new(kind, j.dim, j.den.clone(), num)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: i32,
    pub j: i32,
    pub row: usize,
    pub col: usize,
    pub value: RationalFunction,
}

/// Serialized representation: the common denominator and every nonzero entry of every `t_ij(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TRepJson {
    pub kind: RepKind,
    pub dim: usize,
    pub den: Poly,
    pub entries: Vec<EntryJson>,
}

/// σ_c: `t_ij(u) ↦ δ_ij + e_ij (u−c)^{-1} − θ_ij e_{−j,−i} (u+κ−c)^{-1}`.
pub fn vector_rep(kind: &AlgebraKind, c: &Rational) -> TRep {
    vector_rep_with_kappa(kind, c, &kind.kappa())
}

/// The vector representation built with an arbitrary κ (only κ of the kind gives a representation).
pub fn vector_rep_with_kappa(kind: &AlgebraKind, c: &Rational, kappa: &Rational) -> TRep {
    let idx = kind.index();
    let d = idx.dim();
    let a = Poly::linear_root(c);
    let b = Poly::linear_root(&(c - kappa));
    let den = &a * &b;
    let labels = idx.labels().to_vec();
    let mut num = Vec::with_capacity(d * d);
    for &i in &labels {
        for &j in &labels {
            let th = theta_unchecked(kind.is_symplectic(), i, j);
            let eij = QMat::from_triplets(d, d, [(idx.pos(i).unwrap(), idx.pos(j).unwrap(), Rational::one())]);
            let e2 = QMat::from_triplets(d, d, [(idx.pos(-j).unwrap(), idx.pos(-i).unwrap(), Rational::from_int(-th))]);
            let mut m = PolyMat::from_poly_times(&b, &eij).add(&PolyMat::from_poly_times(&a, &e2));
            if i == j {
                m = m.add(&PolyMat::from_poly_times(&den, &QMat::identity(d)));
            }
            num.push(m);
        }
    }
    TRep::new(RepKind::X(*kind), d, den, num).expect("vector representation is normalized")
}

/// Tensor product of several representations, left to right.
pub fn tensor_rep(reps: &[&TRep]) -> Result<TRep> {
    let (first, rest) = reps.split_first().ok_or_else(|| Error::Precondition("empty tensor product".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, r| acc.tensor(r))
}

pub fn shift_rep(rep: &TRep, a: &Rational) -> TRep {
    rep.shift(a)
}

pub fn twist_rep(rep: &TRep, f: &RationalFunction) -> Result<TRep> {
    rep.twist(f)
}

fn labels_of(kind: &RepKind) -> Vec<i32> {
    kind.labels()
}

/// Checks the relation for one pair of points, with integer-scaled matrices
/// `a = s·t(u₀)`, `b = s'·t(v₀)` and integers `x = L(u₀−v₀)`, `y = L(u₀−v₀−κ)`, `l = L`.
#[allow(clippy::too_many_arguments)]
fn defrel_at<T: Scalar>(
    kind: &RepKind,
    a: &[SparseMat<T>],
    b: &[SparseMat<T>],
    x: &T,
    y: &T,
    l: &T,
) -> Option<(i32, i32, i32, i32)> {
    let labels = labels_of(kind);
    let n = labels.len();
    let pos = |i: i32| labels.iter().position(|&x| x == i).expect("label");
    let at = |m: &[SparseMat<T>], i: i32, j: i32| m[pos(i) * n + pos(j)].clone();
    let (sp, orth) = match kind {
        RepKind::X(k) => (k.is_symplectic(), true),
        RepKind::Gl(_) => (false, false),
    };
    let sgn = |i: i32| -> T {
        if sp && i < 0 {
            T::one().neg_ref()
        } else {
            T::one()
        }
    };
    let xy = x.mul_ref(y);
    // Σ_p s_p B_{k,−p} A_{ip}, indexed by (k, i)
    let mut s2: BTreeMap<(i32, i32), SparseMat<T>> = BTreeMap::new();
    if orth {
        for &k in &labels {
            for &i in &labels {
                let mut acc = SparseMat::zeros(a[0].nrows(), a[0].ncols());
                for &p in &labels {
                    let prod = at(b, k, -p).matmul(&at(a, i, p));
                    acc = if sp && p < 0 { acc.sub(&prod) } else { acc.add(&prod) };
                }
                s2.insert((k, i), acc);
            }
        }
    }
    for (jx, &j) in labels.iter().enumerate() {
        for &lb in &labels[jx..] {
            let pairs: Vec<(i32, i32)> = if j == lb { vec![(j, lb)] } else { vec![(j, lb), (lb, j)] };
            // products for the column pair (j, l): ab[x][y] = A_xj B_yl, ba[y][x] = B_yl A_xj
            let mut ab: BTreeMap<(i32, i32, i32, i32), SparseMat<T>> = BTreeMap::new();
            let mut ba: BTreeMap<(i32, i32, i32, i32), SparseMat<T>> = BTreeMap::new();
            for &(c1, c2) in &pairs {
                for &r1 in &labels {
                    for &r2 in &labels {
                        ab.insert((r1, c1, r2, c2), at(a, r1, c1).matmul(&at(b, r2, c2)));
                        ba.insert((r2, c2, r1, c1), at(b, r2, c2).matmul(&at(a, r1, c1)));
                    }
                }
            }
            for &(jj, ll) in &pairs {
                // Σ_p s_p A_{pj} B_{−p,l}
                let s1 = if orth {
                    let mut acc = SparseMat::zeros(a[0].nrows(), a[0].ncols());
                    for &p in &labels {
                        let prod = &ab[&(p, jj, -p, ll)];
                        acc = if sp && p < 0 { acc.sub(prod) } else { acc.add(prod) };
                    }
                    Some(acc)
                } else {
                    None
                };
                for &i in &labels {
                    for &k in &labels {
                        let comm = ab[&(i, jj, k, ll)].sub(&ba[&(k, ll, i, jj)]);
                        let swap = ab[&(k, jj, i, ll)].sub(&ba[&(k, jj, i, ll)]);
                        let (lhs, rhs) = if orth {
                            let mut q = SparseMat::zeros(a[0].nrows(), a[0].ncols());
                            if k == -i {
                                q = q.add(&s1.as_ref().unwrap().scale(&sgn(i)));
                            }
                            if ll == -jj {
                                q = q.sub(&s2[&(k, i)].scale(&sgn(jj)));
                            }
                            (comm.scale(&xy), swap.scale(y).sub(&q.scale(x)).scale(l))
                        } else {
                            (comm.scale(x), swap.scale(l))
                        };
                        if lhs != rhs {
                            return Some((i, jj, k, ll));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Proves the defining relations of X(a) (or Y(gl_N)) in the representation for all index
/// quadruples. With the common denominator cleared, both sides are polynomials of degree at most
/// `deg num + 2` in each of `u` and `v`.
pub fn check_defining_relations(rep: &TRep) -> ProofReport {
    let deg = rep.num_degree() + 2;
    let mut spec = GridSpec::new(deg, deg);
    let roots = rep.den.rational_roots().unwrap_or_default();
    spec.bad_u = roots.clone();
    spec.bad_v = roots;
    let kappa = match rep.kind {
        RepKind::X(k) => k.kappa(),
        RepKind::Gl(_) => Rational::zero(),
    };
    let name = format!("defining relations of {} on a {}-dimensional module", rep.kind.name(), rep.dim);
    let n_labels = rep.kind.size() as u64;
    prove_identity_grid(&name, &spec, |u, v| {
        let am: Vec<QMat> = rep.num.iter().map(|m| m.eval(u)).collect();
        let bm: Vec<QMat> = rep.num.iter().map(|m| m.eval(v)).collect();
        let (ai, _) = QMat::integerize(&am.iter().collect::<Vec<_>>());
        let (bi, _) = QMat::integerize(&bm.iter().collect::<Vec<_>>());
        let x = u - v;
        let y = &x - &kappa;
        let lcm = Rational::lcm_of_denominators([&x, &y]);
        let xl = (&x * &Rational::from_bigint(lcm.clone())).numer().clone();
        let yl = (&y * &Rational::from_bigint(lcm.clone())).numer().clone();
        let amax = ai.iter().map(|m| m.max_abs().bits()).max().unwrap_or(0);
        let bmax = bi.iter().map(|m| m.max_abs().bits()).max().unwrap_or(0);
        let nnz = ai.iter().map(|m| m.max_row_nnz()).max().unwrap_or(0).max(1) as u64;
        let prod = amax + bmax + (64 - nnz.leading_zeros() as u64) + (64 - n_labels.leading_zeros() as u64) + 3;
        let bound = (xl.bits() + yl.bits()).max(lcm.bits() + xl.bits().max(yl.bits()) + 1) + prod;
        let hit = if fits_i128(bound) {
            let conv = |v: &[SparseMat<BigInt>]| -> Vec<SparseMat<i128>> {
                v.iter().map(|m| m.to_i128().expect("bounded")).collect()
            };
            let to = |b: &BigInt| -> i128 { num_traits::ToPrimitive::to_i128(b).expect("bounded") };
            defrel_at(&rep.kind, &conv(&ai), &conv(&bi), &to(&xl), &to(&yl), &to(&lcm))
        } else {
            defrel_at(&rep.kind, &ai, &bi, &xl, &yl, &lcm)
        };
        hit.map(|(i, j, k, l)| format!("relation fails for (i, j, k, l) = ({i}, {j}, {k}, {l})"))
    })
}

/// Result of computing z(u).
#[derive(Clone, Debug)]
pub struct ZResult {
    /// `Σ_i θ_{ni} t_{−i,−n}(u+κ) t_{in}(u)` as a matrix.
    pub matrix: RfMatrix,
    /// The scalar z(u) when the matrix is scalar.
    pub scalar: Option<RationalFunction>,
    /// Whether `T^t(u+κ)T(u) = T(u)T^t(u+κ) = z(u)·1` holds entrywise (only checked for scalar z).
    pub full_relation: bool,
}

/// Scalar value when `m` is `f(u)·1`.
pub fn as_scalar(m: &RfMatrix) -> Option<RationalFunction> {
    let d = m.nrows();
    let mut coeffs = Vec::new();
    for c in m.num().coeffs() {
        let s = c.get(0, 0);
        if *c != QMat::scalar(d, s.clone()) {
            return None;
        }
        coeffs.push(s);
    }
    Some(RationalFunction::new(Poly::new(coeffs), m.den().clone()).expect("nonzero"))
}

/// z(u) from `Σ_i θ_{ni} t_{−i,−n}(u+κ) t_{in}(u)`, cross-checked against every entry of both
/// orders of `T^t(u+κ)T(u) = T(u)T^t(u+κ) = z(u)·1`.
pub fn compute_z(rep: &TRep) -> Result<ZResult> {
    let kind = rep.kind.algebra()?;
    let kappa = kind.kappa();
    let n = kind.n as i32;
    let sp = kind.is_symplectic();
    let shifted = rep.substitute(&Rational::one(), &kappa);
    let mut acc = PolyMat::zeros(rep.dim, rep.dim);
    for &i in &kind.labels() {
        let th = Rational::from_int(theta_unchecked(sp, n, i));
        acc = acc.add(&shifted.num(-i, -n).mul(rep.num(i, n)).scale(&th));
    }
    let matrix = RfMatrix::new(acc, &shifted.den * &rep.den)?.reduced();
    let scalar = as_scalar(&matrix);
    let full_relation = match &scalar {
        Some(z) => check_cu(rep, &shifted, z),
        None => false,
    };
    Ok(ZResult { matrix, scalar, full_relation })
}

/// Pointwise check of every entry of both orders; the numerator identity has degree at most
/// `2·deg num`, so that many plus one points prove it.
fn check_cu(rep: &TRep, shifted: &TRep, z: &RationalFunction) -> bool {
    let kind = rep.kind.algebra().expect("X(a)");
    let sp = kind.is_symplectic();
    let labels = kind.labels();
    let deg = rep.num_degree() + shifted.num_degree();
    // z·den(u+κ)den(u) as a polynomial
    let Ok(zp) = (z.num() * &(&shifted.den * &rep.den)).div_exact(z.den()) else {
        return false;
    };
    let mut count = 0;
    let mut k = 1i64;
    let bound = deg.max(zp.deg0());
    while count <= bound {
        let u = Rational::new(2 * k + 1, 7);
        k += 1;
        count += 1;
        let keys: Vec<(i32, i32)> = labels.iter().flat_map(|&i| labels.iter().map(move |&j| (i, j))).collect();
        let av: Vec<QMat> = keys.iter().map(|&(i, j)| shifted.num(i, j).eval(&u)).collect();
        let bv: Vec<QMat> = keys.iter().map(|&(i, j)| rep.num(i, j).eval(&u)).collect();
        // cleared of denominators: sa·A and sb·B are integral, so both sides scale by sa·sb
        let (ai, sa) = QMat::integerize(&av.iter().collect::<Vec<_>>());
        let (bi, sb) = QMat::integerize(&bv.iter().collect::<Vec<_>>());
        let a: BTreeMap<(i32, i32), &SparseMat<BigInt>> = keys.iter().copied().zip(&ai).collect();
        let b: BTreeMap<(i32, i32), &SparseMat<BigInt>> = keys.iter().copied().zip(&bi).collect();
        let zu = zp.eval(&u);
        let lhs_scale = zu.denom().clone();
        let zv = SparseMat::scalar(rep.dim, zu.numer() * &sa * &sb);
        let zero = SparseMat::<BigInt>::zeros(rep.dim, rep.dim);
        for &kk in &labels {
            for &l in &labels {
                let mut first = SparseMat::<BigInt>::zeros(rep.dim, rep.dim);
                let mut second = SparseMat::<BigInt>::zeros(rep.dim, rep.dim);
                for &i in &labels {
                    let t1 = BigInt::from(theta_unchecked(sp, kk, i));
                    first.axpy(&t1, &a[&(-i, -kk)].matmul(b[&(i, l)]));
                    let t2 = BigInt::from(theta_unchecked(sp, i, l));
                    second.axpy(&t2, &b[&(kk, i)].matmul(a[&(-l, -i)]));
                }
                let want = if kk == l { &zv } else { &zero };
                if first.scale(&lhs_scale) != *want || second.scale(&lhs_scale) != *want {
                    return false;
                }
            }
        }
    }
    true
}

/// Simultaneous eigenvalue multiplicities of commuting matrices that act semisimply with
/// rational eigenvalues.
pub fn weight_multiset(cartan: &[QMat], dim: usize) -> Result<BTreeMap<Vec<Rational>, usize>> {
    let mut out = BTreeMap::new();
    if cartan.iter().all(|h| h.diagonal().is_some()) {
        let diags: Vec<Vec<Rational>> = cartan.iter().map(|h| h.diagonal().unwrap()).collect();
        for k in 0..dim {
            let w: Vec<Rational> = diags.iter().map(|d| d[k].clone()).collect();
            *out.entry(w).or_insert(0) += 1;
        }
        return Ok(out);
    }
    // Refine the whole space by eigenspaces of each matrix in turn.
    let mut parts: Vec<(Vec<Rational>, Vec<QVec>)> =
        vec![(Vec::new(), (0..dim).map(|i| crate::linalg::unit_vec(dim, i)).collect())];
    for h in cartan {
        let mut next = Vec::new();
        for (w, basis) in parts {
            let hr = restrict_q(h, &basis)?;
            let k = basis.len();
            let dense = hr.to_dense();
            let cp = charpoly(&dense);
            let roots = cp
                .rational_roots()
                .ok_or_else(|| Error::Inexact("Cartan element has non-rational eigenvalues".into()))?;
            let mut distinct = roots.clone();
            distinct.dedup();
            let mut total = 0;
            for lam in distinct {
                let shifted: Vec<QVec> = (0..k)
                    .map(|r| (0..k).map(|c| if r == c { &dense[r][c] - &lam } else { dense[r][c].clone() }).collect())
                    .collect();
                let ker = kernel_q(&shifted);
                total += ker.len();
                let sub: Vec<QVec> = ker
                    .iter()
                    .map(|c| {
                        let mut v = crate::linalg::zero_vec(dim);
                        for (coef, b) in c.iter().zip(&basis) {
                            if !coef.is_zero() {
                                for (x, y) in v.iter_mut().zip(b) {
                                    *x += coef * y;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                let mut w2 = w.clone();
                w2.push(lam);
                next.push((w2, sub));
            }
            if total != k {
                return Err(Error::Inexact("Cartan element is not semisimple".into()));
            }
        }
        parts = next;
    }
    for (w, b) in parts {
        if !b.is_empty() {
            *out.entry(w).or_insert(0) += b.len();
        }
    }
    Ok(out)
}

/// Characteristic polynomial `det(x·1 − M)` by the Faddeev–LeVerrier recursion.
pub fn charpoly(m: &[Vec<Rational>]) -> Poly {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1}·1
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for t in 0..n {
                    if !m[i][t].is_zero() && !mk[t][j].is_zero() {
                        s += &m[i][t] * &mk[t][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        let mut tr = Rational::zero();
        for i in 0..n {
            for t in 0..n {
                if !m[i][t].is_zero() && !next[t][i].is_zero() {
                    tr += &m[i][t] * &next[t][i];
                }
            }
        }
        coeffs[n - k] = -tr / Rational::from_int(k as i64);
        mk = next;
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn vector_rep_o3_entries() {
        let k = AlgebraKind::b(1);
        let r = vector_rep(&k, &qi(0));
        let t11 = r.t(1, 1);
        // 1 + e_11/u − e_{−1,−1}/(u+1/2)
        assert_eq!(t11.entry(2, 2), RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::x()).unwrap());
        assert_eq!(t11.entry(0, 0), RationalFunction::new(Poly::new(vec![q(-1, 2), qi(1)]), Poly::new(vec![q(1, 2), qi(1)])).unwrap());
    }

    #[test]
    fn trivial_z_is_one() {
        let t = TRep::trivial(RepKind::X(AlgebraKind::c(1)), 1);
        let z = compute_z(&t).unwrap();
        assert!(z.scalar.unwrap().is_one());
        assert!(z.full_relation);
    }

    #[test]
    fn charpoly_of_diag() {
        let m = vec![vec![qi(1), qi(0)], vec![qi(0), qi(2)]];
        assert_eq!(charpoly(&m), Poly::from_ints(&[2, -3, 1]));
    }
}
