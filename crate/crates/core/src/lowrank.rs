//! The rank-one and rank-two coincidences: X(sp₂) ≅ Y(gl₂), X(o₃) ≅ Y(gl₂) by fusion,
//! X(o₄) ↪ Y(gl₂)⊗Y(gl₂), the fusion identities behind them and the evaluation homomorphisms.
//!
//! Irrationalities are avoided by rescaling bases. For o₃ the auxiliary space uses
//! `w₋₁ = e₁⊗e₁`, `w₀ = e₁⊗e₂ + e₂⊗e₁`, `w₁ = −2 e₂⊗e₂`, which differs from the normalized basis
//! `v₋₁ = e₁⊗e₁`, `v₀ = (e₁⊗e₂ + e₂⊗e₁)/√2`, `v₁ = −e₂⊗e₂` by `w_i ∝ v_i/d_i` with
//! `d = (√2, 1, 1/√2)`. Conjugation by `diag(d)` fixes the o₃ R-matrix (since `d_i d_{−i} = 1`), so
//! it is an automorphism of X(o₃) and every identity can be checked in the rational basis.

use crate::algebra::{r_matrix, r_matrix_gl, build_p_gl, AlgebraKind, LieGenerators};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::gl2::gl2_matrices;
use crate::linalg::{embed_on_legs, restrict_to_subspace, LegOperator, PolyMat, QMat, QVec, RfMatrix, SpaceIndex};
use crate::report::CheckOutcome;
use crate::yangian::{RepKind, TRep};

/// Ladder matrices `[E₁₁, E₁₂, E₂₁, E₂₂]` of the `dim`-dimensional sl₂-module with highest weight
/// `(dim − 1, 0)`.
pub fn sl2_irrep(dim: usize) -> Result<[QMat; 4]> {
    if dim == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    gl2_matrices(&Rational::from_int(dim as i64 - 1), &Rational::zero())
}

/// An irreducible module of sp₂, o₃ or o₄ given by the matrices of all `F_ij`.
#[derive(Clone, Debug)]
pub struct ClassicalIrrep {
    pub kind: AlgebraKind,
    /// Eigenvalues of `F₁₁, ..., F_nn` on the highest vector.
    pub mu: Vec<Rational>,
    pub gens: LieGenerators,
    /// Scalar value of the Casimir element entering the evaluation homomorphism (for sp₂,
    /// the element `½ Σ F_ij F_ji`).
    pub casimir: Rational,
}

impl ClassicalIrrep {
    pub fn dim(&self) -> usize {
        self.gens.module_dim()
    }

    /// `(F²)_ij = Σ_k F_ik F_kj`.
    pub fn f_squared(&self, i: i32, j: i32) -> QMat {
        let d = self.dim();
        self.kind
            .labels()
            .iter()
            .fold(QMat::zeros(d, d), |acc, &k| acc.add(&self.gens.get(i, k).matmul(self.gens.get(k, j))))
    }
}

fn nonneg_int(x: &Rational, what: &str) -> Result<usize> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::NotFinite(format!("{what} = {x} is not a nonnegative integer")));
    }
    Ok(x.to_i64().expect("integer") as usize)
}

fn scalar_of(m: &QMat) -> Option<Rational> {
    let d = m.nrows();
    let c = m.get(0, 0);
    (*m == QMat::scalar(d, c.clone())).then_some(c)
}

fn generators_from(kind: AlgebraKind, d: usize, base: &[((i32, i32), QMat)]) -> LieGenerators {
    // the remaining generators follow from F_ij = −θ_ij F_{−j,−i}
    LieGenerators::from_fn(kind, |i, j| {
        if let Some((_, m)) = base.iter().find(|(k, _)| *k == (i, j)) {
            return m.clone();
        }
        if let Some((_, m)) = base.iter().find(|(k, _)| *k == (-j, -i)) {
            let th = kind.theta(i, j).expect("labels");
            return m.scale(&Rational::from_int(-th));
        }
        QMat::zeros(d, d)
    })
}

/// The sp₂-module V(μ₁), `−μ₁ ∈ ℤ₊`: `F₋₁,₋₁ = h`, `F₋₁,₁ = 2E₁₂`, `F₁,₋₁ = 2E₂₁`.
pub fn classical_irrep_sp2(mu1: &Rational) -> Result<ClassicalIrrep> {
    let m = nonneg_int(&-mu1, "-mu1")?;
    let [e11, e12, e21, e22] = sl2_irrep(m + 1)?;
    let h = e11.sub(&e22);
    let kind = AlgebraKind::c(1);
    let two = Rational::from_int(2);
    let gens = generators_from(kind, m + 1, &[((-1, -1), h), ((-1, 1), e12.scale(&two)), ((1, -1), e21.scale(&two))]);
    let labels = kind.labels();
    let mut cas = QMat::zeros(m + 1, m + 1);
    for &i in &labels {
        for &j in &labels {
            cas = cas.add(&gens.get(i, j).matmul(gens.get(j, i)));
        }
    }
    let casimir = scalar_of(&cas.scale(&Rational::half())).ok_or_else(|| Error::Inexact("Casimir is not scalar".into()))?;
    Ok(ClassicalIrrep { kind, mu: vec![mu1.clone()], gens, casimir })
}

/// The o₃-module V(μ₁), `−2μ₁ ∈ ℤ₊`, from sl₂ via `h ↦ 2F₋₁,₋₁`, `E₁₂ ↦ √2 F₋₁,₀`, `E₂₁ ↦ √2 F₀,₋₁`,
/// in the basis `(√2)^r (E₂₁)^r ζ`: `F₋₁,₀ = E₁₂`, `F₀,₋₁ = E₂₁/2`.
pub fn classical_irrep_o3(mu1: &Rational) -> Result<ClassicalIrrep> {
    let m = nonneg_int(&(-mu1 * Rational::from_int(2)), "-2 mu1")?;
    let [e11, e12, e21, e22] = sl2_irrep(m + 1)?;
    let half = Rational::half();
    let h = e11.sub(&e22);
    let kind = AlgebraKind::b(1);
    let gens = generators_from(kind, m + 1, &[((-1, -1), h.scale(&half)), ((-1, 0), e12), ((0, -1), e21.scale(&half))]);
    // c = ½(F₁₁² − F₁₁) + F₁₀F₀₁
    let f11 = gens.get(1, 1);
    let c = f11.matmul(f11).sub(f11).scale(&half).add(&gens.get(1, 0).matmul(gens.get(0, 1)));
    let casimir = scalar_of(&c).ok_or_else(|| Error::Inexact("Casimir is not scalar".into()))?;
    Ok(ClassicalIrrep { kind, mu: vec![mu1.clone()], gens, casimir })
}

/// The o₄-module V(μ₁, μ₂) realized on `V(h)⊗V(h′)` with `h = −μ₁−μ₂`, `h′ = μ₁−μ₂`:
/// `F₋₂,₁ = E₁₂⊗1`, `F₁,₋₂ = E₂₁⊗1`, `F₋₂,₋₁ = 1⊗E′₁₂`, `F₋₁,₋₂ = 1⊗E′₂₁`,
/// `F₁₁ = (h′ − h)/2`, `F₂₂ = −(h + h′)/2`.
pub fn classical_irrep_o4(mu1: &Rational, mu2: &Rational) -> Result<ClassicalIrrep> {
    let a = nonneg_int(&(-mu1 - mu2), "-mu1-mu2")?;
    let b = nonneg_int(&(mu1 - mu2), "mu1-mu2")?;
    let [a11, a12, a21, a22] = sl2_irrep(a + 1)?;
    let [b11, b12, b21, b22] = sl2_irrep(b + 1)?;
    let (ia, ib) = (QMat::identity(a + 1), QMat::identity(b + 1));
    let h = a11.sub(&a22).kron(&ib);
    let hp = ia.kron(&b11.sub(&b22));
    let half = Rational::half();
    let kind = AlgebraKind::d(2);
    let d = (a + 1) * (b + 1);
    let gens = generators_from(
        kind,
        d,
        &[
            ((-2, 1), a12.kron(&ib)),
            ((1, -2), a21.kron(&ib)),
            ((-2, -1), ia.kron(&b12)),
            ((-1, -2), ia.kron(&b21)),
            ((1, 1), hp.sub(&h).scale(&half)),
            ((2, 2), h.add(&hp).scale(&-half.clone())),
        ],
    );
    // c = ½(F₁₁² + F₂₂²) − F₂₂ + F₂₁F₁₂ + F₂,₋₁F₋₁,₂
    let (f11, f22) = (gens.get(1, 1), gens.get(2, 2));
    let c = f11
        .matmul(f11)
        .add(&f22.matmul(f22))
        .scale(&half)
        .sub(f22)
        .add(&gens.get(2, 1).matmul(gens.get(1, 2)))
        .add(&gens.get(2, -1).matmul(gens.get(-1, 2)));
    let casimir = scalar_of(&c).ok_or_else(|| Error::Inexact("Casimir is not scalar".into()))?;
    Ok(ClassicalIrrep { kind, mu: vec![mu1.clone(), mu2.clone()], gens, casimir })
}

/// Builds the irreducible module of sp₂, o₃ or o₄ with highest weight `mu`.
pub fn classical_irrep(kind: &AlgebraKind, mu: &[Rational]) -> Result<ClassicalIrrep> {
    let bad = || Error::Precondition(format!("{kind} needs a highest weight with {} entries", kind.n));
    match (kind.name().as_str(), mu) {
        ("sp2", [m1]) => classical_irrep_sp2(m1),
        ("o3", [m1]) => classical_irrep_o3(m1),
        ("o4", [m1, m2]) => classical_irrep_o4(m1, m2),
        ("sp2" | "o3" | "o4", _) => Err(bad()),
        _ => Err(Error::KindMismatch(format!("no evaluation homomorphism for {kind}"))),
    }
}

/// The evaluation module `V(μ)_a`:
/// sp₂: `T(u) ↦ 1 + F/u`; o₃: `1 + F/u + (F² − c)/(u(2u−1))`; o₄: `1 + F/u + (F² − F − c)/(2u²)`;
/// followed by `u ↦ u − a`.
pub fn ev_rep(irrep: &ClassicalIrrep, a: &Rational) -> Result<TRep> {
    let kind = irrep.kind;
    let d = irrep.dim();
    let labels = kind.labels();
    let u = Poly::x();
    let half = Rational::half();
    let cas = QMat::scalar(d, irrep.casimir.clone());
    let (den, lin, quad): (Poly, Poly, Option<Box<dyn Fn(i32, i32) -> QMat>>) = match kind.name().as_str() {
        "sp2" => (u.clone(), Poly::one(), None),
        // u(2u−1) made monic: numerator δ·u(u−½) + F(u−½) + (F² − c)/2
        "o3" => (
            &u * &Poly::linear_root(&half),
            Poly::linear_root(&half),
            Some(Box::new(|i, j| {
                let f2 = irrep.f_squared(i, j);
                let f2 = if i == j { f2.sub(&cas) } else { f2 };
                f2.scale(&half)
            })),
        ),
        "o4" => (
            &u * &u,
            u.clone(),
            Some(Box::new(|i, j| {
                let f2 = irrep.f_squared(i, j).sub(irrep.gens.get(i, j));
                let f2 = if i == j { f2.sub(&cas) } else { f2 };
                f2.scale(&half)
            })),
        ),
        _ => return Err(Error::KindMismatch(format!("no evaluation homomorphism for {kind}"))),
    };
    let mut num = Vec::with_capacity(labels.len() * labels.len());
    for &i in &labels {
        for &j in &labels {
            let mut m = PolyMat::from_poly_times(&lin, irrep.gens.get(i, j));
            if let Some(q) = &quad {
                m = m.add(&PolyMat::constant(q(i, j)));
            }
            if i == j {
                m = m.add(&PolyMat::from_poly_times(&den, &QMat::identity(d)));
            }
            num.push(m);
        }
    }
    let rep = TRep::new(RepKind::X(kind), d, den, num)?;
    Ok(rep.shift(a).reduced())
}

/// Highest weight `(λ_i(u))` of `V(μ)_a` in label order, from the closed formulas for
/// sp₂, o₃ and o₄ with `u` replaced by `u − a`.
pub fn ev_highest_weight(kind: &AlgebraKind, mu: &[Rational], a: &Rational) -> Result<Vec<RationalFunction>> {
    let z = Rational::zero();
    let half = Rational::half();
    let w: Vec<RationalFunction> = match (kind.name().as_str(), mu) {
        // 1 − μ₁/u, 1 + μ₁/u
        ("sp2", [m1]) => vec![
            RationalFunction::from_roots(&[m1.clone()], &[z.clone()]),
            RationalFunction::from_roots(&[-m1], &[z.clone()]),
        ],
        // roots of 2u ∓ μ₁ − ... divided by 2
        ("o3", [m1]) => {
            let (p, q) = (m1 * &half, (m1 + Rational::one()) * &half);
            let den = [z.clone(), half.clone()];
            vec![
                RationalFunction::from_roots(&[p.clone(), q.clone()], &den),
                RationalFunction::from_roots(&[-&p, q.clone()], &den),
                RationalFunction::from_roots(&[-&p, -&p + &half], &den),
            ]
        }
        ("o4", [m1, m2]) => {
            let s = (m1 + m2) * &half;
            let t = (m1 - m2) * &half;
            let den = [z.clone(), z.clone()];
            vec![
                RationalFunction::from_roots(&[s.clone(), -&t], &den),
                RationalFunction::from_roots(&[s.clone(), t.clone()], &den),
                RationalFunction::from_roots(&[-&t, -&s], &den),
                RationalFunction::from_roots(&[t.clone(), -&s], &den),
            ]
        }
        _ => return Err(Error::KindMismatch(format!("no evaluation formula for {kind} with weight {mu:?}"))),
    };
    Ok(w.into_iter().map(|f| f.shifted(&-a)).collect())
}

fn relabel(rep: &TRep, kind: AlgebraKind, den: Poly, num: Vec<PolyMat>) -> Result<TRep> {
    TRep::new(RepKind::X(kind), rep.dim(), den, num)
}

fn require_gl2(rep: &TRep) -> Result<()> {
    if rep.kind() != RepKind::Gl(2) {
        return Err(Error::KindMismatch(format!("expected a Y(gl2) module, got {}", rep.kind().name())));
    }
    Ok(())
}

/// X(sp₂) ≅ Y(gl₂): `t_ij(u) ↦ T_ij(u/2)` with labels 1, 2 renamed −1, 1.
pub fn phi_sp2(rep: &TRep) -> Result<TRep> {
    require_gl2(rep)?;
    let s = rep.substitute(&Rational::half(), &Rational::zero());
    relabel(rep, AlgebraKind::c(1), s.den().clone(), s.nums().to_vec())
}

/// X(o₃) → Y(gl₂): `T(u) ↦ (1+P)/2 · T₁(2u) T₂(2u+1)` in the rational auxiliary basis `w`.
pub fn phi_o3(rep: &TRep) -> Result<TRep> {
    require_gl2(rep)?;
    let a = rep.substitute(&Rational::from_int(2), &Rational::zero());
    let b = rep.substitute(&Rational::from_int(2), &Rational::one());
    let pr = |x: (i32, i32), y: (i32, i32)| a.t(x.0, x.1).mul(&b.t(y.0, y.1));
    let sym = |x: (i32, i32), y: (i32, i32), z: (i32, i32), w: (i32, i32)| pr(x, y).add(&pr(z, w));
    let half = Rational::half();
    let image = |i: i32, j: i32| -> RfMatrix {
        match (i, j) {
            (-1, -1) => pr((1, 1), (1, 1)),
            (-1, 0) => sym((1, 1), (1, 2), (1, 2), (1, 1)),
            (-1, 1) => pr((1, 2), (1, 2)).scale(&Rational::from_int(-2)),
            (0, -1) => sym((1, 1), (2, 1), (2, 1), (1, 1)).scale(&half),
            (0, 0) => sym((1, 1), (2, 2), (2, 1), (1, 2)),
            (0, 1) => sym((1, 2), (2, 2), (2, 2), (1, 2)).neg(),
            (1, -1) => pr((2, 1), (2, 1)).scale(&-half.clone()),
            (1, 0) => sym((2, 1), (2, 2), (2, 2), (2, 1)).scale(&-half.clone()),
            (1, 1) => pr((2, 2), (2, 2)),
            _ => unreachable!("o3 labels"),
        }
    };
    Ok(TRep::from_fn(RepKind::X(AlgebraKind::b(1)), rep.dim(), image)?.reduced())
}

/// The second expression for the image of `t₀₀(u)`: `T₁₂(2u)T₂₁(2u+1) + T₂₂(2u)T₁₁(2u+1)`.
pub fn phi_o3_t00_alternative(rep: &TRep) -> Result<RfMatrix> {
    require_gl2(rep)?;
    let a = rep.substitute(&Rational::from_int(2), &Rational::zero());
    let b = rep.substitute(&Rational::from_int(2), &Rational::one());
    Ok(a.t(1, 2).mul(&b.t(2, 1)).add(&a.t(2, 2).mul(&b.t(1, 1))))
}

/// Positions of the o₄ basis `v₋₂ = e₁⊗e₁`, `v₋₁ = e₁⊗e₂`, `v₁ = e₂⊗e₁`, `v₂ = −e₂⊗e₂`.
fn o4_slot(i: i32) -> (i32, i32, i64) {
    match i {
        -2 => (1, 1, 1),
        -1 => (1, 2, 1),
        1 => (2, 1, 1),
        2 => (2, 2, -1),
        _ => unreachable!("o4 labels"),
    }
}

/// X(o₄) ↪ Y(gl₂)⊗Y(gl₂): `T(u) ↦ T₁(u) T′₂(u)` on `repA ⊗ repB`.
pub fn psi_o4(rep_a: &TRep, rep_b: &TRep) -> Result<TRep> {
    require_gl2(rep_a)?;
    require_gl2(rep_b)?;
    let image = |i: i32, j: i32| -> RfMatrix {
        let (a1, b1, s1) = o4_slot(i);
        let (a2, b2, s2) = o4_slot(j);
        rep_a.t(a1, a2).kron(&rep_b.t(b1, b2)).scale(&Rational::from_int(s1 * s2))
    };
    Ok(TRep::from_fn(RepKind::X(AlgebraKind::d(2)), rep_a.dim() * rep_b.dim(), image)?.reduced())
}

fn c2_legs(k: usize) -> Vec<SpaceIndex> {
    vec![SpaceIndex::range(2); k]
}

/// `R°_{ab}(scale·u + c)` on four copies of ℂ².
fn r_gl_on(a: usize, b: usize, scale: i64, c: i64) -> LegOperator {
    let r = r_matrix_gl(2).map_matrix(|m| m.compose_affine(&Rational::from_int(scale), &Rational::from_int(c)));
    embed_on_legs(&r, &[a, b], &c2_legs(4)).expect("legs")
}

fn p_on(a: usize, b: usize) -> LegOperator {
    embed_on_legs(&build_p_gl(2), &[a, b], &c2_legs(4)).expect("legs")
}

fn mul_all(ops: &[&LegOperator]) -> LegOperator {
    ops.iter().skip(1).fold(ops[0].clone(), |acc, o| acc.mul(o).expect("legs"))
}

/// `e_a ⊗ e_b` in ℂ²⊗ℂ², labels 1, 2.
fn e2(a: i32, b: i32) -> QVec {
    let mut v = vec![Rational::zero(); 4];
    v[((a - 1) * 2 + (b - 1)) as usize] = Rational::one();
    v
}

fn tensor_vec(x: &[Rational], y: &[Rational]) -> QVec {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// The rational basis `w₋₁, w₀, w₁` of the symmetric square.
fn o3_aux_basis() -> Vec<QVec> {
    let w0: QVec = e2(1, 2).iter().zip(e2(2, 1)).map(|(a, b)| a + &b).collect();
    vec![e2(1, 1), w0, e2(2, 2).iter().map(|x| x * Rational::from_int(-2)).collect()]
}

/// Fusion for o₃: the operator `(1+P₁₂)/2 · (1+P₃₄)/2 · R°₁₄(2u−1)R°₁₃(2u)R°₂₄(2u)R°₂₃(2u+1)`
/// restricted to `V⊗V` equals `(2u−1)/(2u+1) · R(u)` of o₃.
pub fn fusion_check_o3() -> Vec<CheckOutcome> {
    let id = LegOperator::identity(c2_legs(4));
    let half = Rational::half();
    let sym12 = id.add(&p_on(0, 1)).unwrap().scale(&half);
    let sym34 = id.add(&p_on(2, 3)).unwrap().scale(&half);
    let (r14, r13, r24, r23) = (r_gl_on(0, 3, 2, -1), r_gl_on(0, 2, 2, 0), r_gl_on(1, 3, 2, 0), r_gl_on(1, 2, 2, 1));
    let rv = mul_all(&[&sym12, &sym34, &r14, &r13, &r24, &r23]);
    let rv_equiv = mul_all(&[&r23, &r13, &r24, &r14, &sym12, &sym34]);

    let aux = o3_aux_basis();
    let basis: Vec<QVec> = aux.iter().flat_map(|x| aux.iter().map(move |y| tensor_vec(x, y))).collect();
    let mut out = Vec::new();
    out.push(CheckOutcome::from_bool("fused product equals its reordered form", rv.equals(&rv_equiv), || {
        "the two products differ on (C^2)^4".into()
    }));

    let restricted = match restrict_to_subspace(rv.matrix(), &basis) {
        Ok(m) => m,
        Err(e) => {
            out.push(CheckOutcome::fail("V⊗V is stable under the fused operator", e.to_string()));
            return out;
        }
    };
    out.push(CheckOutcome::pass("V⊗V is stable under the fused operator"));

    let factor = RationalFunction::from_roots(&[half.clone()], &[-half.clone()]);
    let expected = r_matrix(&AlgebraKind::b(1)).matrix().scale_rf(&factor);
    out.push(CheckOutcome::from_bool("fused operator equals the scaled o3 R-matrix on V⊗V", restricted.equals(&expected), || {
        "restriction differs from (2u-1)/(2u+1) R(u)".into()
    }));

    // 1 − (P₁₄+P₂₄+P₁₃+P₂₃)/(2u+1) + P₁₃P₂₄/(u(2u+1))
    let psum = p_on(0, 3).add(&p_on(1, 3)).unwrap().add(&p_on(0, 2)).unwrap().add(&p_on(1, 2)).unwrap();
    let p1324 = p_on(0, 2).mul(&p_on(1, 3)).unwrap();
    let simple = id
        .sub(&psum.map_matrix(|m| m.scale_rf(&RationalFunction::pole(&-half.clone()).scale(&half))))
        .unwrap()
        .add(&p1324.map_matrix(|m| {
            m.scale_rf(&RationalFunction::from_roots(&[], &[Rational::zero(), -half.clone()]).scale(&half))
        }))
        .unwrap();
    let simple_ok = restrict_to_subspace(simple.matrix(), &basis).map(|m| m.equals(&restricted)).unwrap_or(false);
    out.push(CheckOutcome::from_bool("simplified expression agrees on V⊗V", simple_ok, || {
        "simplified expression differs".into()
    }));

    // R_V(u)(v₋₁⊗v₋₁) = (u−1)(2u−1)/(u(2u+1)) v₋₁⊗v₋₁
    let col = restricted.entry(0, 0);
    let lowest = RationalFunction::from_roots(&[Rational::one(), half.clone()], &[Rational::zero(), -half.clone()]);
    let only_diag = (1..9).all(|r| restricted.entry(r, 0).is_zero());
    out.push(CheckOutcome::from_bool("lowest vector eigenvalue", only_diag && col == lowest, || {
        format!("got {col}")
    }));
    out
}

/// The basis `v_i ⊗ v_j` of `(ℂ²)^{⊗4}` for the o₄ auxiliary space `V = ℂ²⊗ℂ²`.
fn o4_aux_basis() -> Vec<QVec> {
    [-2, -1, 1, 2]
        .iter()
        .map(|&i| {
            let (a, b, s) = o4_slot(i);
            e2(a, b).iter().map(|x| x * Rational::from_int(s)).collect::<QVec>()
        })
        .collect()
}

/// Fusion for o₄: `R°₁₃(u)R°₂₄(u) = (u−1)/u · (1 − P_V/u + Q_V/(u−1))` on `V⊗V`,
/// with `P_V = P₁₃P₂₄` and `Q_V = (1−P₁₃)(1−P₂₄)`.
pub fn fusion_check_o4() -> Vec<CheckOutcome> {
    let aux = o4_aux_basis();
    let basis: Vec<QVec> = aux.iter().flat_map(|x| aux.iter().map(move |y| tensor_vec(x, y))).collect();
    let rv = r_gl_on(0, 2, 1, 0).mul(&r_gl_on(1, 3, 1, 0)).expect("legs");
    let id = LegOperator::identity(c2_legs(4));
    let p13 = p_on(0, 2);
    let p24 = p_on(1, 3);
    let pv = p13.mul(&p24).unwrap();
    let qv = id.sub(&p13).unwrap().mul(&id.sub(&p24).unwrap()).unwrap();
    let kind = AlgebraKind::d(2);
    let mut out = Vec::new();
    let in_v = |op: &LegOperator| restrict_to_subspace(op.matrix(), &basis);
    let rv_v = match in_v(&rv) {
        Ok(m) => m,
        Err(e) => return vec![CheckOutcome::fail("change to the o4 basis", e.to_string())],
    };
    let p_expected = crate::algebra::build_p(&kind);
    let q_expected = crate::algebra::build_q(&kind);
    out.push(CheckOutcome::from_bool(
        "P13 P24 is the flip of V⊗V",
        in_v(&pv).map(|m| m.equals(p_expected.matrix())).unwrap_or(false),
        || "P_V mismatch".into(),
    ));
    out.push(CheckOutcome::from_bool(
        "(1-P13)(1-P24) is Q of V⊗V",
        in_v(&qv).map(|m| m.equals(q_expected.matrix())).unwrap_or(false),
        || "Q_V mismatch".into(),
    ));
    let factor = RationalFunction::from_roots(&[Rational::one()], &[Rational::zero()]);
    let expected = r_matrix(&kind).matrix().scale_rf(&factor);
    out.push(CheckOutcome::from_bool("fused operator equals the scaled o4 R-matrix", rv_v.equals(&expected), || {
        "R13 R24 differs from (u-1)/u R(u)".into()
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};
    use crate::gl2::{gl2_eval_module, Gl2EvalParams};
    use crate::yangian::check_defining_relations;

    #[test]
    fn irreps_satisfy_commutation_relations() {
        for m in [qi(0), qi(-1), qi(-2)] {
            let r = classical_irrep_sp2(&m).unwrap();
            assert!(r.gens.check_comrel() && r.gens.check_fsym());
        }
        for m in [qi(0), q(-1, 2), qi(-1), q(-3, 2)] {
            let r = classical_irrep_o3(&m).unwrap();
            assert!(r.gens.check_comrel() && r.gens.check_fsym());
            assert_eq!(r.casimir, (&m * &m - &m) * Rational::half());
        }
        for (a, b) in [(qi(0), qi(0)), (qi(0), qi(-1)), (q(1, 2), q(-1, 2))] {
            let r = classical_irrep_o4(&a, &b).unwrap();
            assert!(r.gens.check_comrel() && r.gens.check_fsym());
            assert_eq!(r.casimir, (&a * &a + &b * &b) * Rational::half() - &b);
        }
        assert_eq!(classical_irrep_o4(&qi(0), &qi(-1)).unwrap().dim(), 4);
        assert!(classical_irrep_o3(&q(1, 2)).is_err());
    }

    #[test]
    fn fusion_identities() {
        for c in fusion_check_o3().into_iter().chain(fusion_check_o4()) {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn evaluation_reps_are_representations() {
        let ir = classical_irrep_o3(&qi(-1)).unwrap();
        for a in [qi(0), qi(1)] {
            let rep = ev_rep(&ir, &a).unwrap();
            assert!(check_defining_relations(&rep).proven());
        }
        let ir = classical_irrep_o4(&qi(0), &qi(-1)).unwrap();
        assert!(check_defining_relations(&ev_rep(&ir, &qi(0)).unwrap()).proven());
        let ir = classical_irrep_sp2(&qi(-2)).unwrap();
        assert!(check_defining_relations(&ev_rep(&ir, &qi(1)).unwrap()).proven());
    }

    #[test]
    fn isomorphisms_give_representations() {
        let l = gl2_eval_module(&Gl2EvalParams::new(qi(1), qi(0), qi(0)).unwrap());
        let sp = phi_sp2(&l).unwrap();
        assert!(check_defining_relations(&sp).proven());
        assert_eq!(sp.t(-1, -1).entry(0, 0), RationalFunction::from_roots(&[qi(-2)], &[qi(0)]));
        let o3 = phi_o3(&l).unwrap();
        assert!(check_defining_relations(&o3).proven());
        assert!(o3.t(0, 0).equals(&phi_o3_t00_alternative(&l).unwrap()));
        let l2 = gl2_eval_module(&Gl2EvalParams::new(qi(2), qi(0), qi(1)).unwrap());
        let o4 = psi_o4(&l, &l2).unwrap();
        assert!(check_defining_relations(&o4).proven());
    }
}
