//! Spinor representations Λ_n of o_{2n+1} and Λ_n^± of o_{2n}, their tensor squares as
//! X(o_N)-modules and the highest vectors `v_p` generating the fundamental modules.
//!
//! For o_{2n+1} the operators `F_{0,i} = ∂_i/√2`, `F_{i,0} = ξ_i/√2` are made rational by working in
//! the basis `b_S = (√2)^{|S|} ξ_S`. In that basis `ξ_i` acts as `X_i/√2` and `∂_i` as `√2 D_i`,
//! where `X_i, D_i` are the matrices in the monomial basis, so every `F_ij` has rational entries.
//! The vector `v_p` has the same coefficients in the `b ⊗ b` basis up to the factor `(√2)^{−p}`;
//! identities relating `v_s` and `v_{s−2}` pick up a factor 2, and the bilinear form becomes
//! `⟨b_S, b_T⟩ = 2^{|S|} δ_ST`. Results are reported in the monomial normalization.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraKind, Family, LieGenerators};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::gl2::eigenvalue_on;
use crate::hw::{cyclic_span, HighestWeightData};
use crate::linalg::{is_zero_vec, proportionality, PolyMat, QMat, QVec};
use crate::report::CheckOutcome;
use crate::yangian::{RepKind, TRep};

/// Which monomials span the space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, mask: u32) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => mask.count_ones() % 2 == 0,
            Parity::Odd => mask.count_ones() % 2 == 1,
        }
    }

    /// The parity of `p`.
    pub fn of(p: usize) -> Parity {
        if p % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Monomials `ξ_S`, `S ⊆ {1..n}` (bit `i−1` of the mask marks `i ∈ S`), in increasing mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorSpace {
    pub n: usize,
    pub parity: Parity,
    basis: Vec<u32>,
}

impl SpinorSpace {
    pub fn new(n: usize, parity: Parity) -> Self {
        let basis = (0..1u32 << n).filter(|&m| parity.admits(m)).collect();
        SpinorSpace { n, parity, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn pos(&self, mask: u32) -> Option<usize> {
        self.basis.binary_search(&mask).ok()
    }

    fn indices(&self) -> Vec<usize> {
        self.basis.iter().map(|&m| m as usize).collect()
    }
}

/// Multiplication operators `ξ_i` and left derivatives `∂_i`, `i = 1..n`, on all of Λ_n in the
/// monomial basis.
pub fn fermionic_ops(n: usize) -> (Vec<QMat>, Vec<QMat>) {
    let d = 1usize << n;
    let sign = |mask: u32, i: usize| {
        let before = (mask & ((1u32 << (i - 1)) - 1)).count_ones();
        Rational::from_int(if before % 2 == 0 { 1 } else { -1 })
    };
    let mut xs = Vec::with_capacity(n);
    let mut ds = Vec::with_capacity(n);
    for i in 1..=n {
        let bit = 1u32 << (i - 1);
        xs.push(QMat::from_triplets(
            d,
            d,
            (0..d as u32).filter(|m| m & bit == 0).map(|m| ((m | bit) as usize, m as usize, sign(m, i))),
        ));
        ds.push(QMat::from_triplets(
            d,
            d,
            (0..d as u32).filter(|m| m & bit != 0).map(|m| ((m & !bit) as usize, m as usize, sign(m, i))),
        ));
    }
    (xs, ds)
}

fn check_kind(kind: &AlgebraKind, parity: Parity) -> Result<()> {
    match kind.family {
        Family::C => Err(Error::KindMismatch("spinor representations exist for o_N only".into())),
        Family::B if parity != Parity::All => Err(Error::Precondition("o_{2n+1} acts on all of Λ_n".into())),
        _ => Ok(()),
    }
}

/// The `F_ij` on Λ_n (o_{2n+1}, rescaled basis) or on Λ_n^± (o_{2n}).
pub fn spinor_lie(kind: &AlgebraKind, parity: Parity) -> Result<LieGenerators> {
    check_kind(kind, parity)?;
    let n = kind.n;
    let (xs, ds) = fermionic_ops(n);
    let full = 1usize << n;
    let b = kind.family == Family::B;
    let half = Rational::half();
    let (two, one_half) = if b { (Rational::from_int(2), half.clone()) } else { (Rational::one(), Rational::one()) };
    let x = |i: i32| &xs[i as usize - 1];
    let dd = |i: i32| &ds[i as usize - 1];
    let base = |i: i32, j: i32| -> QMat {
        match (i.signum(), j.signum()) {
            (1, 1) => {
                let m = x(i).matmul(dd(j));
                if i == j {
                    m.sub(&QMat::scalar(full, half.clone()))
                } else {
                    m
                }
            }
            (-1, 1) => dd(j).matmul(dd(-i)).scale(&two),
            (1, -1) => x(-j).matmul(x(i)).scale(&one_half),
            (0, 1) => dd(j).clone(),
            (1, 0) => x(i).scale(&half),
            _ => unreachable!("handled by symmetry"),
        }
    };
    let f = |i: i32, j: i32| -> QMat {
        match (i.signum(), j.signum()) {
            (0, 0) => QMat::zeros(full, full),
            (-1, -1) | (0, -1) | (-1, 0) => base(-j, -i).neg(),
            _ => base(i, j),
        }
    };
    let space = SpinorSpace::new(n, parity);
    let idx = space.indices();
    Ok(LieGenerators::from_fn(*kind, |i, j| {
        let m = f(i, j);
        if parity == Parity::All {
            m
        } else {
            m.submatrix(&idx, &idx)
        }
    }))
}

/// `(F²)_ij = (κ/2 + 1/4) δ_ij + κ F_ij` for all `i, j`.
pub fn check_fsqua(gens: &LieGenerators) -> bool {
    let kind = gens.kind;
    let labels = kind.labels();
    let d = gens.module_dim();
    let kappa = kind.kappa();
    let c = &(&kappa * &Rational::half()) + &Rational::new(1, 4);
    labels.iter().all(|&i| {
        labels.iter().all(|&j| {
            let mut sq = QMat::zeros(d, d);
            for &k in &labels {
                sq = sq.add(&gens.get(i, k).matmul(gens.get(k, j)));
            }
            let mut want = gens.get(i, j).scale(&kappa);
            if i == j {
                want = want.add(&QMat::scalar(d, c.clone()));
            }
            sq == want
        })
    })
}

/// `t_ij(u) ↦ δ_ij + F_ij u^{-1}`.
pub fn spinor_trep(kind: &AlgebraKind, parity: Parity) -> Result<TRep> {
    let g = spinor_lie(kind, parity)?;
    let d = g.module_dim();
    let den = Poly::x();
    let mut num = Vec::new();
    for i in kind.labels() {
        for j in kind.labels() {
            let mut m = PolyMat::constant(g.get(i, j).clone());
            if i == j {
                m = m.add(&PolyMat::from_poly_times(&den, &QMat::identity(d)));
            }
            num.push(m);
        }
    }
    TRep::new(RepKind::X(*kind), d, den, num)
}

/// Highest weight of Λ_n (or Λ_n^+) and, with `parity = Odd`, of Λ_n^−.
pub fn spinor_highest_weight(kind: &AlgebraKind, parity: Parity) -> Result<HighestWeightData> {
    check_kind(kind, parity)?;
    let plus = RationalFunction::from_roots(&[-Rational::half()], &[Rational::zero()]);
    let minus = RationalFunction::from_roots(&[Rational::half()], &[Rational::zero()]);
    let odd = parity == Parity::Odd;
    HighestWeightData::from_fn(*kind, |i| {
        let up = if odd && (i == 1 || i == -1) { i > 0 } else { i < 0 };
        if i == 0 {
            RationalFunction::one()
        } else if up {
            plus.clone()
        } else {
            minus.clone()
        }
    })
}

/// The spaces hosting `v_p`: `Λ_n ⊗ Λ_n` for o_{2n+1}; `Λ_n^+ ⊗ Λ_n^+` (even `p`) or `Λ_n^+ ⊗ Λ_n^−`
/// (odd `p`) for o_{2n}.
pub fn vp_spaces(kind: &AlgebraKind, p: usize) -> (SpinorSpace, SpinorSpace) {
    match kind.family {
        Family::D => (SpinorSpace::new(kind.n, Parity::Even), SpinorSpace::new(kind.n, Parity::of(p))),
        _ => (SpinorSpace::new(kind.n, Parity::All), SpinorSpace::new(kind.n, Parity::All)),
    }
}

/// `v_p = Σ (−1)^{j_1+...+j_l} ξ_I ⊗ ξ_J` over splittings `I ⊔ J = {1..p}`, keeping only the terms
/// with `ξ_I ∈ first` and `ξ_J ∈ second`. Coefficients are taken in whatever basis the spaces carry.
pub fn vp_vector(p: usize, first: &SpinorSpace, second: &SpinorSpace) -> Result<QVec> {
    if p > first.n {
        return Err(Error::Precondition(format!("p = {p} exceeds n = {}", first.n)));
    }
    let mut v = vec![Rational::zero(); first.dim() * second.dim()];
    let all = (1u32 << p) - 1;
    for i_mask in 0..=all {
        let j_mask = all & !i_mask;
        let (Some(a), Some(b)) = (first.pos(i_mask), second.pos(j_mask)) else {
            continue;
        };
        let jsum: u32 = (0..p as u32).filter(|k| j_mask & (1 << k) != 0).map(|k| k + 1).sum();
        v[a * second.dim() + b] = Rational::from_int(if jsum % 2 == 0 { 1 } else { -1 });
    }
    Ok(v)
}

/// Λ⊗Λ with `t_ij(u)(η⊗ζ) = Σ_k (δ_ik + F_ik (u−a)^{-1})η ⊗ (δ_kj + F_kj u^{-1})ζ`.
pub fn spinor_tensor(kind: &AlgebraKind, a: &Rational, first: Parity, second: Parity) -> Result<TRep> {
    spinor_trep(kind, first)?.shift(a).tensor(&spinor_trep(kind, second)?)
}

/// The tensor module hosting `v_p`, with the vector itself.
pub fn vp_module(kind: &AlgebraKind, p: usize, a: &Rational) -> Result<(TRep, QVec)> {
    let (s1, s2) = vp_spaces(kind, p);
    let rep = spinor_tensor(kind, a, s1.parity, s2.parity)?;
    Ok((rep, vp_vector(p, &s1, &s2)?))
}

/// The parameter `a` at which `v_p` is a highest vector: `p − 1/2` for o_{2n+1}, `p − 1` for o_{2n}.
pub fn singular_shift(kind: &AlgebraKind, p: usize) -> Rational {
    let p = Rational::from_int(p as i64);
    match kind.family {
        Family::D => p - Rational::one(),
        _ => p - Rational::half(),
    }
}

/// Expected `t_ii(u)` eigenvalue on `v_p` at the singular shift, for the labels where it is known:
/// `0 ≤ i ≤ n` (o_{2n+1}) or `−1 ≤ i ≤ n` (o_{2n}). For o_{2n} with `p = 0` the label `−1` is left
/// out: there `F_{−1,−1} v_0 = v_0`, which the first band's formula contradicts.
pub fn vp_expected_eigenvalue(kind: &AlgebraKind, p: usize, i: i32) -> Option<RationalFunction> {
    let pq = Rational::from_int(p as i64);
    let h = Rational::half();
    let (lo, shift, pole) = match kind.family {
        Family::B => (0, &pq, &pq - &h),
        Family::D => (if p == 0 { 1 } else { -1 }, &(&pq - &h), &pq - &Rational::one()),
        Family::C => return None,
    };
    if i < lo {
        return None;
    }
    let second = if i <= p as i32 { -h.clone() } else { h.clone() };
    Some(RationalFunction::from_roots(&[shift.clone(), second], &[Rational::zero(), pole]))
}

/// Eigenvalues of the `t_ii(u)` on `v_p` at the singular shift.
#[derive(Clone, Debug)]
pub struct VpEigenvalues {
    pub p: usize,
    /// `t_ij(u) v_p = 0` for all `i < j`.
    pub annihilated: bool,
    /// Per label: the eigenvalue, or `None` if `v_p` is not an eigenvector.
    pub eigenvalues: Vec<(i32, Option<RationalFunction>)>,
}

pub fn vp_eigenvalues(kind: &AlgebraKind, p: usize) -> Result<VpEigenvalues> {
    let (rep, v) = vp_module(kind, p, &singular_shift(kind, p))?;
    let labels = kind.labels();
    let annihilated = labels.iter().enumerate().all(|(k, &i)| {
        labels[k + 1..].iter().all(|&j| rep.num(i, j).coeffs().iter().all(|c| is_zero_vec(&c.matvec(&v))))
    });
    let eigenvalues = labels.iter().map(|&i| (i, eigenvalue_on(&rep.t(i, i), &v))).collect();
    Ok(VpEigenvalues { p, annihilated, eigenvalues })
}

/// Compares [`vp_eigenvalues`] with the known formulas; labels without a formula are only reported.
pub fn vp_checks(kind: &AlgebraKind, p: usize) -> Result<Vec<CheckOutcome>> {
    let e = vp_eigenvalues(kind, p)?;
    let tag = format!("{kind} p={p}");
    let mut out = vec![CheckOutcome::from_bool(format!("raising operators kill v_p ({tag})"), e.annihilated, || {
        "nonzero image".into()
    })];
    for (i, got) in &e.eigenvalues {
        let Some(want) = vp_expected_eigenvalue(kind, p, *i) else {
            continue;
        };
        out.push(CheckOutcome::from_bool(format!("t_{i}{i}(u) eigenvalue on v_p ({tag})"), got.as_ref() == Some(&want), || {
            format!("got {got:?}, want {want}")
        }));
    }
    Ok(out)
}

/// Factor converting `v_s`, `v_{s−2}` relations from the rescaled basis back to monomials.
fn basis_factor(kind: &AlgebraKind) -> Rational {
    if kind.family == Family::B {
        Rational::from_int(2)
    } else {
        Rational::one()
    }
}

/// `c` with `t_{−s+1,s}^{(2)} v_s = c·v_{s−2}` in the module with parameter `a`; `None` when the
/// image is not proportional to `v_{s−2}`.
pub fn raising_coefficient(kind: &AlgebraKind, s: usize, a: &Rational) -> Result<Option<Rational>> {
    if s < 2 || s > kind.n {
        return Err(Error::Precondition(format!("s = {s} must lie in 2..={}", kind.n)));
    }
    let (rep, vs) = vp_module(kind, s, a)?;
    let (s1, s2) = vp_spaces(kind, s);
    let low = vp_vector(s - 2, &s1, &s2)?;
    let si = s as i32;
    let img = rep.coeff(-si + 1, si, 2).matvec(&vs);
    Ok(proportionality(&img, &low).map(|c| &c / &basis_factor(kind)))
}

/// The closed form of the raising coefficient: `a − s + 1/2` (o_{2n+1}) or `a − s + 1` (o_{2n}).
pub fn raising_expected(kind: &AlgebraKind, s: usize, a: &Rational) -> Rational {
    let base = a - &Rational::from_int(s as i64);
    match kind.family {
        Family::D => base + Rational::one(),
        _ => base + Rational::half(),
    }
}

/// Gram matrix diagonal of `⟨ξ_S, ξ_T⟩ = δ_ST` in the basis of the space.
fn form_diagonal(kind: &AlgebraKind, space: &SpinorSpace) -> Vec<Rational> {
    space
        .basis()
        .iter()
        .map(|m| if kind.family == Family::B { Rational::from_int(1 << m.count_ones()) } else { Rational::one() })
        .collect()
}

/// `⟨F_ij η, ζ⟩ = ⟨η, F_ji ζ⟩` for all `i, j` and basis vectors.
pub fn check_form_covariance(kind: &AlgebraKind, parity: Parity) -> Result<bool> {
    let g = spinor_lie(kind, parity)?;
    let space = SpinorSpace::new(kind.n, parity);
    let diag = form_diagonal(kind, &space);
    let gram = QMat::from_triplets(space.dim(), space.dim(), diag.into_iter().enumerate().map(|(k, x)| (k, k, x)));
    Ok(kind
        .labels()
        .iter()
        .all(|&i| kind.labels().iter().all(|&j| g.get(i, j).transpose().matmul(&gram) == gram.matmul(g.get(j, i)))))
}

/// `⟨η₁⊗η₂, ζ₁⊗ζ₂⟩ = ⟨η₁,ζ₂⟩⟨η₂,ζ₁⟩` on the full `Λ_n ⊗ Λ_n`.
fn swapped_pairing(kind: &AlgebraKind, x: &[Rational], y: &[Rational]) -> Rational {
    let space = SpinorSpace::new(kind.n, Parity::All);
    let d = space.dim();
    let diag = form_diagonal(kind, &space);
    let mut acc = Rational::zero();
    for a in 0..d {
        for b in 0..d {
            let xv = &x[a * d + b];
            let yv = &y[b * d + a];
            if !xv.is_zero() && !yv.is_zero() {
                acc += &(&(xv * yv) * &diag[a]) * &diag[b];
            }
        }
    }
    acc
}

/// The pairing `⟨t_{s,−s+1}^{(2)} v_{s−2}, v_s⟩` in the monomial normalization, computed on the full
/// `Λ_n ⊗ Λ_n` with parameter `a`, together with `⟨v_{s−2}, v_{s−2}⟩`.
///
/// For o_{2n} with odd `s` the swapped form pairs `Λ^+⊗Λ^−` with `Λ^−⊗Λ^+` and vanishes on
/// `v_s ∈ Λ^+⊗Λ^−`; the pairing is then taken against the swapped vector `P v_s ∈ Λ^−⊗Λ^+`, which
/// is what the unswapped form computes. That form is covariant as well, and with it the pairing
/// comes out as `(a + s − 1)⟨v_{s−2}, v_{s−2}⟩`, the negative of the even case.
pub fn lower_pairing(kind: &AlgebraKind, s: usize, a: &Rational) -> Result<(Rational, Rational)> {
    if s < 2 || s > kind.n {
        return Err(Error::Precondition(format!("s = {s} must lie in 2..={}", kind.n)));
    }
    let full = SpinorSpace::new(kind.n, Parity::All);
    let rep = spinor_tensor(kind, a, Parity::All, Parity::All)?;
    let vs = vp_vector(s, &full, &full)?;
    let low = vp_vector(s - 2, &full, &full)?;
    let (vs, low) = match kind.family {
        Family::D => {
            let (s1, s2) = vp_spaces(kind, s);
            (embed(&vp_vector(s, &s1, &s2)?, &s1, &s2), embed(&vp_vector(s - 2, &s1, &s2)?, &s1, &s2))
        }
        _ => (vs, low),
    };
    let si = s as i32;
    let img = rep.coeff(si, -si + 1, 2).matvec(&low);
    let odd_d = kind.family == Family::D && s % 2 == 1;
    let target = if odd_d { swap_factors(&vs, full.dim()) } else { vs };
    let low_target = if odd_d { swap_factors(&low, full.dim()) } else { low.clone() };
    let f = basis_factor(kind);
    // (√2)^{−(s−2)}(√2)^{−s} = 2^{1−s} and (√2)^{−2(s−2)} = 2^{2−s} in the rescaled basis
    let scale = |e: i32| if f.is_one() { Rational::one() } else { Rational::from_int(2).pow(e) };
    let pairing = &swapped_pairing(kind, &img, &target) * &scale(1 - si);
    let norm = &swapped_pairing(kind, &low, &low_target) * &scale(2 - si);
    Ok((pairing, norm))
}

/// The expected pairing factor: `−a − s + 1/2` (o_{2n+1}) or `−a − s + 1` (o_{2n}).
pub fn lower_expected_factor(kind: &AlgebraKind, s: usize, a: &Rational) -> Rational {
    raising_expected(kind, s, &-a)
}

fn embed(v: &[Rational], s1: &SpinorSpace, s2: &SpinorSpace) -> QVec {
    let full = 1usize << s1.n;
    let mut out = vec![Rational::zero(); full * full];
    for (a, &m1) in s1.basis().iter().enumerate() {
        for (b, &m2) in s2.basis().iter().enumerate() {
            out[m1 as usize * full + m2 as usize] = v[a * s2.dim() + b].clone();
        }
    }
    out
}

fn swap_factors(v: &[Rational], d: usize) -> QVec {
    let mut out = vec![Rational::zero(); d * d];
    for a in 0..d {
        for b in 0..d {
            out[b * d + a] = v[a * d + b].clone();
        }
    }
    out
}

/// `W_p = X(o_N) v_p` at the singular shift: its dimension and its o_N weight multiset
/// (eigenvalues of `F_11..F_nn`).
#[derive(Clone, Debug)]
pub struct WpModule {
    pub p: usize,
    pub dim: usize,
    pub weights: BTreeMap<Vec<Rational>, usize>,
}

pub fn wp_decomposition(kind: &AlgebraKind, p: usize) -> Result<WpModule> {
    let ok = match kind.family {
        Family::B => p >= 1 && p < kind.n,
        Family::D => p >= 2 && p < kind.n,
        Family::C => false,
    };
    if !ok {
        return Err(Error::Precondition(format!("p = {p} is outside the fundamental range for {kind}")));
    }
    let (rep, v) = vp_module(kind, p, &singular_shift(kind, p))?;
    let basis = cyclic_span(&rep, &v);
    let sub = rep.restrict(&basis)?;
    Ok(WpModule { p, dim: basis.len(), weights: sub.weight_decomposition()? })
}

/// Weight multiset of a whole tensor product `Λ ⊗ Λ` (o_{2n+1}) or `Λ^+ ⊗ Λ^±` (o_{2n}).
pub fn tensor_weights(kind: &AlgebraKind, second: Parity) -> Result<BTreeMap<Vec<Rational>, usize>> {
    let first = if kind.family == Family::D { Parity::Even } else { Parity::All };
    spinor_tensor(kind, &Rational::zero(), first, second)?.weight_decomposition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};
    use crate::yangian::check_defining_relations;

    #[test]
    fn derivatives() {
        let (xs, ds) = fermionic_ops(2);
        // ∂₂(ξ₁ξ₂) = −ξ₁
        assert_eq!(ds[1].get(0b01, 0b11), qi(-1));
        assert_eq!(ds[0].get(0, 0b01), qi(1));
        let (xs3, ds3) = fermionic_ops(3);
        for i in 0..3 {
            for j in 0..3 {
                let ac = xs3[i].matmul(&ds3[j]).add(&ds3[j].matmul(&xs3[i]));
                let want = if i == j { QMat::identity(8) } else { QMat::zeros(8, 8) };
                assert_eq!(ac, want);
            }
        }
        assert!(xs[0].matmul(&xs[1]).add(&xs[1].matmul(&xs[0])).is_zero());
    }

    #[test]
    fn spinor_generators() {
        for (k, par) in [(AlgebraKind::b(2), Parity::All), (AlgebraKind::d(2), Parity::Even), (AlgebraKind::d(3), Parity::Odd)] {
            let g = spinor_lie(&k, par).unwrap();
            assert!(g.check_fsym(), "{k}");
            assert!(g.check_comrel(), "{k}");
            assert!(check_fsqua(&g), "{k}");
            assert!(check_form_covariance(&k, par).unwrap());
        }
    }

    #[test]
    fn spinor_relations_o5() {
        let k = AlgebraKind::b(2);
        let r = spinor_trep(&k, Parity::All).unwrap();
        assert!(check_defining_relations(&r).proven());
        let (_, hw) = crate::hw::highest_weight_of(&r).unwrap();
        assert_eq!(hw, spinor_highest_weight(&k, Parity::All).unwrap());
    }

    #[test]
    fn vp_o5() {
        let k = AlgebraKind::b(2);
        for p in 0..=2 {
            assert!(vp_checks(&k, p).unwrap().iter().all(|c| c.passed), "p = {p}");
        }
        assert_eq!(raising_coefficient(&k, 2, &qi(0)).unwrap(), Some(q(-3, 2)));
        let (pairing, norm) = lower_pairing(&k, 2, &q(3, 2)).unwrap();
        assert_eq!((pairing, norm), (qi(-3), qi(1)));
    }

    #[test]
    fn vp_o6() {
        let k = AlgebraKind::d(3);
        for p in 0..=3 {
            let c = vp_checks(&k, p).unwrap();
            assert!(c.iter().all(|c| c.passed), "p = {p}: {c:?}");
        }
        assert_eq!(raising_coefficient(&k, 2, &qi(1)).unwrap(), Some(qi(0)));
        for a in [qi(0), q(1, 2), qi(2)] {
            let (pairing, norm) = lower_pairing(&k, 2, &a).unwrap();
            assert_eq!(pairing, &lower_expected_factor(&k, 2, &a) * &norm);
            let (pairing, norm) = lower_pairing(&k, 3, &a).unwrap();
            assert_eq!(pairing, -&(&lower_expected_factor(&k, 3, &a) * &norm));
        }
    }
}
