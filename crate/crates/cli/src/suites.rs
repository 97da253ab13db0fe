//! The verification suites behind `yangian-kit suite`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use weyl_oracle::{character_sum, RootSystem};
use yangian_core::algebra::{check_ybe, operator_identities, r_matrix, r_matrix_gl, AlgebraKind, Family};
use yangian_core::exact::{q, qi, Rational, RationalFunction};
use yangian_core::gl2::{gl2_eval_module, Gl2EvalParams};
use yangian_core::hw::{
    antisym_checks, antisym_expected_tuple, fdim_conditions, highest_weight_of, multiplicativity_checks,
    sp_fundamental_checks, verma_consistency, HighestWeightData,
};
use yangian_core::lowrank::{
    classical_irrep, ev_highest_weight, ev_rep, fusion_check_o3, fusion_check_o4, phi_o3, phi_o3_t00_alternative,
    phi_sp2, psi_o4,
};
use yangian_core::report::CheckOutcome;
use yangian_core::spinor::{
    check_form_covariance, check_fsqua, lower_expected_factor, lower_pairing, raising_coefficient, raising_expected,
    spinor_highest_weight, spinor_lie, spinor_trep, tensor_weights, vp_checks, wp_decomposition, Parity,
};
use yangian_core::yangian::{check_defining_relations, compute_z, tensor_rep, vector_rep};
use yangian_core::{Error, Result};

use crate::report::{run_jobs, Job, SuiteReport};

/// Ceiling on `--max-rank` for suites that build spinor tensor squares.
pub const SPINOR_RANK_CEILING: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Ybe,
    Rtt,
    Fusion,
    LowrankEv,
    Classify,
    Fundamental,
    Spinor,
    SpFundamental,
    All,
}

impl SuiteName {
    pub const EACH: [SuiteName; 8] = [
        SuiteName::Ybe,
        SuiteName::Rtt,
        SuiteName::Fusion,
        SuiteName::LowrankEv,
        SuiteName::Classify,
        SuiteName::Fundamental,
        SuiteName::Spinor,
        SuiteName::SpFundamental,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Ybe => "ybe",
            SuiteName::Rtt => "rtt",
            SuiteName::Fusion => "fusion",
            SuiteName::LowrankEv => "lowrank-ev",
            SuiteName::Classify => "classify",
            SuiteName::Fundamental => "fundamental",
            SuiteName::Spinor => "spinor",
            SuiteName::SpFundamental => "sp-fundamental",
            SuiteName::All => "all",
        }
    }

    fn uses_spinors(self) -> bool {
        matches!(self, SuiteName::Fundamental | SuiteName::Spinor | SuiteName::All)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SuiteName::EACH
            .iter()
            .chain(std::iter::once(&SuiteName::All))
            .find(|n| n.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub max_rank: usize,
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { max_rank: 3, timings: false }
    }
}

/// Runs a suite; `Err` means the parameters are out of range.
pub fn run_suite(name: SuiteName, params: &SuiteParams) -> std::result::Result<SuiteReport, String> {
    if params.max_rank == 0 {
        return Err("--max-rank must be at least 1".into());
    }
    if name.uses_spinors() && params.max_rank > SPINOR_RANK_CEILING {
        return Err(format!("suite {name} allows --max-rank up to {SPINOR_RANK_CEILING}"));
    }
    if name == SuiteName::All {
        let parts = SuiteName::EACH.iter().map(|&s| run_suite(s, params)).collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(SuiteReport::merge("all", parts));
    }
    let r = params.max_rank;
    let jobs = match name {
        SuiteName::Ybe => ybe_jobs(r),
        SuiteName::Rtt => rtt_jobs(r),
        SuiteName::Fusion => vec![Job::new("fusion o3", || Ok(fusion_check_o3())), Job::new("fusion o4", || Ok(fusion_check_o4()))],
        SuiteName::LowrankEv => lowrank_jobs(),
        SuiteName::Classify => classify_jobs(r),
        SuiteName::Fundamental => fundamental_jobs(r),
        SuiteName::Spinor => spinor_jobs(r),
        SuiteName::SpFundamental => sp_fundamental_jobs(),
        SuiteName::All => unreachable!(),
    };
    Ok(run_jobs(name.as_str(), jobs, params.timings))
}

/// o_{2n+1}, sp_{2n} for `1 ≤ n ≤ r` and o_{2n} for `2 ≤ n ≤ r`.
pub fn kinds_up_to(r: usize) -> Vec<AlgebraKind> {
    let mut out = Vec::new();
    for family in [Family::B, Family::C, Family::D] {
        for n in 1..=r {
            if let Ok(k) = AlgebraKind::new(family, n) {
                out.push(k);
            }
        }
    }
    out
}

fn ybe_jobs(r: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in kinds_up_to(r) {
        jobs.push(Job::new(format!("YBE {k}"), move || Ok(vec![CheckOutcome::from_proof(&check_ybe(&r_matrix(&k), &format!("YBE {k}")))])));
        jobs.push(Job::new(format!("operator identities {k}"), move || Ok(operator_identities(&k))));
    }
    for big_n in 2..=r + 1 {
        jobs.push(Job::new(format!("YBE gl{big_n}"), move || {
            Ok(vec![CheckOutcome::from_proof(&check_ybe(&r_matrix_gl(big_n), &format!("YBE gl{big_n}")))])
        }));
    }
    jobs
}

/// `1 − 1/(u − c + κ)²`.
pub fn vector_z(kind: &AlgebraKind, c: &Rational) -> RationalFunction {
    let p = c - &kind.kappa();
    RationalFunction::from_roots(&[&p + &qi(1), &p - &qi(1)], &[p.clone(), p])
}

fn rtt_jobs(r: usize) -> Vec<Job> {
    let shifts = [qi(0), qi(1), q(5, 2)];
    let mut jobs = Vec::new();
    for k in kinds_up_to(r) {
        for c in shifts.clone() {
            jobs.push(Job::new(format!("RTT sigma_{c} {k}"), move || {
                let rep = vector_rep(&k, &c);
                let proof = check_defining_relations(&rep);
                let z = compute_z(&rep)?;
                let want = vector_z(&k, &c);
                Ok(vec![
                    CheckOutcome::from_proof(&proof),
                    CheckOutcome::from_bool(format!("z(u) of sigma_{c} ({k})"), z.scalar.as_ref() == Some(&want) && z.full_relation, || {
                        format!("got {:?}", z.scalar)
                    }),
                ])
            }));
        }
        let pair = shifts.clone();
        jobs.push(Job::new(format!("RTT sigma_0 x sigma_1 {k}"), move || {
            let (a, b) = (vector_rep(&k, &pair[0]), vector_rep(&k, &pair[1]));
            let rep = tensor_rep(&[&a, &b])?;
            let z = compute_z(&rep)?;
            let want = &vector_z(&k, &pair[0]) * &vector_z(&k, &pair[1]);
            Ok(vec![
                CheckOutcome::from_proof(&check_defining_relations(&rep)),
                CheckOutcome::from_bool(format!("z(u) of sigma_0 x sigma_1 ({k})"), z.scalar.as_ref() == Some(&want), || {
                    format!("got {:?}", z.scalar)
                }),
            ])
        }));
    }
    jobs
}

fn gl2(alpha: Rational, beta: Rational) -> Result<yangian_core::yangian::TRep> {
    Ok(gl2_eval_module(&Gl2EvalParams::new(alpha, beta, qi(0))?))
}

/// The evaluation weights exercised by the low-rank suites.
pub fn evaluation_cases() -> Vec<(AlgebraKind, Vec<Rational>)> {
    let mut out = Vec::new();
    for m in [0, -1, -2] {
        out.push((AlgebraKind::c(1), vec![qi(m)]));
    }
    for m in [qi(0), q(-1, 2), qi(-1), q(-3, 2)] {
        out.push((AlgebraKind::b(1), vec![m]));
    }
    for (a, b) in [(qi(0), qi(0)), (qi(0), qi(-1)), (q(1, 2), q(-1, 2))] {
        out.push((AlgebraKind::d(2), vec![a, b]));
    }
    out
}

fn lowrank_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for d in 0..=3i64 {
        jobs.push(Job::new(format!("low-rank isomorphisms on L({d},0)"), move || {
            let l = gl2(qi(d), qi(0))?;
            let sp2 = phi_sp2(&l)?;
            let o3 = phi_o3(&l)?;
            let alt = phi_o3_t00_alternative(&l)?;
            let o4 = psi_o4(&l, &gl2(qi(3 - d), qi(0))?)?;
            Ok(vec![
                CheckOutcome::from_proof(&check_defining_relations(&sp2)),
                CheckOutcome::from_proof(&check_defining_relations(&o3)),
                CheckOutcome::from_bool(format!("phi_o3 t_00 alternative form (L({d},0))"), o3.t(0, 0).equals(&alt), || {
                    "t_00 differs".into()
                }),
                CheckOutcome::from_proof(&check_defining_relations(&o4)),
            ])
        }));
    }
    for (k, mu) in evaluation_cases() {
        for a in [qi(0), qi(1)] {
            let mu = mu.clone();
            jobs.push(Job::new(format!("evaluation module {k} mu={mu:?} a={a}"), move || evaluation_checks(&k, &mu, &a)));
        }
    }
    for (k, mu) in evaluation_cases() {
        if mu.iter().all(|m| m.is_zero()) {
            continue;
        }
        jobs.push(Job::new(format!("tensor multiplicativity {k} mu={mu:?}"), move || {
            let a = ev_rep(&classical_irrep(&k, &mu)?, &qi(0))?;
            let b = ev_rep(&classical_irrep(&k, &mu)?, &q(7, 3))?;
            multiplicativity_checks(&a, &b)
        }));
    }
    jobs
}

/// Relations, highest weight against the closed formula, and Verma consistency for `V(μ)_a`.
pub fn evaluation_checks(kind: &AlgebraKind, mu: &[Rational], a: &Rational) -> Result<Vec<CheckOutcome>> {
    let rep = ev_rep(&classical_irrep(kind, mu)?, a)?;
    let tag = format!("{kind} mu={mu:?} a={a}");
    let want = HighestWeightData::new(*kind, ev_highest_weight(kind, mu, a)?)?;
    let got = highest_weight_of(&rep).map(|(_, hw)| hw);
    let verma = match &got {
        Ok(hw) => verma_consistency(hw),
        Err(_) => Err(0),
    };
    Ok(vec![
        CheckOutcome::from_proof(&check_defining_relations(&rep)),
        CheckOutcome::from_bool(format!("highest weight ({tag})"), got.as_ref().ok() == Some(&want), || format!("got {got:?}")),
        CheckOutcome::from_bool(format!("Verma consistency ({tag})"), verma.is_ok(), || format!("fails at i = {verma:?}")),
    ])
}

fn classify_jobs(r: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in kinds_up_to(r) {
        if k.family != Family::C {
            jobs.push(Job::new(format!("spinor classification {k}"), move || {
                let mut out = Vec::new();
                let parities: &[Parity] = if k.family == Family::B { &[Parity::All] } else { &[Parity::Even, Parity::Odd] };
                for &par in parities {
                    let hw = spinor_highest_weight(&k, par)?;
                    let mut want = vec![yangian_core::exact::Poly::one(); k.n];
                    let slot = if par == Parity::Odd { 1 } else { 0 };
                    want[slot] = yangian_core::exact::Poly::linear_root(&Rational::half());
                    let got = fdim_conditions(&hw);
                    out.push(CheckOutcome::from_bool(
                        format!("Drinfeld polynomials of the spinor module {k} {par:?}"),
                        got.as_ref().map(|t| t.polys == want).unwrap_or(false),
                        || format!("got {got:?}"),
                    ));
                }
                Ok(out)
            }));
        }
        for m in 1..=k.n.min(3) {
            jobs.push(Job::new(format!("antisymmetrizer {k} m={m}"), move || antisym_checks(&k, m, &antisym_expected_tuple(&k, m)?)));
        }
    }
    jobs
}

/// Converts weights given as eigenvalues of `F_11, ..., F_nn` to doubled standard coordinates,
/// `ε_k = −2·F_{n+1−k,n+1−k}`, in which dominant weights are nonincreasing.
pub fn to_standard(w: &BTreeMap<Vec<Rational>, usize>) -> BTreeMap<Vec<i64>, u64> {
    w.iter()
        .map(|(k, m)| (k.iter().rev().map(|x| (-(x * &qi(2))).to_i64().expect("half-integral weight")).collect(), *m as u64))
        .collect()
}

/// Doubled standard coordinates of `μ^{(p)}`.
pub fn mu_standard(n: usize, p: usize) -> Vec<i64> {
    (0..n).map(|k| if k < n - p { 2 } else { 0 }).collect()
}

fn root_system(kind: &AlgebraKind) -> RootSystem {
    match kind.family {
        Family::B => RootSystem::B,
        Family::C => RootSystem::C,
        Family::D => RootSystem::D,
    }
}

/// `W_p` against `⊕_i V(μ^{(p+2i)})` from the character oracle.
pub fn wp_check(kind: &AlgebraKind, p: usize) -> Result<CheckOutcome> {
    let w = wp_decomposition(kind, p)?;
    let highest: Vec<Vec<i64>> = (0..=(kind.n - p) / 2).map(|i| mu_standard(kind.n, p + 2 * i)).collect();
    let oracle = character_sum(root_system(kind), &highest);
    let total: u64 = oracle.values().sum();
    Ok(CheckOutcome::from_bool(format!("W_{p} decomposition {kind} (dim {})", w.dim), to_standard(&w.weights) == oracle, || {
        format!("dim {} vs oracle dim {total}", w.dim)
    }))
}

/// The whole tensor square against `⊕ V(μ^{(s)})` over the `s` it should contain.
pub fn tensor_total_check(kind: &AlgebraKind, second: Parity) -> Result<CheckOutcome> {
    let got = to_standard(&tensor_weights(kind, second)?);
    let n = kind.n;
    let ss: Vec<usize> = match (kind.family, second) {
        (Family::D, Parity::Even) => (0..=n).filter(|s| s % 2 == 0).collect(),
        (Family::D, _) => (0..=n).filter(|s| s % 2 == 1).collect(),
        _ => (0..=n).collect(),
    };
    let highest: Vec<Vec<i64>> = ss.iter().map(|&s| mu_standard(n, s)).collect();
    let oracle = character_sum(root_system(kind), &highest);
    Ok(CheckOutcome::from_bool(format!("tensor square decomposition {kind} {second:?}"), got == oracle, || {
        "weight multisets differ".into()
    }))
}

fn fundamental_jobs(r: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in kinds_up_to(r) {
        match k.family {
            Family::B => {
                jobs.push(Job::new(format!("tensor square {k}"), move || Ok(vec![tensor_total_check(&k, Parity::All)?])));
                for p in 1..k.n {
                    jobs.push(Job::new(format!("W_{p} {k}"), move || Ok(vec![wp_check(&k, p)?])));
                }
            }
            Family::D => {
                for par in [Parity::Even, Parity::Odd] {
                    jobs.push(Job::new(format!("tensor square {k} {par:?}"), move || Ok(vec![tensor_total_check(&k, par)?])));
                }
                for p in 2..k.n {
                    jobs.push(Job::new(format!("W_{p} {k}"), move || Ok(vec![wp_check(&k, p)?])));
                }
            }
            Family::C => {}
        }
    }
    jobs
}

/// The raising identity at the vanishing boundary and one point off it, and the lower pairing at
/// two points off its boundary.
pub fn raising_and_pairing_checks(kind: &AlgebraKind, s: usize) -> Result<Vec<CheckOutcome>> {
    let boundary = raising_expected(kind, s, &qi(0)) * qi(-1);
    let mut out = Vec::new();
    for a in [boundary.clone(), &boundary + &qi(1), qi(0)] {
        let got = raising_coefficient(kind, s, &a)?;
        let want = raising_expected(kind, s, &a);
        out.push(CheckOutcome::from_bool(format!("raising identity {kind} s={s} a={a}"), got.as_ref() == Some(&want), || {
            format!("got {got:?}, want {want}")
        }));
    }
    for a in [qi(0), qi(1)] {
        let want = lower_expected_factor(kind, s, &a);
        let (pairing, norm) = lower_pairing(kind, s, &a)?;
        // the odd o_{2n} pairing comes out with the opposite sign
        let sign = if kind.family == Family::D && s % 2 == 1 { qi(-1) } else { qi(1) };
        let ok = !want.is_zero() && !pairing.is_zero() && pairing == &(&want * &norm) * &sign;
        out.push(CheckOutcome::from_bool(format!("lower pairing {kind} s={s} a={a}"), ok, || {
            format!("pairing {pairing}, norm {norm}, factor {want}")
        }));
    }
    Ok(out)
}

fn spinor_jobs(r: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in kinds_up_to(r) {
        if k.family == Family::C {
            continue;
        }
        let parities: Vec<Parity> = if k.family == Family::B { vec![Parity::All] } else { vec![Parity::Even, Parity::Odd] };
        for par in parities {
            jobs.push(Job::new(format!("spinor generators {k} {par:?}"), move || {
                let g = spinor_lie(&k, par)?;
                let tag = format!("{k} {par:?}");
                let mut out = vec![
                    CheckOutcome::from_bool(format!("F squared identity ({tag})"), check_fsqua(&g), || "fails".into()),
                    CheckOutcome::from_bool(format!("F_ij + theta F_-j,-i = 0 ({tag})"), g.check_fsym(), || "fails".into()),
                    CheckOutcome::from_bool(format!("commutation relations ({tag})"), g.check_comrel(), || "fails".into()),
                    CheckOutcome::from_bool(format!("invariant form ({tag})"), check_form_covariance(&k, par)?, || "fails".into()),
                ];
                if k.n <= 3 {
                    out.push(CheckOutcome::from_proof(&check_defining_relations(&spinor_trep(&k, par)?)));
                }
                Ok(out)
            }));
        }
        for p in 0..=k.n {
            jobs.push(Job::new(format!("v_{p} {k}"), move || vp_checks(&k, p)));
        }
        for s in 2..=k.n {
            jobs.push(Job::new(format!("raising and pairing {k} s={s}"), move || raising_and_pairing_checks(&k, s)));
        }
    }
    jobs
}

fn sp_fundamental_jobs() -> Vec<Job> {
    let k = AlgebraKind::c(2);
    let mut jobs = Vec::new();
    for p in 0..k.n {
        for a in [qi(0), qi(1)] {
            jobs.push(Job::new(format!("W_{p}({a}) {k}"), move || sp_fundamental_checks(&k, p, &a)));
        }
    }
    jobs
}

/// Parses `"2,1,-1/2"`.
pub fn parse_rationals(s: &str) -> std::result::Result<Vec<Rational>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<Rational>()).collect()
}
