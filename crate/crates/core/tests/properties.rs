use proptest::prelude::*;
use yangian_core::algebra::{build_q, r_matrix, AlgebraKind};
use yangian_core::exact::{q, qi, Poly, RationalFunction, Rational};
use yangian_core::gl2::*;
use yangian_core::linalg::QMat;
use yangian_core::yangian::{compute_z, vector_rep, TRep, TRepJson};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rf() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn small_kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![
        (1usize..=3).prop_map(AlgebraKind::b),
        (1usize..=4).prop_map(AlgebraKind::c),
        (2usize..=4).prop_map(AlgebraKind::d),
    ]
}

/// `(α, β)` with `α − β ∈ {0..3}` and β a multiple of 1/2.
fn gl2_pair() -> impl Strategy<Value = (Rational, Rational)> {
    (-6i64..=6, 0i64..=3).prop_map(|(b, d)| {
        let beta = q(b, 2);
        (&beta + &qi(d), beta)
    })
}

fn gl2_module(alpha: &Rational, beta: &Rational) -> TRep {
    gl2_eval_module(&Gl2EvalParams::new(alpha.clone(), beta.clone(), qi(0)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in nonzero_rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn rational_text_and_json_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&j).unwrap(), a);
    }

    #[test]
    fn poly_division_and_gcd(a in poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
        let (qu, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&qu * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.deg0() < b.deg0());
        let g = prod.gcd(&b);
        prop_assert!(prod.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn poly_shift_is_invertible(a in poly(), c in rational(), x in rational()) {
        prop_assert_eq!(a.shift(&c).shift(&-c.clone()), a.clone());
        prop_assert_eq!(a.shift(&c).eval(&x), a.eval(&(&x + &c)));
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&j).unwrap(), a);
    }

    #[test]
    fn rational_function_arithmetic(f in rf(), g in rf()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!((&(&f * &g) / &g).unwrap(), f.clone());
        }
        let j = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalFunction>(&j).unwrap(), f);
    }

    #[test]
    fn rational_function_shift_round_trip(f in rf(), c in rational()) {
        prop_assert_eq!(f.shifted(&c).shifted(&-c.clone()), f);
    }

    #[test]
    fn q_over_n_is_idempotent(k in small_kind()) {
        let m = build_q(&k).matrix().eval(&qi(0)).unwrap();
        let e = m.scale(&q(1, k.dim() as i64));
        prop_assert_eq!(e.matmul(&e), e);
    }

    #[test]
    fn r_matrix_unitarity_at_points(k in small_kind(), x in nonzero_rational()) {
        let r = r_matrix(&k);
        let kap = k.kappa();
        prop_assume!(x != kap && x != -kap.clone());
        let (a, b) = (r.matrix().eval(&x).unwrap(), r.matrix().eval(&-x.clone()).unwrap());
        let want = QMat::scalar(a.nrows(), &qi(1) - &(&x * &x).recip().unwrap());
        prop_assert_eq!(a.matmul(&b), want);
    }

    #[test]
    fn vector_module_z(k in small_kind(), c in rational()) {
        let rep = vector_rep(&k, &c);
        let w = Poly::new(vec![&k.kappa() - &c, qi(1)]);
        let want = &RationalFunction::one() - &RationalFunction::new(Poly::one(), &w * &w).unwrap();
        prop_assert_eq!(compute_z(&rep).unwrap().scalar, Some(want));
    }

    #[test]
    fn representation_json_round_trip(k in small_kind(), c in rational()) {
        let rep = vector_rep(&k, &c);
        let text = serde_json::to_string(&rep.to_json()).unwrap();
        let back = TRep::from_json(&serde_json::from_str::<TRepJson>(&text).unwrap()).unwrap();
        prop_assert!(back.same_action(&rep));
        prop_assert_eq!(back.to_json(), rep.to_json());
    }

    #[test]
    fn drinfeld_polynomial_gives_the_weight_ratio((alpha, beta) in gl2_pair()) {
        let p = drinfeld_from_pairs(&[alpha.clone()], &[beta.clone()]).unwrap().polys.remove(0);
        let hv = highest_weight_vectors(&gl2_module(&alpha, &beta));
        prop_assert_eq!(hv.len(), 1);
        let w = hv[0].weights.clone().unwrap();
        prop_assert!(drinfeld_ratio_check(&w[0], &w[1], &p, &qi(1)));
    }

    #[test]
    fn decomptp_order_satisfies_the_condition(pairs in prop::collection::vec(gl2_pair(), 1..5)) {
        let alphas: Vec<Rational> = pairs.iter().map(|p| p.0.clone()).collect();
        let betas: Vec<Rational> = pairs.iter().map(|p| p.1.clone()).collect();
        let (oa, ob) = decomptp_order(&alphas, &betas).unwrap();
        let ra: Vec<Rational> = oa.iter().map(|&i| alphas[i].clone()).collect();
        let rb: Vec<Rational> = ob.iter().map(|&i| betas[i].clone()).collect();
        prop_assert!(satisfies_decomptp(&ra, &rb));
        // re-pairing keeps the product of the Drinfeld polynomials
        let before = drinfeld_from_pairs(&alphas, &betas).unwrap();
        prop_assert_eq!(drinfeld_from_pairs(&ra, &rb).unwrap(), before);
    }

    #[test]
    fn tensor_highest_weights_multiply(a in gl2_pair(), b in gl2_pair()) {
        let (x, y) = (gl2_module(&a.0, &a.1), gl2_module(&b.0, &b.1));
        // the first basis vector is the highest one in L(α, β)
        let mut v = vec![qi(0); x.dim() * y.dim()];
        v[0] = qi(1);
        let wx = highest_weight_vectors(&x)[0].weights.clone().unwrap();
        let wy = highest_weight_vectors(&y)[0].weights.clone().unwrap();
        let want: Vec<RationalFunction> = wx.iter().zip(&wy).map(|(f, g)| f * g).collect();
        let xy = x.tensor(&y).unwrap();
        let got: Vec<Option<RationalFunction>> = [0, 1].iter().map(|&k| {
            let lab = xy.kind().labels()[k];
            eigenvalue_on(&xy.t(lab, lab), &v)
        }).collect();
        prop_assert_eq!(got, want.into_iter().map(Some).collect::<Vec<_>>());
    }
}
