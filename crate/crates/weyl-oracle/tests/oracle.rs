use proptest::prelude::*;
use weyl_oracle::*;

#[test]
fn adjoint_zero_weight_has_rank_multiplicity() {
    // weights are doubled: ε1 + ε2 is (2, 2, 0, ...)
    for (ty, lam) in [
        (RootSystem::B, vec![2, 2]),
        (RootSystem::B, vec![2, 2, 0]),
        (RootSystem::C, vec![4, 0]),
        (RootSystem::D, vec![2, 2, 0]),
        (RootSystem::D, vec![2, 2, 0, 0]),
    ] {
        let n = lam.len();
        let ch = character(ty, &lam);
        assert_eq!(ch[&vec![0; n]], n as u64, "{ty:?} {lam:?}");
        assert_eq!(ch.values().sum::<u64>() as usize, positive_roots(ty, n).len() * 2 + n);
    }
}

#[test]
fn spin_modules() {
    // B3 spin: all (±1, ±1, ±1), multiplicity one
    let ch = character(RootSystem::B, &[1, 1, 1]);
    assert_eq!(ch.len(), 8);
    assert!(ch.values().all(|&m| m == 1));
    // D3 half-spins have four weights each, with an even or odd number of minus signs
    let plus = character(RootSystem::D, &[1, 1, 1]);
    let minus = character(RootSystem::D, &[1, 1, -1]);
    assert_eq!((plus.len(), minus.len()), (4, 4));
    assert!(plus.keys().all(|w| w.iter().filter(|&&x| x < 0).count() % 2 == 0));
    assert!(minus.keys().all(|w| w.iter().filter(|&&x| x < 0).count() % 2 == 1));
}

fn dominant(ty: RootSystem) -> impl Strategy<Value = Vec<i64>> {
    (2usize..=3, prop::collection::vec(0i64..=2, 3), any::<bool>(), any::<bool>()).prop_map(move |(n, steps, odd, neg)| {
        // λ_n first, then increments, in doubled coordinates
        let base = if odd && ty != RootSystem::C { 1 } else { 0 };
        let mut lam = vec![base; n];
        for k in (0..n - 1).rev() {
            lam[k] = lam[k + 1] + 2 * steps[k];
        }
        if ty == RootSystem::D && neg {
            lam[n - 1] = -lam[n - 1];
        }
        lam
    })
}

fn root_system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![Just(RootSystem::B), Just(RootSystem::C), Just(RootSystem::D)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplicities_sum_to_the_weyl_dimension((ty, lam) in root_system().prop_flat_map(|ty| (Just(ty), dominant(ty)))) {
        prop_assume!(is_dominant(ty, &lam));
        let ch = character(ty, &lam);
        prop_assert_eq!(ch.values().map(|&m| m as u128).sum::<u128>(), weyl_dimension(ty, &lam));
        prop_assert_eq!(ch.get(&lam).copied(), Some(1));
    }

    #[test]
    fn characters_are_weyl_invariant((ty, lam) in root_system().prop_flat_map(|ty| (Just(ty), dominant(ty)))) {
        prop_assume!(is_dominant(ty, &lam));
        let ch = character(ty, &lam);
        for (w, m) in &ch {
            let mut rev = w.clone();
            rev.reverse();
            prop_assert_eq!(ch.get(&rev), Some(m));
            // two sign changes are in every Weyl group; one is in B and C only
            let mut two = w.clone();
            two[0] = -two[0];
            two[1] = -two[1];
            prop_assert_eq!(ch.get(&two), Some(m));
            if ty != RootSystem::D {
                let mut one = w.clone();
                one[0] = -one[0];
                prop_assert_eq!(ch.get(&one), Some(m));
            }
        }
    }
}
