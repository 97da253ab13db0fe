//! Characters of irreducible modules of so(2n+1), sp(2n) and so(2n) in the standard ε-coordinates.
//!
//! Weights are passed and returned with doubled coordinates so that spinor weights stay integral.
//! Dominance is the usual one: `λ₁ ≥ λ₂ ≥ ... ≥ λₙ`, with `λₙ ≥ 0` for types B and C and
//! `λ_{n−1} ≥ |λₙ|` for type D.

use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    B,
    C,
    D,
}

/// A weight with doubled coordinates.
pub type Weight = Vec<i64>;

/// Positive roots, doubled.
pub fn positive_roots(ty: RootSystem, n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 2;
            a[j] = -2;
            out.push(a.clone());
            a[j] = 2;
            out.push(a);
        }
        let mut a = vec![0; n];
        match ty {
            RootSystem::B => {
                a[i] = 2;
                out.push(a);
            }
            RootSystem::C => {
                a[i] = 4;
                out.push(a);
            }
            RootSystem::D => {}
        }
    }
    out
}

/// Simple roots, doubled.
pub fn simple_roots(ty: RootSystem, n: usize) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut a = vec![0; n];
            a[i] = 2;
            a[i + 1] = -2;
            a
        })
        .collect();
    let mut last = vec![0; n];
    match ty {
        RootSystem::B => last[n - 1] = 2,
        RootSystem::C => last[n - 1] = 4,
        RootSystem::D => {
            if n < 2 {
                return out;
            }
            last[n - 2] = 2;
            last[n - 1] = 2;
        }
    }
    out.push(last);
    out
}

fn ip(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64], k: i64) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Doubled ρ: half the sum of the doubled positive roots.
pub fn rho(ty: RootSystem, n: usize) -> Weight {
    let mut s = vec![0; n];
    for a in positive_roots(ty, n) {
        s = add(&s, &a, 1);
    }
    s.iter().map(|x| x / 2).collect()
}

/// Whether `lambda` (doubled) is dominant and integral.
pub fn is_dominant(ty: RootSystem, lambda: &[i64]) -> bool {
    let n = lambda.len();
    let same_parity = lambda.iter().all(|x| x.rem_euclid(2) == lambda[0].rem_euclid(2));
    let integral = match ty {
        RootSystem::C => lambda.iter().all(|x| x % 2 == 0),
        _ => same_parity,
    };
    let ordered = lambda.windows(2).all(|w| w[0] >= w[1]);
    let tail = match ty {
        RootSystem::D if n >= 2 => lambda[n - 2] >= lambda[n - 1].abs(),
        _ => lambda[n - 1] >= 0,
    };
    integral && ordered && tail
}

/// Dimension of the irreducible module with highest weight `lambda` (doubled).
pub fn weyl_dimension(ty: RootSystem, lambda: &[i64]) -> u128 {
    let n = lambda.len();
    let r = rho(ty, n);
    let lr = add(lambda, &r, 1);
    let (mut num, mut den) = (1i128, 1i128);
    for a in positive_roots(ty, n) {
        num *= ip(&lr, &a) as i128;
        den *= ip(&r, &a) as i128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "Weyl dimension must be an integer");
    num as u128
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Weight multiplicities of the irreducible module with highest weight `lambda` (doubled), by
/// Freudenthal's recursion level by level below `lambda`.
pub fn character(ty: RootSystem, lambda: &[i64]) -> BTreeMap<Weight, u64> {
    assert!(is_dominant(ty, lambda), "highest weight must be dominant");
    let n = lambda.len();
    let pos = positive_roots(ty, n);
    let simple = simple_roots(ty, n);
    let r = rho(ty, n);
    let lr = add(lambda, &r, 1);
    let top = ip(&lr, &lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    mult.insert(lambda.to_vec(), 1);
    let mut level = vec![lambda.to_vec()];
    while !level.is_empty() {
        let mut cands: Vec<Weight> = level.iter().flat_map(|m| simple.iter().map(move |a| add(m, a, -1))).collect();
        cands.sort();
        cands.dedup();
        let mut next = Vec::new();
        for mu in cands {
            let mr = add(&mu, &r, 1);
            let gap = top - ip(&mr, &mr);
            if gap <= 0 {
                continue;
            }
            let mut acc: i64 = 0;
            for a in &pos {
                let mut k = 1;
                loop {
                    let up = add(&mu, a, k);
                    let Some(&m) = mult.get(&up) else { break };
                    acc += 2 * ip(&up, a) * m as i64;
                    k += 1;
                }
            }
            assert_eq!(acc % gap, 0, "Freudenthal quotient must be integral");
            let m = acc / gap;
            if m > 0 {
                mult.insert(mu.clone(), m as u64);
                next.push(mu);
            }
        }
        level = next;
    }
    mult
}

/// Sum of the characters of several irreducible modules.
pub fn character_sum(ty: RootSystem, highest: &[Weight]) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for h in highest {
        for (w, m) in character(ty, h) {
            *out.entry(w).or_insert(0) += m;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dimension(RootSystem::B, &[1, 1]), 4);
        assert_eq!(weyl_dimension(RootSystem::B, &[2, 2]), 10);
        assert_eq!(weyl_dimension(RootSystem::C, &[2, 0]), 4);
        assert_eq!(weyl_dimension(RootSystem::C, &[2, 2]), 5);
        assert_eq!(weyl_dimension(RootSystem::D, &[2, 0, 0]), 6);
        assert_eq!(weyl_dimension(RootSystem::D, &[1, 1, -1]), 4);
        assert_eq!(weyl_dimension(RootSystem::B, &[2, 2, 2]), 35);
    }

    #[test]
    fn characters_add_up() {
        for (ty, lam) in [
            (RootSystem::B, vec![2, 2, 0]),
            (RootSystem::C, vec![4, 2, 0]),
            (RootSystem::D, vec![2, 2, 0, 0]),
            (RootSystem::B, vec![3, 1, 1]),
        ] {
            let total: u64 = character(ty, &lam).values().sum();
            assert_eq!(total as u128, weyl_dimension(ty, &lam), "{ty:?} {lam:?}");
        }
        // adjoint of so(5): zero weight has multiplicity 2
        assert_eq!(character(RootSystem::B, &[2, 2])[&vec![0, 0]], 2);
    }
}
