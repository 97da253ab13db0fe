use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// Evaluation grid for a two-variable polynomial identity.
///
/// A polynomial of degree at most `deg_u` in `u` and `deg_v` in `v` vanishes identically when it
/// vanishes at `deg_u + 1` distinct values of `u`, each paired with `deg_v + 1` distinct values of `v`.
#[derive(Clone, Debug, Default)]
pub struct GridSpec {
    pub deg_u: usize,
    pub deg_v: usize,
    /// Values of `u` to avoid.
    pub bad_u: Vec<Rational>,
    /// Values of `v` to avoid.
    pub bad_v: Vec<Rational>,
    /// Values of `u - v` to avoid.
    pub bad_diff: Vec<Rational>,
    /// Values of `u + v` to avoid.
    pub bad_sum: Vec<Rational>,
}

impl GridSpec {
    pub fn new(deg_u: usize, deg_v: usize) -> Self {
        GridSpec { deg_u, deg_v, ..Default::default() }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.deg_u + 1, self.deg_v + 1)
    }

    /// Grid points in row order: `u` runs over 1, 2, 3, ..., `v` over 1/3, 4/3, 7/3, ...,
    /// skipping the excluded values.
    pub fn points(&self) -> Vec<(Rational, Rational)> {
        let mut pts = Vec::new();
        let mut us = Vec::new();
        let mut k = 1i64;
        while us.len() <= self.deg_u {
            let u = Rational::from_int(k);
            if !self.bad_u.contains(&u) {
                us.push(u);
            }
            k += 1;
        }
        for u in us {
            let mut count = 0;
            let mut k = 0i64;
            while count <= self.deg_v {
                let v = Rational::new(3 * k + 1, 3);
                k += 1;
                if self.bad_v.contains(&v) || self.bad_diff.contains(&(&u - &v)) || self.bad_sum.contains(&(&u + &v)) {
                    continue;
                }
                pts.push((u.clone(), v));
                count += 1;
            }
        }
        pts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofStatus {
    Proven,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub u: Rational,
    pub v: Rational,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    pub identity_name: String,
    pub grid_dims: (usize, usize),
    pub status: ProofStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl ProofReport {
    pub fn proven(&self) -> bool {
        self.status == ProofStatus::Proven
    }

    pub fn failure(name: &str, dims: (usize, usize), u: Rational, v: Rational, detail: String) -> Self {
        ProofReport {
            identity_name: name.to_string(),
            grid_dims: dims,
            status: ProofStatus::Counterexample,
            counterexample: Some(Counterexample { u, v, detail }),
        }
    }
}

/// Checks an identity at every grid point. `check` returns `None` when both sides agree at
/// `(u, v)` and a description of the discrepancy otherwise. The first failing point in grid
/// order is reported.
pub fn prove_identity_grid<F>(name: &str, spec: &GridSpec, check: F) -> ProofReport
where
    F: Fn(&Rational, &Rational) -> Option<String> + Sync,
{
    let pts = spec.points();
    let results: Vec<Option<String>> = pts.par_iter().map(|(u, v)| check(u, v)).collect();
    let dims = spec.dims();
    for ((u, v), r) in pts.into_iter().zip(results) {
        if let Some(detail) = r {
            return ProofReport::failure(name, dims, u, v, detail);
        }
    }
    ProofReport { identity_name: name.to_string(), grid_dims: dims, status: ProofStatus::Proven, counterexample: None }
}

/// Number of bits of `|x|`.
pub fn bits(x: &BigInt) -> u64 {
    x.bits()
}

/// Whether a quantity bounded by `2^b` fits comfortably in `i128` arithmetic.
pub fn fits_i128(b: u64) -> bool {
    b < 125
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_avoids_excluded_values() {
        let mut g = GridSpec::new(2, 1);
        g.bad_u.push(Rational::from_int(2));
        g.bad_diff.push(Rational::new(2, 3));
        let pts = g.points();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|(u, v)| *u != Rational::from_int(2) && u - v != Rational::new(2, 3)));
    }

    #[test]
    fn reports_first_failure() {
        let g = GridSpec::new(1, 1);
        let r = prove_identity_grid("u = v", &g, |u, v| (u != v).then(|| "differ".into()));
        assert!(!r.proven());
        let r = prove_identity_grid("trivial", &g, |_, _| None);
        assert!(r.proven());
    }
}
