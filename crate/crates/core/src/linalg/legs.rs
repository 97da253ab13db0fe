use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::polymat::RfMatrix;
use super::sparse::QMat;

/// Ordered labels of a basis, e.g. `-n..=-1, 1..=n` or `-n..=n` with 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SpaceIndex {
    labels: Vec<i32>,
}

impl SpaceIndex {
    pub fn new(labels: Vec<i32>) -> Result<Self> {
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("labels must be strictly increasing".into()));
        }
        Ok(SpaceIndex { labels })
    }

    /// `{-n..-1, 1..n}` plus 0 when `with_zero`.
    pub fn symmetric(n: usize, with_zero: bool) -> Self {
        let n = n as i32;
        let labels = (-n..=n).filter(|&i| i != 0 || with_zero).collect();
        SpaceIndex { labels }
    }

    /// `{1..n}`.
    pub fn range(n: usize) -> Self {
        SpaceIndex { labels: (1..=n as i32).collect() }
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn pos(&self, label: i32) -> Result<usize> {
        self.labels.binary_search(&label).map_err(|_| Error::Index(label))
    }

    pub fn label(&self, pos: usize) -> i32 {
        self.labels[pos]
    }
}

/// How a partial transpose acts on matrix units of one leg.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransposeKind {
    /// `e_ij ↦ θ_ij e_{-j,-i}` with `θ = 1` (orthogonal) or `sgn i · sgn j` (symplectic).
    Theta { symplectic: bool },
    /// `e_ij ↦ e_ji`.
    Standard,
}

impl TransposeKind {
    fn image(&self, i: i32, j: i32) -> (i32, i32, i64) {
        match self {
            TransposeKind::Standard => (j, i, 1),
            TransposeKind::Theta { symplectic } => {
                let th = if *symplectic { (i.signum() * j.signum()) as i64 } else { 1 };
                (-j, -i, th)
            }
        }
    }
}

/// Operator-valued rational function on a tensor product of indexed spaces, row-major composite indexing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LegOperator {
    legs: Vec<SpaceIndex>,
    mat: RfMatrix,
}

pub fn total_dim(legs: &[SpaceIndex]) -> usize {
    legs.iter().map(|l| l.dim()).product()
}

/// Splits a composite index into per-leg positions.
pub fn decode(legs: &[SpaceIndex], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; legs.len()];
    for (k, l) in legs.iter().enumerate().rev() {
        out[k] = idx % l.dim();
        idx /= l.dim();
    }
    out
}

pub fn encode(legs: &[SpaceIndex], pos: &[usize]) -> usize {
    legs.iter().zip(pos).fold(0, |acc, (l, p)| acc * l.dim() + p)
}

/// Applies a coefficientwise relabeling of a constant matrix on `legs`.
fn remap(m: &QMat, legs: &[SpaceIndex], f: &dyn Fn(&[usize], &[usize]) -> Option<(Vec<usize>, Vec<usize>, Rational)>) -> QMat {
    let d = m.nrows();
    let mut out = QMat::zeros(d, d);
    for (r, c, v) in m.iter() {
        let (rr, cc) = (decode(legs, r), decode(legs, c));
        if let Some((nr, nc, s)) = f(&rr, &cc) {
            out.add_at(encode(legs, &nr), encode(legs, &nc), &(v * &s));
        }
    }
    out
}

impl LegOperator {
    pub fn new(legs: Vec<SpaceIndex>, mat: RfMatrix) -> Result<Self> {
        let d = total_dim(&legs);
        if mat.nrows() != d || mat.ncols() != d {
            return Err(Error::Shape(format!("matrix is {}x{}, legs give {d}", mat.nrows(), mat.ncols())));
        }
        Ok(LegOperator { legs, mat })
    }

    pub fn constant(legs: Vec<SpaceIndex>, m: QMat) -> Result<Self> {
        LegOperator::new(legs, RfMatrix::constant(m))
    }

    pub fn identity(legs: Vec<SpaceIndex>) -> Self {
        let d = total_dim(&legs);
        LegOperator { legs, mat: RfMatrix::identity(d) }
    }

    pub fn legs(&self) -> &[SpaceIndex] {
        &self.legs
    }

    pub fn matrix(&self) -> &RfMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> RfMatrix {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    fn same_legs(&self, o: &LegOperator) -> Result<()> {
        if self.legs != o.legs {
            return Err(Error::Shape("operators act on different legs".into()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &LegOperator) -> Result<LegOperator> {
        self.same_legs(o)?;
        Ok(LegOperator { legs: self.legs.clone(), mat: self.mat.mul(&o.mat) })
    }

    pub fn add(&self, o: &LegOperator) -> Result<LegOperator> {
        self.same_legs(o)?;
        Ok(LegOperator { legs: self.legs.clone(), mat: self.mat.add(&o.mat) })
    }

    pub fn sub(&self, o: &LegOperator) -> Result<LegOperator> {
        self.same_legs(o)?;
        Ok(LegOperator { legs: self.legs.clone(), mat: self.mat.sub(&o.mat) })
    }

    pub fn scale(&self, c: &Rational) -> LegOperator {
        LegOperator { legs: self.legs.clone(), mat: self.mat.scale(c) }
    }

    pub fn map_matrix(&self, f: impl FnOnce(&RfMatrix) -> RfMatrix) -> LegOperator {
        LegOperator { legs: self.legs.clone(), mat: f(&self.mat) }
    }

    pub fn equals(&self, o: &LegOperator) -> bool {
        self.legs == o.legs && self.mat.equals(&o.mat)
    }
}

/// Tensor product of operators; legs are concatenated.
pub fn kron(a: &LegOperator, b: &LegOperator) -> LegOperator {
    let mut legs = a.legs.clone();
    legs.extend(b.legs.iter().cloned());
    LegOperator { legs, mat: a.mat.kron(&b.mat) }
}

/// Places `op` on the ambient legs at `targets` (in the order of `op`'s legs), identity elsewhere.
pub fn embed_on_legs(op: &LegOperator, targets: &[usize], ambient: &[SpaceIndex]) -> Result<LegOperator> {
    if targets.len() != op.legs.len() {
        return Err(Error::Shape("number of target legs".into()));
    }
    for (k, &t) in targets.iter().enumerate() {
        if t >= ambient.len() || ambient[t] != op.legs[k] {
            return Err(Error::Shape(format!("leg {t} does not match operator leg {k}")));
        }
        if targets[..k].contains(&t) {
            return Err(Error::Shape(format!("leg {t} repeated")));
        }
    }
    let others: Vec<usize> = (0..ambient.len()).filter(|i| !targets.contains(i)).collect();
    let other_legs: Vec<SpaceIndex> = others.iter().map(|&i| ambient[i].clone()).collect();
    let odim = total_dim(&other_legs);
    let d = total_dim(ambient);
    let embed = |m: &QMat| {
        let mut trip = Vec::with_capacity(m.nnz() * odim);
        for o in 0..odim {
            let opos = decode(&other_legs, o);
            for (r, c, v) in m.iter() {
                let (rp, cp) = (decode(&op.legs, r), decode(&op.legs, c));
                let mut rr = vec![0; ambient.len()];
                let mut cc = vec![0; ambient.len()];
                for (k, &t) in targets.iter().enumerate() {
                    rr[t] = rp[k];
                    cc[t] = cp[k];
                }
                for (k, &t) in others.iter().enumerate() {
                    rr[t] = opos[k];
                    cc[t] = opos[k];
                }
                trip.push((encode(ambient, &rr), encode(ambient, &cc), v.clone()));
            }
        }
        QMat::from_triplets(d, d, trip)
    };
    let mat = if op.mat.is_zero() {
        RfMatrix::zeros(d, d)
    } else {
        op.mat.map_coeffs(embed)
    };
    Ok(LegOperator { legs: ambient.to_vec(), mat })
}

/// Partial transpose on one leg.
pub fn partial_transpose(op: &LegOperator, leg: usize, kind: TransposeKind) -> Result<LegOperator> {
    if leg >= op.legs.len() {
        return Err(Error::Shape(format!("no leg {leg}")));
    }
    let space = op.legs[leg].clone();
    let legs = op.legs.clone();
    let f = move |r: &[usize], c: &[usize]| -> Option<(Vec<usize>, Vec<usize>, Rational)> {
        let (i, j) = (space.label(r[leg]), space.label(c[leg]));
        let (ni, nj, s) = kind.image(i, j);
        let mut nr = r.to_vec();
        let mut nc = c.to_vec();
        nr[leg] = space.pos(ni).ok()?;
        nc[leg] = space.pos(nj).ok()?;
        Some((nr, nc, Rational::from_int(s)))
    };
    let mat = op.mat.map_coeffs(|m| remap(m, &legs, &f));
    Ok(LegOperator { legs: op.legs.clone(), mat })
}

/// Matrix unit `e_ij` on an indexed space.
pub fn matrix_unit(space: &SpaceIndex, i: i32, j: i32) -> Result<QMat> {
    let d = space.dim();
    Ok(QMat::from_triplets(d, d, [(space.pos(i)?, space.pos(j)?, Rational::one())]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip(space: &SpaceIndex) -> LegOperator {
        let d = space.dim();
        let trip = (0..d).flat_map(|i| (0..d).map(move |j| (i * d + j, j * d + i, Rational::one())));
        LegOperator::constant(vec![space.clone(), space.clone()], QMat::from_triplets(d * d, d * d, trip)).unwrap()
    }

    #[test]
    fn kron_identities() {
        let s = SpaceIndex::range(2);
        let k = kron(&LegOperator::identity(vec![s.clone()]), &LegOperator::identity(vec![s.clone()]));
        assert!(k.equals(&LegOperator::identity(vec![s.clone(), s])));
    }

    #[test]
    fn disjoint_embeddings_commute() {
        let s = SpaceIndex::range(2);
        let amb = vec![s.clone(); 4];
        let p = flip(&s);
        let p12 = embed_on_legs(&p, &[0, 1], &amb).unwrap();
        let p34 = embed_on_legs(&p, &[2, 3], &amb).unwrap();
        assert!(p12.mul(&p34).unwrap().equals(&p34.mul(&p12).unwrap()));
        let p13 = embed_on_legs(&p, &[0, 2], &amb).unwrap();
        assert!(!p13.equals(&p12));
    }

    #[test]
    fn transpose_involution() {
        let s = SpaceIndex::symmetric(1, true);
        let p = flip(&s);
        let kind = TransposeKind::Theta { symplectic: false };
        let q = partial_transpose(&p, 0, kind).unwrap();
        assert!(!q.equals(&p));
        assert!(partial_transpose(&q, 0, kind).unwrap().equals(&p));
        let e = LegOperator::constant(vec![SpaceIndex::range(2)], matrix_unit(&SpaceIndex::range(2), 1, 2).unwrap()).unwrap();
        let et = partial_transpose(&e, 0, TransposeKind::Standard).unwrap();
        assert_eq!(et.matrix().eval(&Rational::zero()).unwrap().get(1, 0), Rational::one());
    }
}
