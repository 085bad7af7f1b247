//! The duplicial chain bicomplex on the free duplicial algebra on one
//! generator, and the homology of its total complex.
//!
//! In internal degree `n`, every bidegree `(p, q)` with `p + q = m` carries
//! the same space: tuples `(a₀, …, a_m)` of trees of total degree `n`. The
//! differentials merge neighbouring entries:
//!
//! ```text
//! d^h = Σ_{i=0}^{p−1}   (−1)^i (…, a_i ≻ a_{i+1}, …)     (p, q) → (p−1, q)
//! d^v = Σ_{j=p}^{p+q−1} (−1)^j (…, a_j ≺ a_{j+1}, …)     (p, q) → (p, q−1)
//! ```

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::DegreeBasis;
use crate::key::Key;
use crate::linalg::Matrix;
use crate::lincomb::Elem;
use crate::models::{product_on_slots, Bialgebra, DupModel};
use crate::rational::q;

pub struct Bicomplex {
    pub internal_degree: usize,
    /// `tuples[m]`: the basis shared by every bidegree on antidiagonal `m`.
    pub tuples: Vec<DegreeBasis>,
    pub dh: BTreeMap<(usize, usize), Matrix>,
    pub dv: BTreeMap<(usize, usize), Matrix>,
}

/// Ordered tuples of basis keys, of length `len` and total degree `n`.
fn tuples(m: &dyn Bialgebra, n: usize, len: usize) -> Vec<Key> {
    fn go(m: &dyn Bialgebra, left: usize, slots: usize, prefix: &mut Vec<Key>, out: &mut Vec<Key>) {
        if slots == 0 {
            if left == 0 {
                out.push(Key::from_factors(prefix.clone()));
            }
            return;
        }
        for d in 1..=left.saturating_sub(slots - 1) {
            for k in m.basis_keys(d) {
                prefix.push(k);
                go(m, left - d, slots - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, n, len, &mut Vec::new(), &mut out);
    out
}

fn merge_matrix(
    m: &dyn Bialgebra,
    sym: &str,
    slots: std::ops::Range<usize>,
    src: &DegreeBasis,
    dst: &DegreeBasis,
) -> Result<Matrix> {
    let mut mat = Matrix::zeros(dst.len(), src.len());
    for (j, k) in src.keys.iter().enumerate() {
        let e = Elem::key(k.clone());
        let mut img = Elem::zero();
        for i in slots.clone() {
            let sign = if i % 2 == 0 { q(1) } else { q(-1) };
            img.add_scaled(&product_on_slots(m, sym, &e, i)?, &sign);
        }
        for (i, c) in dst.coords(&img)?.into_iter().enumerate() {
            if !c.is_zero() {
                mat.set(i, j, c);
            }
        }
    }
    Ok(mat)
}

impl Bicomplex {
    pub fn build(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Range("internal degree must be at least 1".into()));
        }
        let model = DupModel::new(1);
        let tuples: Vec<DegreeBasis> = (0..n).map(|m| DegreeBasis::new(tuples(&model, n, m + 1))).collect();
        let (mut dh, mut dv) = (BTreeMap::new(), BTreeMap::new());
        for m in 1..n {
            for p in 0..=m {
                let q = m - p;
                if p >= 1 {
                    dh.insert((p, q), merge_matrix(&model, "right", 0..p, &tuples[m], &tuples[m - 1])?);
                }
                if q >= 1 {
                    dv.insert((p, q), merge_matrix(&model, "left", p..p + q, &tuples[m], &tuples[m - 1])?);
                }
            }
        }
        Ok(Bicomplex { internal_degree: n, tuples, dh, dv })
    }

    /// `dim Tot_m` for `m = 0..n−1`.
    pub fn tot_dims(&self) -> Vec<usize> {
        self.tuples.iter().enumerate().map(|(m, b)| (m + 1) * b.len()).collect()
    }

    /// `(d^h d^h = 0, d^v d^v = 0, d^h d^v + d^v d^h = 0)`, in every bidegree.
    pub fn check_differentials(&self) -> DifferentialChecks {
        let mut c = DifferentialChecks { horizontal_square: true, vertical_square: true, anticommute: true };
        for (&(p, q), d) in &self.dh {
            if let Some(d2) = self.dh.get(&(p - 1, q)) {
                c.horizontal_square &= d2.mul(d).is_zero();
            }
        }
        for (&(p, q), d) in &self.dv {
            if let Some(d2) = self.dv.get(&(p, q - 1)) {
                c.vertical_square &= d2.mul(d).is_zero();
            }
        }
        for (&(p, q), v) in &self.dv {
            if p == 0 {
                continue;
            }
            if let (Some(h_after), Some(h), Some(v_after)) =
                (self.dh.get(&(p, q - 1)), self.dh.get(&(p, q)), self.dv.get(&(p - 1, q)))
            {
                c.anticommute &= h_after.mul(v).add(&v_after.mul(h)).is_zero();
            }
        }
        c
    }

    /// The total differential `D_m : Tot_m → Tot_{m−1}`, blocks ordered by `p`.
    pub fn total_differential(&self, m: usize) -> Matrix {
        let (src, dst) = (self.tuples[m].len(), self.tuples[m - 1].len());
        let mut d = Matrix::zeros(m * dst, (m + 1) * src);
        let mut put = |block: &Matrix, row0: usize, col0: usize| {
            for i in 0..block.rows() {
                for (j, x) in block.row(i).iter().enumerate() {
                    if !x.is_zero() {
                        d.set(row0 + i, col0 + j, x.clone());
                    }
                }
            }
        };
        for p in 0..=m {
            let q = m - p;
            if let Some(h) = self.dh.get(&(p, q)) {
                put(h, (p - 1) * dst, p * src);
            }
            if let Some(v) = self.dv.get(&(p, q)) {
                put(v, p * dst, p * src);
            }
        }
        d
    }

    /// `dim H_m(Tot)` for `m = 0..n−1`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let n = self.internal_degree;
        let ranks: Vec<usize> = (0..=n).map(|m| if m == 0 || m >= n { 0 } else { self.total_differential(m).rank() }).collect();
        self.tot_dims().iter().enumerate().map(|(m, &dim)| dim - ranks[m] - ranks[m + 1]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DifferentialChecks {
    pub horizontal_square: bool,
    pub vertical_square: bool,
    pub anticommute: bool,
}

impl DifferentialChecks {
    pub fn all(&self) -> bool {
        self.horizontal_square && self.vertical_square && self.anticommute
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomologyReport {
    pub internal_degree: usize,
    pub tot_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_dims: Option<Vec<usize>>,
    pub differential_checks: DifferentialChecks,
    pub indexing: &'static str,
}

pub const SHIFT_NOTE: &str = "H_m(Tot) corresponds to duplicial homology in degree m+1";

/// Builds the bicomplex and reports its checks and, unless `check_only`,
/// the total homology.
pub fn total_homology(n: usize, check_only: bool) -> Result<HomologyReport> {
    let b = Bicomplex::build(n)?;
    let checks = b.check_differentials();
    if !checks.all() {
        return Err(Error::Precondition(format!("bicomplex differentials fail their identities: {checks:?}")));
    }
    Ok(HomologyReport {
        internal_degree: n,
        tot_dims: b.tot_dims(),
        homology_dims: (!check_only).then(|| b.homology_dims()),
        differential_checks: checks,
        indexing: SHIFT_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let b = Bicomplex::build(1).unwrap();
        assert_eq!(b.tot_dims(), [1]);
        assert_eq!(b.homology_dims(), [1]);
        let b = Bicomplex::build(2).unwrap();
        assert_eq!(b.tuples[0].len(), 2);
        assert_eq!(b.tuples[1].len(), 1);
        assert_eq!(b.tot_dims(), [2, 2]);
        assert_eq!(b.homology_dims(), [0, 0]);
        // 2-tuples of total degree 3: c₁c₂ + c₂c₁ = 4
        assert_eq!(Bicomplex::build(3).unwrap().tuples[1].len(), 4);
    }

    #[test]
    fn differentials_square_to_zero() {
        for n in 2..=4 {
            assert!(Bicomplex::build(n).unwrap().check_differentials().all(), "n = {n}");
        }
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(Bicomplex::build(0).is_err());
    }
}
