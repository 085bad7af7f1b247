//! Degreewise matrices of linear endomorphisms of a graded based space.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::key::Key;
use crate::linalg::Matrix;
use crate::lincomb::Elem;
use crate::models::Bialgebra;
use crate::rational::Q;

/// An ordered key basis of one degree, with a reverse index.
#[derive(Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    pub keys: Vec<Key>,
    index: HashMap<Key, usize>,
}

impl DegreeBasis {
    pub fn new(keys: Vec<Key>) -> Self {
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        DegreeBasis { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn position(&self, k: &Key) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Coordinates of `e`; fails if `e` leaves the span of the basis.
    pub fn coords(&self, e: &Elem) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); self.keys.len()];
        for (k, c) in e.iter() {
            let i = self
                .position(k)
                .ok_or_else(|| Error::Grading(format!("{k} is outside the declared basis")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn elem(&self, v: &[Q]) -> Elem {
        Elem::from_vector(&self.keys, v)
    }
}

/// Bases for degrees `1..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    degrees: BTreeMap<usize, Arc<DegreeBasis>>,
}

impl GradedBasis {
    pub fn of_model(m: &dyn Bialgebra, max_degree: usize) -> Self {
        GradedBasis {
            degrees: (1..=max_degree).map(|n| (n, Arc::new(DegreeBasis::new(m.basis_keys(n))))).collect(),
        }
    }

    pub fn degree(&self, n: usize) -> Option<&Arc<DegreeBasis>> {
        self.degrees.get(&n)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, &Arc<DegreeBasis>)> {
        self.degrees.iter().map(|(n, b)| (*n, b))
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.keys().next_back().copied().unwrap_or(0)
    }
}

/// A degree-preserving linear map given by one square matrix per degree.
/// Column `j` of the degree-`n` matrix holds the coordinates of the image of
/// the `j`-th basis key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedEndo {
    basis: GradedBasis,
    matrices: BTreeMap<usize, Matrix>,
}

impl GradedEndo {
    pub fn identity(basis: &GradedBasis) -> Self {
        GradedEndo {
            basis: basis.clone(),
            matrices: basis.degrees().map(|(n, b)| (n, Matrix::identity(b.len()))).collect(),
        }
    }

    pub fn zero(basis: &GradedBasis) -> Self {
        GradedEndo {
            basis: basis.clone(),
            matrices: basis.degrees().map(|(n, b)| (n, Matrix::zeros(b.len(), b.len()))).collect(),
        }
    }

    /// The linear map sending each basis key `k` to `f(k)`.
    pub fn from_fn(basis: &GradedBasis, mut f: impl FnMut(&Key) -> Result<Elem>) -> Result<Self> {
        let mut matrices = BTreeMap::new();
        for (n, b) in basis.degrees() {
            let mut m = Matrix::zeros(b.len(), b.len());
            for (j, k) in b.keys.iter().enumerate() {
                let v = b.coords(&f(k)?)?;
                for (i, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        m.set(i, j, x);
                    }
                }
            }
            matrices.insert(n, m);
        }
        Ok(GradedEndo { basis: basis.clone(), matrices })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn matrix(&self, n: usize) -> Option<&Matrix> {
        self.matrices.get(&n)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, &Matrix)> {
        self.matrices.iter().map(|(n, m)| (*n, m))
    }

    /// Image of one basis key.
    pub fn apply_key(&self, k: &Key) -> Result<Elem> {
        let n = k.degree();
        let b = self.basis.degree(n).ok_or_else(|| Error::Grading(format!("degree {n} not covered")))?;
        let j = b.position(k).ok_or_else(|| Error::Grading(format!("{k} not in basis")))?;
        Ok(b.elem(&self.matrices[&n].column(j)))
    }

    pub fn apply(&self, e: &Elem) -> Result<Elem> {
        e.try_map_linear(|k| self.apply_key(k))
    }

    fn check_same(&self, other: &GradedEndo) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Grading("maps are defined on different graded bases".into()));
        }
        Ok(())
    }

    fn zip(&self, other: &GradedEndo, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Result<Self> {
        self.check_same(other)?;
        let matrices = self.matrices.iter().map(|(n, m)| (*n, f(m, &other.matrices[n]))).collect();
        Ok(GradedEndo { basis: self.basis.clone(), matrices })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedEndo) -> Result<Self> {
        self.zip(other, |a, b| a.mul(b))
    }

    pub fn add(&self, other: &GradedEndo) -> Result<Self> {
        self.zip(other, Matrix::add)
    }

    pub fn sub(&self, other: &GradedEndo) -> Result<Self> {
        self.zip(other, Matrix::sub)
    }

    pub fn scale(&self, c: &Q) -> Self {
        GradedEndo {
            basis: self.basis.clone(),
            matrices: self.matrices.iter().map(|(n, m)| (*n, m.scale(c))).collect(),
        }
    }

    pub fn rank(&self, n: usize) -> usize {
        self.matrices.get(&n).map_or(0, Matrix::rank)
    }

    pub fn is_idempotent(&self) -> bool {
        self.matrices.values().all(|m| &m.mul(m) == m)
    }

    /// Images of the basis keys of degree `n` (the columns as elements).
    pub fn image_columns(&self, n: usize) -> Vec<Elem> {
        match (self.basis.degree(n), self.matrices.get(&n)) {
            (Some(b), Some(m)) => (0..m.cols()).map(|j| b.elem(&m.column(j))).collect(),
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::TensorAlgebra;
    use crate::rational::q;

    #[test]
    fn identity_and_composition() {
        let m = TensorAlgebra::new(2);
        let b = GradedBasis::of_model(&m, 3);
        let id = GradedEndo::identity(&b);
        let rev = GradedEndo::from_fn(&b, |k| {
            let mut w = k.letters();
            w.reverse();
            Ok(Elem::key(Key::Word(crate::key::Word(w))))
        })
        .unwrap();
        assert_eq!(rev.compose(&id).unwrap(), rev);
        assert_eq!(id.compose(&rev).unwrap(), rev);
        assert_eq!(rev.compose(&rev).unwrap(), id);
        assert!(id.is_idempotent());
        assert!(!rev.is_idempotent());
        let e = Elem::key(Key::word("xy")).scale(&q(3));
        assert_eq!(rev.apply(&e).unwrap(), Elem::key(Key::word("yx")).scale(&q(3)));
    }

    #[test]
    fn mismatched_bases_rejected() {
        let b2 = GradedBasis::of_model(&TensorAlgebra::new(2), 2);
        let b3 = GradedBasis::of_model(&TensorAlgebra::new(2), 3);
        assert!(GradedEndo::identity(&b2).compose(&GradedEndo::identity(&b3)).is_err());
    }
}
