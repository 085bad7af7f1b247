//! Formal linear combinations with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::key::Key;
use crate::rational::{format_q, Q};

/// A finite map `key -> coefficient` that never stores a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

/// Elements of every model, and of their tensor powers.
pub type Elem = LinComb<Key>;

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, Q)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Extends a map on keys linearly.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible version of [`LinComb::map_linear`].
    pub fn try_map_linear<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2>>,
    ) -> Result<LinComb<K2>> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }
}

impl Elem {
    pub fn key(k: Key) -> Elem {
        Elem::basis(k)
    }

    /// Bilinear tensor product; tensor keys stay flat.
    pub fn tensor(&self, other: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(Key::tensor(a, b), ca * cb);
            }
        }
        out
    }

    /// The switching map on two-fold tensors (no signs).
    pub fn transpose(&self) -> Result<Elem> {
        self.try_map_linear(|k| match k {
            Key::Tensor(v) if v.len() == 2 => {
                Ok(Elem::key(Key::Tensor(vec![v[1].clone(), v[0].clone()])))
            }
            other => Err(Error::Precondition(format!("transpose needs pairs, got {other}"))),
        })
    }

    /// Applies a permutation of tensor slots: factor `perm[i]` of the input
    /// moves to position `i`.
    pub fn permute_slots(&self, perm: &[usize]) -> Result<Elem> {
        self.try_map_linear(|k| {
            let f = k.factors();
            if f.len() != perm.len() {
                return Err(Error::Arity { expected: perm.len(), got: f.len() });
            }
            Ok(Elem::key(Key::from_factors(perm.iter().map(|&p| f[p].clone()).collect())))
        })
    }

    /// Keys sorted by their text form, paired with canonical coefficients.
    pub fn sorted_entries(&self) -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> =
            self.terms.iter().map(|(k, c)| (k.to_string(), format_q(c))).collect();
        v.sort();
        v
    }

    /// `{serializedKey: "p/q"}` with keys sorted.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .sorted_entries()
            .into_iter()
            .map(|(k, c)| (k, serde_json::Value::String(c)))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Coordinates in an explicit key basis. Keys outside the basis are ignored.
    pub fn to_vector(&self, basis: &[Key]) -> Vec<Q> {
        basis.iter().map(|k| self.coeff(k)).collect()
    }

    /// The element with coordinates `v` in the key basis `basis`.
    pub fn from_vector(basis: &[Key], v: &[Q]) -> Elem {
        Elem::from_terms(basis.iter().cloned().zip(v.iter().cloned()))
    }

    /// Highest degree appearing in the support (0 for the zero element).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Key::degree).max().unwrap_or(0)
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        LinComb::add(&self, &rhs)
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        LinComb::sub(&self, &rhs)
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-Q::one())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{}*{k}", format_q(&a))?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
