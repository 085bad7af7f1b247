use std::collections::BTreeMap;

use num_traits::One;

use super::Bialgebra;
use crate::error::{Error, Result};
use crate::key::{Key, Word};
use crate::lincomb::Elem;
use crate::rational::{q, Q};

/// The reduced tensor algebra on `k` letters, optionally truncated: with
/// `top = Some(d)` all words longer than `d` are zero.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    k: usize,
    top: Option<usize>,
}

impl TensorAlgebra {
    pub fn new(k: usize) -> Self {
        TensorAlgebra { k, top: None }
    }

    pub fn truncated(k: usize, top: usize) -> Self {
        TensorAlgebra { k, top: Some(top) }
    }

    fn keep(&self, w: Word) -> Elem {
        match self.top {
            Some(d) if w.len() > d => Elem::zero(),
            _ => Elem::key(Key::Word(w)),
        }
    }
}

pub(crate) fn word_of(k: &Key) -> Result<&Word> {
    match k {
        Key::Word(w) => Ok(w),
        other => Err(Error::Precondition(format!("expected a word, got {other}"))),
    }
}

/// Σ_{i=1}^{n-1} w[..i] ⊗ w[i..].
pub fn deconcat(w: &Word) -> Elem {
    Elem::from_terms((1..w.len()).map(|i| {
        let (a, b) = w.split_at(i);
        (Key::Tensor(vec![Key::Word(a), Key::Word(b)]), Q::one())
    }))
}

/// Σ over proper non-empty position subsets S of w|S ⊗ w|S^c.
pub fn unshuffle(w: &Word) -> Elem {
    let n = w.len();
    let mut out = Elem::zero();
    if n < 2 {
        return out;
    }
    for mask in 1u32..(1 << n) - 1 {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &c) in w.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a.push(c);
            } else {
                b.push(c);
            }
        }
        out.add_term(Key::Tensor(vec![Key::Word(Word(a)), Key::Word(Word(b))]), Q::one());
    }
    out
}

/// Shuffle product of two words, with multiplicities.
pub fn shuffle(u: &Word, v: &Word) -> BTreeMap<Word, usize> {
    let mut out = BTreeMap::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_rec(&u.0, &v.0, &mut buf, &mut out);
    out
}

fn shuffle_rec(u: &[u8], v: &[u8], buf: &mut Vec<u8>, out: &mut BTreeMap<Word, usize>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(Word(w)).or_insert(0) += 1;
        return;
    }
    buf.push(u[0]);
    shuffle_rec(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    shuffle_rec(u, &v[1..], buf, out);
    buf.pop();
}

fn shuffle_elem(u: &Word, v: &Word, prefix: &[u8]) -> Elem {
    Elem::from_terms(shuffle(u, v).into_iter().map(|(w, c)| {
        let mut full = prefix.to_vec();
        full.extend_from_slice(&w.0);
        (Key::Word(Word(full)), q(c as i64))
    }))
}

/// `u ≺ v`: the first letter of `u` stays first, the rest is shuffled with `v`.
pub fn half_shuffle(u: &Word, v: &Word) -> Result<Elem> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::Precondition("half-shuffle of an empty word".into()));
    }
    Ok(shuffle_elem(&Word(u.0[1..].to_vec()), v, &u.0[..1]))
}

pub(crate) fn bracket_words(a: &Word, b: &Word) -> Elem {
    Elem::key(Key::Word(a.concat(b))) - Elem::key(Key::Word(b.concat(a)))
}

pub(crate) fn cobracket_word(w: &Word) -> Elem {
    let d = deconcat(w);
    let t = d.transpose().expect("deconcatenation yields pairs");
    d - t
}

impl Bialgebra for TensorAlgebra {
    fn name(&self) -> &str {
        if self.top.is_some() {
            "nil"
        } else {
            "as"
        }
    }

    fn alphabet(&self) -> usize {
        self.k
    }

    fn basis_keys(&self, n: usize) -> Vec<Key> {
        if n == 0 || self.top.is_some_and(|d| n > d) {
            return Vec::new();
        }
        Word::all(self.k, n).into_iter().map(Key::Word).collect()
    }

    fn products(&self) -> &[&'static str] {
        &["concat", "bracket"]
    }

    fn coproducts(&self) -> &[&'static str] {
        &["deconcat", "shuffle", "cobracket"]
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("mu", "concat"), ("mul", "concat")]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("delta", "deconcat"), ("unshuffle", "shuffle")]
    }

    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem> {
        let (a, b) = (word_of(a)?, word_of(b)?);
        match sym {
            "concat" => Ok(self.keep(a.concat(b))),
            "bracket" => Ok(self.keep(a.concat(b)) - self.keep(b.concat(a))),
            _ => Err(Error::unknown("product", sym)),
        }
    }

    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem> {
        let w = word_of(a)?;
        match sym {
            "deconcat" => Ok(deconcat(w)),
            "shuffle" => Ok(unshuffle(w)),
            "cobracket" => Ok(cobracket_word(w)),
            _ => Err(Error::unknown("coproduct", sym)),
        }
    }
}

/// The free Zinbiel algebra on `k` letters: words with the half-shuffle,
/// the full shuffle, and deconcatenation.
#[derive(Clone, Debug)]
pub struct ZinbModel {
    k: usize,
}

impl ZinbModel {
    pub fn new(k: usize) -> Self {
        ZinbModel { k }
    }
}

impl Bialgebra for ZinbModel {
    fn name(&self) -> &str {
        "zinb"
    }

    fn alphabet(&self) -> usize {
        self.k
    }

    fn basis_keys(&self, n: usize) -> Vec<Key> {
        if n == 0 {
            return Vec::new();
        }
        Word::all(self.k, n).into_iter().map(Key::Word).collect()
    }

    fn products(&self) -> &[&'static str] {
        &["left", "star"]
    }

    fn coproducts(&self) -> &[&'static str] {
        &["deconcat"]
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("prec", "left"), ("half_shuffle", "left"), ("shuffle", "star")]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("delta", "deconcat")]
    }

    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem> {
        let (a, b) = (word_of(a)?, word_of(b)?);
        match sym {
            "left" => half_shuffle(a, b),
            "star" => Ok(shuffle_elem(a, b, &[])),
            _ => Err(Error::unknown("product", sym)),
        }
    }

    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem> {
        match sym {
            "deconcat" => Ok(deconcat(word_of(a)?)),
            _ => Err(Error::unknown("coproduct", sym)),
        }
    }
}
