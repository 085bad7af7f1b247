//! Basis keys: words, decorated trees, and tensor tuples of them.

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Letter names, in letter-index order. The first three are `x, y, z`.
pub const LETTERS: &[u8] = b"xyzabcdefghijklmnopqrstuvw";

/// A word over an alphabet; letters are indices `0..k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter(i: u8) -> Word {
        Word(vec![i])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec()))
    }

    /// All words of length `n` over `k` letters, in canonical order.
    pub fn all(k: usize, n: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * k);
            for w in &out {
                for a in 0..k as u8 {
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    /// The word `x_0 x_1 ... x_{n-1}` of distinct letters.
    pub fn distinct(n: usize) -> Word {
        Word((0..n as u8).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            write!(f, "{}", LETTERS[a as usize] as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.bytes()
            .map(|c| {
                LETTERS
                    .iter()
                    .position(|&l| l == c)
                    .map(|p| p as u8)
                    .ok_or_else(|| Error::Parse(format!("unknown letter {:?}", c as char)))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// A basis key of some model, or a tensor of keys.
///
/// Tensor keys are always flat: `Tensor` never contains a `Tensor`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    /// A word: basis of the tensor algebra, Zinbiel and nilpotent models.
    Word(Word),
    /// A magmatic monomial: a tree with `n` leaves decorated by `n` letters.
    Mag(Tree, Word),
    /// A duplicial monomial: a tree with `n + 1` leaves and `n` letters.
    Dup(Tree, Word),
    /// An element of a tensor power.
    Tensor(Vec<Key>),
}

impl Key {
    pub fn word(w: &str) -> Key {
        Key::Word(w.parse().unwrap_or_else(|e| panic!("{e}")))
    }

    /// Internal degree: the number of letters (summed over tensor factors).
    pub fn degree(&self) -> usize {
        match self {
            Key::Word(w) | Key::Mag(_, w) | Key::Dup(_, w) => w.len(),
            Key::Tensor(ks) => ks.iter().map(Key::degree).sum(),
        }
    }

    /// Tensor factors; a plain key is a one-factor tensor.
    pub fn factors(&self) -> &[Key] {
        match self {
            Key::Tensor(ks) => ks,
            k => std::slice::from_ref(k),
        }
    }

    /// Flat tensor product of two keys.
    pub fn tensor(a: &Key, b: &Key) -> Key {
        let mut v = a.factors().to_vec();
        v.extend_from_slice(b.factors());
        Key::Tensor(v)
    }

    /// Builds a key from tensor factors; one factor gives the plain key.
    pub fn from_factors(mut v: Vec<Key>) -> Key {
        if v.len() == 1 {
            v.pop().unwrap()
        } else {
            Key::Tensor(v)
        }
    }

    /// The letters of the key, in order.
    pub fn letters(&self) -> Vec<u8> {
        match self {
            Key::Word(w) | Key::Mag(_, w) | Key::Dup(_, w) => w.0.clone(),
            Key::Tensor(ks) => ks.iter().flat_map(Key::letters).collect(),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Word(w) => write!(f, "{w}"),
            Key::Mag(t, w) | Key::Dup(t, w) => write!(f, "{t}:{w}"),
            Key::Tensor(ks) => {
                for (i, k) in ks.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::tree;

    #[test]
    fn words() {
        let w: Word = "xyz".parse().unwrap();
        assert_eq!(w.0, vec![0, 1, 2]);
        assert_eq!(w.to_string(), "xyz");
        assert_eq!(Word::all(2, 3).len(), 8);
        assert!("xq!".parse::<Word>().is_err());
    }

    #[test]
    fn tensors_flatten() {
        let a = Key::word("x");
        let b = Key::Dup(tree("(.,.)"), "y".parse().unwrap());
        let ab = Key::tensor(&a, &b);
        let abc = Key::tensor(&ab, &a);
        assert_eq!(abc.factors().len(), 3);
        assert_eq!(abc.to_string(), "x|(.,.):y|x");
        assert_eq!(abc.degree(), 3);
    }
}
