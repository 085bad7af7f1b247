use super::tensor::{bracket_words, cobracket_word, word_of};
use super::Bialgebra;
use crate::error::{Error, Result};
use crate::key::{Key, Word};
use crate::linalg::independent_subset;
use crate::lincomb::Elem;

/// Left-nested bracket `[..[x_{i1}, x_{i2}], ..., x_{in}]` expanded into words.
pub fn left_nested_bracket(letters: &[u8]) -> Elem {
    let mut cur = Elem::key(Key::Word(Word(vec![letters[0]])));
    for &a in &letters[1..] {
        let next = Word(vec![a]);
        cur = cur.map_linear(|k| match k {
            Key::Word(w) => bracket_words(w, &next),
            _ => unreachable!("words only"),
        });
    }
    cur
}

/// A basis of the degree-`n` Lie polynomials on `k` letters, obtained from the
/// span of all left-nested brackets by greedy exact-rank selection.
pub fn lie_subspace(k: usize, n: usize) -> Vec<Elem> {
    if n == 0 {
        return Vec::new();
    }
    let words: Vec<Key> = Word::all(k, n).into_iter().map(Key::Word).collect();
    let candidates: Vec<Elem> = Word::all(k, n).iter().map(|w| left_nested_bracket(&w.0)).collect();
    let vectors: Vec<_> = candidates.iter().map(|e| e.to_vector(&words)).collect();
    independent_subset(&vectors, words.len()).into_iter().map(|i| candidates[i].clone()).collect()
}

/// Lie polynomials inside the tensor algebra, with the commutator bracket and
/// the cobracket `δ − τδ` (δ = deconcatenation).
#[derive(Clone, Debug)]
pub struct LieModel {
    k: usize,
}

impl LieModel {
    pub fn new(k: usize) -> Self {
        LieModel { k }
    }
}

impl Bialgebra for LieModel {
    fn name(&self) -> &str {
        "lie"
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

    fn basis(&self, n: usize) -> Vec<Elem> {
        lie_subspace(self.k, n)
    }

    fn products(&self) -> &[&'static str] {
        &["bracket"]
    }

    fn coproducts(&self) -> &[&'static str] {
        &["cobracket"]
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("mu", "bracket")]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("delta", "cobracket")]
    }

    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem> {
        match sym {
            "bracket" => Ok(bracket_words(word_of(a)?, word_of(b)?)),
            _ => Err(Error::unknown("product", sym)),
        }
    }

    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem> {
        match sym {
            "cobracket" => Ok(cobracket_word(word_of(a)?)),
            _ => Err(Error::unknown("coproduct", sym)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(lie_subspace(2, 1).len(), 2);
        let l2 = lie_subspace(2, 2);
        assert_eq!(l2.len(), 1);
        assert_eq!(l2[0], Elem::key(Key::word("xy")) - Elem::key(Key::word("yx")));
        assert_eq!(lie_subspace(2, 3).len(), 2);
    }
}
