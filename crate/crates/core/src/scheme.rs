//! n-ary cooperations and product monomials built from binary ones, and
//! the splitting schemes that pair them.

use std::fmt;

use crate::error::{Error, Result};
use crate::key::Key;
use crate::lincomb::Elem;
use crate::models::{coproduct, product, Bialgebra};
use crate::rational::{factorial, one, Q};
use crate::tree::Tree;

/// An n-ary cooperation: a binary tree of coproducts, with `Id` leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoopTree {
    Id,
    Split(&'static str, Box<CoopTree>, Box<CoopTree>),
}

impl CoopTree {
    pub fn split(sym: &'static str, l: CoopTree, r: CoopTree) -> CoopTree {
        CoopTree::Split(sym, Box::new(l), Box::new(r))
    }

    pub fn arity(&self) -> usize {
        match self {
            CoopTree::Id => 1,
            CoopTree::Split(_, l, r) => l.arity() + r.arity(),
        }
    }

    /// `(δ ⊗ Id ⊗ … ⊗ Id) ∘ … ∘ δ`, landing in `n` factors.
    pub fn iterated(sym: &'static str, n: usize) -> CoopTree {
        let mut c = CoopTree::Id;
        for _ in 1..n {
            c = CoopTree::split(sym, c, CoopTree::Id);
        }
        c
    }

    pub fn eval_key(&self, m: &dyn Bialgebra, k: &Key) -> Result<Elem> {
        match self {
            CoopTree::Id => Ok(Elem::key(k.clone())),
            CoopTree::Split(sym, l, r) => {
                let d = coproduct(m, sym, &Elem::key(k.clone()))?;
                d.try_map_linear(|pair| {
                    let f = pair.factors();
                    Ok(l.eval_key(m, &f[0])?.tensor(&r.eval_key(m, &f[1])?))
                })
            }
        }
    }

    pub fn eval(&self, m: &dyn Bialgebra, e: &Elem) -> Result<Elem> {
        e.try_map_linear(|k| self.eval_key(m, k))
    }
}

impl fmt::Display for CoopTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoopTree::Id => f.write_str("id"),
            CoopTree::Split(s, l, r) => write!(f, "{s}({l},{r})"),
        }
    }
}

/// An n-ary product monomial in positional variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProdTree {
    Var,
    Apply(&'static str, Box<ProdTree>, Box<ProdTree>),
}

impl ProdTree {
    pub fn apply(sym: &'static str, l: ProdTree, r: ProdTree) -> ProdTree {
        ProdTree::Apply(sym, Box::new(l), Box::new(r))
    }

    pub fn arity(&self) -> usize {
        match self {
            ProdTree::Var => 1,
            ProdTree::Apply(_, l, r) => l.arity() + r.arity(),
        }
    }

    /// `a₁ · (a₂ · (… · a_n))`.
    pub fn right_nested(sym: &'static str, n: usize) -> ProdTree {
        let mut p = ProdTree::Var;
        for _ in 1..n {
            p = ProdTree::apply(sym, ProdTree::Var, p);
        }
        p
    }

    pub fn eval_factors(&self, m: &dyn Bialgebra, f: &[Key]) -> Result<Elem> {
        if f.len() != self.arity() {
            return Err(Error::Arity { expected: self.arity(), got: f.len() });
        }
        match self {
            ProdTree::Var => Ok(Elem::key(f[0].clone())),
            ProdTree::Apply(sym, l, r) => {
                let (a, b) = f.split_at(l.arity());
                product(m, sym, &l.eval_factors(m, a)?, &r.eval_factors(m, b)?)
            }
        }
    }

    /// Multiplies out every tensor term of `t`.
    pub fn eval(&self, m: &dyn Bialgebra, t: &Elem) -> Result<Elem> {
        t.try_map_linear(|k| self.eval_factors(m, k.factors()))
    }
}

impl fmt::Display for ProdTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProdTree::Var => f.write_str("_"),
            ProdTree::Apply(s, l, r) => write!(f, "{s}({l},{r})"),
        }
    }
}

/// A cooperation, the monomial it is paired with, and a weight.
#[derive(Clone, Debug)]
pub struct SchemePair {
    pub label: String,
    pub coop: CoopTree,
    pub prod: ProdTree,
    pub weight: Q,
}

/// How a model's cooperad basis is presented and split back into products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingScheme {
    /// A coassociative cooperad with one n-ary cooperation per arity (the
    /// iterated coproduct), split by the right-nested n-fold product.
    Coassociative { coproduct: &'static str, product: &'static str },
    /// The cocommutative classical case: the iterated coproduct paired with
    /// the n-fold product with weight `1/n!`; ω comes from the Eulerian family.
    Classical { coproduct: &'static str, product: &'static str },
    /// Magmatic dual bases: the root-cut cooperation tree and the magmatic
    /// monomial of each planar tree with n leaves.
    MagDual,
    /// Biduplicial dual bases: each tree t with n+1 leaves gives the monomial
    /// `m(t) = (m(t^l) ≻ x) ≺ m(t^r)` and the matching tree of edge cuts.
    DupDual,
}

impl SplittingScheme {
    pub fn pairs(&self, n: usize) -> Vec<SchemePair> {
        match self {
            SplittingScheme::Coassociative { coproduct, product } => vec![SchemePair {
                label: format!("{product}^{n}"),
                coop: CoopTree::iterated(coproduct, n),
                prod: ProdTree::right_nested(product, n),
                weight: one(),
            }],
            SplittingScheme::Classical { coproduct, product } => vec![SchemePair {
                label: format!("{product}^{n}"),
                coop: CoopTree::iterated(coproduct, n),
                prod: ProdTree::right_nested(product, n),
                weight: one() / factorial(n),
            }],
            SplittingScheme::MagDual => Tree::enumerate(n)
                .unwrap_or_default()
                .into_iter()
                .map(|t| SchemePair { label: t.to_string(), coop: mag_coop(&t), prod: mag_prod(&t), weight: one() })
                .collect(),
            SplittingScheme::DupDual => Tree::enumerate(n + 1)
                .unwrap_or_default()
                .into_iter()
                .map(|t| SchemePair { label: t.to_string(), coop: dup_coop(&t), prod: dup_prod(&t), weight: one() })
                .collect(),
        }
    }

    /// True for the classical scheme, whose ω maps come from the Eulerian family.
    pub fn is_classical(&self) -> bool {
        matches!(self, SplittingScheme::Classical { .. })
    }
}

fn mag_coop(t: &Tree) -> CoopTree {
    match t {
        Tree::Leaf => CoopTree::Id,
        Tree::Node(l, r) => CoopTree::split("dual", mag_coop(l), mag_coop(r)),
    }
}

fn mag_prod(t: &Tree) -> ProdTree {
    match t {
        Tree::Leaf => ProdTree::Var,
        Tree::Node(l, r) => ProdTree::apply("mul", mag_prod(l), mag_prod(r)),
    }
}

/// Monomial of a duplicial tree, from `t = t^l / Y \ t^r`.
pub fn dup_prod(t: &Tree) -> ProdTree {
    let Tree::Node(l, r) = t else { unreachable!("duplicial trees have at least two leaves") };
    let a = if l.is_leaf() { ProdTree::Var } else { ProdTree::apply("right", dup_prod(l), ProdTree::Var) };
    if r.is_leaf() {
        a
    } else {
        ProdTree::apply("left", a, dup_prod(r))
    }
}

fn dup_coop(t: &Tree) -> CoopTree {
    let Tree::Node(l, r) = t else { unreachable!("duplicial trees have at least two leaves") };
    let a = if l.is_leaf() { CoopTree::Id } else { CoopTree::split("delta_right", dup_coop(l), CoopTree::Id) };
    if r.is_leaf() {
        a
    } else {
        CoopTree::split("delta_left", a, dup_coop(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::Word;
    use crate::models::DupModel;
    use crate::tree::tree;

    #[test]
    fn dup_monomials_rebuild_their_trees() {
        let m = DupModel::new(6);
        for n in 1..=5 {
            let gens: Vec<Key> = (0..n as u8).map(DupModel::generator).collect();
            for t in Tree::enumerate(n + 1).unwrap() {
                let e = dup_prod(&t).eval_factors(&m, &gens).unwrap();
                assert_eq!(e, Elem::key(Key::Dup(t.clone(), Word::distinct(n))));
            }
        }
    }

    #[test]
    fn arities() {
        assert_eq!(CoopTree::iterated("delta", 4).arity(), 4);
        assert_eq!(ProdTree::right_nested("right", 4).arity(), 4);
        assert_eq!(dup_coop(&tree("((.,.),(.,.))")).arity(), 3);
    }
}
