//! The convolution algebra of graded endomorphisms and the idempotents
//! built in it: Eulerian, Dynkin, geometric, and the versal idempotent
//! `e = (Id − ω⁽²⁾) ∘ (Id − ω⁽³⁾) ∘ ⋯`.

use crate::error::{Error, Result};
use crate::graded::{GradedBasis, GradedEndo};
use crate::key::Key;
use crate::lincomb::Elem;
use crate::models::{coproduct, coproduct_on_slot, product, Bialgebra};
use crate::models::left_nested_bracket;
use crate::rational::{factorial, frac, q};
use crate::scheme::SplittingScheme;

/// A product and a reduced coproduct on a model, checked to be associative
/// and coassociative on every basis element up to the working degree.
pub struct ConvolutionContext<'a> {
    pub model: &'a dyn Bialgebra,
    pub product: &'static str,
    pub coproduct: &'static str,
    pub basis: GradedBasis,
}

impl<'a> ConvolutionContext<'a> {
    pub fn new(model: &'a dyn Bialgebra, product: &'static str, coproduct: &'static str, max_degree: usize) -> Result<Self> {
        let ctx = ConvolutionContext { model, product, coproduct, basis: GradedBasis::of_model(model, max_degree) };
        ctx.verify()?;
        Ok(ctx)
    }

    fn verify(&self) -> Result<()> {
        let m = self.model;
        let max = self.basis.max_degree();
        let keys = |n: usize| self.basis.degree(n).map(|b| b.keys.clone()).unwrap_or_default();
        for n in 1..=max {
            for k in keys(n) {
                let e = Elem::key(k.clone());
                let d = coproduct(m, self.coproduct, &e)?;
                if coproduct_on_slot(m, self.coproduct, &d, 0)? != coproduct_on_slot(m, self.coproduct, &d, 1)? {
                    return Err(Error::Precondition(format!("{} is not coassociative at {k}", self.coproduct)));
                }
            }
        }
        for a in 1..=max {
            for b in 1..=max.saturating_sub(a) {
                for c in 1..=max.saturating_sub(a + b) {
                    for ka in keys(a) {
                        for kb in keys(b) {
                            let ab = product(m, self.product, &Elem::key(ka.clone()), &Elem::key(kb.clone()))?;
                            for kc in keys(c) {
                                let z = Elem::key(kc.clone());
                                let bc = product(m, self.product, &Elem::key(kb.clone()), &z)?;
                                let l = product(m, self.product, &ab, &z)?;
                                let r = product(m, self.product, &Elem::key(ka.clone()), &bc)?;
                                if l != r {
                                    return Err(Error::Precondition(format!(
                                        "{} is not associative at ({ka}, {kb}, {kc})",
                                        self.product
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> GradedEndo {
        GradedEndo::identity(&self.basis)
    }

    /// `f ⋆ g = μ ∘ (f ⊗ g) ∘ δ`.
    pub fn convolve(&self, f: &GradedEndo, g: &GradedEndo) -> Result<GradedEndo> {
        if f.basis() != &self.basis || g.basis() != &self.basis {
            return Err(Error::Grading("convolution factors live on another graded basis".into()));
        }
        GradedEndo::from_fn(&self.basis, |k| {
            let d = coproduct(self.model, self.coproduct, &Elem::key(k.clone()))?;
            d.try_map_linear(|pair| {
                let p = pair.factors();
                product(self.model, self.product, &f.apply_key(&p[0])?, &g.apply_key(&p[1])?)
            })
        })
    }

    /// `f ⋆ ⋯ ⋆ f` with `n ≥ 1` factors.
    pub fn convolution_power(&self, f: &GradedEndo, n: usize) -> Result<GradedEndo> {
        if n == 0 {
            return Err(Error::Range("convolution powers start at 1".into()));
        }
        let mut acc = f.clone();
        for _ in 1..n {
            acc = self.convolve(&acc, f)?;
        }
        Ok(acc)
    }

    /// `Id⋆ⁿ` for `n = 1..=max_degree`; higher powers vanish on the basis.
    fn identity_powers(&self) -> Result<Vec<GradedEndo>> {
        let id = self.identity();
        let mut out = vec![id.clone()];
        for _ in 1..self.basis.max_degree() {
            let next = self.convolve(out.last().expect("nonempty"), &id)?;
            out.push(next);
        }
        Ok(out)
    }

    /// `e⁽¹⁾ = Σ_k (−1)^{k−1} Id⋆ᵏ / k`.
    pub fn first_eulerian(&self) -> Result<GradedEndo> {
        let mut e = GradedEndo::zero(&self.basis);
        for (i, p) in self.identity_powers()?.iter().enumerate() {
            let k = i as i64 + 1;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            e = e.add(&p.scale(&frac(sign, k)))?;
        }
        Ok(e)
    }

    /// All of `e⁽¹⁾, …, e⁽ᴺ⁾` with `N` the working degree; `e⁽ⁱ⁾ = (e⁽¹⁾)⋆ⁱ / i!`.
    pub fn eulerian_family(&self) -> Result<Vec<GradedEndo>> {
        let e1 = self.first_eulerian()?;
        let mut powers = vec![e1.clone()];
        for _ in 1..self.basis.max_degree() {
            let next = self.convolve(powers.last().expect("nonempty"), &e1)?;
            powers.push(next);
        }
        Ok(powers.iter().enumerate().map(|(i, p)| p.scale(&(q(1) / factorial(i + 1)))).collect())
    }

    pub fn eulerian(&self, i: usize) -> Result<GradedEndo> {
        if i < 1 {
            return Err(Error::Range("Eulerian idempotents are indexed from 1".into()));
        }
        if i > self.basis.max_degree() {
            return Ok(GradedEndo::zero(&self.basis));
        }
        Ok(self.eulerian_family()?.swap_remove(i - 1))
    }

    /// `e = Σ_n (−1)^{n−1} Id⋆ⁿ`.
    pub fn geometric(&self) -> Result<GradedEndo> {
        let mut e = GradedEndo::zero(&self.basis);
        for (i, p) in self.identity_powers()?.iter().enumerate() {
            e = if i % 2 == 0 { e.add(p)? } else { e.sub(p)? };
        }
        Ok(e)
    }
}

/// `x₁⋯xₙ ↦ (1/n) [⋯[[x₁, x₂], x₃], …, xₙ]` on words.
pub fn dynkin(basis: &GradedBasis) -> Result<GradedEndo> {
    GradedEndo::from_fn(basis, |k| match k {
        Key::Word(w) => Ok(left_nested_bracket(&w.0).scale(&frac(1, w.len() as i64))),
        other => Err(Error::Precondition(format!("the Dynkin map acts on words, got {other}"))),
    })
}

/// `x ↦ Σ_pairs weight · μ_i(δ_i(x))` for the arity-`n` pairs of a non-classical scheme.
fn omega_from_pairs(m: &dyn Bialgebra, scheme: &SplittingScheme, n: usize, basis: &GradedBasis) -> Result<GradedEndo> {
    let pairs = scheme.pairs(n);
    if pairs.is_empty() {
        return Err(Error::Precondition(format!("scheme has no cooperation of arity {n}")));
    }
    GradedEndo::from_fn(basis, |k| {
        let mut out = Elem::zero();
        for p in &pairs {
            let split = p.coop.eval_key(m, k)?;
            out.add_scaled(&p.prod.eval(m, &split)?, &p.weight);
        }
        Ok(out)
    })
}

/// The maps `ω⁽²⁾, …, ω⁽ᴺ⁾` of a scheme on the degrees of `basis`.
pub fn omegas(m: &dyn Bialgebra, scheme: &SplittingScheme, basis: &GradedBasis) -> Result<Vec<GradedEndo>> {
    let max = basis.max_degree();
    if let SplittingScheme::Classical { coproduct, product } = scheme {
        let ctx = ConvolutionContext { model: m, product, coproduct, basis: basis.clone() };
        ctx.verify()?;
        let fam = ctx.eulerian_family()?;
        // ω⁽ⁿ⁾ = e⁽ⁿ⁾ + e⁽ⁿ⁺¹⁾ + ⋯, accumulated from the top.
        let mut out = Vec::new();
        let mut acc = GradedEndo::zero(basis);
        for e in fam.iter().skip(1).rev() {
            acc = acc.add(e)?;
            out.push(acc.clone());
        }
        out.reverse();
        return Ok(out);
    }
    (2..=max).map(|n| omega_from_pairs(m, scheme, n, basis)).collect()
}

pub fn omega(m: &dyn Bialgebra, scheme: &SplittingScheme, n: usize, basis: &GradedBasis) -> Result<GradedEndo> {
    if n < 2 {
        return Err(Error::Range("ω is defined for arities n ≥ 2".into()));
    }
    if n > basis.max_degree() {
        return Ok(GradedEndo::zero(basis));
    }
    Ok(omegas(m, scheme, basis)?.swap_remove(n - 2))
}

/// `e = (Id − ω⁽²⁾) ∘ (Id − ω⁽³⁾) ∘ ⋯ ∘ (Id − ω⁽ᴺ⁾)`; further factors are the
/// identity on degrees up to `N`.
pub fn versal(m: &dyn Bialgebra, scheme: &SplittingScheme, basis: &GradedBasis) -> Result<GradedEndo> {
    let id = GradedEndo::identity(basis);
    let mut e = id.clone();
    for w in omegas(m, scheme, basis)? {
        e = e.compose(&id.sub(&w)?)?;
    }
    Ok(e)
}

/// Applies `f` to every tensor factor: `f ⊗ ⋯ ⊗ f`.
pub fn apply_tensor_power(f: &GradedEndo, t: &Elem) -> Result<Elem> {
    t.try_map_linear(|k| {
        let mut acc: Option<Elem> = None;
        for x in k.factors() {
            let y = f.apply_key(x)?;
            acc = Some(match acc {
                None => y,
                Some(a) => a.tensor(&y),
            });
        }
        Ok(acc.unwrap_or_else(Elem::zero))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{DupModel, TensorAlgebra};

    fn w(s: &str) -> Elem {
        Elem::key(Key::word(s))
    }

    #[test]
    fn convolution_examples() {
        let m = TensorAlgebra::new(2);
        let ctx = ConvolutionContext::new(&m, "concat", "deconcat", 3).unwrap();
        let sq = ctx.convolution_power(&ctx.identity(), 2).unwrap();
        assert_eq!(sq.apply(&w("xy")).unwrap(), w("xy"));
        assert!(sq.apply(&w("x")).unwrap().is_zero());
        let ctx = ConvolutionContext::new(&m, "concat", "shuffle", 3).unwrap();
        let sq = ctx.convolution_power(&ctx.identity(), 2).unwrap();
        assert_eq!(sq.apply(&w("xy")).unwrap(), w("xy") + w("yx"));
    }

    #[test]
    fn non_associative_context_rejected() {
        let m = TensorAlgebra::new(2);
        assert!(ConvolutionContext::new(&m, "bracket", "deconcat", 3).is_err());
        assert!(ConvolutionContext::new(&m, "concat", "cobracket", 3).is_err());
    }

    #[test]
    fn eulerian_in_degree_two() {
        let m = TensorAlgebra::new(2);
        let ctx = ConvolutionContext::new(&m, "concat", "shuffle", 2).unwrap();
        let e1 = ctx.eulerian(1).unwrap();
        let half = frac(1, 2);
        assert_eq!(e1.apply(&w("xy")).unwrap(), (w("xy") - w("yx")).scale(&half));
        let d = dynkin(&ctx.basis).unwrap();
        assert_eq!(d.apply(&w("xy")).unwrap(), (w("xy") - w("yx")).scale(&half));
    }

    #[test]
    fn geometric_projects_onto_generators() {
        let m = TensorAlgebra::new(2);
        let ctx = ConvolutionContext::new(&m, "concat", "deconcat", 4).unwrap();
        let e = ctx.geometric().unwrap();
        assert_eq!(e.apply(&w("x")).unwrap(), w("x"));
        for n in 2..=4 {
            assert_eq!(e.rank(n), 0);
        }
    }

    #[test]
    fn dup_second_omega() {
        let m = DupModel::new(2);
        let b = GradedBasis::of_model(&m, 2);
        let scheme = SplittingScheme::Coassociative { coproduct: "delta", product: "right" };
        let (x, y) = (Elem::key(DupModel::generator(0)), Elem::key(DupModel::generator(1)));
        let prec = product(&m, "left", &x, &y).unwrap();
        let succ = product(&m, "right", &x, &y).unwrap();
        let w2 = omega(&m, &scheme, 2, &b).unwrap();
        assert_eq!(w2.apply(&prec).unwrap(), succ);
        assert_eq!(w2.apply(&succ).unwrap(), succ);
        let e = versal(&m, &scheme, &b).unwrap();
        assert_eq!(e.apply(&prec).unwrap(), prec.clone() - succ.clone());
        assert!(e.apply(&succ).unwrap().is_zero());
    }
}
