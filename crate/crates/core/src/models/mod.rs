//! Graded bialgebra models on explicit bases.
//!
//! A model names its binary products and reduced coproducts by symbol.
//! Operations are given on basis keys and extended (bi)linearly by the free
//! functions of this module.

mod dup;
mod lie;
mod mag;
mod tensor;

pub use dup::DupModel;
pub use lie::{left_nested_bracket, lie_subspace, LieModel};
pub use mag::MagModel;
pub use tensor::{shuffle, TensorAlgebra, ZinbModel};

use crate::error::{Error, Result};
use crate::key::Key;
use crate::lincomb::Elem;

pub trait Bialgebra: Send + Sync {
    fn name(&self) -> &str;

    fn alphabet(&self) -> usize;

    /// Ordered key basis of the degree-`n` component (empty outside the
    /// model's range).
    fn basis_keys(&self, n: usize) -> Vec<Key>;

    /// Basis of the degree-`n` subspace the model lives on. Equals the key
    /// basis except for sub-models such as Lie polynomials.
    fn basis(&self, n: usize) -> Vec<Elem> {
        self.basis_keys(n).into_iter().map(Elem::key).collect()
    }

    /// Product symbols, canonical names first in each alias group.
    fn products(&self) -> &[&'static str];

    fn coproducts(&self) -> &[&'static str];

    /// Maps an alias to the canonical symbol, or fails for unknown symbols.
    fn resolve_product(&self, sym: &str) -> Result<&'static str> {
        resolve(self.products(), self.product_aliases(), sym, "product")
    }

    fn resolve_coproduct(&self, sym: &str) -> Result<&'static str> {
        resolve(self.coproducts(), self.coproduct_aliases(), sym, "coproduct")
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[]
    }

    /// Product of two basis keys; `sym` is canonical.
    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem>;

    /// Reduced coproduct of a basis key; `sym` is canonical.
    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem>;

    /// The degree-1 generators.
    fn generators(&self) -> Vec<Elem> {
        self.basis(1)
    }
}

fn resolve(
    names: &[&'static str],
    aliases: &[(&'static str, &'static str)],
    sym: &str,
    kind: &'static str,
) -> Result<&'static str> {
    if let Some(n) = names.iter().find(|n| **n == sym) {
        return Ok(n);
    }
    aliases
        .iter()
        .find(|(a, _)| *a == sym)
        .map(|(_, n)| *n)
        .ok_or_else(|| Error::unknown(kind, sym))
}

/// Bilinear extension of a product.
pub fn product(m: &dyn Bialgebra, sym: &str, a: &Elem, b: &Elem) -> Result<Elem> {
    let sym = m.resolve_product(sym)?;
    let mut out = Elem::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_scaled(&m.product_keys(sym, ka, kb)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Linear extension of a reduced coproduct.
pub fn coproduct(m: &dyn Bialgebra, sym: &str, a: &Elem) -> Result<Elem> {
    let sym = m.resolve_coproduct(sym)?;
    a.try_map_linear(|k| m.coproduct_key(sym, k))
}

/// Applies a coproduct to tensor slot `slot` of every term.
pub fn coproduct_on_slot(m: &dyn Bialgebra, sym: &str, t: &Elem, slot: usize) -> Result<Elem> {
    let sym = m.resolve_coproduct(sym)?;
    t.try_map_linear(|k| {
        let f = k.factors();
        if slot >= f.len() {
            return Err(Error::Arity { expected: slot + 1, got: f.len() });
        }
        let d = m.coproduct_key(sym, &f[slot])?;
        Ok(d.map_linear(|dk| {
            let mut v: Vec<Key> = f[..slot].to_vec();
            v.extend_from_slice(dk.factors());
            v.extend_from_slice(&f[slot + 1..]);
            Elem::key(Key::from_factors(v))
        }))
    })
}

/// Multiplies tensor slots `slot` and `slot + 1` of every term.
pub fn product_on_slots(m: &dyn Bialgebra, sym: &str, t: &Elem, slot: usize) -> Result<Elem> {
    let sym = m.resolve_product(sym)?;
    t.try_map_linear(|k| {
        let f = k.factors();
        if slot + 1 >= f.len() {
            return Err(Error::Arity { expected: slot + 2, got: f.len() });
        }
        let p = m.product_keys(sym, &f[slot], &f[slot + 1])?;
        Ok(p.map_linear(|pk| {
            let mut v: Vec<Key> = f[..slot].to_vec();
            v.push(pk.clone());
            v.extend_from_slice(&f[slot + 2..]);
            Elem::key(Key::from_factors(v))
        }))
    })
}

/// Iterated reduced coproduct `(δ ⊗ Id ⊗ … ⊗ Id) ∘ … ∘ δ`, landing in `k` factors.
pub fn iterated_coproduct(m: &dyn Bialgebra, sym: &str, a: &Elem, k: usize) -> Result<Elem> {
    let mut cur = a.clone();
    for _ in 1..k {
        cur = coproduct_on_slot(m, sym, &cur, 0)?;
    }
    Ok(cur)
}

/// Builds a model by CLI name.
///
/// | name | space | products | coproducts |
/// |---|---|---|---|
/// | `as` | tensor algebra | `concat`, `bracket` | `deconcat`, `shuffle`, `cobracket` |
/// | `classical` | same as `as` | | |
/// | `nil` | tensor algebra truncated above degree 2 | `concat` | `deconcat` |
/// | `zinb` | words | `left` (half-shuffle), `star` (shuffle) | `deconcat` |
/// | `lie` | Lie polynomials in the tensor algebra | `bracket` | `cobracket` |
/// | `mag` | decorated trees | `mul` | `dual`, `livernet`, `hopf` |
/// | `dup` | decorated trees | `left`, `right`, `dot` | `delta`, `delta_left`, `delta_right` |
pub fn model_by_name(name: &str, alphabet: usize) -> Result<Box<dyn Bialgebra>> {
    if alphabet < 1 || alphabet > crate::key::LETTERS.len() {
        return Err(Error::Range(format!("alphabet size {alphabet}")));
    }
    Ok(match name {
        "as" | "classical" => Box::new(TensorAlgebra::new(alphabet)),
        "nil" => Box::new(TensorAlgebra::truncated(alphabet, 2)),
        "zinb" => Box::new(ZinbModel::new(alphabet)),
        "lie" => Box::new(LieModel::new(alphabet)),
        "mag" => Box::new(MagModel::new(alphabet)),
        "dup" => Box::new(DupModel::new(alphabet)),
        other => return Err(Error::unknown("model", other)),
    })
}

pub const MODEL_NAMES: &[&str] = &["as", "classical", "nil", "zinb", "lie", "mag", "dup"];
