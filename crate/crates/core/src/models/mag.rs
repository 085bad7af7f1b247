use std::collections::HashMap;
use std::sync::Mutex;

use super::Bialgebra;
use crate::error::{Error, Result};
use crate::key::{Key, Word};
use crate::lincomb::Elem;
use crate::tree::Tree;

/// The free magmatic algebra on `k` letters: trees with `n` leaves decorated
/// by words of length `n`, multiplied by grafting on a new root.
///
/// Coproducts: `dual` (cut at the root), `livernet` and `hopf`, the last two
/// defined by structural recursion on their compatibility relations.
#[derive(Debug)]
pub struct MagModel {
    k: usize,
    memo: Mutex<HashMap<(bool, Key), Elem>>,
}

impl MagModel {
    pub fn new(k: usize) -> Self {
        MagModel { k, memo: Mutex::new(HashMap::new()) }
    }

    fn mul(a: &Key, b: &Key) -> Result<Key> {
        match (a, b) {
            (Key::Mag(t, u), Key::Mag(s, w)) => Ok(Key::Mag(Tree::vee(t.clone(), s.clone()), u.concat(w))),
            _ => Err(Error::Precondition(format!("expected magmatic keys, got {a} and {b}"))),
        }
    }

    /// Splits a key at its root into its two factors.
    fn root_split(a: &Key) -> Result<Option<(Key, Key)>> {
        match a {
            Key::Mag(Tree::Leaf, _) => Ok(None),
            Key::Mag(Tree::Node(l, r), w) => {
                let (u, v) = w.split_at(l.leaf_count());
                Ok(Some((Key::Mag((**l).clone(), u), Key::Mag((**r).clone(), v))))
            }
            other => Err(Error::Precondition(format!("expected a magmatic key, got {other}"))),
        }
    }

    /// Applies `f` to the two factors of every pair in `t`.
    fn on_pairs(t: &Elem, mut f: impl FnMut(&Key, &Key) -> Result<(Key, Key)>) -> Result<Elem> {
        t.try_map_linear(|k| {
            let p = k.factors();
            let (a, b) = f(&p[0], &p[1])?;
            Ok(Elem::key(Key::Tensor(vec![a, b])))
        })
    }

    fn recursive(&self, hopf: bool, a: &Key) -> Result<Elem> {
        let memo_key = (hopf, a.clone());
        if let Some(v) = self.memo.lock().expect("memo lock").get(&memo_key) {
            return Ok(v.clone());
        }
        let Some((x, y)) = Self::root_split(a)? else { return Ok(Elem::zero()) };
        let dx = self.recursive(hopf, &x)?;
        let pair = |p: Key, q: Key| Elem::key(Key::Tensor(vec![p, q]));
        // A = x⊗y, C = x1⊗x2·y, D = x1·y⊗x2
        let mut out = pair(x.clone(), y.clone());
        out = out + Self::on_pairs(&dx, |a, b| Ok((a.clone(), Self::mul(b, &y)?)))?;
        out = out + Self::on_pairs(&dx, |a, b| Ok((Self::mul(a, &y)?, b.clone())))?;
        if hopf {
            let dy = self.recursive(hopf, &y)?;
            // B = y⊗x, E = x·y1⊗y2, F = y1⊗x·y2, G = x1·y1⊗x2·y2
            out = out + pair(y.clone(), x.clone());
            out = out + Self::on_pairs(&dy, |a, b| Ok((Self::mul(&x, a)?, b.clone())))?;
            out = out + Self::on_pairs(&dy, |a, b| Ok((a.clone(), Self::mul(&x, b)?)))?;
            for (kx, cx) in dx.iter() {
                for (ky, cy) in dy.iter() {
                    let (px, py) = (kx.factors(), ky.factors());
                    let k = Key::Tensor(vec![Self::mul(&px[0], &py[0])?, Self::mul(&px[1], &py[1])?]);
                    out.add_term(k, cx * cy);
                }
            }
        }
        self.memo.lock().expect("memo lock").insert(memo_key, out.clone());
        Ok(out)
    }
}

impl Bialgebra for MagModel {
    fn name(&self) -> &str {
        "mag"
    }

    fn alphabet(&self) -> usize {
        self.k
    }

    fn basis_keys(&self, n: usize) -> Vec<Key> {
        if n == 0 {
            return Vec::new();
        }
        let words = Word::all(self.k, n);
        let mut out = Vec::new();
        for t in Tree::enumerate(n).expect("n >= 1") {
            for w in &words {
                out.push(Key::Mag(t.clone(), w.clone()));
            }
        }
        out
    }

    fn products(&self) -> &[&'static str] {
        &["mul"]
    }

    fn coproducts(&self) -> &[&'static str] {
        &["dual", "livernet", "hopf"]
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("mu", "mul"), ("dot", "mul")]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("delta", "dual")]
    }

    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem> {
        match sym {
            "mul" => Ok(Elem::key(Self::mul(a, b)?)),
            _ => Err(Error::unknown("product", sym)),
        }
    }

    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem> {
        match sym {
            "dual" => Ok(match Self::root_split(a)? {
                None => Elem::zero(),
                Some((x, y)) => Elem::key(Key::Tensor(vec![x, y])),
            }),
            "livernet" => self.recursive(false, a),
            "hopf" => self.recursive(true, a),
            _ => Err(Error::unknown("coproduct", sym)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{coproduct, product};

    fn gen(c: &str) -> Elem {
        Elem::key(Key::Mag(Tree::Leaf, c.parse().unwrap()))
    }

    fn mul(a: &Elem, b: &Elem) -> Elem {
        product(&MagModel::new(3), "mul", a, b).unwrap()
    }

    #[test]
    fn products() {
        let (x, y, z) = (gen("x"), gen("y"), gen("z"));
        assert_eq!(mul(&x, &y).to_string(), "(.,.):xy");
        assert_eq!(mul(&mul(&x, &y), &z).to_string(), "((.,.),.):xyz");
        assert_eq!(mul(&x, &mul(&y, &z)).to_string(), "(.,(.,.)):xyz");
    }

    #[test]
    fn dual_coproduct() {
        let m = MagModel::new(3);
        let (x, y, z) = (gen("x"), gen("y"), gen("z"));
        assert!(coproduct(&m, "dual", &x).unwrap().is_zero());
        assert_eq!(coproduct(&m, "dual", &mul(&x, &y)).unwrap(), x.tensor(&y));
        assert_eq!(coproduct(&m, "dual", &mul(&mul(&x, &y), &z)).unwrap(), mul(&x, &y).tensor(&z));
    }

    #[test]
    fn livernet_coproduct() {
        let m = MagModel::new(3);
        let (x, y, z) = (gen("x"), gen("y"), gen("z"));
        assert_eq!(coproduct(&m, "livernet", &mul(&x, &y)).unwrap(), x.tensor(&y));
        let expect = mul(&x, &y).tensor(&z) + x.tensor(&mul(&y, &z)) + mul(&x, &z).tensor(&y);
        assert_eq!(coproduct(&m, "livernet", &mul(&mul(&x, &y), &z)).unwrap(), expect);
        assert_eq!(coproduct(&m, "livernet", &mul(&x, &mul(&y, &z))).unwrap(), x.tensor(&mul(&y, &z)));
    }

    #[test]
    fn hopf_coproduct() {
        let m = MagModel::new(3);
        let (x, y, z) = (gen("x"), gen("y"), gen("z"));
        assert!(coproduct(&m, "hopf", &x).unwrap().is_zero());
        assert_eq!(coproduct(&m, "hopf", &mul(&x, &y)).unwrap(), x.tensor(&y) + y.tensor(&x));
        let xy = mul(&x, &y);
        let expect = xy.tensor(&z)
            + z.tensor(&xy)
            + x.tensor(&mul(&y, &z))
            + y.tensor(&mul(&x, &z))
            + mul(&x, &z).tensor(&y)
            + mul(&y, &z).tensor(&x);
        assert_eq!(coproduct(&m, "hopf", &mul(&xy, &z)).unwrap(), expect);
    }
}
