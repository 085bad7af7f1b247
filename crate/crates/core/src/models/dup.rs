use super::Bialgebra;
use crate::error::{Error, Result};
use crate::key::{Key, Word};
use crate::lincomb::Elem;
use crate::tree::Tree;

/// The free duplicial algebra on `k` letters: trees with `n + 1` leaves
/// decorated by words of length `n`.
///
/// Products: `left` is `x ≺ y = x \ y` (Under), `right` is `x ≻ y = x / y`
/// (Over), and `dot` is the magmatic primitive product `x ≺ y − x ≻ y`.
///
/// Coproducts: `delta` sums the path cuts at interior leaves; `delta_left`
/// (δ_≺) sums the right-edge splittings `t = t1 \ t2`; `delta_right` (δ_≻)
/// sums the left-edge splittings `t = t1 / t2`.
#[derive(Clone, Debug)]
pub struct DupModel {
    k: usize,
}

impl DupModel {
    pub fn new(k: usize) -> Self {
        DupModel { k }
    }

    /// The degree-1 generator decorated by `letter`.
    pub fn generator(letter: u8) -> Key {
        Key::Dup(Tree::y(), Word::letter(letter))
    }
}

fn dup_parts(a: &Key) -> Result<(&Tree, &Word)> {
    match a {
        Key::Dup(t, w) => Ok((t, w)),
        other => Err(Error::Precondition(format!("expected a duplicial key, got {other}"))),
    }
}

fn pair(t1: Tree, t2: Tree, w: &Word) -> Key {
    let (u, v) = w.split_at(t1.node_count());
    Key::Tensor(vec![Key::Dup(t1, u), Key::Dup(t2, v)])
}

impl Bialgebra for DupModel {
    fn name(&self) -> &str {
        "dup"
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
        for t in Tree::enumerate(n + 1).expect("n >= 1") {
            for w in &words {
                out.push(Key::Dup(t.clone(), w.clone()));
            }
        }
        out
    }

    fn products(&self) -> &[&'static str] {
        &["left", "right", "dot"]
    }

    fn coproducts(&self) -> &[&'static str] {
        &["delta", "delta_left", "delta_right"]
    }

    fn product_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("prec", "left"), ("succ", "right"), ("under", "left"), ("over", "right")]
    }

    fn coproduct_aliases(&self) -> &[(&'static str, &'static str)] {
        &[("delta_prec", "delta_left"), ("delta_succ", "delta_right")]
    }

    fn product_keys(&self, sym: &str, a: &Key, b: &Key) -> Result<Elem> {
        let ((t, u), (s, w)) = (dup_parts(a)?, dup_parts(b)?);
        let uw = u.concat(w);
        let under = || Elem::key(Key::Dup(Tree::under(t, s), uw.clone()));
        let over = || Elem::key(Key::Dup(Tree::over(t, s), uw.clone()));
        match sym {
            "left" => Ok(under()),
            "right" => Ok(over()),
            "dot" => Ok(under() - over()),
            _ => Err(Error::unknown("product", sym)),
        }
    }

    fn coproduct_key(&self, sym: &str, a: &Key) -> Result<Elem> {
        let (t, w) = dup_parts(a)?;
        let n = w.len();
        let one = num_traits::One::one;
        match sym {
            "delta" => Ok(Elem::from_terms((1..n).map(|i| {
                let (r, s) = t.path_cut(i).expect("interior cut");
                (pair(r, s, w), one())
            }))),
            "delta_left" => {
                Ok(Elem::from_terms(t.right_edge_splittings().into_iter().map(|(a, b)| (pair(a, b, w), one()))))
            }
            "delta_right" => {
                Ok(Elem::from_terms(t.left_edge_splittings().into_iter().map(|(a, b)| (pair(a, b, w), one()))))
            }
            _ => Err(Error::unknown("coproduct", sym)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{coproduct, product};
    use crate::tree::tree;

    fn g(c: u8) -> Elem {
        Elem::key(DupModel::generator(c))
    }

    #[test]
    fn products_and_middle_relation() {
        let m = DupModel::new(3);
        let (x, y, z) = (g(0), g(1), g(2));
        assert_eq!(product(&m, "left", &x, &y).unwrap().to_string(), "(.,(.,.)):xy");
        assert_eq!(product(&m, "right", &x, &y).unwrap().to_string(), "((.,.),.):xy");
        let lhs = product(&m, "left", &product(&m, "right", &x, &y).unwrap(), &z).unwrap();
        let rhs = product(&m, "right", &x, &product(&m, "left", &y, &z).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn path_cut_coproduct() {
        let m = DupModel::new(3);
        let (x, y, z) = (g(0), g(1), g(2));
        assert!(coproduct(&m, "delta", &x).unwrap().is_zero());
        let xy = product(&m, "left", &x, &y).unwrap();
        assert_eq!(coproduct(&m, "delta", &xy).unwrap(), x.tensor(&y));
        // x ≻ y ≻ z is the left comb; its two cuts:
        let comb = Elem::key(Key::Dup(tree("(((.,.),.),.)"), "xyz".parse().unwrap()));
        let yz = Elem::key(Key::Dup(tree("((.,.),.)"), "yz".parse().unwrap()));
        let xy_over = Elem::key(Key::Dup(tree("((.,.),.)"), "xy".parse().unwrap()));
        assert_eq!(coproduct(&m, "delta", &comb).unwrap(), x.tensor(&yz) + xy_over.tensor(&z));
    }

    #[test]
    fn edge_coproducts() {
        let m = DupModel::new(2);
        let (x, y) = (g(0), g(1));
        let prec = product(&m, "left", &x, &y).unwrap();
        let succ = product(&m, "right", &x, &y).unwrap();
        assert_eq!(coproduct(&m, "delta_left", &prec).unwrap(), x.tensor(&y));
        assert!(coproduct(&m, "delta_left", &succ).unwrap().is_zero());
        assert_eq!(coproduct(&m, "delta_right", &succ).unwrap(), x.tensor(&y));
        assert!(coproduct(&m, "delta_right", &prec).unwrap().is_zero());
    }
}
