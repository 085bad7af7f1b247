use num_traits::{One, Zero};
use proptest::prelude::*;

use opbialg::lincomb::Elem;
use opbialg::linalg::Matrix;
use opbialg::models::{coproduct, coproduct_on_slot, product, Bialgebra, DupModel, MagModel, TensorAlgebra, ZinbModel};
use opbialg::rational::{q, Q};
use opbialg::relations::{eval_compat, eval_lhs, library, Binding};
use opbialg::structure::{cobracket_preserves_lie, primitive_part};
use opbialg::tree::Tree;

/// Textbook Gauss-Jordan elimination over Q, kept separate from the
/// fraction-free routine it checks.
fn naive_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
    let (n, m) = (a.len(), a.first().map_or(0, Vec::len));
    let mut rank = 0;
    for c in 0..m {
        let Some(p) = (rank..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        for v in a[rank].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    // Many zeros and a narrow range so that rank deficiency is common.
    let entry = prop_oneof![3 => Just(0i64), 2 => -3i64..=3];
    proptest::collection::vec(proptest::collection::vec(entry, 8), 8)
}

/// A random element of degree `d` with small integer coefficients.
fn random_elem(m: &dyn Bialgebra, d: usize, coeffs: &[i64]) -> Elem {
    let mut e = Elem::zero();
    for (k, c) in m.basis_keys(d).into_iter().zip(coeffs.iter().cycle()) {
        e.add_term(k, q(*c));
    }
    e
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_matches_gauss_jordan(rows in small_matrix()) {
        let m = Matrix::from_i64(&rows);
        prop_assert_eq!(m.rank(), naive_rank(&rows));
    }

    #[test]
    fn kernel_is_annihilated_and_complements_rank(rows in small_matrix()) {
        let m = Matrix::from_i64(&rows);
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), 8);
        for v in &ker {
            for i in 0..8 {
                let s: Q = (0..8).map(|j| m.get(i, j) * &v[j]).sum();
                prop_assert!(s.is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn linear_combinations_form_a_vector_space(a in coeffs(), b in coeffs(), c in -5i64..=5) {
        let m = TensorAlgebra::new(2);
        let (x, y) = (random_elem(&m, 3, &a), random_elem(&m, 3, &b));
        let c = q(c);
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.add(&y).scale(&c), x.scale(&c).add(&y.scale(&c)));
        prop_assert_eq!(x.scale(&Q::one()), x.clone());
        prop_assert!(x.scale(&Q::zero()).is_empty());
    }

    #[test]
    fn products_and_coproducts_are_bilinear(a in coeffs(), b in coeffs(), y in coeffs(), c in -4i64..=4) {
        let m = DupModel::new(2);
        let (u, v, w) = (random_elem(&m, 2, &a), random_elem(&m, 2, &b), random_elem(&m, 1, &y));
        let c = q(c);
        let combo = u.add(&v.scale(&c));
        for sym in ["left", "right", "dot"] {
            let lhs = product(&m, sym, &combo, &w).unwrap();
            let rhs = product(&m, sym, &u, &w).unwrap().add(&product(&m, sym, &v, &w).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
        for sym in ["delta", "delta_left", "delta_right"] {
            let lhs = coproduct(&m, sym, &combo).unwrap();
            let rhs = coproduct(&m, sym, &u).unwrap().add(&coproduct(&m, sym, &v).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn duplicial_relations(a in coeffs(), b in coeffs(), c in coeffs(), d in 1usize..=2) {
        let m = DupModel::new(2);
        let (x, y, z) = (random_elem(&m, d, &a), random_elem(&m, 1, &b), random_elem(&m, 3 - d, &c));
        let p = |s: &str, u: &Elem, v: &Elem| product(&m, s, u, v).unwrap();
        prop_assert_eq!(p("left", &p("left", &x, &y), &z), p("left", &x, &p("left", &y, &z)));
        prop_assert_eq!(p("right", &p("right", &x, &y), &z), p("right", &x, &p("right", &y, &z)));
        prop_assert_eq!(p("left", &p("right", &x, &y), &z), p("right", &x, &p("left", &y, &z)));
    }

    #[test]
    fn zinbiel_relation(a in coeffs(), b in coeffs(), c in coeffs(), d in 1usize..=2) {
        let m = ZinbModel::new(2);
        let (x, y, z) = (random_elem(&m, d, &a), random_elem(&m, 1, &b), random_elem(&m, 2, &c));
        let p = |u: &Elem, v: &Elem| product(&m, "left", u, v).unwrap();
        let shuffle = p(&y, &z).add(&p(&z, &y));
        prop_assert_eq!(p(&p(&x, &y), &z), p(&x, &shuffle));
    }

    #[test]
    fn coassociative_coproducts(a in coeffs(), d in 2usize..=4) {
        let cases: Vec<(Box<dyn Bialgebra>, &str)> = vec![
            (Box::new(TensorAlgebra::new(2)), "deconcat"),
            (Box::new(TensorAlgebra::new(2)), "shuffle"),
            (Box::new(DupModel::new(1)), "delta"),
            (Box::new(DupModel::new(1)), "delta_left"),
            (Box::new(DupModel::new(1)), "delta_right"),
        ];
        for (m, sym) in &cases {
            let x = random_elem(m.as_ref(), d, &a);
            let dx = coproduct(m.as_ref(), sym, &x).unwrap();
            prop_assert_eq!(
                coproduct_on_slot(m.as_ref(), sym, &dx, 0).unwrap(),
                coproduct_on_slot(m.as_ref(), sym, &dx, 1).unwrap(),
                "{} {}", m.name(), sym
            );
        }
    }

    #[test]
    fn grafting_is_associative_and_adds_leaves(a in 1usize..=4, b in 1usize..=4, c in 1usize..=4, i in 0usize..14, j in 0usize..14, k in 0usize..14) {
        let pick = |n: usize, i: usize| { let ts = Tree::enumerate(n).unwrap(); ts[i % ts.len()].clone() };
        let (r, s, t) = (pick(a, i), pick(b, j), pick(c, k));
        for g in [Tree::over, Tree::under] {
            prop_assert_eq!(g(&g(&r, &s), &t), g(&r, &g(&s, &t)));
        }
        prop_assert_eq!(Tree::over(&r, &s).leaf_count(), r.leaf_count() + s.leaf_count() - 1);
        prop_assert_eq!(Tree::under(&r, &s).leaf_count(), r.leaf_count() + s.leaf_count() - 1);
    }

    #[test]
    fn quadratic_part_vanishes_on_primitives(i in 0usize..8, j in 0usize..8, da in 1usize..=3, db in 1usize..=2) {
        type Case = (Box<dyn Bialgebra>, &'static str, &'static str, &'static str, &'static [&'static str]);
        let cases: Vec<Case> = vec![
            (Box::new(TensorAlgebra::new(2)), "deconcat", "concat", "nui", &["deconcat"]),
            (Box::new(DupModel::new(1)), "delta", "left", "nui", &["delta"]),
            (Box::new(MagModel::new(1)), "dual", "mul", "magmatic", &["dual"]),
        ];
        for (m, cop, prod, rel, gen) in &cases {
            let (pa, pb) = (primitive_part(m.as_ref(), gen, da).unwrap(), primitive_part(m.as_ref(), gen, db).unwrap());
            if pa.is_empty() || pb.is_empty() {
                continue;
            }
            let (x, y) = (&pa[i % pa.len()], &pb[j % pb.len()]);
            let expr = library(rel, cop, prod).unwrap();
            let b = Binding { model: m.as_ref(), product: prod, coproduct: cop };
            let args = [x.clone(), y.clone()];
            let quadratic = expr.phi2();
            if !quadratic.terms.is_empty() {
                prop_assert!(eval_compat(&quadratic, &b, &args).unwrap().is_zero());
            }
            prop_assert_eq!(eval_lhs(&b, x, y).unwrap(), eval_compat(&expr.phi1(), &b, &args).unwrap());
        }
    }
}

#[test]
fn tree_counts_follow_the_catalan_recursion() {
    let mut cat = vec![1usize];
    for n in 1..=8 {
        cat.push((0..n).map(|i| cat[i] * cat[n - 1 - i]).sum());
    }
    for n in 1..=9 {
        assert_eq!(Tree::enumerate(n).unwrap().len(), cat[n - 1], "{n} leaves");
    }
}

#[test]
fn cobracket_stays_in_lie_up_to_cubic_degree_only() {
    for n in 2..=3 {
        assert_eq!(cobracket_preserves_lie(2, n).unwrap(), None, "degree {n}");
    }
    assert!(cobracket_preserves_lie(2, 4).unwrap().is_some());
}
