use opbialg::models::{Bialgebra, DupModel, LieModel, MagModel, TensorAlgebra, ZinbModel};
use opbialg::relations::{check_coalgebra_law, check_named};

fn holds(m: &dyn Bialgebra, cop: &str, prod: &str, rel: &str, max: usize) -> bool {
    let r = check_named(m, cop, prod, rel, max).unwrap();
    assert!(r.checked_pairs > 0);
    r.holds
}

#[test]
fn unital_infinitesimal_models() {
    assert!(holds(&TensorAlgebra::new(2), "deconcat", "concat", "nui", 6));
    assert!(holds(&DupModel::new(2), "delta", "left", "nui", 6));
    assert!(holds(&DupModel::new(2), "delta", "right", "nui", 6));
}

#[test]
fn magmatic_and_livernet() {
    assert!(holds(&MagModel::new(1), "dual", "mul", "magmatic", 6));
    assert!(holds(&MagModel::new(2), "livernet", "mul", "livernet", 5));
    assert!(check_coalgebra_law(&MagModel::new(2), "livernet", "nap", 5).unwrap().holds);
}

#[test]
fn biduplicial_combinations() {
    for cop in ["delta_left", "delta_right"] {
        for prod in ["left", "right"] {
            assert!(holds(&DupModel::new(2), cop, prod, "biduplicial", 5), "{cop}/{prod}");
        }
    }
}

#[test]
fn zinbiel_semi_hopf() {
    assert!(holds(&ZinbModel::new(2), "deconcat", "left", "semi-hopf-left", 5));
}

#[test]
fn hopf_relations() {
    assert!(holds(&TensorAlgebra::new(2), "shuffle", "concat", "hopf", 5));
    assert!(holds(&MagModel::new(2), "hopf", "mul", "hopf", 5));
    assert!(holds(&TensorAlgebra::truncated(2, 2), "deconcat", "concat", "nil", 4));
}

#[test]
fn wrong_pairings_are_caught() {
    let r = check_named(&TensorAlgebra::new(2), "shuffle", "concat", "nui", 4).unwrap();
    assert!(!r.holds);
    assert_eq!(r.first_failure.unwrap().degree, 2);
    assert!(!check_coalgebra_law(&TensorAlgebra::new(2), "deconcat", "cocommutative", 3).unwrap().holds);
    // The magmatic coproduct obeys no law at all.
    assert!(!check_coalgebra_law(&MagModel::new(1), "dual", "coassociative", 3).unwrap().holds);
}

/// The bracket-cobracket compatibility fails once the cobracket leaves the
/// Lie subspace, at degree 4.
#[test]
fn lily_breaks_at_quartic_degree() {
    let r = check_named(&LieModel::new(2), "cobracket", "bracket", "lily", 4).unwrap();
    assert!(!r.holds);
    assert_eq!(r.first_failure.unwrap().degree, 4);
    assert!(check_named(&LieModel::new(2), "cobracket", "bracket", "lily", 3).unwrap().holds);
}
