//! Distributive compatibility relations `δ ∘ μ = Φ` as data, and an
//! exhaustive degreewise checker.
//!
//! A term of `Φ` is `coeff · (out_ops) ∘ perm ∘ (in_coops)`: each input is
//! passed through a coproduct or the identity, the resulting tensor slots
//! are permuted (`perm[i]` is the source slot placed at position `i`), and
//! consecutive slots are multiplied by the output products.
//!
//! Symbols `$mu` and `$delta` stand for the product and coproduct under test;
//! other symbols are looked up in the model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::Elem;
use crate::models::{coproduct, coproduct_on_slot, product, product_on_slots, Bialgebra};
use crate::rational::{frac, q, serde_q, Q};

pub const MU: &str = "$mu";
pub const DELTA: &str = "$delta";
pub const ID: &str = "id";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "serde_q")]
    pub coeff: Q,
    #[serde(rename = "outOps")]
    pub out_ops: Vec<String>,
    pub perm: Vec<usize>,
    #[serde(rename = "inCoops")]
    pub in_coops: Vec<String>,
}

impl Term {
    pub fn new(coeff: Q, out_ops: &[&str], perm: &[usize], in_coops: &[&str]) -> Term {
        Term {
            coeff,
            out_ops: out_ops.iter().map(|s| s.to_string()).collect(),
            perm: perm.to_vec(),
            in_coops: in_coops.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// True when no input is passed through a coproduct (a Φ₁ term).
    pub fn is_phi1(&self) -> bool {
        self.in_coops.iter().all(|c| c == ID)
    }

    fn check_shape(&self) -> Result<()> {
        let slots: usize = self.in_coops.iter().map(|c| if c == ID { 1 } else { 2 }).sum();
        let consumed: usize = self.out_ops.iter().map(|o| if o == ID { 1 } else { 2 }).sum();
        if slots != consumed || slots != self.perm.len() {
            return Err(Error::Arity { expected: slots, got: consumed.max(self.perm.len()) });
        }
        let mut seen = vec![false; slots];
        for &p in &self.perm {
            if p >= slots || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition(format!("not a permutation: {:?}", self.perm)));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatExpr {
    pub name: String,
    pub terms: Vec<Term>,
}

impl CompatExpr {
    pub fn new(name: &str, terms: Vec<Term>) -> Result<CompatExpr> {
        let e = CompatExpr { name: name.into(), terms };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        let arity = self.arity();
        let outputs = self.terms.first().map_or(0, |t| t.out_ops.len());
        for t in &self.terms {
            t.check_shape()?;
            if t.in_coops.len() != arity {
                return Err(Error::Arity { expected: arity, got: t.in_coops.len() });
            }
            if t.out_ops.len() != outputs {
                return Err(Error::Arity { expected: outputs, got: t.out_ops.len() });
            }
        }
        Ok(())
    }

    /// Number of inputs.
    pub fn arity(&self) -> usize {
        self.terms.first().map_or(0, |t| t.in_coops.len())
    }

    pub fn phi1(&self) -> CompatExpr {
        CompatExpr { name: format!("{}:phi1", self.name), terms: self.terms.iter().filter(|t| t.is_phi1()).cloned().collect() }
    }

    pub fn phi2(&self) -> CompatExpr {
        CompatExpr { name: format!("{}:phi2", self.name), terms: self.terms.iter().filter(|t| !t.is_phi1()).cloned().collect() }
    }

    /// Parses a relation file: either `{name, terms}` or a bare term list.
    pub fn from_json(text: &str) -> Result<CompatExpr> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Full(CompatExpr),
            Terms(Vec<Term>),
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let e = match raw {
            Raw::Full(e) => e,
            Raw::Terms(terms) => CompatExpr { name: "custom".into(), terms },
        };
        e.validate()?;
        Ok(e)
    }
}

/// The operations a relation is evaluated against.
pub struct Binding<'a> {
    pub model: &'a dyn Bialgebra,
    pub product: &'a str,
    pub coproduct: &'a str,
}

impl Binding<'_> {
    fn product_sym<'s>(&'s self, s: &'s str) -> &'s str {
        if s == MU {
            self.product
        } else {
            s
        }
    }

    fn coproduct_sym<'s>(&'s self, s: &'s str) -> &'s str {
        if s == DELTA {
            self.coproduct
        } else {
            s
        }
    }
}

/// Evaluates `Φ` on a tuple of elements.
pub fn eval_compat(expr: &CompatExpr, b: &Binding<'_>, args: &[Elem]) -> Result<Elem> {
    if args.len() != expr.arity() {
        return Err(Error::Arity { expected: expr.arity(), got: args.len() });
    }
    let mut start = args[0].clone();
    for a in &args[1..] {
        start = start.tensor(a);
    }
    let mut out = Elem::zero();
    for t in &expr.terms {
        out.add_scaled(&eval_term(t, b, &start)?, &t.coeff);
    }
    Ok(out)
}

fn eval_term(t: &Term, b: &Binding<'_>, start: &Elem) -> Result<Elem> {
    let mut cur = start.clone();
    for (i, c) in t.in_coops.iter().enumerate().rev() {
        if c != ID {
            cur = coproduct_on_slot(b.model, b.coproduct_sym(c), &cur, i)?;
        }
    }
    cur = cur.permute_slots(&t.perm)?;
    let mut offsets = Vec::with_capacity(t.out_ops.len());
    let mut pos = 0;
    for o in &t.out_ops {
        offsets.push(pos);
        pos += if o == ID { 1 } else { 2 };
    }
    for (o, &off) in t.out_ops.iter().zip(&offsets).rev() {
        if o != ID {
            cur = product_on_slots(b.model, b.product_sym(o), &cur, off)?;
        }
    }
    Ok(cur)
}

/// The left side `δ(μ(a, b))`.
pub fn eval_lhs(b: &Binding<'_>, x: &Elem, y: &Elem) -> Result<Elem> {
    coproduct(b.model, b.coproduct, &product(b.model, b.product, x, y)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub degree: usize,
    pub left: String,
    pub right: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub relation: String,
    pub model: String,
    pub coproduct: String,
    pub product: String,
    #[serde(rename = "maxDegree")]
    pub max_degree: usize,
    pub holds: bool,
    #[serde(rename = "checkedPairs")]
    pub checked_pairs: usize,
    #[serde(rename = "firstFailure", skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

/// Compares `δ(μ(a, b))` with `Φ(a, b)` on every pair of basis elements
/// with `deg a + deg b ≤ max_degree`, in increasing total degree, stopping
/// at the first difference.
pub fn check_relation(
    model: &dyn Bialgebra,
    coproduct_sym: &str,
    product_sym: &str,
    expr: &CompatExpr,
    max_degree: usize,
) -> Result<CheckReport> {
    let cop = model.resolve_coproduct(coproduct_sym)?;
    let prod = model.resolve_product(product_sym)?;
    if expr.arity() != 2 {
        return Err(Error::Arity { expected: 2, got: expr.arity() });
    }
    let b = Binding { model, product: prod, coproduct: cop };
    let bases: Vec<Vec<Elem>> = (0..max_degree).map(|n| model.basis(n)).collect();
    let mut report = CheckReport {
        relation: expr.name.clone(),
        model: model.name().into(),
        coproduct: cop.into(),
        product: prod.into(),
        max_degree,
        holds: true,
        checked_pairs: 0,
        first_failure: None,
    };
    for total in 2..=max_degree {
        for da in 1..total {
            for x in &bases[da] {
                for y in &bases[total - da] {
                    let lhs = eval_lhs(&b, x, y)?;
                    let rhs = eval_compat(expr, &b, &[x.clone(), y.clone()])?;
                    report.checked_pairs += 1;
                    if lhs != rhs {
                        report.holds = false;
                        report.first_failure = Some(Failure {
                            degree: total,
                            left: x.to_string(),
                            right: y.to_string(),
                            lhs: lhs.to_json(),
                            rhs: rhs.to_json(),
                        });
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn term(c: Q, out: &[&str], perm: &[usize], inp: &[&str]) -> Term {
    Term::new(c, out, perm, inp)
}

/// `A = x⊗y`
fn a_term(c: Q) -> Term {
    term(c, &[ID, ID], &[0, 1], &[ID, ID])
}
/// `B = y⊗x`
fn b_term(c: Q) -> Term {
    term(c, &[ID, ID], &[1, 0], &[ID, ID])
}
/// `C = x₁ ⊗ x₂y`
fn c_term(c: Q, mu: &str, delta: &str) -> Term {
    term(c, &[ID, mu], &[0, 1, 2], &[delta, ID])
}
/// `D = x₁y ⊗ x₂`
fn d_term(c: Q, mu: &str, delta: &str) -> Term {
    term(c, &[mu, ID], &[0, 2, 1], &[delta, ID])
}
/// `E = xy₁ ⊗ y₂`
fn e_term(c: Q, mu: &str, delta: &str) -> Term {
    term(c, &[mu, ID], &[0, 1, 2], &[ID, delta])
}
/// `F = y₁ ⊗ xy₂`
fn f_term(c: Q, mu: &str, delta: &str) -> Term {
    term(c, &[ID, mu], &[1, 0, 2], &[ID, delta])
}
/// `G = x₁y₁ ⊗ x₂y₂`
fn g_term(c: Q, mu1: &str, mu2: &str, delta: &str) -> Term {
    term(c, &[mu1, mu2], &[0, 2, 1, 3], &[delta, delta])
}

pub const RELATION_NAMES: &[&str] =
    &["hopf", "nui", "magmatic", "livernet", "lily", "semi-hopf-left", "nil", "biduplicial"];

/// Looks up a library relation. Most entries are generic in `$mu`/`$delta`;
/// `biduplicial` has one entry per (coproduct, product) pair of the
/// duplicial model and needs the canonical symbols to choose it.
pub fn library(name: &str, coproduct: &str, product: &str) -> Result<CompatExpr> {
    let one = || q(1);
    let terms = match name {
        "hopf" => vec![
            a_term(one()),
            b_term(one()),
            c_term(one(), MU, DELTA),
            d_term(one(), MU, DELTA),
            e_term(one(), MU, DELTA),
            f_term(one(), MU, DELTA),
            g_term(one(), MU, MU, DELTA),
        ],
        "nui" => vec![a_term(one()), c_term(one(), MU, DELTA), e_term(one(), MU, DELTA)],
        "magmatic" => vec![a_term(one())],
        "livernet" => vec![a_term(one()), c_term(one(), MU, DELTA), d_term(one(), MU, DELTA)],
        "lily" => vec![
            a_term(q(2)),
            b_term(q(-2)),
            c_term(frac(1, 2), MU, DELTA),
            d_term(frac(1, 2), MU, DELTA),
            e_term(frac(1, 2), MU, DELTA),
            f_term(frac(1, 2), MU, DELTA),
        ],
        "semi-hopf-left" => vec![
            a_term(one()),
            e_term(one(), MU, DELTA),
            d_term(one(), MU, DELTA),
            c_term(one(), "star", DELTA),
            g_term(one(), MU, "star", DELTA),
        ],
        "nil" => vec![
            a_term(one()),
            term(q(-1), &[MU, ID], &[0, 1, 2], &[DELTA, ID]),
            term(q(-1), &[ID, MU], &[0, 1, 2], &[ID, DELTA]),
            term(one(), &[MU, MU], &[0, 1, 2, 3], &[DELTA, DELTA]),
        ],
        "biduplicial" => match (coproduct, product) {
            ("delta_right", "right") | ("delta_left", "left") => {
                vec![a_term(one()), c_term(one(), MU, DELTA), e_term(one(), MU, DELTA)]
            }
            ("delta_left", "right") => vec![e_term(one(), "right", "delta_left")],
            ("delta_right", "left") => vec![c_term(one(), "left", "delta_right")],
            _ => {
                return Err(Error::Precondition(format!(
                    "biduplicial relations exist for delta_left/delta_right with left/right, not {coproduct}/{product}"
                )))
            }
        },
        other => return Err(Error::unknown("relation", other)),
    };
    CompatExpr::new(name, terms)
}

/// Convenience: resolves symbols against the model, fetches the library
/// entry and runs the checker.
pub fn check_named(
    model: &dyn Bialgebra,
    coproduct_sym: &str,
    product_sym: &str,
    name: &str,
    max_degree: usize,
) -> Result<CheckReport> {
    let cop = model.resolve_coproduct(coproduct_sym)?;
    let prod = model.resolve_product(product_sym)?;
    let expr = library(name, cop, prod)?;
    check_relation(model, cop, prod, &expr, max_degree)
}

pub const COALGEBRA_LAWS: &[&str] = &["coassociative", "cocommutative", "nap"];

/// Checks a law of the cooperation alone on every basis element of degree
/// `≤ max_degree`: `coassociative` is `(δ⊗Id)δ = (Id⊗δ)δ`, `cocommutative`
/// is `τδ = δ`, and `nap` is `(δ⊗Id)δ = (Id⊗τ)(δ⊗Id)δ`.
pub fn check_coalgebra_law(model: &dyn Bialgebra, coproduct_sym: &str, law: &str, max_degree: usize) -> Result<CheckReport> {
    let cop = model.resolve_coproduct(coproduct_sym)?;
    if !COALGEBRA_LAWS.contains(&law) {
        return Err(Error::unknown("law", law));
    }
    let mut report = CheckReport {
        relation: law.into(),
        model: model.name().into(),
        coproduct: cop.into(),
        product: String::new(),
        max_degree,
        holds: true,
        checked_pairs: 0,
        first_failure: None,
    };
    for n in 1..=max_degree {
        for x in model.basis(n) {
            let d = coproduct(model, cop, &x)?;
            let (lhs, rhs) = match law {
                "coassociative" => (coproduct_on_slot(model, cop, &d, 0)?, coproduct_on_slot(model, cop, &d, 1)?),
                "cocommutative" => (d.transpose()?, d.clone()),
                _ => {
                    let dd = coproduct_on_slot(model, cop, &d, 0)?;
                    let swapped = dd.permute_slots(&[0, 2, 1])?;
                    (dd, swapped)
                }
            };
            report.checked_pairs += 1;
            if lhs != rhs {
                report.holds = false;
                report.first_failure =
                    Some(Failure { degree: n, left: x.to_string(), right: String::new(), lhs: lhs.to_json(), rhs: rhs.to_json() });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
