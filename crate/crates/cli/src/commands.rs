use serde_json::{json, Value};

use opbialg::error::{Error, Result};
use opbialg::graded::GradedBasis;
use opbialg::homology::total_homology;
use opbialg::idempotents::{dynkin, versal, ConvolutionContext};
use opbialg::key::LETTERS;
use opbialg::lincomb::Elem;
use opbialg::literal::parse_elem;
use opbialg::models::{coproduct, product, Bialgebra};
use opbialg::presets::{preset_by_name, Preset};
use opbialg::relations::{check_coalgebra_law, check_named, check_relation, CompatExpr};
use opbialg::scheme::SplittingScheme;
use opbialg::series::{check_koszul_dual, check_triple_identity, gen_series};
use opbialg::structure::{check_h2, pbw_expand, primitive_part, verify_structure_iso, Verdict};
use opbialg::suite::{pbw_table_reports, run_criteria, series_reports, CRITERIA};
use opbialg::tree::Tree;

use crate::{Cli, Command, ModelArgs, TreesAction};

/// A report, whether every check in it held, and an optional flat table
/// (header first) for CSV output.
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
    pub table: Option<Vec<Vec<String>>>,
}

impl Outcome {
    fn new(report: Value, ok: bool) -> Self {
        Outcome { report, ok, table: None }
    }

    fn with_table(mut self, table: Vec<Vec<String>>) -> Self {
        self.table = Some(table);
        self
    }
}

fn max_degree(cli: &Cli, default: usize) -> usize {
    cli.max_degree.map_or(default, |d| d as usize)
}

fn required_max_degree(cli: &Cli) -> Result<usize> {
    cli.max_degree.map(|d| d as usize).ok_or_else(|| Error::Range("--max-degree is required here".into()))
}

/// Resolves the preset and builds its model on enough letters for `needed`.
fn build(args: &ModelArgs, needed: usize) -> Result<(Preset, Box<dyn Bialgebra>)> {
    let p = preset_by_name(&args.model)?;
    let k = match args.alphabet {
        Some(k) if k < needed => {
            return Err(Error::Range(format!("the input uses {needed} letters but --alphabet is {k}")))
        }
        Some(k) => k,
        None => p.alphabet.max(needed),
    };
    let m = opbialg::models::model_by_name(p.model, k)?;
    Ok((p, m))
}

/// Parses elements in the preset's model, widening the alphabet to cover them.
fn parse_in_model(args: &ModelArgs, texts: &[&str]) -> Result<(Preset, Box<dyn Bialgebra>, Vec<Elem>)> {
    let (_, wide) = build(args, LETTERS.len())?;
    let mut needed = 1;
    for t in texts {
        let e = parse_elem(Some(wide.as_ref()), t)?;
        for k in e.keys() {
            needed = needed.max(k.letters().iter().map(|&l| l as usize + 1).max().unwrap_or(1));
        }
    }
    let (p, m) = build(args, needed)?;
    let elems = texts.iter().map(|t| parse_elem(Some(m.as_ref()), t)).collect::<Result<Vec<_>>>()?;
    Ok((p, m, elems))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Trees(t) => trees(&t.action),
        Command::Coproduct(a) => {
            let (p, m, es) = parse_in_model(&a.model, &[&a.element])?;
            let sym = m.resolve_coproduct(a.coproduct.as_deref().unwrap_or(p.coproduct))?;
            let value = coproduct(m.as_ref(), sym, &es[0])?;
            Ok(Outcome::new(
                json!({ "model": p.name, "coproduct": sym, "element": es[0].to_json(), "value": value.to_json() }),
                true,
            ))
        }
        Command::Product(a) => {
            let (p, m, es) = parse_in_model(&a.model, &[&a.left, &a.right])?;
            let sym = m.resolve_product(a.product.as_deref().unwrap_or(p.product))?;
            let value = product(m.as_ref(), sym, &es[0], &es[1])?;
            Ok(Outcome::new(
                json!({
                    "model": p.name,
                    "product": sym,
                    "left": es[0].to_json(),
                    "right": es[1].to_json(),
                    "value": value.to_json(),
                }),
                true,
            ))
        }
        Command::Check(a) => check(cli, a),
        Command::Prim(a) => {
            let (p, m) = build(&a.model, 1)?;
            let basis = primitive_part(m.as_ref(), p.generating, a.degree)?;
            let mut table = vec![vec!["index".into(), "key".into(), "coefficient".into()]];
            for (i, e) in basis.iter().enumerate() {
                for (k, c) in e.sorted_entries() {
                    table.push(vec![i.to_string(), k, c]);
                }
            }
            Ok(Outcome::new(
                json!({
                    "model": p.name,
                    "alphabet": m.alphabet(),
                    "degree": a.degree,
                    "generatingCoproducts": p.generating,
                    "dim": basis.len(),
                    "basis": basis.iter().map(Elem::to_json).collect::<Vec<_>>(),
                }),
                true,
            )
            .with_table(table))
        }
        Command::Pbw(a) => pbw(a),
        Command::Idempotent(a) => idempotent(cli, a),
        Command::Verify(a) => {
            let p = preset_by_name(&a.model.model)?;
            let max = max_degree(cli, 5);
            if a.what == "h2" {
                let r = check_h2(&p, max)?;
                let ok = r.verdict != Verdict::Fail;
                Ok(Outcome::new(serde_json::to_value(r).expect("serializable"), ok))
            } else {
                let r = verify_structure_iso(&p, max)?;
                let ok = r.holds;
                Ok(Outcome::new(serde_json::to_value(r).expect("serializable"), ok))
            }
        }
        Command::Series(a) => series(a),
        Command::Homology(a) => {
            let r = total_homology(a.internal_degree, a.check_only)?;
            let ok = r.differential_checks.all();
            Ok(Outcome::new(serde_json::to_value(r).expect("serializable"), ok))
        }
        Command::Suite(a) => {
            if a.tables {
                let (tables_ok, tables) = pbw_table_reports()?;
                let (series_ok, series) = series_reports(12)?;
                let ok = tables_ok && series_ok;
                return Ok(Outcome::new(
                    json!({ "seed": cli.seed, "pass": ok, "pbwTables": tables, "series": series }),
                    ok,
                ));
            }
            let ids: Vec<u32> =
                if a.criteria.is_empty() { CRITERIA.iter().map(|(i, _)| *i).collect() } else { a.criteria.clone() };
            let reports = run_criteria(&ids)?;
            let ok = reports.iter().all(|r| r.pass);
            let table = std::iter::once(vec!["id".into(), "name".into(), "pass".into()])
                .chain(reports.iter().map(|r| vec![r.id.to_string(), r.name.to_string(), r.pass.to_string()]))
                .collect();
            Ok(Outcome::new(json!({ "seed": cli.seed, "pass": ok, "criteria": reports }), ok).with_table(table))
        }
    }
}

fn trees(action: &TreesAction) -> Result<Outcome> {
    match action {
        TreesAction::Enumerate { leaves } => {
            let ts: Vec<String> = Tree::enumerate(*leaves)?.iter().map(Tree::to_string).collect();
            let table = std::iter::once(vec!["index".into(), "tree".into()])
                .chain(ts.iter().enumerate().map(|(i, t)| vec![i.to_string(), t.clone()]))
                .collect();
            Ok(Outcome::new(json!(ts), true).with_table(table))
        }
        TreesAction::Graft { op, left, right } => {
            let (l, r): (Tree, Tree) = (left.parse()?, right.parse()?);
            let out = if op == "over" { Tree::over(&l, &r) } else { Tree::under(&l, &r) };
            Ok(Outcome::new(json!({ "op": op, "left": left, "right": right, "result": out.to_string() }), true))
        }
        TreesAction::Cuts { tree } => {
            let t: Tree = tree.parse()?;
            let mut cuts = Vec::new();
            for i in 1..t.leaf_count().saturating_sub(1) {
                let (a, b) = t.path_cut(i)?;
                cuts.push(json!({ "at": i, "left": a.to_string(), "right": b.to_string() }));
            }
            Ok(Outcome::new(json!({ "tree": tree, "cuts": cuts }), true))
        }
    }
}

fn check(cli: &Cli, a: &crate::CheckArgs) -> Result<Outcome> {
    let (p, m) = build(&a.model, 1)?;
    let max = max_degree(cli, 4);
    let cop = a.coproduct.as_deref().unwrap_or(p.coproduct);
    let prod = a.product.as_deref().unwrap_or(p.product);
    let report = if let Some(law) = &a.law {
        check_coalgebra_law(m.as_ref(), cop, law, max)?
    } else if let Some(name) = &a.relation {
        check_named(m.as_ref(), cop, prod, name, max)?
    } else if let Some(path) = &a.relation_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let mut expr = CompatExpr::from_json(&text)?;
        let (cop, prod) = (m.resolve_coproduct(cop)?, m.resolve_product(prod)?);
        expr = bind_placeholders(expr, cop, prod);
        check_relation(m.as_ref(), cop, prod, &expr, max)?
    } else {
        return Err(Error::Range("one of --relation, --relation-file or --law is required".into()));
    };
    let ok = report.holds;
    let mut v = serde_json::to_value(report).expect("serializable");
    if !a.witness {
        if let Some(o) = v.as_object_mut() {
            o.remove("firstFailure");
        }
    }
    Ok(Outcome::new(v, ok))
}

/// Relation files may name the checked product and coproduct through the
/// `$mu` and `$delta` placeholders; other symbols are used as written.
fn bind_placeholders(mut e: CompatExpr, cop: &str, prod: &str) -> CompatExpr {
    use opbialg::relations::{DELTA, MU};
    for t in &mut e.terms {
        for s in t.out_ops.iter_mut() {
            if s == MU {
                *s = prod.to_string();
            }
        }
        for s in t.in_coops.iter_mut() {
            if s == DELTA {
                *s = cop.to_string();
            }
        }
    }
    e
}

fn pbw(a: &crate::PbwArgs) -> Result<Outcome> {
    let (p, m, es) = parse_in_model(&a.model, &[&a.element])?;
    let x = &es[0];
    let scheme = p.scheme()?;
    let top = x.max_degree().max(1);
    if !matches!(scheme, SplittingScheme::Classical { .. }) {
        let h2 = check_h2(&p, top)?;
        if h2.verdict == Verdict::Fail {
            return Err(Error::Precondition(format!("H2 does not hold for {} up to degree {top}", p.name)));
        }
    }
    let basis = GradedBasis::of_model(m.as_ref(), top);
    let e = versal(m.as_ref(), scheme, &basis)?;
    let comps = pbw_expand(m.as_ref(), scheme, &e, x)?;
    let total = comps.iter().fold(Elem::zero(), |acc, c| acc + c.reassembled.clone());
    let ok = total == *x;
    Ok(Outcome::new(
        json!({
            "model": p.name,
            "element": x.to_json(),
            "components": comps.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "reassemblesExactly": ok,
        }),
        ok,
    ))
}

fn idempotent(cli: &Cli, a: &crate::IdempotentArgs) -> Result<Outcome> {
    let max = required_max_degree(cli)?;
    let (p, m) = build(&a.model, 1)?;
    let basis = GradedBasis::of_model(m.as_ref(), max);
    let words_only = |what: &str| -> Result<()> {
        if p.model != "as" {
            return Err(Error::Unsupported(format!("{what} acts on the tensor algebra (models as, classical)")));
        }
        Ok(())
    };
    let e = match a.kind.as_str() {
        "versal" => versal(m.as_ref(), p.scheme()?, &basis)?,
        "dynkin" => {
            words_only("the Dynkin idempotent")?;
            dynkin(&basis)?
        }
        "geometric" => ConvolutionContext::new(m.as_ref(), p.product, p.coproduct, max)?.geometric()?,
        k => {
            let i: usize = k
                .strip_prefix("eulerian:")
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| Error::Parse(format!("unknown idempotent kind {k:?}")))?;
            words_only("the Eulerian family")?;
            ConvolutionContext::new(m.as_ref(), "concat", "shuffle", max)?.eulerian(i)?
        }
    };
    let ranks: Vec<usize> = (1..=max).map(|n| e.rank(n)).collect();
    let idempotent = e.is_idempotent();
    let mut report = json!({
        "model": p.name,
        "alphabet": m.alphabet(),
        "kind": a.kind,
        "maxDegree": max,
        "idempotent": idempotent,
        "ranks": ranks,
    });
    let mut table = vec![vec!["degree".into(), "rank".into()]];
    table.extend(ranks.iter().enumerate().map(|(i, r)| vec![(i + 1).to_string(), r.to_string()]));
    if a.report == "matrix" {
        table = vec![vec!["degree".into(), "row".into(), "col".into(), "value".into()]];
        let mut degrees = Vec::new();
        for (n, b) in basis.degrees() {
            let mat = e.matrix(n).expect("degree present").to_strings();
            for (i, row) in mat.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    table.push(vec![n.to_string(), i.to_string(), j.to_string(), v.clone()]);
                }
            }
            degrees.push(json!({
                "degree": n,
                "basis": b.keys.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                "matrix": mat,
            }));
        }
        report["degrees"] = json!(degrees);
    }
    // Every shipped idempotent kind is a projector; anything else is a failure.
    Ok(Outcome::new(report, idempotent).with_table(table))
}

fn series(a: &crate::SeriesArgs) -> Result<Outcome> {
    if let Some(name) = &a.show {
        let s = gen_series(name, a.order)?;
        let cs = s.coeff_strings();
        let table = std::iter::once(vec!["n".into(), "coefficient".into()])
            .chain(cs.iter().enumerate().map(|(n, c)| vec![n.to_string(), c.clone()]))
            .collect();
        return Ok(Outcome::new(json!({ "name": name, "order": a.order, "coefficients": cs }), true).with_table(table));
    }
    let names: Vec<&str> = a.names.iter().map(String::as_str).collect();
    let r = match (a.check.as_deref(), names.as_slice()) {
        (Some("triple"), [c, x, p]) => check_triple_identity(c, x, p, a.order)?,
        (Some("koszul"), [p, d]) => check_koszul_dual(p, d, a.order)?,
        (Some(kind), _) => return Err(Error::Range(format!("wrong number of --names for a {kind} check"))),
        (None, _) => return Err(Error::Range("one of --show or --check is required".into())),
    };
    let ok = r.holds;
    Ok(Outcome::new(serde_json::to_value(r).expect("serializable"), ok))
}
