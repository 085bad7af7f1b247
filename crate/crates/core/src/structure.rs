//! Degreewise structure checks: the map φ from operations to cooperations,
//! the H2 classification, primitive parts, PBW-type expansions, and the
//! dimension count behind `A ≅ C ∘ Prim`.

use num_traits::Zero;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graded::GradedEndo;
use crate::idempotents::apply_tensor_power;
use crate::key::Key;
use crate::linalg::Matrix;
use crate::lincomb::Elem;
use crate::models::{coproduct, Bialgebra};
use crate::presets::Preset;
use crate::scheme::SplittingScheme;

/// Basis keys of degree `n` whose letters are `0, 1, …, n−1` in order, from a
/// model on at least `n` letters.
pub fn multilinear_keys(m: &dyn Bialgebra, n: usize) -> Vec<Key> {
    let target: Vec<u8> = (0..n as u8).collect();
    m.basis_keys(n).into_iter().filter(|k| k.letters() == target).collect()
}

/// `x₀ ⊗ x₁ ⊗ ⋯ ⊗ x_{n−1}` built from the degree-1 keys of `m`.
pub fn generator_tensor(m: &dyn Bialgebra, n: usize) -> Result<Key> {
    let gens = m.basis_keys(1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n as u8 {
        let g = gens
            .iter()
            .find(|k| k.letters() == [i])
            .ok_or_else(|| Error::Range(format!("model has no generator {i}")))?;
        out.push(g.clone());
    }
    Ok(Key::from_factors(out))
}

/// The matrix of `φ_n : A_n → C_n`. Rows follow the scheme's cooperations
/// of arity `n`, columns the multilinear keys of degree `n`; entry `(i, j)`
/// is the coefficient of `x₀ ⊗ ⋯ ⊗ x_{n−1}` in `δ_i(key_j)`.
pub fn phi_map(preset: &Preset, n: usize) -> Result<(Matrix, Vec<Key>)> {
    let scheme = preset.scheme()?;
    let m = preset.build_with(n.max(preset.alphabet));
    let cols = multilinear_keys(m.as_ref(), n);
    let gen = generator_tensor(m.as_ref(), n)?;
    let pairs = scheme.pairs(n);
    let mut phi = Matrix::zeros(pairs.len(), cols.len());
    for (i, p) in pairs.iter().enumerate() {
        for (j, k) in cols.iter().enumerate() {
            let c = p.coop.eval_key(m.as_ref(), k)?.coeff(&gen);
            if !c.is_zero() {
                phi.set(i, j, c);
            }
        }
    }
    Ok((phi, cols))
}

/// The matrix of the splitting `s_n : C_n → A_n` (columns are the scheme's
/// monomials applied to `x₀, …, x_{n−1}`).
pub fn splitting_map(preset: &Preset, n: usize) -> Result<Matrix> {
    let scheme = preset.scheme()?;
    let m = preset.build_with(n.max(preset.alphabet));
    let cols = multilinear_keys(m.as_ref(), n);
    let gen = generator_tensor(m.as_ref(), n)?;
    let pairs = scheme.pairs(n);
    let mut s = Matrix::zeros(cols.len(), pairs.len());
    for (j, p) in pairs.iter().enumerate() {
        let img = p.prod.eval_factors(m.as_ref(), gen.factors())?;
        for (i, c) in img.to_vector(&cols).into_iter().enumerate() {
            if !c.is_zero() {
                s.set(i, j, c);
            }
        }
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Iso,
    EpiWithSplitting,
    Fail,
    Unsupported,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct H2Degree {
    pub degree: usize,
    pub dim_a: usize,
    pub dim_c: usize,
    pub rank_phi: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct H2Report {
    pub model: String,
    pub max_degree: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub degrees: Vec<H2Degree>,
}

/// Classifies φ in each degree: `iso` if bijective, `epi-with-splitting` if
/// surjective with `φ ∘ s = Id` for the declared splitting, `fail` otherwise.
/// The overall verdict is the weakest degreewise one.
pub fn check_h2(preset: &Preset, max_degree: usize) -> Result<H2Report> {
    let unsupported = |reason: &str| H2Report {
        model: preset.name.to_string(),
        max_degree,
        verdict: Verdict::Unsupported,
        reason: Some(reason.to_string()),
        degrees: Vec::new(),
    };
    let Some(scheme) = &preset.scheme else {
        return Ok(unsupported("unsupported cooperad: no splitting scheme is declared for this model"));
    };
    if matches!(scheme, SplittingScheme::Classical { .. }) {
        return Ok(unsupported("unsupported cooperad: the cooperad is symmetric"));
    }
    let mut degrees = Vec::new();
    for n in 1..=max_degree {
        let (phi, cols) = phi_map(preset, n)?;
        let rank = phi.rank();
        let (rows, dim_a) = (phi.rows(), cols.len());
        let verdict = if rows == dim_a && rank == rows {
            Verdict::Iso
        } else if rank == rows && phi.mul(&splitting_map(preset, n)?) == Matrix::identity(rows) {
            Verdict::EpiWithSplitting
        } else {
            Verdict::Fail
        };
        degrees.push(H2Degree { degree: n, dim_a, dim_c: rows, rank_phi: rank, verdict });
    }
    let verdict = if degrees.iter().any(|d| d.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if degrees.iter().any(|d| d.verdict == Verdict::EpiWithSplitting) {
        Verdict::EpiWithSplitting
    } else {
        Verdict::Iso
    };
    Ok(H2Report { model: preset.name.to_string(), max_degree, verdict, reason: None, degrees })
}

/// A basis of the common kernel of the generating coproducts in degree `n`.
pub fn primitive_part(m: &dyn Bialgebra, generating: &[&str], n: usize) -> Result<Vec<Elem>> {
    let keys = m.basis_keys(n);
    let mut images: Vec<Elem> = Vec::with_capacity(keys.len());
    for k in &keys {
        // Tag each coproduct's output so different coproducts never share rows.
        let mut img = Elem::zero();
        for (tag, sym) in generating.iter().enumerate() {
            let d = coproduct(m, sym, &Elem::key(k.clone()))?;
            for (dk, c) in d.iter() {
                let tagged = Key::from_factors(vec![Key::Word(crate::key::Word(vec![tag as u8])), dk.clone()]);
                img.add_term(tagged, c.clone());
            }
        }
        images.push(img);
    }
    let mut rows: Vec<Key> = images.iter().flat_map(|e| e.keys().cloned()).collect();
    rows.sort();
    rows.dedup();
    let mut mat = Matrix::zeros(rows.len(), keys.len());
    for (j, img) in images.iter().enumerate() {
        for (i, c) in img.to_vector(&rows).into_iter().enumerate() {
            if !c.is_zero() {
                mat.set(i, j, c);
            }
        }
    }
    Ok(mat.kernel().into_iter().map(|v| Elem::from_vector(&keys, &v)).collect())
}

/// True if every generating coproduct kills `e`.
pub fn is_primitive(m: &dyn Bialgebra, generating: &[&str], e: &Elem) -> Result<bool> {
    for sym in generating {
        if !coproduct(m, sym, e)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One summand of a PBW-type expansion: the primitive tensor `component` of
/// arity `arity`, and its product `reassembled` under the paired monomial.
#[derive(Clone, Debug)]
pub struct PbwComponent {
    pub arity: usize,
    pub label: String,
    pub component: Elem,
    pub reassembled: Elem,
}

impl PbwComponent {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "arity": self.arity,
            "monomial": self.label,
            "component": self.component.to_json(),
            "reassembled": self.reassembled.to_json(),
        })
    }
}

/// Expands `a` as `Σ_i weight_i · μ_i((e ⊗ ⋯ ⊗ e)(δ_i(a)))`, one entry per
/// nonzero summand; `e` is the versal idempotent of the preset.
pub fn pbw_expand(m: &dyn Bialgebra, scheme: &SplittingScheme, e: &GradedEndo, a: &Elem) -> Result<Vec<PbwComponent>> {
    let top = a.max_degree();
    if top > e.basis().max_degree() {
        return Err(Error::Grading(format!("element of degree {top} exceeds the idempotent's range")));
    }
    let mut out = Vec::new();
    for k in 1..=top {
        for p in scheme.pairs(k) {
            let split = p.coop.eval(m, a)?;
            let component = apply_tensor_power(e, &split)?.scale(&p.weight);
            if component.is_zero() {
                continue;
            }
            let reassembled = p.prod.eval(m, &component)?;
            out.push(PbwComponent { arity: k, label: p.label.clone(), component, reassembled });
        }
    }
    Ok(out)
}

/// `Σ_k dim C_k · Σ_{n₁+⋯+n_k = n} Π dim P_{n_i}`.
pub fn composite_count(c_dims: &[u128], p_dims: &[u128], n: usize) -> u128 {
    // ways[j][d]: ordered j-tuples of P-basis elements of total degree d.
    let mut total = 0;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for k in 1..=n {
        let mut next = vec![0u128; n + 1];
        for d in 0..=n {
            if ways[d] == 0 {
                continue;
            }
            for (i, &p) in p_dims.iter().enumerate().skip(1) {
                if d + i > n {
                    break;
                }
                next[d + i] += ways[d] * p;
            }
        }
        ways = next;
        total += c_dims.get(k).copied().unwrap_or(0) * ways[n];
    }
    total
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureRow {
    pub degree: usize,
    pub dim_c: u128,
    pub dim_prim: u128,
    pub dim_a: u128,
    pub composite: u128,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub model: String,
    pub max_degree: usize,
    pub holds: bool,
    pub rows: Vec<StructureRow>,
}

/// Compares `dim A_n` on one generator with the composite count from the
/// scheme's cooperation count and the primitive dimensions.
pub fn verify_structure_iso(preset: &Preset, max_degree: usize) -> Result<StructureReport> {
    let scheme = preset.scheme()?;
    let m = preset.build_with(1);
    let mut c_dims = vec![0u128];
    let mut p_dims = vec![0u128];
    let mut rows = Vec::new();
    for n in 1..=max_degree {
        c_dims.push(scheme.pairs(n).len() as u128);
        p_dims.push(primitive_part(m.as_ref(), preset.generating, n)?.len() as u128);
    }
    for n in 1..=max_degree {
        let dim_a = m.basis_keys(n).len() as u128;
        let composite = composite_count(&c_dims, &p_dims, n);
        rows.push(StructureRow { degree: n, dim_c: c_dims[n], dim_prim: p_dims[n], dim_a, composite });
    }
    let holds = rows.iter().all(|r| r.dim_a == r.composite);
    Ok(StructureReport { model: preset.name.to_string(), max_degree, holds, rows })
}

/// The degree-`n` matrix of `e` as `"p/q"` strings, for reports.
pub fn matrix_strings(e: &GradedEndo, n: usize) -> Vec<Vec<String>> {
    e.matrix(n).map(|m| m.to_strings()).unwrap_or_default()
}

/// Whether `φ_n` is the identity matrix.
pub fn phi_is_identity(phi: &Matrix) -> bool {
    phi.rows() == phi.cols() && *phi == Matrix::identity(phi.rows())
}

/// Whether `cobracket` sends every element of `Lie_n` (on `k` letters) into
/// `⊕_i Lie_i ⊗ Lie_{n−i}`. Returns the first element that escapes.
pub fn cobracket_preserves_lie(k: usize, n: usize) -> Result<Option<Elem>> {
    use crate::linalg::rank_of_rows;
    use crate::models::{lie_subspace, TensorAlgebra};
    let m = TensorAlgebra::new(k);
    let mut span = Vec::new();
    for i in 1..n {
        for a in lie_subspace(k, i) {
            for b in lie_subspace(k, n - i) {
                span.push(a.tensor(&b));
            }
        }
    }
    for u in lie_subspace(k, n) {
        let d = coproduct(&m, "cobracket", &u)?;
        let mut keys: Vec<Key> = span.iter().chain(std::iter::once(&d)).flat_map(|e| e.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let mut rows: Vec<_> = span.iter().map(|e| e.to_vector(&keys)).collect();
        let before = rank_of_rows(&rows, keys.len());
        rows.push(d.to_vector(&keys));
        if rank_of_rows(&rows, keys.len()) > before {
            return Ok(Some(u));
        }
    }
    Ok(None)
}
