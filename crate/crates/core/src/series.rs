//! Truncated power series with exact rational coefficients, generating
//! series of operads, and the composition identities between them.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{factorial, format_q, frac, q, Q};

/// `a₀ + a₁t + ⋯ + a_N t^N`, all arithmetic modulo `t^{N+1}`.
///
/// Generating series of operads have `a₀ = 0`; the constant slot is kept so
/// that `1 − u` and `√(1 − u)` are representable as intermediate values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Q>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Q::zero(); order + 1] }
    }

    pub fn constant(order: usize, c: Q) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { Q::one() } else { Q::zero() })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Q) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    /// Coefficients `a₀, a₁, …`; missing entries are zero.
    pub fn from_coeffs(order: usize, cs: &[Q]) -> Self {
        Self::from_fn(order, |n| cs.get(n).cloned().unwrap_or_else(Q::zero))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Q {
        self.coeffs.get(n).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Range(format!("series orders differ: {} vs {}", self.order(), other.order())));
        }
        Ok(())
    }

    fn require_no_constant(&self, what: &str) -> Result<()> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(format!("{what} needs a series with zero constant term")));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Q) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(−t)`.
    pub fn negate_argument(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(n, a)| if n % 2 == 1 { -a } else { a.clone() }).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Q::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `Σ_k c_k u^k` for `u` with zero constant term; terms beyond the order vanish.
    fn power_sum(u: &Self, c: impl Fn(usize) -> Q) -> Result<Self> {
        u.require_no_constant("substitution")?;
        let n = u.order();
        let mut out = Self::constant(n, c(0));
        let mut pow = Self::constant(n, Q::one());
        for k in 1..=n {
            pow = pow.try_mul(u)?;
            out = out.try_add(&pow.scale(&c(k)))?;
        }
        Ok(out)
    }

    /// `self(g(t))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_order(g)?;
        Self::power_sum(g, |k| self.coeff(k))
    }

    /// `√(1 − u)` by the binomial series.
    pub fn sqrt1m(u: &Self) -> Result<Self> {
        // binom(1/2, k) (−1)^k
        Self::power_sum(u, |k| {
            let mut c = Q::one();
            for i in 0..k {
                c = c * (frac(1, 2) - q(i as i64)) / q(i as i64 + 1);
            }
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// `log(1 + u)`.
    pub fn log1p(u: &Self) -> Result<Self> {
        Self::power_sum(u, |k| match k {
            0 => Q::zero(),
            k if k % 2 == 1 => frac(1, k as i64),
            k => frac(-1, k as i64),
        })
    }

    /// `exp(u) − 1`.
    pub fn expm1(u: &Self) -> Result<Self> {
        Self::power_sum(u, |k| if k == 0 { Q::zero() } else { Q::one() / factorial(k) })
    }

    /// `u / (1 − u)`.
    pub fn geometric(u: &Self) -> Result<Self> {
        Self::power_sum(u, |k| if k == 0 { Q::zero() } else { Q::one() })
    }

    /// `n! · a_n`, the symmetric dimensions read off an exponential series.
    pub fn factorial_scaled(&self) -> Vec<Q> {
        self.coeffs.iter().enumerate().map(|(n, a)| a * factorial(n)).collect()
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_q).collect()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, o: &TruncatedSeries) -> TruncatedSeries {
        self.try_add(o).expect("series orders differ")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, o: &TruncatedSeries) -> TruncatedSeries {
        self.try_add(&-o).expect("series orders differ")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, o: &TruncatedSeries) -> TruncatedSeries {
        self.try_mul(o).expect("series orders differ")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&q(-1))
    }
}

/// `c(t) = ½(1 − √(1 − 4t)) = Σ c_{n−1} tⁿ`.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    let u = TruncatedSeries::t(order).scale(&q(4));
    let root = TruncatedSeries::sqrt1m(&u).expect("4t has no constant term");
    (&TruncatedSeries::constant(order, Q::one()) - &root).scale(&frac(1, 2))
}

pub const SERIES_NAMES: &[&str] = &["As", "Com", "Lie", "Mag", "Dup", "Dup!", "Nil", "Sabinin"];

/// The generating series `Σ dim P(n)/n! tⁿ` of a named operad.
pub fn gen_series(name: &str, order: usize) -> Result<TruncatedSeries> {
    if order < 1 {
        return Err(Error::Range("series order must be at least 1".into()));
    }
    let t = TruncatedSeries::t(order);
    let positive = |f: fn(usize) -> Q| TruncatedSeries::from_fn(order, move |n| if n == 0 { Q::zero() } else { f(n) });
    Ok(match name {
        "As" => positive(|_| Q::one()),
        "Com" => positive(|n| Q::one() / factorial(n)),
        "Lie" => positive(|n| frac(1, n as i64)),
        "Mag" => catalan_series(order),
        "Dup" => TruncatedSeries::geometric(&catalan_series(order))?,
        "Dup!" => positive(|n| q(n as i64)),
        "Nil" => &t + &(&t * &t),
        "Sabinin" => TruncatedSeries::log1p(&catalan_series(order))?,
        other => return Err(Error::unknown("series", other)),
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Mismatch {
    pub order: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesCheck {
    pub check: String,
    pub names: Vec<String>,
    pub order: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

fn compare(check: &str, names: &[&str], order: usize, expected: &TruncatedSeries, got: &TruncatedSeries) -> SeriesCheck {
    let first_mismatch = (0..=order).find(|&n| expected.coeff(n) != got.coeff(n)).map(|n| Mismatch {
        order: n,
        expected: format_q(&expected.coeff(n)),
        got: format_q(&got.coeff(n)),
    });
    SeriesCheck {
        check: check.to_string(),
        names: names.iter().map(|s| s.to_string()).collect(),
        order,
        holds: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// `f^A = f^C ∘ f^P` up to `t^order`.
pub fn check_triple_identity(c: &str, a: &str, p: &str, order: usize) -> Result<SeriesCheck> {
    let (fc, fa, fp) = (gen_series(c, order)?, gen_series(a, order)?, gen_series(p, order)?);
    Ok(compare("triple", &[c, a, p], order, &fa, &fc.compose(&fp)?))
}

/// `f^{P!}(−f^P(−t)) = t` up to `t^order`.
pub fn check_koszul_dual(p: &str, dual: &str, order: usize) -> Result<SeriesCheck> {
    let (fp, fd) = (gen_series(p, order)?, gen_series(dual, order)?);
    let inner = -&fp.negate_argument();
    Ok(compare("koszul", &[p, dual], order, &TruncatedSeries::t(order), &fd.compose(&inner)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<String> {
        s.coeff_strings()
    }

    #[test]
    fn catalan_coefficients() {
        assert_eq!(ints(&catalan_series(6)), ["0", "1", "1", "2", "5", "14", "42"]);
    }

    #[test]
    fn named_series() {
        assert_eq!(ints(&gen_series("Mag", 5).unwrap()), ["0", "1", "1", "2", "5", "14"]);
        assert_eq!(ints(&gen_series("Lie", 4).unwrap()), ["0", "1", "1/2", "1/3", "1/4"]);
        assert_eq!(ints(&gen_series("Dup", 5).unwrap()), ["0", "1", "2", "5", "14", "42"]);
        let sab: Vec<String> = gen_series("Sabinin", 5).unwrap().factorial_scaled().iter().map(format_q).collect();
        assert_eq!(sab, ["0", "1", "1", "8", "78", "1104"]);
        assert!(gen_series("Zinb", 3).is_err());
        assert!(gen_series("As", 0).is_err());
    }

    #[test]
    fn identity_inner_series() {
        let f = gen_series("As", 8).unwrap();
        assert_eq!(f.compose(&TruncatedSeries::t(8)).unwrap(), f);
    }

    #[test]
    fn constant_term_rejected() {
        let one = TruncatedSeries::constant(4, Q::one());
        assert!(TruncatedSeries::log1p(&one).is_err());
        assert!(gen_series("As", 4).unwrap().compose(&one).is_err());
    }

    #[test]
    fn negative_control_fails_at_cubic_order() {
        let r = check_triple_identity("Com", "As", "Com", 4).unwrap();
        assert!(!r.holds);
        assert_eq!(r.first_mismatch.unwrap().order, 3);
    }
}
