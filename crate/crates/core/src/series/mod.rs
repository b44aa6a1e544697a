//! Exact truncated Laurent series.
//!
//! Exponents live in (1/2)Z and are stored doubled, so that half-integer
//! q-powers stay exact integers. Every series carries an explicit truncation
//! order (also doubled, exclusive): coefficients at stored exponents are
//! exact, everything at or above the truncation is unknown and discarded.
//! Arithmetic propagates truncation as the minimum of the inputs' orders,
//! adjusted for leading-exponent shifts in multiplication.

mod multi;
mod standard;

pub use multi::MultiSeries;
pub use standard::{
    eisenstein, eta_product, eta_product_split, j_minus_720, ns_multiplicity_series,
    partitions_colored, ramanujan_tau, sigma,
};

use crate::arith::{q_format, q_int, q_one, q_parse, Q};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Errors from series construction and arithmetic.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("incompatible variables: {0} vs {1}")]
    IncompatibleVariables(String, String),
    #[error("non-invertible leading term (series is zero up to truncation)")]
    NonInvertibleLeadingTerm,
    #[error("exp requires constant term 0 and no negative exponents")]
    ExpPrecondition,
    #[error("log requires constant term 1 and no negative exponents")]
    LogPrecondition,
    #[error("leading eta-product exponent {0} is not a half-integer; use eta_product_split")]
    UnrepresentableExponent(String),
    #[error("unsupported Eisenstein weight {0}; only 2, 4, 6")]
    UnsupportedWeight(i64),
    #[error("series operation would not terminate under the given truncation")]
    NonTerminating,
    #[error("malformed series JSON: {0}")]
    Json(String),
}

/// Truncated Laurent series in one variable with exact rational coefficients.
///
/// `terms` maps doubled exponents to nonzero coefficients; `trunc2` is the
/// doubled truncation order, exclusive: every stored exponent is `< trunc2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSeries {
    var: String,
    terms: BTreeMap<i64, Q>,
    trunc2: i64,
}

impl ExactSeries {
    /// The zero series, known up to (not including) doubled exponent `trunc2`.
    pub fn zero(var: &str, trunc2: i64) -> Self {
        ExactSeries { var: var.to_string(), terms: BTreeMap::new(), trunc2 }
    }

    /// The constant one series.
    pub fn one(var: &str, trunc2: i64) -> Self {
        let mut s = Self::zero(var, trunc2);
        s.set(0, q_one());
        s
    }

    /// A single term `coef * var^(exp2/2)`.
    pub fn monomial(var: &str, exp2: i64, coef: Q, trunc2: i64) -> Self {
        let mut s = Self::zero(var, trunc2);
        s.set(exp2, coef);
        s
    }

    pub fn variable(&self) -> &str {
        &self.var
    }

    pub fn truncation2(&self) -> i64 {
        self.trunc2
    }

    /// Doubled exponent of the leading (lowest) term, if any nonzero term is
    /// known.
    pub fn leading_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Set the coefficient at doubled exponent `exp2` (dropped if at or above
    /// the truncation or zero).
    pub fn set(&mut self, exp2: i64, coef: Q) {
        if exp2 >= self.trunc2 || coef.is_zero() {
            self.terms.remove(&exp2);
        } else {
            self.terms.insert(exp2, coef);
        }
    }

    pub fn add_to(&mut self, exp2: i64, coef: &Q) {
        if exp2 >= self.trunc2 || coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp2).or_insert_with(Q::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp2);
        }
    }

    /// Coefficient at doubled exponent `exp2`. Panics when the exponent is at
    /// or beyond the truncation order, since that coefficient is unknown.
    pub fn coeff2(&self, exp2: i64) -> Q {
        assert!(
            exp2 < self.trunc2,
            "coefficient at doubled exponent {exp2} is beyond truncation {}",
            self.trunc2
        );
        self.terms.get(&exp2).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient at an integer exponent.
    pub fn coeff(&self, exp: i64) -> Q {
        self.coeff2(2 * exp)
    }

    /// Restrict to a smaller truncation order.
    pub fn truncate2(&self, trunc2: i64) -> Self {
        let t = trunc2.min(self.trunc2);
        ExactSeries {
            var: self.var.clone(),
            terms: self.terms.range(..t).map(|(k, v)| (*k, v.clone())).collect(),
            trunc2: t,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var != other.var {
            return Err(SeriesError::IncompatibleVariables(self.var.clone(), other.var.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.truncate2(other.trunc2);
        for (e, c) in other.terms.iter() {
            out.add_to(*e, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactSeries {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
            trunc2: self.trunc2,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.var, self.trunc2);
        }
        ExactSeries {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            trunc2: self.trunc2,
        }
    }

    /// Shift every exponent by `shift2` (doubled); the truncation shifts too.
    pub fn shift2(&self, shift2: i64) -> Self {
        ExactSeries {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(k, v)| (k + shift2, v.clone())).collect(),
            trunc2: self.trunc2 + shift2,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        // Unknown terms of `self` start at self.trunc2 and meet terms of
        // `other` no lower than its leading exponent, and vice versa.
        let cap = i64::MAX / 4;
        let t1 = self.trunc2.saturating_add(other.leading_exp2().unwrap_or(cap)).min(cap);
        let t2 = other.trunc2.saturating_add(self.leading_exp2().unwrap_or(cap)).min(cap);
        let trunc2 = t1.min(t2);
        let mut out = Self::zero(&self.var, trunc2);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in other.terms.iter() {
                let e = e1 + e2;
                if e >= trunc2 {
                    break;
                }
                out.add_to(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero leading term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let Some(lead) = self.leading_exp2() else {
            return Err(SeriesError::NonInvertibleLeadingTerm);
        };
        let c0 = self.terms[&lead].clone();
        // self = c0 x^(lead/2) (1 + g) with g starting strictly above 0.
        let g = self.shift2(-lead).scale(&(q_one() / &c0)).sub(&Self::one(
            &self.var,
            self.trunc2 - lead,
        ))?;
        // (1+g)^{-1} = sum (-g)^k, truncated at the precision of g. Each
        // power is clamped back to that precision so the loop terminates
        // (multiplication would otherwise keep extending the truncation).
        let bound = g.trunc2;
        let mut acc = Self::one(&self.var, bound);
        let mut pw = Self::one(&self.var, bound);
        let ng = g.neg();
        loop {
            pw = pw.mul(&ng)?.truncate2(bound);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw)?;
        }
        Ok(acc.shift2(-lead).scale(&(q_one() / c0)))
    }

    /// Integer power. Negative exponents invert first and require a nonzero
    /// leading coefficient.
    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(Self::one(&self.var, self.trunc2));
        }
        let (mut base, mut e) = if k < 0 {
            (self.inverse()?, (-k) as u64)
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = Self::one(&base.var, base.trunc2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal exponential; requires constant term 0 and no negative powers.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        match self.leading_exp2() {
            Some(l) if l <= 0 => return Err(SeriesError::ExpPrecondition),
            _ => {}
        }
        let mut acc = Self::one(&self.var, self.trunc2);
        let mut pw = Self::one(&self.var, self.trunc2);
        let mut coef = q_one();
        let mut k = 1i64;
        loop {
            pw = pw.mul(self)?.truncate2(self.trunc2);
            if pw.is_zero() {
                break;
            }
            coef /= q_int(k);
            acc = acc.add(&pw.scale(&coef))?;
            k += 1;
            if k > 4 * (self.trunc2.abs() + 2) {
                return Err(SeriesError::NonTerminating);
            }
        }
        Ok(acc)
    }

    /// Formal logarithm; requires constant term 1 and no negative powers.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeff2(0) != q_one() || self.leading_exp2() != Some(0) {
            return Err(SeriesError::LogPrecondition);
        }
        let g = self.sub(&Self::one(&self.var, self.trunc2))?;
        let mut acc = Self::zero(&self.var, self.trunc2);
        let mut pw = Self::one(&self.var, self.trunc2);
        let mut k = 1i64;
        loop {
            pw = pw.mul(&g)?.truncate2(self.trunc2);
            if pw.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { q_one() } else { -q_one() };
            acc = acc.add(&pw.scale(&(sign / q_int(k))))?;
            k += 1;
            if k > 4 * (self.trunc2.abs() + 2) {
                return Err(SeriesError::NonTerminating);
            }
        }
        Ok(acc)
    }

    /// JSON per the external interface:
    /// `{ "vars": [v], "trunc": [t2], "terms": [[e2, "num/den"], ...] }`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": [self.var],
            "trunc": [self.trunc2],
            "terms": self.terms.iter()
                .map(|(e, c)| serde_json::json!([e, q_format(c)]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, SeriesError> {
        let err = |m: &str| SeriesError::Json(m.to_string());
        let vars = v.get("vars").and_then(|x| x.as_array()).ok_or_else(|| err("missing vars"))?;
        if vars.len() != 1 {
            return Err(err("expected exactly one variable"));
        }
        let var = vars[0].as_str().ok_or_else(|| err("variable must be a string"))?;
        let trunc = v.get("trunc").and_then(|x| x.as_array()).ok_or_else(|| err("missing trunc"))?;
        let t2 = trunc.first().and_then(|x| x.as_i64()).ok_or_else(|| err("bad trunc"))?;
        let mut s = Self::zero(var, t2);
        let terms = v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| err("missing terms"))?;
        for t in terms {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| err("bad term"))?;
            let e2 = pair[0].as_i64().ok_or_else(|| err("bad exponent"))?;
            let c = q_parse(pair[1].as_str().ok_or_else(|| err("bad coefficient"))?)
                .map_err(SeriesError::Json)?;
            s.set(e2, c);
        }
        Ok(s)
    }
}

impl fmt::Display for ExactSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in self.terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if e % 2 == 0 {
                    write!(f, "({})*{}^{}", q_format(c), self.var, e / 2)?;
                } else {
                    write!(f, "({})*{}^({}/2)", q_format(c), self.var, e)?;
                }
            }
        }
        write!(f, " + O({}^{}/2)", self.var, self.trunc2)
    }
}
