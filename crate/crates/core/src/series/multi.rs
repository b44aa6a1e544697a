//! Truncated Laurent series in up to three variables.

use super::{ExactSeries, SeriesError};
use crate::arith::{q_format, q_one, q_parse, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Multivariate truncated Laurent series. Exponents are doubled integers per
/// variable; the truncation bound is per variable, `None` meaning the series
/// is exact in that variable (all exponents appearing are genuinely present).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, Q>,
    trunc2: Vec<Option<i64>>,
}

impl MultiSeries {
    pub fn zero(vars: &[&str], trunc2: Vec<Option<i64>>) -> Self {
        assert!(!vars.is_empty() && vars.len() <= 3, "one to three variables");
        assert_eq!(vars.len(), trunc2.len());
        MultiSeries {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
            trunc2,
        }
    }

    pub fn one(vars: &[&str], trunc2: Vec<Option<i64>>) -> Self {
        let n = vars.len();
        let mut s = Self::zero(vars, trunc2);
        s.set(vec![0; n], q_one());
        s
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn truncation2(&self) -> &[Option<i64>] {
        &self.trunc2
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Q)> {
        self.terms.iter()
    }

    fn in_range(&self, exp2: &[i64]) -> bool {
        exp2.iter().zip(&self.trunc2).all(|(e, t)| t.map_or(true, |t| *e < t))
    }

    pub fn set(&mut self, exp2: Vec<i64>, coef: Q) {
        assert_eq!(exp2.len(), self.vars.len());
        if !self.in_range(&exp2) || coef.is_zero() {
            self.terms.remove(&exp2);
        } else {
            self.terms.insert(exp2, coef);
        }
    }

    pub fn add_to(&mut self, exp2: &[i64], coef: &Q) {
        assert_eq!(exp2.len(), self.vars.len());
        if !self.in_range(exp2) || coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp2.to_vec()).or_insert_with(Q::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(exp2);
        }
    }

    /// Coefficient at a doubled exponent tuple; panics beyond truncation.
    pub fn coeff2(&self, exp2: &[i64]) -> Q {
        assert!(self.in_range(exp2), "coefficient at {exp2:?} is beyond truncation");
        self.terms.get(exp2).cloned().unwrap_or_else(Q::zero)
    }

    /// Minimum exponent per variable over the stored terms (None if empty).
    fn leading_exp2(&self) -> Option<Vec<i64>> {
        if self.terms.is_empty() {
            return None;
        }
        let n = self.vars.len();
        let mut mins = vec![i64::MAX; n];
        for e in self.terms.keys() {
            for (m, x) in mins.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
        }
        Some(mins)
    }

    /// Restrict to per-variable truncations (tightest of both).
    pub fn truncate(&self, trunc2: &[Option<i64>]) -> Self {
        assert_eq!(trunc2.len(), self.vars.len());
        let newt: Vec<Option<i64>> = self
            .trunc2
            .iter()
            .zip(trunc2)
            .map(|(a, b)| match (a, b) {
                (Some(x), Some(y)) => Some(*x.min(y)),
                (Some(x), None) => Some(*x),
                (None, Some(y)) => Some(*y),
                (None, None) => None,
            })
            .collect();
        let mut out = MultiSeries {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            trunc2: newt,
        };
        for (e, c) in &self.terms {
            out.add_to(e, c);
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::IncompatibleVariables(
                self.vars.join(","),
                other.vars.join(","),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.truncate(&other.trunc2);
        for (e, c) in &other.terms {
            out.add_to(e, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MultiSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
            trunc2: self.trunc2.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return MultiSeries {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
                trunc2: self.trunc2.clone(),
            };
        }
        MultiSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
            trunc2: self.trunc2.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let n = self.vars.len();
        let cap = i64::MAX / 4;
        let la = self.leading_exp2().unwrap_or_else(|| vec![cap; n]);
        let lb = other.leading_exp2().unwrap_or_else(|| vec![cap; n]);
        let trunc2: Vec<Option<i64>> = (0..n)
            .map(|v| {
                let t1 = self.trunc2[v].map(|t| t.saturating_add(lb[v]).min(cap));
                let t2 = other.trunc2[v].map(|t| t.saturating_add(la[v]).min(cap));
                match (t1, t2) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (Some(x), None) => Some(x),
                    (None, Some(y)) => Some(y),
                    (None, None) => None,
                }
            })
            .collect();
        let mut out = MultiSeries {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            trunc2,
        };
        let mut e = vec![0i64; n];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                for i in 0..n {
                    e[i] = e1[i] + e2[i];
                }
                out.add_to(&e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(Self::one(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                self.trunc2.clone(),
            ));
        }
        if k < 0 {
            return Err(SeriesError::NonInvertibleLeadingTerm);
        }
        let mut base = self.clone();
        let mut e = k as u64;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Self::one(&vars, self.trunc2.clone());
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

    /// A variable that guarantees termination of power iteration: finite
    /// truncation and strictly positive exponent in every term.
    fn termination_var(&self) -> Option<usize> {
        (0..self.vars.len()).find(|&v| {
            self.trunc2[v].is_some() && self.terms.keys().all(|e| e[v] > 0)
        })
    }

    /// Formal exponential; requires constant term 0 and a terminating
    /// variable direction.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.terms.contains_key(&vec![0; self.vars.len()]) {
            return Err(SeriesError::ExpPrecondition);
        }
        let v = self.termination_var().ok_or(SeriesError::NonTerminating)?;
        let kmax = self.trunc2[v].unwrap();
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Self::one(&vars, self.trunc2.clone());
        let mut pw = Self::one(&vars, self.trunc2.clone());
        let mut coef = q_one();
        for k in 1..=kmax.max(1) {
            pw = pw.mul(self)?.truncate(&self.trunc2);
            if pw.is_zero() {
                break;
            }
            coef /= crate::arith::q_int(k);
            acc = acc.add(&pw.scale(&coef))?;
        }
        Ok(acc)
    }

    /// Formal logarithm; requires constant term 1 and a terminating direction
    /// for the rest.
    pub fn log(&self) -> Result<Self, SeriesError> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let one = Self::one(&vars, self.trunc2.clone());
        if self.coeff2(&vec![0; self.vars.len()]) != q_one() {
            return Err(SeriesError::LogPrecondition);
        }
        let g = self.sub(&one)?;
        let v = g.termination_var().ok_or(SeriesError::NonTerminating)?;
        let kmax = g.trunc2[v].unwrap();
        let mut acc = Self::zero(&vars, self.trunc2.clone());
        let mut pw = Self::one(&vars, self.trunc2.clone());
        for k in 1..=kmax.max(1) {
            pw = pw.mul(&g)?.truncate(&self.trunc2);
            if pw.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { q_one() } else { -q_one() };
            acc = acc.add(&pw.scale(&(sign / crate::arith::q_int(k))))?;
        }
        Ok(acc)
    }

    /// Embed a one-variable series as variable `index` of a multi-series.
    pub fn from_single(s: &ExactSeries, vars: &[&str], index: usize) -> Self {
        assert_eq!(vars[index], s.variable());
        let n = vars.len();
        let mut trunc2 = vec![None; n];
        trunc2[index] = Some(s.truncation2());
        let mut out = Self::zero(vars, trunc2);
        for (e, c) in s.iter() {
            let mut key = vec![0i64; n];
            key[index] = *e;
            out.set(key, c.clone());
        }
        out
    }

    /// The coefficient of `var[index]^(exp2/2)` as a series in the remaining
    /// variables. The remaining truncations carry over.
    pub fn slice(&self, index: usize, exp2: i64) -> MultiSeries {
        assert!(self.vars.len() >= 2, "slicing needs at least two variables");
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| i != index).collect();
        let vars: Vec<&str> = keep.iter().map(|&i| self.vars[i].as_str()).collect();
        let trunc2: Vec<Option<i64>> = keep.iter().map(|&i| self.trunc2[i]).collect();
        let mut out = MultiSeries::zero(&vars, trunc2);
        if let Some(t) = self.trunc2[index] {
            assert!(exp2 < t, "slice at exponent beyond truncation");
        }
        for (e, c) in &self.terms {
            if e[index] == exp2 {
                let key: Vec<i64> = keep.iter().map(|&i| e[i]).collect();
                out.add_to(&key, c);
            }
        }
        out
    }

    /// JSON per the external interface, terms sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.vars,
            "trunc": self.trunc2,
            "terms": self.terms.iter()
                .map(|(e, c)| {
                    let mut row: Vec<serde_json::Value> =
                        e.iter().map(|x| serde_json::json!(x)).collect();
                    row.push(serde_json::json!(q_format(c)));
                    serde_json::Value::Array(row)
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, SeriesError> {
        let err = |m: &str| SeriesError::Json(m.to_string());
        let vars: Vec<String> = v
            .get("vars")
            .and_then(|x| x.as_array())
            .ok_or_else(|| err("missing vars"))?
            .iter()
            .map(|x| x.as_str().map(|s| s.to_string()).ok_or_else(|| err("bad var")))
            .collect::<Result<_, _>>()?;
        let trunc2: Vec<Option<i64>> = v
            .get("trunc")
            .and_then(|x| x.as_array())
            .ok_or_else(|| err("missing trunc"))?
            .iter()
            .map(|x| if x.is_null() { Ok(None) } else { x.as_i64().map(Some).ok_or_else(|| err("bad trunc")) })
            .collect::<Result<_, _>>()?;
        let vref: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let mut out = Self::zero(&vref, trunc2);
        let n = vars.len();
        for t in v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| err("missing terms"))? {
            let row = t.as_array().filter(|a| a.len() == n + 1).ok_or_else(|| err("bad term"))?;
            let mut e = Vec::with_capacity(n);
            for x in &row[..n] {
                e.push(x.as_i64().ok_or_else(|| err("bad exponent"))?);
            }
            let c = q_parse(row[n].as_str().ok_or_else(|| err("bad coefficient"))?)
                .map_err(SeriesError::Json)?;
            out.set(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_int;

    #[test]
    fn multi_mul_and_slice() {
        let vars = ["q", "x"];
        let mut a = MultiSeries::zero(&vars, vec![Some(10), None]);
        a.set(vec![2, 2], q_one()); // q*x
        a.set(vec![0, -2], q_int(3)); // 3/x
        let b = a.mul(&a).unwrap();
        assert_eq!(b.coeff2(&[4, 4]), q_one());
        assert_eq!(b.coeff2(&[2, 0]), q_int(6));
        assert_eq!(b.coeff2(&[0, -4]), q_int(9));
        let s = b.slice(1, 0);
        assert_eq!(s.coeff2(&[2]), q_int(6));
    }

    #[test]
    fn multi_exp_log_roundtrip() {
        let vars = ["q", "x"];
        let mut g = MultiSeries::zero(&vars, vec![Some(12), None]);
        g.set(vec![2, 2], q_one());
        g.set(vec![2, -2], -q_int(2));
        g.set(vec![4, 0], q_int(5));
        let one = MultiSeries::one(&vars, vec![Some(12), None]);
        let f = g.exp().unwrap();
        assert_eq!(f.log().unwrap(), f.clone().sub(&one).unwrap().add(&one).unwrap().log().unwrap());
        assert_eq!(f.log().unwrap(), g);
    }

    #[test]
    fn multi_json_roundtrip() {
        let vars = ["q", "x", "s"];
        let mut a = MultiSeries::zero(&vars, vec![Some(8), None, Some(6)]);
        a.set(vec![2, -4, 0], crate::arith::q_ratio(7, 2));
        a.set(vec![-2, 0, 4], q_one());
        let j = a.to_json();
        assert_eq!(MultiSeries::from_json(&j).unwrap(), a);
    }
}
