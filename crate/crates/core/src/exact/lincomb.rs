use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use super::{format_rational, parse_rational, LambdaPoly, Rational};
use crate::error::{Error, Result};
use crate::treebases::{detect_kind, Basis};

/// Coefficient ring of a [`LinComb`]: exact rationals or polynomials in λ.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: Rational) -> Self;

    /// JSON field name and value for this coefficient.
    fn to_json(&self) -> (&'static str, Value);

    fn from_json(entry: &Map<String, Value>) -> Result<Self>;
}

impl Scalar for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_json(&self) -> (&'static str, Value) {
        ("coeff", Value::String(format_rational(self)))
    }

    fn from_json(entry: &Map<String, Value>) -> Result<Self> {
        match entry.get("coeff") {
            Some(Value::String(s)) => parse_rational(s),
            _ => Err(Error::Json("expected a \"coeff\" string".into())),
        }
    }
}

impl Scalar for LambdaPoly {
    fn from_rational(q: Rational) -> Self {
        LambdaPoly::constant(q)
    }

    fn to_json(&self) -> (&'static str, Value) {
        let cs = self
            .coeffs()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect();
        ("coeff_lambda", Value::Array(cs))
    }

    fn from_json(entry: &Map<String, Value>) -> Result<Self> {
        match entry.get("coeff_lambda") {
            Some(Value::Array(cs)) => cs
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s),
                    _ => Err(Error::Json("λ coefficients are strings".into())),
                })
                .collect::<Result<Vec<_>>>()
                .map(LambdaPoly::new),
            _ => Err(Error::Json("expected a \"coeff_lambda\" array".into())),
        }
    }
}

/// Finite formal sum of basis elements with nonzero exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<B: Basis, S: Scalar = Rational> {
    terms: BTreeMap<B, S>,
}

impl<B: Basis, S: Scalar> Default for LinComb<B, S> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Basis, S: Scalar> LinComb<B, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, S::one())
    }

    pub fn term(b: B, coeff: S) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    pub fn add_term(&mut self, b: B, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(c) => {
                let sum = c.clone() + coeff;
                if sum.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(b, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &S) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone() * factor.clone());
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn coeff(&self, b: &B) -> S {
        self.terms.get(b).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &S)> {
        self.terms.iter()
    }

    /// Basis elements with nonzero coefficient, in formatted-string order.
    pub fn support(&self) -> Vec<&B> {
        self.sorted_terms().into_iter().map(|(_, b, _)| b).collect()
    }

    /// Terms in formatted-string order, the order used for all output.
    pub fn sorted_terms(&self) -> Vec<(String, &B, &S)> {
        let mut v: Vec<_> = self.terms.iter().map(|(b, c)| (b.to_string(), b, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LinComb<B, T> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), f(c));
        }
        out
    }

    pub fn map_basis<C: Basis>(&self, f: impl Fn(&B) -> C) -> LinComb<C, S> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Extends a product on basis elements bilinearly.
    pub fn bilinear<C: Basis, T: Basis>(
        &self,
        other: &LinComb<C, S>,
        mut product: impl FnMut(&B, &C) -> Result<LinComb<T, S>>,
    ) -> Result<LinComb<T, S>> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let p = product(a, b)?;
                out.add_scaled(&p, &(ca.clone() * cb.clone()));
            }
        }
        Ok(out)
    }

    /// `[{"basis": "...", "coeff": "n/d"}, ...]` or with `"coeff_lambda"`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(s, _, c)| {
                    let (key, v) = c.to_json();
                    let mut m = Map::new();
                    m.insert("basis".into(), json!(s));
                    m.insert(key.into(), v);
                    Value::Object(m)
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let entries = value
            .as_array()
            .ok_or_else(|| Error::Json("linear combination must be an array".into()))?;
        let mut out = Self::zero();
        for e in entries {
            let obj = e
                .as_object()
                .ok_or_else(|| Error::Json("term must be an object".into()))?;
            let text = obj
                .get("basis")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("term needs a \"basis\" string".into()))?;
            let b = B::parse(text).map_err(|err| match detect_kind(text) {
                Some(found) if found != B::KIND => Error::BasisKindMismatch {
                    expected: B::KIND.to_string(),
                    found: found.to_string(),
                },
                _ => err,
            })?;
            out.add_term(b, S::from_json(obj)?);
        }
        Ok(out)
    }
}

impl<B: Basis, S: Scalar> FromIterator<(B, S)> for LinComb<B, S> {
    fn from_iter<I: IntoIterator<Item = (B, S)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Basis, S: Scalar> Add for LinComb<B, S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Basis, S: Scalar> Neg for LinComb<B, S> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Basis, S: Scalar> Sub for LinComb<B, S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<B: Basis, S: Scalar> fmt::Display for LinComb<B, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (s, _, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                f.write_str(&s)?;
            } else {
                let cs = c.to_string();
                if cs.contains(' ') {
                    write!(f, "({cs})·{s}")?;
                } else {
                    write!(f, "{cs}·{s}")?;
                }
            }
        }
        Ok(())
    }
}
