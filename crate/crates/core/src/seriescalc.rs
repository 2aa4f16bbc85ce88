//! Truncated power series with zero constant term over exact rationals, and
//! the dimension series of the operads involved.
//!
//! A symmetric operad `P` has exponential generating series
//! `Σ dim P(n) tⁿ/n!` (EGS); a non-symmetric one has ordinary generating
//! series `Σ dim P_n tⁿ` (OGS). Composition of operads is composition of
//! series in both cases.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, Rational};

/// Largest order accepted by the series constructors.
pub const MAX_ORDER: usize = 40;

/// Default bound on the order of the dimension computations.
pub const DEFAULT_ORDER: usize = 10;

/// `c_1 t + … + c_N t^N`, computed modulo `t^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    // coeffs[k] is the coefficient of t^(k+1)
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Coefficients `c_1..c_N`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        crate::treebases::check_range("order", coeffs.len(), 1, MAX_ORDER)?;
        Ok(PowerSeries { coeffs })
    }

    /// Coefficients `c_0..c_N`; `c_0` must vanish.
    pub fn with_constant(mut coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstantTerm);
        }
        if !coeffs.is_empty() {
            coeffs.remove(0);
        }
        Self::new(coeffs)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Result<Self> {
        Self::new((1..=order).map(f).collect())
    }

    /// The series `t`.
    pub fn identity(order: usize) -> Result<Self> {
        Self::from_fn(order, |n| if n == 1 { Rational::one() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^n`; zero for `n = 0` and beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        if n == 0 || n > self.order() {
            Rational::zero()
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        // (a b)_k = Σ_{i+j=k} a_i b_j with i, j ≥ 1
        for i in 1..n {
            let a = &self.coeffs[i - 1];
            if a.is_zero() {
                continue;
            }
            for j in 1..=n - i {
                let b = &other.coeffs[j - 1];
                if !b.is_zero() {
                    out[i + j - 1] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = k + 1;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}", format_rational(&a))?;
            }
            match n {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// `f ∘ g`, both series of the same order.
pub fn ps_compose(f: &PowerSeries, g: &PowerSeries) -> Result<PowerSeries> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch(f.order(), g.order()));
    }
    // Horner: acc ← (acc + f_k)·g for k = N..1
    let mut acc = PowerSeries {
        coeffs: vec![Rational::zero(); f.order()],
    };
    for k in (1..=f.order()).rev() {
        let mut next = acc.mul(g);
        for (i, gi) in g.coeffs.iter().enumerate() {
            next.coeffs[i] += &f.coeffs[k - 1] * gi;
        }
        acc = next;
    }
    Ok(acc)
}

/// Compositional inverse `h` with `g(h(t)) = t`, solved order by order.
pub fn ps_reverse(g: &PowerSeries) -> Result<PowerSeries> {
    let c1 = g.coeff(1);
    if c1.is_zero() {
        return Err(Error::NotInvertible);
    }
    let n = g.order();
    let mut h = vec![Rational::zero(); n];
    h[0] = c1.recip();
    for k in 2..=n {
        let current = ps_compose(g, &PowerSeries { coeffs: h.clone() })?;
        // g(h + a t^k) = g(h) + c1 a t^k + O(t^(k+1))
        h[k - 1] = -current.coeff(k) / &c1;
    }
    Ok(PowerSeries { coeffs: h })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesKind {
    /// `c_n = dim(n) / n!`, symmetric operads.
    #[serde(rename = "EGS")]
    Egs,
    /// `c_n = dim_n`, non-symmetric operads.
    #[serde(rename = "OGS")]
    Ogs,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Egs => "EGS",
            SeriesKind::Ogs => "OGS",
        })
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Dimension sequence `dim(1)..dim(N)` tagged with its series convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimSeries {
    pub kind: SeriesKind,
    pub dims: Vec<BigUint>,
}

impl DimSeries {
    pub fn new(kind: SeriesKind, dims: Vec<BigUint>) -> Self {
        DimSeries { kind, dims }
    }

    pub fn from_u64(kind: SeriesKind, dims: &[u64]) -> Self {
        Self::new(kind, dims.iter().map(|&d| BigUint::from(d)).collect())
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn to_power_series(&self) -> Result<PowerSeries> {
        PowerSeries::from_fn(self.order(), |n| {
            let d = Rational::from_integer(BigInt::from(self.dims[n - 1].clone()));
            match self.kind {
                SeriesKind::Egs => d / Rational::from_integer(factorial(n)),
                SeriesKind::Ogs => d,
            }
        })
    }

    /// Dimensions of the composite operad `self ∘ inner`.
    pub fn compose(&self, inner: &DimSeries) -> Result<DimValues> {
        if self.kind != inner.kind {
            return Err(Error::SeriesKindMismatch(self.kind.to_string(), inner.kind.to_string()));
        }
        let ps = ps_compose(&self.to_power_series()?, &inner.to_power_series()?)?;
        Ok(DimValues::from_power_series(self.kind, &ps))
    }

    pub fn dims_u64(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(|d| d.to_u64()).collect()
    }

    /// `{"kind":"EGS","dims":[...]}`
    pub fn to_json(&self) -> Value {
        json!({"kind": self.kind, "dims": self.dims.iter().map(big_json).collect::<Vec<_>>()})
    }

    /// Two aligned columns, `n` and `dim`.
    pub fn to_table(&self) -> String {
        let width = self.dims.iter().map(|d| d.to_string().len()).max().unwrap_or(1).max(3);
        let nw = self.order().to_string().len().max(1);
        let mut out = format!("{:>nw$}  {:>width$}  ({})\n", "n", "dim", self.kind);
        for (i, d) in self.dims.iter().enumerate() {
            out.push_str(&format!("{:>nw$}  {:>width$}\n", i + 1, d.to_string()));
        }
        out
    }
}

fn big_json(d: &BigUint) -> Value {
    match d.to_u64() {
        Some(v) => json!(v),
        None => json!(d.to_string()),
    }
}

/// Dimensions read off a series, before checking that they are natural
/// numbers. A value that is not is a finding against the conjectured
/// decomposition, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimValues {
    pub kind: SeriesKind,
    pub values: Vec<Rational>,
}

impl DimValues {
    pub fn from_power_series(kind: SeriesKind, ps: &PowerSeries) -> Self {
        let values = (1..=ps.order())
            .map(|n| match kind {
                SeriesKind::Egs => ps.coeff(n) * Rational::from_integer(factorial(n)),
                SeriesKind::Ogs => ps.coeff(n),
            })
            .collect();
        DimValues { kind, values }
    }

    /// The dimensions, when every value is a nonnegative integer.
    pub fn dims(&self) -> Option<DimSeries> {
        self.values
            .iter()
            .map(|v| {
                if v.is_integer() && !v.is_negative() {
                    v.to_integer().to_biguint()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(|dims| DimSeries::new(self.kind, dims))
    }

    pub fn findings(&self) -> Vec<String> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                if !v.is_integer() {
                    Some(format!("dim({}) = {} is not an integer", i + 1, format_rational(v)))
                } else if v.is_negative() {
                    Some(format!("dim({}) = {} is negative", i + 1, v))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Same shape as [`DimSeries::to_json`]; a value that is not a natural
    /// number is written as an `"n/d"` string and listed under `findings`.
    pub fn to_json(&self) -> Value {
        if let Some(d) = self.dims() {
            return d.to_json();
        }
        json!({
            "kind": self.kind,
            "dims": self.values.iter().map(|v| {
                if v.is_integer() && !v.is_negative() {
                    big_json(&v.to_integer().to_biguint().expect("nonnegative"))
                } else {
                    json!(format_rational(v))
                }
            }).collect::<Vec<_>>(),
            "findings": self.findings(),
        })
    }
}

fn check_order(order: usize) -> Result<()> {
    crate::treebases::check_range("order", order, 1, MAX_ORDER)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Catalan number `C_n = binom(2n, n)/(n+1)`.
pub fn catalan_big(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `(2n−3)!!`, with `(−1)!! = 1`.
pub fn odd_double_factorial(n: usize) -> BigInt {
    (1..n).fold(BigInt::one(), |acc, k| acc * (2 * k - 1))
}

fn egs(order: usize, dim: impl Fn(usize) -> BigInt) -> Result<PowerSeries> {
    check_order(order)?;
    PowerSeries::from_fn(order, |n| Rational::new(dim(n), factorial(n)))
}

fn ogs(order: usize, dim: impl Fn(usize) -> BigInt) -> Result<PowerSeries> {
    check_order(order)?;
    PowerSeries::from_fn(order, |n| Rational::from_integer(dim(n)))
}

/// EGS of preLie: `dim preLie(n) = n^(n−1)`.
pub fn f_prelie(order: usize) -> Result<PowerSeries> {
    egs(order, |n| num_traits::pow(BigInt::from(n), n - 1))
}

/// EGS of ComMag: `dim ComMag(n) = (2n−3)!!`, the series `1 − √(1−2t)`.
pub fn f_commag(order: usize) -> Result<PowerSeries> {
    egs(order, odd_double_factorial)
}

/// EGS of Dend: `dim Dend(n) = n!·C_n`, so the coefficients are Catalan.
pub fn f_dend(order: usize) -> Result<PowerSeries> {
    check_order(order)?;
    PowerSeries::from_fn(order, |n| Rational::from_integer(catalan_big(n)))
}

/// OGS of Mag: `C_(n−1)` binary bracketings.
pub fn f_mag(order: usize) -> Result<PowerSeries> {
    ogs(order, |n| catalan_big(n - 1))
}

/// OGS of As: one operation in each arity, `t/(1−t)`.
pub fn f_as(order: usize) -> Result<PowerSeries> {
    ogs(order, |_| BigInt::one())
}

/// OGS of Dup: `C_n` planar binary trees with `n` internal vertices.
pub fn f_dup(order: usize) -> Result<PowerSeries> {
    ogs(order, catalan_big)
}

/// `f_preLie ∘ f_ComMag^(−1)`, the dimensions of 𝒳 in `preLie = 𝒳 ∘ ComMag`.
pub fn x_dims(order: usize) -> Result<DimValues> {
    let inv = ps_reverse(&f_commag(order)?)?;
    Ok(DimValues::from_power_series(
        SeriesKind::Egs,
        &ps_compose(&f_prelie(order)?, &inv)?,
    ))
}

/// `f_Dend ∘ f_ComMag^(−1)`, the dimensions of 𝒴 in `Dend = 𝒴 ∘ ComMag`.
pub fn y_dims(order: usize) -> Result<DimValues> {
    let inv = ps_reverse(&f_commag(order)?)?;
    Ok(DimValues::from_power_series(
        SeriesKind::Egs,
        &ps_compose(&f_dend(order)?, &inv)?,
    ))
}

/// `f_ComMag^(−1) ∘ f_𝒳`, the dimensions of 𝒵 in `𝒳 = ComMag ∘ 𝒵`.
pub fn z_dims(order: usize) -> Result<DimValues> {
    let inv = ps_reverse(&f_commag(order)?)?;
    let x = ps_compose(&f_prelie(order)?, &inv)?;
    Ok(DimValues::from_power_series(SeriesKind::Egs, &ps_compose(&inv, &x)?))
}

/// `f_As ∘ f_Mag = f_Dup` in OGS, i.e. `f_Mag/(1 − f_Mag)` is the Catalan
/// series, to the given order.
pub fn dup_split_check(order: usize) -> Result<bool> {
    crate::treebases::check_range("order", order, 1, 14)?;
    dup_split_check_with(&f_mag(order)?)
}

/// [`dup_split_check`] with a caller-supplied Mag series.
pub fn dup_split_check_with(mag: &PowerSeries) -> Result<bool> {
    let order = mag.order();
    Ok(ps_compose(&f_as(order)?, mag)? == f_dup(order)?)
}

/// Comparison of the listed 𝒴 dimensions, the series computation, and the
/// closed form `1/(1 − 3t − t³)` under both conventions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub listed: Vec<u64>,
    pub computed: Vec<String>,
    pub computed_matches_listed: bool,
    /// `dim(n) = [t^(n−1)] 1/(1−3t−t³)`.
    pub ogs_reading: Vec<String>,
    pub ogs_matches: bool,
    /// `dim(n) = n!·[t^(n−1)] 1/(1−3t−t³)`.
    pub egs_reading: Vec<String>,
    pub egs_matches: bool,
}

/// Listed dimensions of 𝒴 for `n = 1..=5`.
pub const Y_LISTED: [u64; 5] = [1, 3, 18, 168, 2130];

pub fn y_closed_form_report() -> Result<ClosedFormReport> {
    let n = Y_LISTED.len();
    let computed = y_dims(n)?;
    // a_k = 3 a_(k−1) + a_(k−3), a_0 = 1
    let mut a: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let prev = |j: usize| if k >= j { a[k - j].clone() } else { BigInt::zero() };
        let v = if k == 0 { BigInt::one() } else { prev(1) * 3 + prev(3) };
        a.push(v);
    }
    let listed: Vec<BigInt> = Y_LISTED.iter().map(|&d| BigInt::from(d)).collect();
    let egs_vals: Vec<BigInt> = a.iter().enumerate().map(|(k, v)| v * factorial(k + 1)).collect();
    let listed_q: Vec<Rational> = listed.iter().cloned().map(Rational::from_integer).collect();
    Ok(ClosedFormReport {
        listed: Y_LISTED.to_vec(),
        computed: computed.values.iter().map(format_rational).collect(),
        computed_matches_listed: computed.values == listed_q,
        ogs_reading: a.iter().map(|v| v.to_string()).collect(),
        ogs_matches: a == listed,
        egs_reading: egs_vals.iter().map(|v| v.to_string()).collect(),
        egs_matches: egs_vals == listed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, rational};
    use proptest::prelude::*;

    fn ps(cs: &[i64]) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|&c| rational(c)).collect()).unwrap()
    }

    // Lagrange inversion: [t^n] g^(-1) = (1/n) [z^(n-1)] (z/g(z))^n.
    fn lagrange_reverse(g: &PowerSeries) -> Vec<Rational> {
        let n = g.order();
        // q(z) = g(z)/z = c1 + c2 z + …, then p = 1/q as a full series
        let q: Vec<Rational> = (1..=n).map(|k| g.coeff(k)).collect();
        let mut p = vec![Rational::zero(); n];
        p[0] = q[0].recip();
        for k in 1..n {
            let s: Rational = (1..=k).map(|j| &q[j] * &p[k - j]).sum();
            p[k] = -s / &q[0];
        }
        let mul = |a: &[Rational], b: &[Rational]| {
            let mut out = vec![Rational::zero(); n];
            for i in 0..n {
                for j in 0..n - i {
                    out[i + j] += &a[i] * &b[j];
                }
            }
            out
        };
        let mut power = p.clone();
        let mut out = Vec::with_capacity(n);
        for m in 1..=n {
            out.push(power[m - 1].clone() / Rational::from_integer(BigInt::from(m)));
            power = mul(&power, &p);
        }
        out
    }

    #[test]
    fn compose_examples() {
        let f = ps(&[2, -1, 3, 5]);
        assert_eq!(ps_compose(&f, &PowerSeries::identity(4).unwrap()).unwrap(), f);
        assert_eq!(ps_compose(&PowerSeries::identity(4).unwrap(), &f).unwrap(), f);
        // (t + t²)∘(t + t²) = t + 2t² + 2t³ + t⁴
        let g = ps(&[1, 1, 0, 0]);
        assert_eq!(ps_compose(&g, &g).unwrap(), ps(&[1, 2, 2, 1]));
        assert_eq!(
            ps_compose(&f_as(8).unwrap(), &f_mag(8).unwrap()).unwrap(),
            f_dup(8).unwrap()
        );
        assert_eq!(ps_compose(&ps(&[1]), &ps(&[1, 2])), Err(Error::OrderMismatch(1, 2)));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(
            ps_reverse(&PowerSeries::identity(5).unwrap()).unwrap(),
            PowerSeries::identity(5).unwrap()
        );
        assert_eq!(ps_reverse(&ps(&[1, 1, 0, 0, 0])).unwrap(), ps(&[1, -1, 2, -5, 14]));
        assert_eq!(ps_reverse(&ps(&[0, 1])), Err(Error::NotInvertible));
        let c = f_commag(10).unwrap();
        let inv = ps_reverse(&c).unwrap();
        assert_eq!(ps_compose(&inv, &c).unwrap(), PowerSeries::identity(10).unwrap());
        // 1 − √(1−2t) is inverted by t − t²/2
        let mut want = vec![rational(1), ratio(-1, 2)];
        want.resize(10, rational(0));
        assert_eq!(inv.coeffs(), &want[..]);
    }

    #[test]
    fn constant_term_rejected() {
        assert_eq!(
            PowerSeries::with_constant(vec![rational(1), rational(1)]),
            Err(Error::NonzeroConstantTerm)
        );
        assert_eq!(
            PowerSeries::with_constant(vec![rational(0), rational(3)]).unwrap(),
            ps(&[3])
        );
    }

    #[test]
    fn commag_series_closed_form() {
        // coefficients of 1 − √(1−2t): binom(1/2, n)·(−1)^(n+1)·2^n
        let c = f_commag(10).unwrap();
        let mut b = rational(1);
        for n in 1..=10i64 {
            b = b * (ratio(1, 2) - rational(n - 1)) / rational(n);
            let sign = if n % 2 == 1 { rational(1) } else { rational(-1) };
            assert_eq!(c.coeff(n as usize), sign * b.clone() * rational(2i64.pow(n as u32)));
        }
    }

    #[test]
    fn x_and_y_dims() {
        let x = x_dims(7).unwrap().dims().unwrap();
        assert_eq!(x.dims_u64().unwrap(), [1, 1, 3, 16, 120, 1146, 13258]);
        let y = y_dims(5).unwrap().dims().unwrap();
        assert_eq!(y.dims_u64().unwrap(), Y_LISTED);
        let z = z_dims(8).unwrap();
        assert!(z.findings().is_empty());
        assert_eq!(z.dims().unwrap().dims_u64().unwrap(), [1, 0, 0, 1, 10, 96, 1036, 12888]);
        assert_eq!(
            x.to_json().to_string(),
            r#"{"dims":[1,1,3,16,120,1146,13258],"kind":"EGS"}"#
        );
    }

    #[test]
    fn x_dims_order_four_by_hand() {
        // [t⁴] of f_𝒳∘f_ComMag = f_preLie: 5/8 + 5/8 + 3/4 + x₄/24 = 64/24
        let x4 = (rational(64) / rational(24) - ratio(5, 8) - ratio(5, 8) - ratio(3, 4)) * rational(24);
        assert_eq!(x4, rational(16));
        assert_eq!(x_dims(4).unwrap().values[3], x4);
    }

    #[test]
    fn dim_series_compose_checks_kind() {
        let x = x_dims(6).unwrap().dims().unwrap();
        let c = DimSeries::from_u64(SeriesKind::Egs, &[1, 1, 3, 15, 105, 945]);
        let p = x.compose(&c).unwrap().dims().unwrap();
        assert_eq!(p.dims_u64().unwrap(), [1, 2, 9, 64, 625, 7776]);
        let m = DimSeries::from_u64(SeriesKind::Ogs, &[1, 1, 2, 5, 14, 42]);
        assert_eq!(
            x.compose(&m),
            Err(Error::SeriesKindMismatch("EGS".into(), "OGS".into()))
        );
    }

    #[test]
    fn dup_split() {
        assert!(dup_split_check(4).unwrap());
        assert!(dup_split_check(12).unwrap());
        let mut cs: Vec<Rational> = f_mag(12).unwrap().coeffs().to_vec();
        cs[2] += rational(1);
        assert!(!dup_split_check_with(&PowerSeries::new(cs).unwrap()).unwrap());
        assert!(dup_split_check(15).is_err());
    }

    #[test]
    fn closed_form_is_reported_not_asserted() {
        let r = y_closed_form_report().unwrap();
        assert!(r.computed_matches_listed);
        assert_eq!(r.ogs_reading, ["1", "3", "9", "28", "87"]);
        assert!(!r.ogs_matches && !r.egs_matches);
    }

    #[test]
    fn findings_for_non_integers() {
        let v = DimValues::from_power_series(
            SeriesKind::Ogs,
            &PowerSeries::new(vec![ratio(1, 2), rational(-1)]).unwrap(),
        );
        assert!(v.dims().is_none());
        assert_eq!(v.findings().len(), 2);
        assert_eq!(
            v.to_json().to_string(),
            r#"{"dims":["1/2","-1/1"],"findings":["dim(1) = 1/2 is not an integer","dim(2) = -1 is negative"],"kind":"OGS"}"#
        );
    }

    fn series(order: usize, invertible: bool) -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(-3i64..4, order).prop_map(move |mut v| {
            if invertible && v[0] == 0 {
                v[0] = 1;
            }
            ps(&v)
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative(f in series(6, false), g in series(6, false), h in series(6, false)) {
            let left = ps_compose(&ps_compose(&f, &g).unwrap(), &h).unwrap();
            let right = ps_compose(&f, &ps_compose(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn reverse_is_two_sided_and_matches_lagrange(g in series(7, true)) {
            let h = ps_reverse(&g).unwrap();
            let id = PowerSeries::identity(7).unwrap();
            prop_assert_eq!(&ps_compose(&g, &h).unwrap(), &id);
            prop_assert_eq!(&ps_compose(&h, &g).unwrap(), &id);
            prop_assert_eq!(h.coeffs(), &lagrange_reverse(&g)[..]);
        }
    }
}
