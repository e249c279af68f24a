//! Exact formal power series in `q`, truncated modulo `q^{N+1}`, and the
//! generating functions behind the pentagonal and bosonic identities.
//!
//! Infinite products only need their factors with exponent `<= N`; every
//! other factor is `1` modulo `q^{N+1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeriesError;

/// `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `c · q^exp`, or zero if `exp > order`.
    pub fn monomial(order: usize, exp: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::from(c);
        }
        s
    }

    /// Takes coefficients `c_0..` and pads or truncates them to `order`.
    pub fn from_coeffs<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: impl Into<BigInt>) {
        self.coeffs[n] = c.into();
    }

    /// Drops everything above `q^order`. `order` must not exceed the
    /// current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise order by truncation");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn same_order(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.order() == other.order() {
            Ok(self.order())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product modulo `q^{N+1}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.same_order(other)?;
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; needs constant term `±1`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return Err(SeriesError::NotUnit(c0.to_string()));
        }
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        // c0 = ±1 is its own inverse.
        inv.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &inv[n - k];
                }
            }
            inv.push(-(acc * c0));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `f(q) ↦ f(-q)`.
    pub fn substitute_neg_q(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// In place `f ← f · (1 + s q^e)` for `e >= 1`, `s = ±1`.
    pub fn mul_binomial(&mut self, negative: bool, exp: usize) {
        assert!(exp >= 1, "1 ± q^0 is not a unit binomial");
        for n in (exp..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            if negative {
                hi[0] -= &lo[n - exp];
            } else {
                hi[0] += &lo[n - exp];
            }
        }
    }

    /// In place `f ← f / (1 + s q^e)` for `e >= 1`, `s = ±1`.
    pub fn div_binomial(&mut self, negative: bool, exp: usize) {
        assert!(exp >= 1, "1 ± q^0 is not a unit binomial");
        for n in exp..=self.order() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            // f = g (1 + s q^e)  ⇒  g_n = f_n - s g_{n-e}
            if negative {
                hi[0] += &lo[n - exp];
            } else {
                hi[0] -= &lo[n - exp];
            }
        }
    }

    /// `f ← f · q^k` truncated.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in k..=order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_mag = n == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| BigInt::from_str(s).map_err(|e| D::Error::custom(format!("coefficient `{s}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

/// `∏_{m>=1} (1 - q^m)`.
pub fn product_one_minus(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for m in 1..=order {
        s.mul_binomial(true, m);
    }
    s
}

/// `∏_{m>=1} (1 + q^m)`, the distinct-part generating function.
pub fn product_one_plus(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for m in 1..=order {
        s.mul_binomial(false, m);
    }
    s
}

/// `∏_{m>=1} 1/(1 + q^m)`, by full inversion of the product.
pub fn inv_product_one_plus(order: usize) -> TruncatedSeries {
    product_one_plus(order)
        .inverse()
        .expect("constant term of a product of unit binomials is 1")
}

/// `∏_{m>=1} 1/(1 - q^m)`, the partition generating function.
pub fn inv_product_one_minus(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for m in 1..=order {
        s.div_binomial(true, m);
    }
    s
}

/// `1 + Σ_{l>=1} (-1)^l (q^{l(3l-1)/2} + q^{l(3l+1)/2})`.
pub fn pentagonal_rhs(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for l in 1.. {
        let lo = l * (3 * l - 1) / 2;
        if lo > order {
            break;
        }
        let c: i64 = if l % 2 == 0 { 1 } else { -1 };
        s.coeffs[lo] += c;
        let hi = lo + l;
        if hi <= order {
            s.coeffs[hi] += c;
        }
    }
    s
}

/// `Σ_{l>=0} s^l q^{l²} / ∏_{j=1}^{l} (1 - q^{2j})` with `s = -1` when
/// `alternating`.
fn square_over_even_pochhammer(order: usize, alternating: bool) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(order);
    for l in 1.. {
        let exp = l * l;
        if exp > order {
            break;
        }
        let sign = if alternating && l % 2 == 1 { -1 } else { 1 };
        let mut term = TruncatedSeries::monomial(order, exp, sign);
        for j in 1..=l {
            term.div_binomial(true, 2 * j);
        }
        for (t, c) in total.coeffs.iter_mut().zip(term.coeffs) {
            *t += c;
        }
    }
    total
}

/// `1 + Σ_{l>=1} (-1)^l q^{l²} / ∏_{j=1}^{l} (1 - q^{2j})`.
pub fn bosonic_rhs(order: usize) -> TruncatedSeries {
    square_over_even_pochhammer(order, true)
}

/// `∏_{m>=1} (1 + q^{2m-1})`.
pub fn euler_odd_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for e in (1..=order).step_by(2) {
        s.mul_binomial(false, e);
    }
    s
}

/// `1 + Σ_{l>=1} q^{l²} / ∏_{j=1}^{l} (1 - q^{2j})`.
pub fn euler_rhs(order: usize) -> TruncatedSeries {
    square_over_even_pochhammer(order, false)
}

/// `∏_{m>=1} 1/(1 - q^{2m-1})`, partitions into odd parts.
pub fn odd_reciprocal(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for e in (1..=order).step_by(2) {
        s.div_binomial(true, e);
    }
    s
}

/// Identities that can be checked coefficient by coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `∏(1 - q^m) = 1 + Σ (-1)^l (q^{l(3l-1)/2} + q^{l(3l+1)/2})`
    Pentagonal,
    /// `∏ 1/(1 + q^m) = 1 + Σ (-1)^l q^{l²}/∏_{j<=l}(1 - q^{2j})`
    Bosonic,
    /// `∏(1 + q^{2m-1}) = 1 + Σ q^{l²}/∏_{j<=l}(1 - q^{2j})`
    EulerOdd,
    /// `∏ 1/(1 - q^{2m-1}) = ∏(1 + q^m)`
    OddReciprocal,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::Pentagonal,
        Identity::Bosonic,
        Identity::EulerOdd,
        Identity::OddReciprocal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Pentagonal => "pentagonal",
            Identity::Bosonic => "bosonic",
            Identity::EulerOdd => "euler-odd",
            Identity::OddReciprocal => "odd-reciprocal",
        }
    }

    /// Left and right sides, each computed on its own.
    pub fn sides(self, order: usize) -> (TruncatedSeries, TruncatedSeries) {
        match self {
            Identity::Pentagonal => (product_one_minus(order), pentagonal_rhs(order)),
            Identity::Bosonic => (inv_product_one_plus(order), bosonic_rhs(order)),
            Identity::EulerOdd => (euler_odd_product(order), euler_rhs(order)),
            Identity::OddReciprocal => (odd_reciprocal(order), product_one_plus(order)),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Outcome of comparing two truncated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal { order: usize },
    Mismatch { exponent: usize, lhs: BigInt, rhs: BigInt },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal { order } => write!(f, "equal up to q^{order}"),
            Verdict::Mismatch { exponent, lhs, rhs } => {
                write!(f, "mismatch at q^{exponent}: lhs {lhs}, rhs {rhs}")
            }
        }
    }
}

/// Compares coefficientwise and reports the first differing exponent.
pub fn compare(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Result<Verdict, SeriesError> {
    let order = lhs.same_order(rhs)?;
    Ok(lhs
        .coeffs
        .iter()
        .zip(&rhs.coeffs)
        .position(|(a, b)| a != b)
        .map_or(Verdict::Equal { order }, |exponent| Verdict::Mismatch {
            exponent,
            lhs: lhs.coeffs[exponent].clone(),
            rhs: rhs.coeffs[exponent].clone(),
        }))
}

pub fn verify_identity(id: Identity, order: usize) -> Verdict {
    let (lhs, rhs) = id.sides(order);
    compare(&lhs, &rhs).expect("both sides share the order")
}

/// The chain that turns `EulerOdd` into `Bosonic`: substituting `-q` into
/// the odd-part product gives the inverse of the odd reciprocal, which equals
/// `∏ 1/(1+q^m)`; the same substitution maps the right side of `EulerOdd`
/// onto the right side of `Bosonic`. Returns the first failing link.
pub fn verify_neg_q_chain(order: usize) -> Result<(), (&'static str, Verdict)> {
    let odd_at_neg = euler_odd_product(order).substitute_neg_q();
    let inv_odd_recip = odd_reciprocal(order).inverse().expect("unit constant term");
    let links: [(&'static str, TruncatedSeries, TruncatedSeries); 3] = [
        (
            "odd product at -q vs inverse odd reciprocal",
            odd_at_neg.clone(),
            inv_odd_recip,
        ),
        (
            "odd product at -q vs inverse product (1+q^m)",
            odd_at_neg,
            inv_product_one_plus(order),
        ),
        (
            "euler rhs at -q vs bosonic rhs",
            euler_rhs(order).substitute_neg_q(),
            bosonic_rhs(order),
        ),
    ];
    for (name, a, b) in links {
        let v = compare(&a, &b).expect("same order");
        if !v.is_equal() {
            return Err((name, v));
        }
    }
    Ok(())
}
