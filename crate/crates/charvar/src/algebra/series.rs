//! Truncated Laurent/Puiseux series with an explicit integer valuation.
//!
//! Orders are measured in units of `1/ram` powers of the parameter, so a
//! Puiseux series with ramification index `e` has integer-valued orders
//! after rescaling. A series knows its coefficients on the window
//! `[val, trunc)`; `trunc == i64::MAX` marks an exact (polynomial) series
//! whose unstored coefficients are genuinely zero.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Scalar};

/// Default absolute truncation order for series produced by operations
/// (division, square roots) that do not terminate.
pub const DEFAULT_TRUNC: i64 = 16;

/// Valuation of a series: the order of its lowest nonzero term, in
/// ramified units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// Certified leading term at this order.
    Finite(i64),
    /// All stored coefficients vanish but the series is only known up to
    /// this order; the infinite sentinel cannot be certified.
    AtLeast(i64),
    /// The exact zero series.
    Infinite,
}

impl Valuation {
    pub fn is_negative(&self) -> bool {
        matches!(self, Valuation::Finite(v) if *v < 0)
    }
}

/// A truncated Laurent/Puiseux series with valuation bookkeeping.
#[derive(Clone)]
pub struct ValuedSeries {
    ram: u32,
    val: i64,
    coeffs: Vec<Scalar>,
    trunc: i64,
}

fn ord_add(a: i64, b: i64) -> i64 {
    if a == i64::MAX || b == i64::MAX {
        i64::MAX
    } else {
        a + b
    }
}

impl ValuedSeries {
    /// The exact zero series.
    pub fn zero() -> Self {
        ValuedSeries {
            ram: 1,
            val: 0,
            coeffs: vec![],
            trunc: i64::MAX,
        }
    }

    /// A zero series known only up to the given order.
    pub fn zero_to(trunc: i64) -> Self {
        ValuedSeries {
            ram: 1,
            val: 0,
            coeffs: vec![],
            trunc,
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    /// The series parameter s.
    pub fn parameter() -> Self {
        Self::monomial(1, Scalar::one())
    }

    /// c * s^order, exact.
    pub fn monomial(order: i64, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ValuedSeries {
            ram: 1,
            val: order,
            coeffs: vec![c],
            trunc: i64::MAX,
        }
    }

    /// An exact series from (order, coefficient) terms, ramification 1.
    pub fn from_terms(terms: &[(i64, Scalar)]) -> Self {
        Self::from_ram_terms(1, terms, i64::MAX)
    }

    /// A series from (order, coefficient) terms with explicit ramification
    /// and truncation; orders are in ramified units.
    pub fn from_ram_terms(ram: u32, terms: &[(i64, Scalar)], trunc: i64) -> Self {
        assert!(ram >= 1);
        if terms.is_empty() {
            let mut z = Self::zero_to(trunc);
            z.ram = ram;
            return z.reduced();
        }
        let lo = terms.iter().map(|(o, _)| *o).min().unwrap();
        let hi = terms.iter().map(|(o, _)| *o).max().unwrap();
        let mut coeffs = vec![Scalar::zero(); (hi - lo + 1) as usize];
        for (o, c) in terms {
            coeffs[(o - lo) as usize] = coeffs[(o - lo) as usize].add(c);
        }
        ValuedSeries {
            ram,
            val: lo,
            coeffs,
            trunc,
        }
        .normalized()
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    /// Truncation order in ramified units; `i64::MAX` for exact series.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc == i64::MAX
    }

    /// True for the designated zero element (certified, exact).
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.trunc == i64::MAX
    }

    /// True when every stored coefficient vanishes (the series may still
    /// be nonzero past the truncation order).
    pub fn is_zero_to_truncation(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        if self.coeffs.is_empty() {
            if self.trunc == i64::MAX {
                Valuation::Infinite
            } else {
                Valuation::AtLeast(self.trunc)
            }
        } else {
            Valuation::Finite(self.val)
        }
    }

    /// The coefficient at a given order (ramified units), when it is
    /// within the known window.
    pub fn coefficient(&self, order: i64) -> Option<Scalar> {
        if order >= self.trunc {
            return None;
        }
        if order < self.val || self.coeffs.is_empty() {
            return Some(Scalar::zero());
        }
        let idx = order - self.val;
        if idx >= self.coeffs.len() as i64 {
            Some(Scalar::zero())
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// The value at the parameter's origin: the order-zero coefficient.
    /// `None` when the series has a pole or the constant term is beyond
    /// the truncation window.
    pub fn constant_term(&self) -> Option<Scalar> {
        if self.valuation().is_negative() {
            return None;
        }
        self.coefficient(0)
    }

    /// Leading (lowest-order) coefficient of a nonzero series.
    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.first()
    }

    fn normalized(mut self) -> Self {
        if self.trunc != i64::MAX {
            // drop stored coefficients at or above the truncation order
            let keep = (self.trunc - self.val).max(0);
            self.coeffs.truncate(keep as usize);
        }
        while let Some(c) = self.coeffs.first() {
            if c.is_zero() {
                self.coeffs.remove(0);
                self.val += 1;
            } else {
                break;
            }
        }
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
        self.reduced()
    }

    /// Reduce the ramification index when all orders share a common
    /// divisor with it.
    fn reduced(self) -> Self {
        if self.ram == 1 {
            return self;
        }
        let mut g = self.ram as i64;
        let fold = |g: i64, o: i64| g.gcd(&o);
        if !self.coeffs.is_empty() {
            g = fold(g, self.val);
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    g = fold(g, self.val + k as i64);
                }
            }
        }
        if self.trunc != i64::MAX {
            g = fold(g, self.trunc);
        }
        if g <= 1 {
            return self;
        }
        let stride = g as usize;
        let mut coeffs = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % stride == 0 {
                coeffs.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        ValuedSeries {
            ram: self.ram / g as u32,
            val: self.val / g,
            coeffs,
            trunc: if self.trunc == i64::MAX {
                i64::MAX
            } else {
                self.trunc / g
            },
        }
    }

    /// Rescale to a larger ramification (orders multiply by factor).
    fn upscaled(&self, factor: u32) -> Self {
        if factor == 1 {
            return self.clone();
        }
        let f = factor as i64;
        let mut coeffs = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                coeffs.extend(std::iter::repeat_with(Scalar::zero).take(factor as usize - 1));
            }
            let _ = k;
            coeffs.push(c.clone());
        }
        ValuedSeries {
            ram: self.ram * factor,
            val: self.val * f,
            coeffs,
            trunc: if self.trunc == i64::MAX {
                i64::MAX
            } else {
                self.trunc * f
            },
        }
    }

    fn aligned(&self, rhs: &Self) -> (Self, Self) {
        let l = (self.ram as i64).lcm(&(rhs.ram as i64)) as u32;
        (self.upscaled(l / self.ram), rhs.upscaled(l / rhs.ram))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let trunc = a.trunc.min(b.trunc);
        if a.coeffs.is_empty() && b.coeffs.is_empty() {
            let mut z = Self::zero_to(trunc);
            z.ram = a.ram;
            return z.reduced();
        }
        let lo = match (a.coeffs.is_empty(), b.coeffs.is_empty()) {
            (false, false) => a.val.min(b.val),
            (false, true) => a.val,
            (true, false) => b.val,
            (true, true) => unreachable!(),
        };
        let hi_a = a.val + a.coeffs.len() as i64;
        let hi_b = b.val + b.coeffs.len() as i64;
        let hi = hi_a.max(hi_b).min(trunc);
        if hi <= lo {
            let mut z = Self::zero_to(trunc);
            z.ram = a.ram;
            return z.reduced();
        }
        let mut coeffs = vec![Scalar::zero(); (hi - lo) as usize];
        for (k, c) in a.coeffs.iter().enumerate() {
            let o = a.val + k as i64;
            if o < hi {
                coeffs[(o - lo) as usize] = coeffs[(o - lo) as usize].add(c);
            }
        }
        for (k, c) in b.coeffs.iter().enumerate() {
            let o = b.val + k as i64;
            if o < hi {
                coeffs[(o - lo) as usize] = coeffs[(o - lo) as usize].add(c);
            }
        }
        ValuedSeries {
            ram: a.ram,
            val: lo,
            coeffs,
            trunc,
        }
        .normalized()
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        // O(s^Ta) * (lead s^vb + ...) is O(s^(Ta+vb)); with both factors
        // zero-to-truncation the product is O(s^(Ta+Tb)).
        let bound_a = if a.coeffs.is_empty() { a.trunc } else { a.val };
        let bound_b = if b.coeffs.is_empty() { b.trunc } else { b.val };
        let trunc = ord_add(a.trunc, bound_b).min(ord_add(b.trunc, bound_a));
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            let mut z = Self::zero_to(trunc);
            z.ram = a.ram;
            return z.reduced();
        }
        let lo = a.val + b.val;
        let hi = (a.val + a.coeffs.len() as i64 + b.val + b.coeffs.len() as i64 - 1).min(trunc);
        if hi <= lo {
            let mut z = Self::zero_to(trunc);
            z.ram = a.ram;
            return z.reduced();
        }
        let mut coeffs = vec![Scalar::zero(); (hi - lo) as usize];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                let o = lo + (i + j) as i64;
                if o >= hi {
                    break;
                }
                coeffs[(i + j) as usize] = coeffs[(i + j) as usize].add(&ca.mul(cb));
            }
        }
        ValuedSeries {
            ram: a.ram,
            val: lo,
            coeffs,
            trunc,
        }
        .normalized()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.mul(&ValuedSeries::constant(c.clone()))
    }

    /// Multiplicative inverse of a nonzero series.
    pub fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.coeffs.is_empty() {
            return Err(AlgebraError::DivisionByZeroSeries);
        }
        let lead = self.coeffs[0].clone();
        let lead_inv = Scalar::one().try_div(&lead)?;
        // relative precision available in the input
        let rel = if self.trunc == i64::MAX {
            if self.coeffs.len() == 1 {
                // monomial: exact inverse
                return Ok(ValuedSeries {
                    ram: self.ram,
                    val: -self.val,
                    coeffs: vec![lead_inv],
                    trunc: i64::MAX,
                });
            }
            DEFAULT_TRUNC * self.ram as i64
        } else {
            self.trunc - self.val
        };
        // u = self / (lead * s^val), so u_0 = 1; solve r * u = 1
        let n = rel.max(1) as usize;
        let u: Vec<Scalar> = (0..n)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .cloned()
                    .unwrap_or_else(Scalar::zero)
                    .try_div(&lead)
                    .unwrap()
            })
            .collect();
        let mut r = vec![Scalar::zero(); n];
        r[0] = Scalar::one();
        for k in 1..n {
            let mut acc = Scalar::zero();
            for j in 1..=k {
                acc = acc.add(&u[j].mul(&r[k - j]));
            }
            r[k] = acc.neg();
        }
        let coeffs: Vec<Scalar> = r.iter().map(|c| c.mul(&lead_inv)).collect();
        let trunc = if self.trunc == i64::MAX && self.coeffs.len() == 1 {
            i64::MAX
        } else {
            -self.val + rel
        };
        Ok(ValuedSeries {
            ram: self.ram,
            val: -self.val,
            coeffs,
            trunc,
        }
        .normalized())
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.try_inv()?))
    }

    /// A square root. The ramification index doubles when the valuation is
    /// odd; the leading coefficient must have a square root in the
    /// coefficient domain (reported, not approximated, in exact mode).
    pub fn sqrt(&self) -> Result<Self, AlgebraError> {
        if self.coeffs.is_empty() {
            // sqrt of O(s^T) is O(s^(T/2))
            let mut z = self.clone();
            if z.trunc != i64::MAX {
                z.trunc /= 2;
            }
            return Ok(z);
        }
        let base = if self.val.rem_euclid(2) != 0 {
            self.upscaled(2)
        } else {
            self.clone()
        };
        let half_val = base.val / 2;
        let lead = base.coeffs[0].clone();
        let lead_sqrt = lead.sqrt()?;
        let rel = if base.trunc == i64::MAX {
            if base.coeffs.len() == 1 {
                return Ok(ValuedSeries {
                    ram: base.ram,
                    val: half_val,
                    coeffs: vec![lead_sqrt],
                    trunc: i64::MAX,
                }
                .normalized());
            }
            DEFAULT_TRUNC * base.ram as i64
        } else {
            base.trunc - base.val
        };
        let n = rel.max(1) as usize;
        let u: Vec<Scalar> = (0..n)
            .map(|k| {
                base.coeffs
                    .get(k)
                    .cloned()
                    .unwrap_or_else(Scalar::zero)
                    .try_div(&lead)
                    .unwrap()
            })
            .collect();
        // r^2 = u with r_0 = 1: r_k = (u_k - sum_{j=1}^{k-1} r_j r_{k-j}) / 2
        let two = Scalar::from_int(2);
        let mut r = vec![Scalar::zero(); n];
        r[0] = Scalar::one();
        for k in 1..n {
            let mut acc = u[k].clone();
            for j in 1..k {
                acc = acc.sub(&r[j].mul(&r[k - j]));
            }
            r[k] = acc.try_div(&two).unwrap();
        }
        let coeffs: Vec<Scalar> = r.iter().map(|c| c.mul(&lead_sqrt)).collect();
        Ok(ValuedSeries {
            ram: base.ram,
            val: half_val,
            coeffs,
            trunc: half_val + rel,
        }
        .normalized())
    }

    /// Substitute the parameter by another series of positive valuation
    /// (both sides must have ramification 1).
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        if self.ram != 1 || inner.ram != 1 {
            return Err(AlgebraError::BadComposition);
        }
        match inner.valuation() {
            Valuation::Finite(v) if v >= 1 => {}
            _ => return Err(AlgebraError::BadComposition),
        }
        if self.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let mut acc = ValuedSeries::zero();
        let mut power = if self.val >= 0 {
            let mut p = ValuedSeries::constant(Scalar::one());
            for _ in 0..self.val {
                p = p.mul(inner);
            }
            p
        } else {
            let inv = inner.try_inv()?;
            let mut p = ValuedSeries::constant(Scalar::one());
            for _ in 0..(-self.val) {
                p = p.mul(&inv);
            }
            p
        };
        for c in &self.coeffs {
            acc = acc.add(&power.scale(c));
            power = power.mul(inner);
        }
        // the unknown tail O(s^T) pulls back to O(inner^T), which has
        // order at least T
        if self.trunc != i64::MAX {
            acc.trunc = acc.trunc.min(self.trunc);
            acc = acc.normalized();
        }
        Ok(acc)
    }

    /// Coefficient-wise tolerant comparison over the common known window.
    pub fn approx_eq(&self, rhs: &Self) -> bool {
        let (a, b) = self.aligned(rhs);
        let trunc = a.trunc.min(b.trunc);
        let lo = a.val.min(b.val).min(0);
        let hi = (a.val + a.coeffs.len() as i64)
            .max(b.val + b.coeffs.len() as i64)
            .min(trunc);
        for o in lo..hi {
            let ca = a.coefficient(o).unwrap_or_else(Scalar::zero);
            let cb = b.coefficient(o).unwrap_or_else(Scalar::zero);
            if !ca.approx_eq(&cb) {
                return false;
            }
        }
        true
    }
}

impl PartialEq for ValuedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.ram == other.ram
            && self.val == other.val
            && self.coeffs == other.coeffs
            && self.trunc == other.trunc
    }
}

impl fmt::Debug for ValuedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            for (k, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if k > 0 {
                    write!(f, " + ")?;
                }
                let o = self.val + k as i64;
                if self.ram == 1 {
                    write!(f, "({:?})s^{}", c, o)?;
                } else {
                    write!(f, "({:?})s^({}/{})", c, o, self.ram)?;
                }
            }
        }
        if self.trunc != i64::MAX {
            if self.ram == 1 {
                write!(f, " + O(s^{})", self.trunc)?;
            } else {
                write!(f, " + O(s^({}/{}))", self.trunc, self.ram)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesTermRepr {
    ord: i64,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    ram: u32,
    terms: Vec<SeriesTermRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trunc: Option<i64>,
}

impl Serialize for ValuedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            ram: self.ram,
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| SeriesTermRepr {
                    ord: self.val + k as i64,
                    coeff: c.clone(),
                })
                .collect(),
            trunc: if self.trunc == i64::MAX {
                None
            } else {
                Some(self.trunc)
            },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ValuedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.ram == 0 {
            return Err(serde::de::Error::custom("ramification must be positive"));
        }
        let terms: Vec<(i64, Scalar)> = repr.terms.into_iter().map(|t| (t.ord, t.coeff)).collect();
        Ok(ValuedSeries::from_ram_terms(
            repr.ram,
            &terms,
            repr.trunc.unwrap_or(i64::MAX),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> ValuedSeries {
        ValuedSeries::parameter()
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn valuation_read_off() {
        // s^-2 + 1 has valuation -2
        let a = ValuedSeries::from_terms(&[(-2, int(1)), (0, int(1))]);
        assert_eq!(a.valuation(), Valuation::Finite(-2));
        assert_eq!(ValuedSeries::zero().valuation(), Valuation::Infinite);
        assert_eq!(
            ValuedSeries::zero_to(5).valuation(),
            Valuation::AtLeast(5)
        );
    }

    #[test]
    fn product_valuations_add() {
        let a = ValuedSeries::from_terms(&[(-1, int(2)), (0, int(1))]);
        let b = ValuedSeries::from_terms(&[(3, int(5)), (7, int(-1))]);
        assert_eq!(a.mul(&b).valuation(), Valuation::Finite(2));
    }

    #[test]
    fn sum_cancellation() {
        // (s + s^2) + (-s) = s^2: valuation strictly greater than min
        let a = ValuedSeries::from_terms(&[(1, int(1)), (2, int(1))]);
        let b = ValuedSeries::from_terms(&[(1, int(-1))]);
        let c = a.add(&b);
        assert_eq!(c.valuation(), Valuation::Finite(2));
        assert_eq!(c, ValuedSeries::monomial(2, int(1)));
    }

    #[test]
    fn one_plus_s_times_one_minus_s() {
        let a = ValuedSeries::from_terms(&[(0, int(1)), (1, int(1))]);
        let b = ValuedSeries::from_terms(&[(0, int(1)), (1, int(-1))]);
        let p = a.mul(&b);
        assert_eq!(p, ValuedSeries::from_terms(&[(0, int(1)), (2, int(-1))]));
    }

    #[test]
    fn geometric_series_inverse() {
        // 1 / (s (1+s)) = s^-1 - 1 + s - s^2 + ...
        let d = s().mul(&ValuedSeries::from_terms(&[(0, int(1)), (1, int(1))]));
        let inv = ValuedSeries::constant(int(1)).try_div(&d).unwrap();
        assert_eq!(inv.valuation(), Valuation::Finite(-1));
        for k in 0..10i64 {
            let expect = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(inv.coefficient(k - 1).unwrap(), expect, "order {}", k - 1);
        }
        // division by the zero series is reported
        assert!(matches!(
            d.try_div(&ValuedSeries::zero()),
            Err(AlgebraError::DivisionByZeroSeries)
        ));
    }

    #[test]
    fn sqrt_of_square_and_binomial() {
        assert_eq!(s().mul(&s()).sqrt().unwrap(), s());
        // sqrt(4 + s) = 2 + s/4 - s^2/64 + ...
        let r = ValuedSeries::from_terms(&[(0, int(4)), (1, int(1))])
            .sqrt()
            .unwrap();
        assert_eq!(r.coefficient(0).unwrap(), int(2));
        assert_eq!(r.coefficient(1).unwrap(), Scalar::from_ratio(1, 4));
        assert_eq!(r.coefficient(2).unwrap(), Scalar::from_ratio(-1, 64));
        // sqrt(s): ramification 2
        let h = s().sqrt().unwrap();
        assert_eq!(h.ram(), 2);
        assert_eq!(h.valuation(), Valuation::Finite(1));
        assert!(h.mul(&h).approx_eq(&s()));
    }

    #[test]
    fn sqrt_reports_missing_exact_root() {
        let r = ValuedSeries::from_terms(&[(0, int(2)), (1, int(1))]).sqrt();
        assert!(matches!(r, Err(AlgebraError::NoExactSqrt)));
    }

    #[test]
    fn truncation_propagates() {
        let a = ValuedSeries::from_ram_terms(1, &[(0, int(1)), (1, int(1))], 4);
        let b = ValuedSeries::from_terms(&[(2, int(1))]);
        let p = a.mul(&b);
        assert_eq!(p.trunc(), 6);
        assert_eq!(p.coefficient(5), Some(Scalar::zero()));
        assert_eq!(p.coefficient(6), None);
    }

    #[test]
    fn compose_reparametrizes() {
        // f(s) = s^-1 + s, composed with s(1+s)
        let f = ValuedSeries::from_terms(&[(-1, int(1)), (1, int(1))]);
        let inner = s().mul(&ValuedSeries::from_terms(&[(0, int(1)), (1, int(1))]));
        let g = f.compose(&inner).unwrap();
        assert_eq!(g.valuation(), Valuation::Finite(-1));
        // leading behavior s^-1 (1 - s + s^2 ...) + s(1+s)
        assert_eq!(g.coefficient(-1).unwrap(), int(1));
        assert_eq!(g.coefficient(0).unwrap(), int(-1));
    }

    #[test]
    fn json_round_trip() {
        let a = ValuedSeries::from_ram_terms(2, &[(-1, int(3)), (2, Scalar::from_ratio(1, 2))], 9);
        let j = serde_json::to_string(&a).unwrap();
        let back: ValuedSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(a, back);
    }
}
