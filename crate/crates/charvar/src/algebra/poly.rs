//! Sparse multivariate polynomials with [`Scalar`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Scalar};

/// A multivariate polynomial, stored as a map from exponent vectors to
/// nonzero coefficients. Exponent vectors have one entry per variable.
///
/// Arithmetic is exact whenever the coefficients are exact.
#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn int_constant(vars: &[&str], n: i64) -> Self {
        Self::constant(vars, Scalar::from_int(n))
    }

    /// The i-th variable as a polynomial.
    pub fn var(vars: &[&str], i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = Self::zero(vars);
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        p.terms.insert(exps, Scalar::one());
        p
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, coeff: Scalar) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn assert_same_vars(&self, rhs: &Self) {
        assert_eq!(
            self.vars, rhs.vars,
            "polynomial arithmetic over mismatched variable lists"
        );
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            Scalar::one(),
        );
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out.normalized()
    }

    /// Evaluate at a point, exactly when both sides are exact.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, AlgebraError> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The partial derivative with respect to the i-th variable.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.vars.len());
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (exps, coeff) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            let c = coeff.mul(&Scalar::from_int(exps[i] as i64));
            let entry = out.terms.entry(e).or_insert_with(Scalar::zero);
            *entry = entry.add(&c);
        }
        out.normalized()
    }

    /// The full gradient, one polynomial per variable.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }

    /// Substitute a polynomial for every variable. All substituted
    /// polynomials must share one variable list, which becomes the
    /// variable list of the result.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<Self, AlgebraError> {
        if subs.len() != self.vars.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.vars.len(),
                got: subs.len(),
            });
        }
        let target_vars = match subs.first() {
            Some(p) => p.vars.clone(),
            None => {
                // nullary polynomial: a constant
                return Ok(MultiPoly {
                    vars: vec![],
                    terms: self.terms.clone(),
                });
            }
        };
        for p in subs {
            if p.vars != target_vars {
                return Err(AlgebraError::VariableMismatch(
                    target_vars.clone(),
                    p.vars.clone(),
                ));
            }
        }
        let tv: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
        let mut acc = MultiPoly::zero(&tv);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(&tv, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &subs[i].pow(e);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            let entry = out.terms.entry(exps.clone()).or_insert_with(Scalar::zero);
            *entry = entry.add(coeff);
        }
        out.normalized()
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(rhs);
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.mul(cb);
                let entry = out.terms.entry(exps).or_insert_with(Scalar::zero);
                *entry = entry.add(&c);
            }
        }
        out.normalized()
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})", coeff)?;
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[i])?,
                    _ => write!(f, "*{}^{}", self.vars[i], e)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: Vec<u32>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exps: e.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            if t.exps.len() != repr.vars.len() {
                return Err(serde::de::Error::custom("exponent vector arity mismatch"));
            }
            if !t.coeff.is_zero() {
                terms.insert(t.exps, t.coeff);
            }
        }
        Ok(MultiPoly {
            vars: repr.vars,
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (MultiPoly, MultiPoly) {
        let vars = ["x", "y"];
        (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1))
    }

    #[test]
    fn eval_and_arity() {
        let (x, y) = xy();
        let p = &(&x * &x) + &y; // x^2 + y
        let v = p
            .eval(&[Scalar::from_int(3), Scalar::from_int(-1)])
            .unwrap();
        assert_eq!(v, Scalar::from_int(8));
        assert!(matches!(
            p.eval(&[Scalar::from_int(3)]),
            Err(AlgebraError::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let p = MultiPoly::int_constant(&["x", "y", "z"], 17);
        assert!(p.gradient().iter().all(|g| g.is_zero()));
    }

    #[test]
    fn partial_derivative() {
        let (x, y) = xy();
        // p = x^3 y + 2 x
        let p = &(&x.pow(3) * &y) + &x.scale(&Scalar::from_int(2));
        let px = p.partial(0); // 3 x^2 y + 2
        let expect = &(&x.pow(2) * &y).scale(&Scalar::from_int(3))
            + &MultiPoly::int_constant(&["x", "y"], 2);
        assert_eq!(px, expect);
    }

    #[test]
    fn compose_substitutes() {
        let (x, y) = xy();
        let p = &(&x * &x) + &y; // x^2 + y
        let s = MultiPoly::var(&["s"], 0);
        let subs = vec![s.pow(2), -&s];
        let q = p.compose(&subs).unwrap(); // s^4 - s
        assert_eq!(q, &s.pow(4) - &s);
    }

    #[test]
    fn no_zero_terms_stored() {
        let (x, _) = xy();
        let p = &x - &x;
        assert!(p.is_zero());
        assert_eq!(p.terms.len(), 0);
    }

    #[test]
    fn json_round_trip() {
        let (x, y) = xy();
        let p = &(&x * &y).scale(&Scalar::from_ratio(1, 2)) + &MultiPoly::int_constant(&["x", "y"], -3);
        let j = serde_json::to_string(&p).unwrap();
        let back: MultiPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(p, back);
    }
}
