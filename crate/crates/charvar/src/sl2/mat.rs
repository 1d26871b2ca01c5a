//! 2x2 matrices over a coefficient ring, used throughout for SL(2)
//! elements. Inverses use the adjugate, so they are exact for
//! determinant-one matrices over any coefficient type.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::Coeff;

/// Row-major 2x2 matrix [[a, b], [c, d]].
#[derive(Clone, PartialEq)]
pub struct Mat2<K> {
    pub a: K,
    pub b: K,
    pub c: K,
    pub d: K,
}

impl<K: Coeff> Mat2<K> {
    pub fn new(a: K, b: K, c: K, d: K) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2 {
            a: K::one(),
            b: K::zero(),
            c: K::zero(),
            d: K::one(),
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 {
            a: K::from_int(a),
            b: K::from_int(b),
            c: K::from_int(c),
            d: K::from_int(d),
        }
    }

    pub fn diagonal(a: K, d: K) -> Self {
        Mat2 {
            a,
            b: K::zero(),
            c: K::zero(),
            d,
        }
    }

    pub fn trace(&self) -> K {
        self.a.add(&self.d)
    }

    pub fn det(&self) -> K {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            c: self.c.add(&rhs.c),
            d: self.d.add(&rhs.d),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.sub(&rhs.a),
            b: self.b.sub(&rhs.b),
            c: self.c.sub(&rhs.c),
            d: self.d.sub(&rhs.d),
        }
    }

    pub fn neg(&self) -> Self {
        Mat2 {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        Mat2 {
            a: self.a.mul(k),
            b: self.b.mul(k),
            c: self.c.mul(k),
            d: self.d.mul(k),
        }
    }

    /// The adjugate [[d, -b], [-c, a]]; equal to the inverse when the
    /// determinant is one.
    pub fn adjugate(&self) -> Self {
        Mat2 {
            a: self.d.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.a.clone(),
        }
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse_det1(&self) -> Self {
        self.adjugate()
    }

    /// g * self * g^-1 for a determinant-one conjugator g.
    pub fn conjugated_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.adjugate())
    }

    pub fn apply(&self, v: &[K; 2]) -> [K; 2] {
        [
            self.a.mul(&v[0]).add(&self.b.mul(&v[1])),
            self.c.mul(&v[0]).add(&self.d.mul(&v[1])),
        ]
    }

    pub fn is_identity(&self) -> bool {
        self.sub(&Self::identity()).is_all_zero()
    }

    pub fn is_neg_identity(&self) -> bool {
        self.add(&Self::identity()).is_all_zero()
    }

    pub fn is_central(&self) -> bool {
        self.is_identity() || self.is_neg_identity()
    }

    pub fn is_all_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn approx_eq(&self, rhs: &Self) -> bool {
        self.sub(rhs).is_all_zero()
    }

    pub fn entries(&self) -> [&K; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<L: Coeff>(&self, f: impl Fn(&K) -> L) -> Mat2<L> {
        Mat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    pub fn try_map<L: Coeff, E>(&self, f: impl Fn(&K) -> Result<L, E>) -> Result<Mat2<L>, E> {
        Ok(Mat2 {
            a: f(&self.a)?,
            b: f(&self.b)?,
            c: f(&self.c)?,
            d: f(&self.d)?,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<K: std::fmt::Debug> std::fmt::Debug for Mat2<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{:?}, {:?}], [{:?}, {:?}]]",
            self.a, self.b, self.c, self.d
        )
    }
}

impl<K: Serialize> Serialize for Mat2<K> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // row-major 4-tuple
        [&self.a, &self.b, &self.c, &self.d].serialize(serializer)
    }
}

impl<'de, K: DeserializeOwned> Deserialize<'de> for Mat2<K> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a, b, c, d]: [K; 4] = <[K; 4]>::deserialize(deserializer)?;
        Ok(Mat2 { a, b, c, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    #[test]
    fn det_one_inverse() {
        let m: Mat2<Scalar> = Mat2::from_ints(2, 3, 1, 2);
        assert!(m.det().is_one());
        assert!(m.mul(&m.inverse_det1()).is_identity());
    }

    #[test]
    fn conjugation_preserves_trace() {
        let m: Mat2<Scalar> = Mat2::from_ints(3, 1, 2, 1);
        let g: Mat2<Scalar> = Mat2::from_ints(1, 4, 0, 1);
        let c = m.conjugated_by(&g);
        assert!(c.trace().approx_eq(&m.trace()));
        assert!(c.det().is_one());
    }

    #[test]
    fn json_is_row_major_tuple() {
        let m: Mat2<Scalar> = Mat2::from_ints(1, 2, 3, 4);
        let j = serde_json::to_value(&m).unwrap();
        assert!(j.is_array() && j.as_array().unwrap().len() == 4);
        let back: Mat2<Scalar> = serde_json::from_value(j).unwrap();
        assert!(back.approx_eq(&m));
    }
}
