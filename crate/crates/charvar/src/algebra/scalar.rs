//! Coefficient scalars: exact rationals, exact Gaussian rationals, and
//! complex double floats with an explicit zero tolerance.
//!
//! The float variant tracks the largest intermediate magnitude seen while
//! the value was computed; every zero test is relative to that scale.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

/// Default relative zero tolerance for float scalars.
///
/// Membership checks on the trace hypersurface involve degree-4
/// cancellations, so the tolerance is relative to the largest intermediate
/// magnitude rather than absolute.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A field element: either an exact Gaussian rational a + b*i (the case
/// b = 0 is the exact rational sub-field), or a complex double float
/// carrying a relative tolerance and the largest magnitude seen so far.
#[derive(Clone)]
pub enum Scalar {
    Exact { re: BigRational, im: BigRational },
    Float { re: f64, im: f64, tol: f64, scale: f64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_int(0)
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit as an exact Gaussian rational.
    pub fn i() -> Self {
        Scalar::Exact {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Exact rational p/q. Panics if q = 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Exact {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// Exact Gaussian rational re + im*i from two rationals.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact { re, im }
    }

    /// Exact Gaussian rational from integer parts.
    pub fn gauss_int(re: i64, im: i64) -> Self {
        Scalar::Exact {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// Complex float with the default tolerance.
    pub fn float(re: f64, im: f64) -> Self {
        Scalar::float_with_tol(re, im, DEFAULT_TOL)
    }

    pub fn float_with_tol(re: f64, im: f64, tol: f64) -> Self {
        assert!(tol >= 0.0, "tolerance must be nonnegative");
        Scalar::Float {
            re,
            im,
            tol,
            scale: re.hypot(im),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact { .. })
    }

    /// Lossy view as a complex double pair.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        match self {
            Scalar::Exact { re, im } => {
                (re.to_f64().unwrap_or(f64::NAN), im.to_f64().unwrap_or(f64::NAN))
            }
            Scalar::Float { re, im, .. } => (*re, *im),
        }
    }

    /// Convert to the float variant, keeping the given tolerance.
    pub fn to_float(&self, tol: f64) -> Scalar {
        match self {
            Scalar::Exact { .. } => {
                let (re, im) = self.to_complex_f64();
                Scalar::float_with_tol(re, im, tol)
            }
            s => s.clone(),
        }
    }

    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex_f64();
        re.hypot(im)
    }

    fn join_float(a_re: f64, a_im: f64, b: &Scalar, r_re: f64, r_im: f64, tol_a: f64, sc_a: f64) -> Scalar {
        let (tol_b, sc_b) = match b {
            Scalar::Float { tol, scale, .. } => (*tol, *scale),
            Scalar::Exact { .. } => (tol_a, b.magnitude()),
        };
        let _ = (a_re, a_im);
        Scalar::Float {
            re: r_re,
            im: r_im,
            tol: tol_a.max(tol_b),
            scale: sc_a.max(sc_b).max(r_re.hypot(r_im)),
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        exact: impl Fn(&BigRational, &BigRational, &BigRational, &BigRational) -> (BigRational, BigRational),
        float: impl Fn(f64, f64, f64, f64) -> (f64, f64),
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact { re: ar, im: ai }, Scalar::Exact { re: br, im: bi }) => {
                let (re, im) = exact(ar, ai, br, bi);
                Scalar::Exact { re, im }
            }
            _ => {
                let (ar, ai) = self.to_complex_f64();
                let (br, bi) = rhs.to_complex_f64();
                let (rr, ri) = float(ar, ai, br, bi);
                let (tol, sc) = match self {
                    Scalar::Float { tol, scale, .. } => (*tol, *scale),
                    Scalar::Exact { .. } => (DEFAULT_TOL, self.magnitude()),
                };
                Scalar::join_float(ar, ai, rhs, rr, ri, tol, sc)
            }
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.binop(
            rhs,
            |ar, ai, br, bi| (ar + br, ai + bi),
            |ar, ai, br, bi| (ar + br, ai + bi),
        )
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.binop(
            rhs,
            |ar, ai, br, bi| (ar - br, ai - bi),
            |ar, ai, br, bi| (ar - br, ai - bi),
        )
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.binop(
            rhs,
            |ar, ai, br, bi| (ar * br - ai * bi, ar * bi + ai * br),
            |ar, ai, br, bi| (ar * br - ai * bi, ar * bi + ai * br),
        )
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact { re: -re, im: -im },
            Scalar::Float { re, im, tol, scale } => Scalar::Float {
                re: -re,
                im: -im,
                tol: *tol,
                scale: *scale,
            },
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: re.clone(),
                im: -im,
            },
            Scalar::Float { re, im, tol, scale } => Scalar::Float {
                re: *re,
                im: -im,
                tol: *tol,
                scale: *scale,
            },
        }
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.binop(
            rhs,
            |ar, ai, br, bi| {
                let n = br * br + bi * bi;
                ((ar * br + ai * bi) / &n, (ai * br - ar * bi) / &n)
            },
            |ar, ai, br, bi| {
                let n = br * br + bi * bi;
                ((ar * br + ai * bi) / n, (ai * br - ar * bi) / n)
            },
        ))
    }

    /// Zero test: exact in the exact variants, relative to the tracked
    /// scale in the float variant.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Float { re, im, tol, scale } => re.hypot(*im) <= tol * scale.max(1.0),
        }
    }

    pub fn is_one(&self) -> bool {
        self.sub(&Scalar::one()).is_zero()
    }

    /// Equality up to the active tolerance (exact equality in exact mode).
    pub fn approx_eq(&self, rhs: &Scalar) -> bool {
        self.sub(rhs).is_zero()
    }

    /// A square root of the scalar.
    ///
    /// In exact mode the root must again be a Gaussian rational; otherwise
    /// `NoExactSqrt` is reported rather than approximated. The principal
    /// branch is returned (nonnegative real part; if the real part is zero,
    /// nonnegative imaginary part).
    pub fn sqrt(&self) -> Result<Scalar, AlgebraError> {
        match self {
            Scalar::Float { re, im, tol, scale } => {
                let m = re.hypot(*im);
                let (rr, ri) = if m == 0.0 {
                    (0.0, 0.0)
                } else {
                    let c = ((m + re) / 2.0).max(0.0).sqrt();
                    let d0 = ((m - re) / 2.0).max(0.0).sqrt();
                    let d = if *im < 0.0 { -d0 } else { d0 };
                    (c, d)
                };
                let (rr, ri) = if rr < 0.0 || (rr == 0.0 && ri < 0.0) {
                    (-rr, -ri)
                } else {
                    (rr, ri)
                };
                Ok(Scalar::Float {
                    re: rr,
                    im: ri,
                    tol: *tol,
                    scale: scale.max(rr.hypot(ri)),
                })
            }
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    if re.is_zero() {
                        return Ok(Scalar::zero());
                    }
                    if re.is_positive() {
                        let r = sqrt_rational(re).ok_or(AlgebraError::NoExactSqrt)?;
                        return Ok(Scalar::Exact {
                            re: r,
                            im: BigRational::zero(),
                        });
                    }
                    let r = sqrt_rational(&-re).ok_or(AlgebraError::NoExactSqrt)?;
                    return Ok(Scalar::Exact {
                        re: BigRational::zero(),
                        im: r,
                    });
                }
                // (c + d i)^2 = re + im i  =>  c^2 = (re + |z|)/2, d = im/(2c)
                let norm = re * re + im * im;
                let m = sqrt_rational(&norm).ok_or(AlgebraError::NoExactSqrt)?;
                let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                let c2 = (re + &m) * &half;
                let c = sqrt_rational(&c2).ok_or(AlgebraError::NoExactSqrt)?;
                if c.is_zero() {
                    return Err(AlgebraError::NoExactSqrt);
                }
                let d = im / (&c + &c);
                let root = Scalar::Exact { re: c, im: d };
                debug_assert!(root.mul(&root).approx_eq(self));
                Ok(canonical_branch(root))
            }
        }
    }

    /// Multiplicative inverse.
    pub fn try_inv(&self) -> Result<Scalar, AlgebraError> {
        Scalar::one().try_div(self)
    }

    /// Canonical sign-normalization test: real part positive, or zero real
    /// part with positive imaginary part (used to pick matrix signs).
    pub fn is_positive_canonical(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => {
                if !re.is_zero() {
                    re.is_positive()
                } else {
                    im.is_positive()
                }
            }
            Scalar::Float { re, im, tol, scale } => {
                let eps = tol * scale.max(1.0);
                if re.abs() > eps {
                    *re > 0.0
                } else {
                    *im > 0.0
                }
            }
        }
    }
}

/// The nonnegative rational square root, when it exists.
fn sqrt_rational(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn canonical_branch(s: Scalar) -> Scalar {
    if s.is_positive_canonical() || s.is_zero() {
        s
    } else {
        s.neg()
    }
}

impl PartialEq for Scalar {
    /// Structural equality: exact components compare exactly; float
    /// components compare by value, ignoring tolerance and scale. Exact
    /// and float variants never compare equal; use `approx_eq` for
    /// tolerance-aware comparisons.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact { re: ar, im: ai }, Scalar::Exact { re: br, im: bi }) => {
                ar == br && ai == bi
            }
            (Scalar::Float { re: ar, im: ai, .. }, Scalar::Float { re: br, im: bi, .. }) => {
                ar == br && ai == bi
            }
            _ => false,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    write!(f, "{}", re)
                } else {
                    write!(f, "{}{}{}i", re, if im.is_negative() { "" } else { "+" }, im)
                }
            }
            Scalar::Float { re, im, .. } => {
                if *im == 0.0 {
                    write!(f, "{}", re)
                } else {
                    write!(f, "{}{}{}i", re, if *im < 0.0 { "" } else { "+" }, im)
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: String,
    im: String,
    kind: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Scalar::Exact { re, im } => ScalarRepr {
                re: re.to_string(),
                im: im.to_string(),
                kind: "rat".to_string(),
            },
            Scalar::Float { re, im, .. } => ScalarRepr {
                re: format!("{re}"),
                im: format!("{im}"),
                kind: "f64".to_string(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        match repr.kind.as_str() {
            "rat" => {
                let re = parse_rational(&repr.re)
                    .ok_or_else(|| D::Error::custom(format!("bad rational: {}", repr.re)))?;
                let im = parse_rational(&repr.im)
                    .ok_or_else(|| D::Error::custom(format!("bad rational: {}", repr.im)))?;
                Ok(Scalar::Exact { re, im })
            }
            "f64" => {
                let re: f64 = repr
                    .re
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad float: {}", repr.re)))?;
                let im: f64 = repr
                    .im
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad float: {}", repr.im)))?;
                Ok(Scalar::float(re, im))
            }
            k => Err(D::Error::custom(format!("unknown scalar kind: {k}"))),
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}
