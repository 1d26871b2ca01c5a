//! The equal-meridian-trace character hypersurface in trace coordinates.
//!
//! Points (x, y, z, t) record the traces of mu1 mu2, mu1 mu3, mu2 mu3 and
//! the common meridian trace for representations of the four-punctured
//! sphere group. The hypersurface is cut out by
//!
//! ```text
//! F = (t^2 - (x + y + z - 2))^2 - (2 - x)(2 - y)(2 - z)
//! ```
//!
//! This module provides membership and singular-locus queries, the double
//! cover used to certify local irreducibility at the distinguished
//! reducible points, and realization of points as explicit matrix
//! quadruples.

mod germ;
mod realize;
mod sample;

pub use germ::{
    germ_certificate, singular_locus_certificate, GermCertificate, SingularLocusCertificate,
};
pub use realize::{realize_character, realize_generic};
pub use sample::{random_sl2, sample_quadruple, sample_y_point_float, YSample};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, MultiPoly, Scalar};
use crate::sl2::Sl2Error;

/// Variable order for the defining polynomial of the hypersurface.
pub const Y_VARS: [&str; 4] = ["x", "y", "z", "t"];
/// Variable order for the defining polynomial of the double cover.
pub const COVER_VARS: [&str; 4] = ["w", "u", "v", "t"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrickeError {
    #[error("point does not lie on the trace hypersurface")]
    NotOnY,
    #[error("germ certificates exist only at the three distinguished reducible points")]
    WrongBasePoint,
    #[error("character admits no irreducible realization")]
    ReducibleChar,
    #[error("normal form breaks at meridian trace ±2; reported rather than patched")]
    Degenerate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
}

impl FrickeError {
    pub fn code(&self) -> &'static str {
        match self {
            FrickeError::NotOnY => "NOT_ON_Y",
            FrickeError::WrongBasePoint => "WRONG_BASE_POINT",
            FrickeError::ReducibleChar => "REDUCIBLE_CHAR",
            FrickeError::Degenerate => "DEGENERATE",
            FrickeError::Algebra(e) => e.code(),
            FrickeError::Sl2(e) => e.code(),
        }
    }
}

/// A point of C^4 in the equal-meridian-trace coordinates.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FrickePoint {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
    pub t: Scalar,
}

impl FrickePoint {
    pub fn new(x: Scalar, y: Scalar, z: Scalar, t: Scalar) -> Self {
        FrickePoint { x, y, z, t }
    }

    pub fn from_ints(x: i64, y: i64, z: i64, t: i64) -> Self {
        FrickePoint {
            x: Scalar::from_int(x),
            y: Scalar::from_int(y),
            z: Scalar::from_int(z),
            t: Scalar::from_int(t),
        }
    }

    pub fn coords(&self) -> [Scalar; 4] {
        [
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.t.clone(),
        ]
    }

    pub fn approx_eq(&self, rhs: &FrickePoint) -> bool {
        self.x.approx_eq(&rhs.x)
            && self.y.approx_eq(&rhs.y)
            && self.z.approx_eq(&rhs.z)
            && self.t.approx_eq(&rhs.t)
    }
}

/// A point of the double cover in coordinates (w, u, v, t).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CoverPoint {
    pub w: Scalar,
    pub u: Scalar,
    pub v: Scalar,
    pub t: Scalar,
}

impl CoverPoint {
    pub fn new(w: Scalar, u: Scalar, v: Scalar, t: Scalar) -> Self {
        CoverPoint { w, u, v, t }
    }

    pub fn from_ints(w: i64, u: i64, v: i64, t: i64) -> Self {
        CoverPoint {
            w: Scalar::from_int(w),
            u: Scalar::from_int(u),
            v: Scalar::from_int(v),
            t: Scalar::from_int(t),
        }
    }

    pub fn coords(&self) -> [Scalar; 4] {
        [
            self.w.clone(),
            self.u.clone(),
            self.v.clone(),
            self.t.clone(),
        ]
    }

    pub fn approx_eq(&self, rhs: &CoverPoint) -> bool {
        self.coords()
            .iter()
            .zip(rhs.coords().iter())
            .all(|(a, b)| a.approx_eq(b))
    }
}

/// The defining polynomial F of the hypersurface, with exact integer
/// coefficients in the variables (x, y, z, t).
pub fn y_defining_poly() -> MultiPoly {
    let vars = &Y_VARS;
    let x = MultiPoly::var(vars, 0);
    let y = MultiPoly::var(vars, 1);
    let z = MultiPoly::var(vars, 2);
    let t = MultiPoly::var(vars, 3);
    let two = MultiPoly::int_constant(vars, 2);
    let s = &t.pow(2) - &(&(&(&x + &y) + &z) - &two);
    &s.pow(2) - &(&(&two - &x) * &(&(&two - &y) * &(&two - &z)))
}

/// The defining polynomial H of the double cover, in (w, u, v, t):
/// u^2 + v^2 + uvw - w^2 - t^2 + 4.
pub fn cover_defining_poly() -> MultiPoly {
    let vars = &COVER_VARS;
    let w = MultiPoly::var(vars, 0);
    let u = MultiPoly::var(vars, 1);
    let v = MultiPoly::var(vars, 2);
    let t = MultiPoly::var(vars, 3);
    let four = MultiPoly::int_constant(vars, 4);
    &(&(&(&u.pow(2) + &v.pow(2)) + &(&(&u * &v) * &w)) - &w.pow(2)) - &(&t.pow(2) - &four)
}

/// Membership on the hypersurface: F = 0, exactly in exact mode, within
/// the tracked tolerance in float mode.
pub fn on_y(p: &FrickePoint) -> bool {
    y_defining_poly()
        .eval(&p.coords())
        .expect("arity matches")
        .is_zero()
}

/// Whether all four partial derivatives of F vanish at the point.
/// The point must lie on the hypersurface.
pub fn singular_at(p: &FrickePoint) -> Result<bool, FrickeError> {
    if !on_y(p) {
        return Err(FrickeError::NotOnY);
    }
    let coords = p.coords();
    Ok(y_defining_poly()
        .gradient()
        .iter()
        .all(|g| g.eval(&coords).expect("arity matches").is_zero()))
}

/// One of the three parametrized singular curves, as four polynomials in
/// the curve parameter.
#[derive(Clone, Debug, Serialize)]
pub struct SingularCurve {
    /// Which of x, y, z carries the varying coordinate s^2 - 2.
    pub axis: usize,
    pub coords: [MultiPoly; 4],
}

impl SingularCurve {
    pub fn eval(&self, s: &Scalar) -> FrickePoint {
        let pt = [s.clone()];
        let v: Vec<Scalar> = self
            .coords
            .iter()
            .map(|c| c.eval(&pt).expect("univariate"))
            .collect();
        FrickePoint::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    }
}

/// The three one-dimensional components of the singular locus:
/// s -> (s^2-2, 2, 2, s) and its two coordinate permutations. Together
/// with the isolated point (-2,-2,-2,0) they exhaust the singular set.
pub fn singular_curves() -> [SingularCurve; 3] {
    let svar = &["s"];
    let s = MultiPoly::var(svar, 0);
    let varying = &s.pow(2) - &MultiPoly::int_constant(svar, 2);
    let two = MultiPoly::int_constant(svar, 2);
    let mk = |axis: usize| {
        let mut coords = [two.clone(), two.clone(), two.clone(), s.clone()];
        coords[axis] = varying.clone();
        SingularCurve { axis, coords }
    };
    [mk(0), mk(1), mk(2)]
}

/// The isolated singular point.
pub fn isolated_singular_point() -> FrickePoint {
    FrickePoint::from_ints(-2, -2, -2, 0)
}

/// The regular map from the double cover to the hypersurface:
/// (w, u, v, t) -> (t^2 - (u^2 + v^2 + uvw) - 2, 2 + u^2, 2 + v^2, t).
pub fn cover_map(q: &CoverPoint) -> FrickePoint {
    let two = Scalar::from_int(2);
    let xi = q
        .u
        .mul(&q.u)
        .add(&q.v.mul(&q.v))
        .add(&q.u.mul(&q.v).mul(&q.w));
    FrickePoint {
        x: q.t.mul(&q.t).sub(&xi).sub(&two),
        y: two.add(&q.u.mul(&q.u)),
        z: two.add(&q.v.mul(&q.v)),
        t: q.t.clone(),
    }
}

/// The cover map as four polynomials in (w, u, v, t), for symbolic
/// composition.
pub fn cover_map_polys() -> [MultiPoly; 4] {
    let vars = &COVER_VARS;
    let w = MultiPoly::var(vars, 0);
    let u = MultiPoly::var(vars, 1);
    let v = MultiPoly::var(vars, 2);
    let t = MultiPoly::var(vars, 3);
    let two = MultiPoly::int_constant(vars, 2);
    let xi = &(&u.pow(2) + &v.pow(2)) + &(&(&u * &v) * &w);
    [
        &(&t.pow(2) - &xi) - &two,
        &two + &u.pow(2),
        &two + &v.pow(2),
        t,
    ]
}

/// The deck involution (w, u, v, t) -> (-w, u, -v, t). It preserves the
/// cover hypersurface and commutes with the cover map.
pub fn deck_involution(q: &CoverPoint) -> CoverPoint {
    CoverPoint {
        w: q.w.neg(),
        u: q.u.clone(),
        v: q.v.neg(),
        t: q.t.clone(),
    }
}

/// Whether the point satisfies the cover equation H = 0.
pub fn on_cover(q: &CoverPoint) -> bool {
    cover_defining_poly()
        .eval(&q.coords())
        .expect("arity matches")
        .is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(on_y(&FrickePoint::from_ints(-2, -2, -2, 0)));
        assert!(on_y(&FrickePoint::from_ints(2, 2, 2, 2)));
        assert!(on_y(&FrickePoint::from_ints(-2, 2, 2, 0)));
        assert!(!on_y(&FrickePoint::from_ints(0, 0, 0, 0)));
        // F(0,0,0,0) = 4 - 8 = -4
        let f = y_defining_poly()
            .eval(&FrickePoint::from_ints(0, 0, 0, 0).coords())
            .unwrap();
        assert_eq!(f, Scalar::from_int(-4));
        // forced t: (2,3,4,sqrt 7) lies on the surface since the right side vanishes
        let p = FrickePoint::new(
            Scalar::float(2.0, 0.0),
            Scalar::float(3.0, 0.0),
            Scalar::float(4.0, 0.0),
            Scalar::float(7f64.sqrt(), 0.0),
        );
        assert!(on_y(&p));
    }

    #[test]
    fn gradient_examples() {
        let f = y_defining_poly();
        let grads = f.gradient();
        let p = [
            Scalar::float(2.0, 0.0),
            Scalar::float(3.0, 0.0),
            Scalar::float(4.0, 0.0),
            Scalar::float(7f64.sqrt(), 0.0),
        ];
        // dF/dt = 4 t (t^2 - (x+y+z-2)) = 0 there, dF/dx = 2
        assert!(grads[3].eval(&p).unwrap().is_zero());
        assert!(grads[0]
            .eval(&p)
            .unwrap()
            .approx_eq(&Scalar::float(2.0, 0.0)));
        // dH/dw = uv - 2w is -4 at (2,0,0,0)
        let h = cover_defining_poly();
        let hw = h.partial(0);
        assert_eq!(
            hw.eval(&CoverPoint::from_ints(2, 0, 0, 0).coords())
                .unwrap(),
            Scalar::from_int(-4)
        );
    }

    #[test]
    fn singular_points_and_smooth_points() {
        assert!(singular_at(&FrickePoint::from_ints(-2, -2, -2, 0)).unwrap());
        assert!(singular_at(&FrickePoint::from_ints(-2, 2, 2, 0)).unwrap());
        assert!(singular_at(&FrickePoint::from_ints(2, -2, 2, 0)).unwrap());
        assert!(singular_at(&FrickePoint::from_ints(2, 2, -2, 0)).unwrap());
        let smooth = FrickePoint::new(
            Scalar::float(2.0, 0.0),
            Scalar::float(3.0, 0.0),
            Scalar::float(4.0, 0.0),
            Scalar::float(7f64.sqrt(), 0.0),
        );
        assert!(!singular_at(&smooth).unwrap());
        assert!(matches!(
            singular_at(&FrickePoint::from_ints(0, 0, 0, 0)),
            Err(FrickeError::NotOnY)
        ));
    }

    #[test]
    fn singular_curves_pass_through_named_points() {
        let curves = singular_curves();
        // curve 1 at s = 0 is (-2, 2, 2, 0)
        assert!(curves[0]
            .eval(&Scalar::zero())
            .approx_eq(&FrickePoint::from_ints(-2, 2, 2, 0)));
        // curve 1 at s = 2 is the trivial-representation character
        assert!(curves[0]
            .eval(&Scalar::from_int(2))
            .approx_eq(&FrickePoint::from_ints(2, 2, 2, 2)));
        // curve 2 at s = 1 is (2, -1, 2, 1), with vanishing gradient
        let p = curves[1].eval(&Scalar::from_int(1));
        assert!(p.approx_eq(&FrickePoint::from_ints(2, -1, 2, 1)));
        assert!(singular_at(&p).unwrap());
        // all curves pass through the trivial character at s = ±2
        for c in &curves {
            for s in [2i64, -2] {
                let pt = c.eval(&Scalar::from_int(s));
                assert!(on_y(&pt));
                assert!(pt.t.approx_eq(&Scalar::from_int(s)));
            }
        }
    }

    #[test]
    fn gradient_vanishes_identically_along_curves() {
        let grads = y_defining_poly().gradient();
        for curve in &singular_curves() {
            for g in &grads {
                let composed = g.compose(&curve.coords).unwrap();
                assert!(composed.is_zero(), "gradient along curve {}", curve.axis);
            }
            let f = y_defining_poly().compose(&curve.coords).unwrap();
            assert!(f.is_zero());
        }
    }

    #[test]
    fn cover_identity_holds_symbolically() {
        // F(cover_map(w,u,v,t)) + u^2 v^2 H = 0 as polynomials
        let composed = y_defining_poly().compose(&cover_map_polys()).unwrap();
        let vars = &COVER_VARS;
        let u = MultiPoly::var(vars, 1);
        let v = MultiPoly::var(vars, 2);
        let correction = &(&u.pow(2) * &v.pow(2)) * &cover_defining_poly();
        assert!((&composed + &correction).is_zero());
    }

    #[test]
    fn cover_map_examples() {
        assert!(cover_map(&CoverPoint::from_ints(2, 0, 0, 0))
            .approx_eq(&FrickePoint::from_ints(-2, 2, 2, 0)));
        assert!(cover_map(&CoverPoint::from_ints(-2, 0, 0, 0))
            .approx_eq(&FrickePoint::from_ints(-2, 2, 2, 0)));
        assert!(on_cover(&CoverPoint::from_ints(2, 0, 0, 0)));
        assert!(on_cover(&CoverPoint::from_ints(-2, 0, 0, 0)));
        // (1,1,1,sqrt 6) maps to (1,3,3,sqrt 6) on the hypersurface
        let s6 = Scalar::float(6f64.sqrt(), 0.0);
        let q = CoverPoint::new(
            Scalar::float(1.0, 0.0),
            Scalar::float(1.0, 0.0),
            Scalar::float(1.0, 0.0),
            s6,
        );
        assert!(on_cover(&q));
        let p = cover_map(&q);
        assert!(p.x.approx_eq(&Scalar::float(1.0, 0.0)));
        assert!(p.y.approx_eq(&Scalar::float(3.0, 0.0)));
        assert!(p.z.approx_eq(&Scalar::float(3.0, 0.0)));
        assert!(on_y(&p));
    }

    #[test]
    fn deck_involution_swaps_preimages_and_commutes() {
        let q = CoverPoint::from_ints(2, 0, 0, 0);
        assert!(deck_involution(&q).approx_eq(&CoverPoint::from_ints(-2, 0, 0, 0)));
        let r = CoverPoint::new(
            Scalar::float(1.0, 0.0),
            Scalar::float(1.0, 0.0),
            Scalar::float(1.0, 0.0),
            Scalar::float(6f64.sqrt(), 0.0),
        );
        let ri = deck_involution(&r);
        assert!(on_cover(&ri));
        assert!(cover_map(&ri).approx_eq(&cover_map(&r)));
        // symbolic: cover_map ∘ deck = cover_map, and H ∘ deck = H
        let vars = &COVER_VARS;
        let deck: Vec<MultiPoly> = vec![
            -&MultiPoly::var(vars, 0),
            MultiPoly::var(vars, 1),
            -&MultiPoly::var(vars, 2),
            MultiPoly::var(vars, 3),
        ];
        for comp in &cover_map_polys() {
            let composed = comp.compose(&deck).unwrap();
            assert!((&composed - comp).is_zero());
        }
        let h = cover_defining_poly();
        assert!((&h.compose(&deck).unwrap() - &h).is_zero());
    }
}
