//! Seeded samplers for points of the hypersurface.
//!
//! The exact sampler works on the matrix side: fix the normal-form pair
//! (A, B) and note that C0 = A^-1 satisfies the two linear trace
//! constraints tr C = t and tr(ABC) = t. Inside the plane those
//! constraints cut out, det C = 1 is a quadric through C0, so each
//! rational direction meets it in exactly one further rational point.
//! This produces quadruples with equal meridian traces and product one
//! over the Gaussian rationals, with no square roots anywhere.

use rand::Rng;

use crate::algebra::Scalar;
use crate::sl2::{Mat2, Presentation, Representation};

use super::FrickePoint;

/// A sampled quadruple together with its trace coordinates.
#[derive(Clone, Debug)]
pub struct YSample {
    pub rep: Representation<Scalar>,
    pub point: FrickePoint,
}

/// A random element of SL(2) with small exact rational entries.
pub fn random_sl2(rng: &mut impl Rng) -> Mat2<Scalar> {
    loop {
        let p: i64 = rng.gen_range(-5..=5);
        if p == 0 {
            continue;
        }
        let b: i64 = rng.gen_range(-3..=3);
        let c: i64 = rng.gen_range(-3..=3);
        let a = Scalar::from_int(p);
        let bs = Scalar::from_int(b);
        let cs = Scalar::from_int(c);
        // d = (1 + bc) / a
        let d = Scalar::one()
            .add(&bs.mul(&cs))
            .try_div(&a)
            .expect("a is nonzero");
        return Mat2::new(a, bs, cs, d);
    }
}

/// Sample an exact quadruple (A, B, C, D) with A B C D = I and all four
/// traces equal, as a representation of the four-punctured-sphere group.
pub fn sample_quadruple(rng: &mut impl Rng) -> YSample {
    // lambda = ±p/q with p ≠ q keeps the meridian trace away from ±2
    let (p, q) = loop {
        let p: i64 = rng.gen_range(1..=9);
        let q: i64 = rng.gen_range(1..=9);
        if p != q {
            break (p, q);
        }
    };
    let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let lambda = Scalar::from_ratio(sign * p, q);
    let lambda_inv = Scalar::one().try_div(&lambda).unwrap();
    let t = lambda.add(&lambda_inv);
    let r0 = Scalar::from_int(rng.gen_range(-9..=9));

    let a = Mat2::new(lambda.clone(), Scalar::one(), Scalar::zero(), lambda_inv.clone());
    let b = Mat2::new(lambda.clone(), Scalar::zero(), r0, lambda_inv.clone());
    let m = a.mul(&b);
    let c0 = a.inverse_det1();

    // trace-zero directions d with tr(M d) = 0: given m12 = lambda^-1 is
    // never zero, solve the last component from the first two
    let c = loop {
        let alpha = Scalar::from_int(rng.gen_range(-5..=5));
        let beta = Scalar::from_int(rng.gen_range(-5..=5));
        if alpha.is_zero() && beta.is_zero() {
            continue;
        }
        let de = m
            .a
            .sub(&m.d)
            .mul(&alpha)
            .add(&m.c.mul(&beta))
            .neg()
            .try_div(&m.b)
            .expect("m12 is nonzero");
        let d = Mat2::new(alpha.clone(), beta, de, alpha.neg());
        let det_d = d.det();
        if det_d.is_zero() {
            continue;
        }
        // polarized determinant: det(X + sY) = det X + s B2(X, Y) + s^2 det Y
        let b2 = c0
            .a
            .mul(&d.d)
            .add(&c0.d.mul(&d.a))
            .sub(&c0.b.mul(&d.c))
            .sub(&c0.c.mul(&d.b));
        let tau = b2.neg().try_div(&det_d).unwrap();
        break c0.add(&d.scale(&tau));
    };
    let d_mat = a.mul(&b).mul(&c).inverse_det1();

    debug_assert!(c.det().is_one());
    debug_assert!(c.trace().approx_eq(&t));
    debug_assert!(d_mat.trace().approx_eq(&t));

    // conjugate by a random frame for generic-looking matrices
    let g = random_sl2(rng);
    let rep = Representation::new(
        Presentation::four_punctured_sphere(),
        vec![
            a.conjugated_by(&g),
            b.conjugated_by(&g),
            c.conjugated_by(&g),
            d_mat.conjugated_by(&g),
        ],
    )
    .expect("four images");

    let w = |s: &str| rep.presentation().word(s).unwrap();
    let point = FrickePoint::new(
        rep.trace_of(&w("mu1 mu2")),
        rep.trace_of(&w("mu1 mu3")),
        rep.trace_of(&w("mu2 mu3")),
        t,
    );
    YSample { rep, point }
}

/// Sample a float point of the hypersurface by choosing (x, y, z) and
/// solving the defining equation for t (the quadratic in t^2).
pub fn sample_y_point_float(rng: &mut impl Rng) -> FrickePoint {
    let mut coord = |lo: f64, hi: f64| Scalar::float(rng.gen_range(lo..hi), 0.0);
    let x = coord(-4.0, 4.0);
    let y = coord(-4.0, 4.0);
    let z = coord(-4.0, 4.0);
    let two = Scalar::float(2.0, 0.0);
    let rhs = two.sub(&x).mul(&two.sub(&y)).mul(&two.sub(&z));
    let root = rhs.sqrt().expect("float sqrt is total");
    // t^2 = (x + y + z - 2) + sqrt(rhs), either branch lies on the surface
    let t_sq = x.add(&y).add(&z).sub(&two).add(&root);
    let t = t_sq.sqrt().expect("float sqrt is total");
    FrickePoint::new(x, y, z, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fricke::on_y;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_samples_lie_on_the_surface() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = sample_quadruple(&mut rng);
            // exact membership
            assert!(s.point.x.is_exact());
            assert!(on_y(&s.point));
            // product identity and equal traces by construction
            assert_eq!(s.rep.lift_check().unwrap(), vec![1]);
        }
    }

    #[test]
    fn float_point_sampler_lands_on_surface() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = sample_y_point_float(&mut rng);
            assert!(on_y(&p), "{p:?}");
        }
    }

    #[test]
    fn random_sl2_has_det_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            assert!(random_sl2(&mut rng).det().is_one());
        }
    }
}
