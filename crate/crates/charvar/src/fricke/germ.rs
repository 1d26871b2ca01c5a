//! Machine-checkable certificates for the local structure of the
//! hypersurface: irreducibility of the germ at the three distinguished
//! reducible points, and completeness of the singular locus.

use serde::Serialize;

use crate::algebra::{MultiPoly, Scalar};

use super::{
    cover_defining_poly, cover_map, deck_involution, isolated_singular_point, on_y,
    singular_curves, y_defining_poly, CoverPoint, FrickeError, FrickePoint,
};

/// Certificate that the analytic germ of the hypersurface at one of the
/// three distinguished points is irreducible: the double cover has
/// exactly two smooth preimages over the point and the deck involution
/// exchanges them without moving the image.
#[derive(Clone, Debug, Serialize)]
pub struct GermCertificate {
    pub base: FrickePoint,
    /// Permutation applied to (x, y, z) to move the base point to
    /// (-2, 2, 2, 0); coordinate permutations are symmetries of F.
    pub permutation: [usize; 3],
    pub preimages: [CoverPoint; 2],
    /// dH/dw at the two preimages; both nonzero certifies smoothness.
    pub smoothness_witnesses: [Scalar; 2],
    /// The deck involution exchanges the two preimages.
    pub involution_swaps: bool,
    /// Both preimages map onto the (permuted) base point.
    pub preimages_map_to_base: bool,
}

impl GermCertificate {
    pub fn is_valid(&self) -> bool {
        self.involution_swaps
            && self.preimages_map_to_base
            && !self.smoothness_witnesses[0].is_zero()
            && !self.smoothness_witnesses[1].is_zero()
            && !self.preimages[0].approx_eq(&self.preimages[1])
    }
}

fn permuted(p: &FrickePoint, perm: &[usize; 3]) -> FrickePoint {
    let xyz = [p.x.clone(), p.y.clone(), p.z.clone()];
    FrickePoint::new(
        xyz[perm[0]].clone(),
        xyz[perm[1]].clone(),
        xyz[perm[2]].clone(),
        p.t.clone(),
    )
}

/// The permutation of (x, y, z) moving a distinguished point to
/// (-2, 2, 2, 0), or `WrongBasePoint` for any other input. The point
/// (-2,-2,-2,0) is deliberately excluded: it is not one of the matching
/// lift characters.
fn distinguishing_permutation(p: &FrickePoint) -> Result<[usize; 3], FrickeError> {
    let two = Scalar::from_int(2);
    let neg_two = Scalar::from_int(-2);
    if !p.t.is_zero() {
        return Err(FrickeError::WrongBasePoint);
    }
    let xyz = [&p.x, &p.y, &p.z];
    let is = |s: &Scalar, v: &Scalar| s.approx_eq(v);
    let pattern: Vec<bool> = xyz.iter().map(|c| is(c, &neg_two)).collect();
    let all_two_elsewhere = |neg_idx: usize| {
        xyz.iter()
            .enumerate()
            .all(|(i, c)| if i == neg_idx { true } else { is(c, &two) })
    };
    match (pattern[0], pattern[1], pattern[2]) {
        (true, false, false) if all_two_elsewhere(0) => Ok([0, 1, 2]),
        (false, true, false) if all_two_elsewhere(1) => Ok([1, 0, 2]),
        (false, false, true) if all_two_elsewhere(2) => Ok([2, 1, 0]),
        _ => Err(FrickeError::WrongBasePoint),
    }
}

/// Build the germ certificate at a distinguished point.
///
/// The construction works at (-2, 2, 2, 0) and transports to the other
/// two distinguished points by the coordinate permutation; the preimages
/// are (±2, 0, 0, 0), smooth on the cover with dH/dw = ∓4, and exchanged
/// by the deck involution.
pub fn germ_certificate(p: &FrickePoint) -> Result<GermCertificate, FrickeError> {
    let permutation = distinguishing_permutation(p)?;
    let base = permuted(p, &permutation);
    let preimages = [
        CoverPoint::from_ints(2, 0, 0, 0),
        CoverPoint::from_ints(-2, 0, 0, 0),
    ];
    let dh_dw = cover_defining_poly().partial(0);
    let smoothness_witnesses = [
        dh_dw.eval(&preimages[0].coords()).expect("arity"),
        dh_dw.eval(&preimages[1].coords()).expect("arity"),
    ];
    let involution_swaps = deck_involution(&preimages[0]).approx_eq(&preimages[1])
        && deck_involution(&preimages[1]).approx_eq(&preimages[0]);
    let preimages_map_to_base = preimages.iter().all(|q| {
        super::on_cover(q) && cover_map(q).approx_eq(&base)
    });
    let cert = GermCertificate {
        base: p.clone(),
        permutation,
        preimages,
        smoothness_witnesses,
        involution_swaps,
        preimages_map_to_base,
    };
    debug_assert!(cert.is_valid());
    Ok(cert)
}

/// Checked derivation that the singular locus consists of the isolated
/// point (-2,-2,-2,0) and the three parametrized curves.
///
/// The case split on s = t^2 - (x+y+z-2): when s ≠ 0 the gradient
/// equations force t = 0, x = y = z = c with c(c+2) = 0, and membership
/// rejects c = 0; when s = 0 they force two of the three coordinates
/// equal to 2, which is exactly the curves.
#[derive(Clone, Debug, Serialize)]
pub struct SingularLocusCertificate {
    /// F and all four partials vanish identically along each curve.
    pub curves_singular_identically: bool,
    /// The isolated point is singular and on the hypersurface.
    pub isolated_point_singular: bool,
    /// In the s ≠ 0 branch the diagonal constraint reduces to c^2 + 2c,
    /// whose roots are exactly {0, -2}.
    pub diagonal_constraint_roots: Vec<Scalar>,
    /// F(0,0,0,0) = -4: the root c = 0 is rejected by membership.
    pub rejected_root_value: Scalar,
    /// F(-2,-2,-2,0) = 0: the root c = -2 is accepted.
    pub accepted_root_value: Scalar,
    /// s vanishes identically along each curve (the s = 0 branch).
    pub curves_lie_in_s_zero_branch: bool,
}

impl SingularLocusCertificate {
    pub fn is_valid(&self) -> bool {
        self.curves_singular_identically
            && self.isolated_point_singular
            && self.diagonal_constraint_roots.len() == 2
            && self.diagonal_constraint_roots[0].approx_eq(&Scalar::zero())
            && self.diagonal_constraint_roots[1].approx_eq(&Scalar::from_int(-2))
            && self.rejected_root_value.approx_eq(&Scalar::from_int(-4))
            && !self.rejected_root_value.is_zero()
            && self.accepted_root_value.is_zero()
            && self.curves_lie_in_s_zero_branch
    }
}

pub fn singular_locus_certificate() -> SingularLocusCertificate {
    let f = y_defining_poly();
    let grads = f.gradient();
    let curves = singular_curves();

    let curves_singular_identically = curves.iter().all(|curve| {
        f.compose(&curve.coords).map(|p| p.is_zero()).unwrap_or(false)
            && grads.iter().all(|g| {
                g.compose(&curve.coords)
                    .map(|p| p.is_zero())
                    .unwrap_or(false)
            })
    });

    let iso = isolated_singular_point();
    let isolated_point_singular =
        on_y(&iso) && grads.iter().all(|g| g.eval(&iso.coords()).unwrap().is_zero());

    // On the diagonal x = y = z = c with t = 0, the s ≠ 0 gradient branch
    // reduces to 2s = (2-c)^2 with s = -(3c-2), i.e. c^2 + 2c = 0.
    let cvar = &["c"];
    let c = MultiPoly::var(cvar, 0);
    let two = MultiPoly::int_constant(cvar, 2);
    let s_diag = -&(&c.scale(&Scalar::from_int(3)) - &two);
    let constraint = &s_diag.scale(&Scalar::from_int(2)) - &(&two - &c).pow(2);
    // verify constraint = -(c^2 + 2c) and read off the roots {0, -2}
    let expected = -&(&c.pow(2) + &c.scale(&Scalar::from_int(2)));
    let diagonal_constraint_roots = if (&constraint - &expected).is_zero() {
        vec![Scalar::zero(), Scalar::from_int(-2)]
    } else {
        vec![]
    };
    let rejected_root_value = f
        .eval(&FrickePoint::from_ints(0, 0, 0, 0).coords())
        .unwrap();
    let accepted_root_value = f.eval(&iso.coords()).unwrap();

    // s = t^2 - (x+y+z-2) composed with each curve is identically zero
    let svar_poly = {
        let vars = &super::Y_VARS;
        let x = MultiPoly::var(vars, 0);
        let y = MultiPoly::var(vars, 1);
        let z = MultiPoly::var(vars, 2);
        let t = MultiPoly::var(vars, 3);
        let two = MultiPoly::int_constant(vars, 2);
        &t.pow(2) - &(&(&(&x + &y) + &z) - &two)
    };
    let curves_lie_in_s_zero_branch = curves.iter().all(|curve| {
        svar_poly
            .compose(&curve.coords)
            .map(|p| p.is_zero())
            .unwrap_or(false)
    });

    SingularLocusCertificate {
        curves_singular_identically,
        isolated_point_singular,
        diagonal_constraint_roots,
        rejected_root_value,
        accepted_root_value,
        curves_lie_in_s_zero_branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_at_reference_point() {
        let cert = germ_certificate(&FrickePoint::from_ints(-2, 2, 2, 0)).unwrap();
        assert_eq!(cert.permutation, [0, 1, 2]);
        assert!(cert.is_valid());
        assert_eq!(cert.smoothness_witnesses[0], Scalar::from_int(-4));
        assert_eq!(cert.smoothness_witnesses[1], Scalar::from_int(4));
    }

    #[test]
    fn certificate_at_permuted_points() {
        for (p, perm) in [
            (FrickePoint::from_ints(2, -2, 2, 0), [1usize, 0, 2]),
            (FrickePoint::from_ints(2, 2, -2, 0), [2usize, 1, 0]),
        ] {
            let cert = germ_certificate(&p).unwrap();
            assert_eq!(cert.permutation, perm);
            assert!(cert.is_valid());
        }
    }

    #[test]
    fn wrong_base_points_are_rejected() {
        for p in [
            FrickePoint::from_ints(0, 0, 0, 0),
            FrickePoint::from_ints(-2, -2, -2, 0),
            FrickePoint::from_ints(2, 2, 2, 2),
            FrickePoint::from_ints(-2, 2, 2, 1),
            FrickePoint::from_ints(-2, -2, 2, 0),
        ] {
            assert!(
                matches!(germ_certificate(&p), Err(FrickeError::WrongBasePoint)),
                "{p:?}"
            );
        }
    }

    #[test]
    fn singular_locus_certificate_is_valid() {
        let cert = singular_locus_certificate();
        assert!(cert.is_valid(), "{cert:?}");
    }
}
