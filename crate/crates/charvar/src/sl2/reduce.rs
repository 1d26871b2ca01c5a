//! Reducibility of scalar representations, decided by eigenline
//! enumeration: take the first non-central generator image, compute its
//! eigenlines, and test invariance under every other generator. Pairwise
//! commutator traces equal to 2 would not imply a global invariant line,
//! so they are used only as witnesses for irreducibility.

use crate::algebra::{AlgebraError, Scalar, DEFAULT_TOL};

use super::{GroupWord, Mat2, Representation};

/// Outcome of the reducibility decision. `exact` is false when the
/// computation had to retry over the float field (eigenvalues outside the
/// Gaussian rationals) and the answer is tolerance-based.
#[derive(Clone, Debug)]
pub enum Reducibility {
    Reducible {
        /// A common invariant line, as a projective vector.
        line: [Scalar; 2],
        exact: bool,
    },
    Irreducible {
        /// A pair of words with commutator trace different from 2, when
        /// one exists among generators and their pairwise products.
        witness: Option<CommutatorWitness>,
        exact: bool,
    },
}

#[derive(Clone, Debug)]
pub struct CommutatorWitness {
    pub g: GroupWord,
    pub h: GroupWord,
    pub trace: Scalar,
}

impl Reducibility {
    pub fn is_reducible(&self) -> bool {
        matches!(self, Reducibility::Reducible { .. })
    }
}

/// Eigenlines of a non-central matrix: two for distinct eigenvalues, one
/// for a parabolic. Fails with `NoExactSqrt` when the eigenvalues live in
/// a quadratic extension of the exact coefficient field.
pub(crate) fn eigenlines(m: &Mat2<Scalar>) -> Result<Vec<[Scalar; 2]>, AlgebraError> {
    let tr = m.trace();
    let four = Scalar::from_int(4);
    let disc = tr.mul(&tr).sub(&four);
    let two = Scalar::from_int(2);
    let mut lambdas = vec![];
    if disc.is_zero() {
        lambdas.push(tr.try_div(&two)?);
    } else {
        let root = disc.sqrt()?;
        lambdas.push(tr.add(&root).try_div(&two)?);
        lambdas.push(tr.sub(&root).try_div(&two)?);
    }
    let mut lines = vec![];
    for lambda in lambdas {
        // kernel of M - lambda I
        let r1 = (m.a.sub(&lambda), m.b.clone());
        let r2 = (m.c.clone(), m.d.sub(&lambda));
        let v = if !r1.0.is_zero() || !r1.1.is_zero() {
            [r1.1.clone(), lambda.sub(&m.a)]
        } else if !r2.0.is_zero() || !r2.1.is_zero() {
            [lambda.sub(&m.d), r2.0.clone()]
        } else {
            // m is central, excluded by callers
            continue;
        };
        if !(v[0].is_zero() && v[1].is_zero()) {
            lines.push(v);
        }
    }
    Ok(lines)
}

/// Whether the line is invariant under the matrix (projectively).
pub(crate) fn line_invariant(m: &Mat2<Scalar>, v: &[Scalar; 2]) -> bool {
    let w = m.apply(v);
    w[0].mul(&v[1]).sub(&w[1].mul(&v[0])).is_zero()
}

/// A common invariant line of a list of matrices, if one exists. The
/// boolean is false when the decision had to pass to float arithmetic
/// (eigenvalues outside the exact coefficient field).
pub(crate) fn common_invariant_line(images: &[Mat2<Scalar>]) -> (Option<[Scalar; 2]>, bool) {
    let anchor = images.iter().find(|m| !m.is_central());
    let Some(anchor) = anchor else {
        // every image is ±I: any line is invariant
        return (Some([Scalar::one(), Scalar::zero()]), true);
    };
    match eigenlines(anchor) {
        Ok(lines) => (
            lines
                .into_iter()
                .find(|v| images.iter().all(|m| line_invariant(m, v))),
            true,
        ),
        Err(_) => {
            let fl: Vec<Mat2<Scalar>> = images
                .iter()
                .map(|m| m.map(|s| s.to_float(DEFAULT_TOL)))
                .collect();
            let found = fl
                .iter()
                .find(|m| !m.is_central())
                .and_then(|anchor| eigenlines(anchor).ok())
                .and_then(|lines| {
                    lines
                        .into_iter()
                        .find(|v| fl.iter().all(|m| line_invariant(m, v)))
                });
            (found, false)
        }
    }
}

impl Representation<Scalar> {
    /// Decide reducibility by eigenline enumeration.
    pub fn reducibility(&self) -> Reducibility {
        let all_exact = self
            .images()
            .iter()
            .all(|m| m.entries().iter().all(|s| s.is_exact()));
        match common_invariant_line(self.images()) {
            (Some(line), exact) => Reducibility::Reducible {
                line,
                exact: exact && all_exact,
            },
            (None, exact) => {
                let witness = self.commutator_witness();
                Reducibility::Irreducible {
                    witness,
                    exact: exact && all_exact,
                }
            }
        }
    }

    pub fn is_reducible(&self) -> bool {
        self.reducibility().is_reducible()
    }

    /// Search generators and pairwise products for a pair with
    /// commutator trace different from 2.
    fn commutator_witness(&self) -> Option<CommutatorWitness> {
        let n = self.presentation().gen_count();
        let mut words: Vec<GroupWord> = (0..n).map(GroupWord::generator).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                words.push(GroupWord::generator(i).concat(&GroupWord::generator(j)));
            }
        }
        let two = Scalar::from_int(2);
        for g in &words {
            for h in &words {
                if g == h {
                    continue;
                }
                let tr = self.commutator_trace(g, h);
                if !tr.sub(&two).is_zero() {
                    return Some(CommutatorWitness {
                        g: g.clone(),
                        h: h.clone(),
                        trace: tr,
                    });
                }
            }
        }
        None
    }

    /// A determinant-one change of basis sending the line to the first
    /// coordinate axis, so that every image fixing the line becomes upper
    /// triangular.
    pub fn line_triangularizer(line: &[Scalar; 2]) -> Mat2<Scalar> {
        // columns: the line, and an independent axis scaled to det 1
        let v = line;
        if !v[1].is_zero() {
            // w = (1, 0): det = -v1, scale second column by -1/v1
            let s = Scalar::from_int(-1).try_div(&v[1]).unwrap();
            Mat2::new(v[0].clone(), s.clone(), v[1].clone(), Scalar::zero())
        } else {
            // w = (0, 1): det = v0
            let s = Scalar::one().try_div(&v[0]).unwrap();
            Mat2::new(v[0].clone(), Scalar::zero(), v[1].clone(), s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::Presentation;

    fn rep(images: Vec<Mat2<Scalar>>) -> Representation<Scalar> {
        let names = (0..images.len()).map(|i| format!("g{i}")).collect();
        Representation::new(Presentation::new(names), images).unwrap()
    }

    #[test]
    fn upper_triangular_family_is_reducible() {
        let m = Mat2::new(
            Scalar::from_int(2),
            Scalar::one(),
            Scalar::zero(),
            Scalar::from_ratio(1, 2),
        );
        let r = rep(vec![m, Mat2::from_ints(1, 5, 0, 1)]);
        match r.reducibility() {
            Reducibility::Reducible { line, exact } => {
                assert!(exact);
                // line is the first axis
                assert!(line[1].is_zero());
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn rotation_pair_is_irreducible_with_witness() {
        // diag(i, -i) and [[0,1],[-1,0]]: commutator trace -2
        let d = Mat2::diagonal(Scalar::i(), Scalar::i().neg());
        let s = Mat2::from_ints(0, 1, -1, 0);
        let r = rep(vec![d, s]);
        match r.reducibility() {
            Reducibility::Irreducible { witness, exact } => {
                assert!(exact);
                let w = witness.expect("witness should exist");
                assert!(w.trace.approx_eq(&Scalar::from_int(-2)));
            }
            other => panic!("expected irreducible, got {other:?}"),
        }
    }

    #[test]
    fn central_family_is_reducible() {
        let r = rep(vec![Mat2::identity(), Mat2::identity().neg()]);
        assert!(r.is_reducible());
    }

    #[test]
    fn triangularizer_conjugates_to_upper() {
        let m = Mat2::new(
            Scalar::from_int(3),
            Scalar::from_int(1),
            Scalar::from_int(-4),
            Scalar::from_int(-1),
        );
        // m has eigenvalue 1: (m - I) = [[2,1],[-4,-2]], line (1,-2)
        let line = [Scalar::from_int(1), Scalar::from_int(-2)];
        assert!(line_invariant(&m, &line));
        let p = Representation::line_triangularizer(&line);
        assert!(p.det().is_one());
        let t = m.conjugated_by(&p.inverse_det1());
        assert!(t.c.is_zero(), "lower-left should vanish: {t:?}");
    }

    #[test]
    fn quadratic_eigenvalues_fall_back_to_float() {
        // trace 1: eigenvalues are sixth roots of unity, not Gaussian rational
        let m = Mat2::from_ints(1, -1, 1, 0);
        let u = Mat2::from_ints(1, 0, 1, 1);
        let r = rep(vec![m, u]);
        match r.reducibility() {
            Reducibility::Irreducible { exact, .. } => assert!(!exact),
            other => panic!("expected irreducible, got {other:?}"),
        }
    }
}
