//! Computations with SL(2,C) character varieties of four-punctured spheres
//! and of link-exterior pieces glued along Conway spheres.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] — exact rationals, Gaussian rationals, complex floats with
//!   tracked tolerances, multivariate polynomials, and truncated
//!   Laurent/Puiseux series carrying explicit valuations.
//! * [`sl2`] — 2x2 determinant-one matrix calculus over any coefficient
//!   type: word evaluation, characters, reducibility, conjugators, lifts.
//! * [`fricke`] — the equal-meridian-trace hypersurface in trace
//!   coordinates (x, y, z, t): membership, singular locus, its double
//!   cover, local irreducibility certificates, and character realization.
//! * [`tangle`] — oriented tangle diagrams with Conway-sphere vertices,
//!   Wirtinger presentations, and meridian sign bookkeeping.
//! * [`glue`] — restriction of characters to interface spheres and
//!   amalgamated gluing of representations over a tree of pieces.
//! * [`ideal`] — curves of characters with series coefficients: trace
//!   valuations, Bass-Serre tree data, ideal point detection, cusp-shape
//!   tangent directions, and irreducibility along deformations.
//! * [`fixtures`] — the diagram and system fixtures used by tests and the
//!   command line tool.

pub mod algebra;
pub mod fixtures;
pub mod fricke;
pub mod glue;
pub mod ideal;
pub mod sl2;
pub mod tangle;

pub use algebra::{AlgebraError, MultiPoly, Scalar, ValuedSeries, Valuation};
pub use sl2::{GroupWord, Mat2, Presentation, Representation};

