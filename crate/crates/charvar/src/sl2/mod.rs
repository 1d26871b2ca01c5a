//! 2x2 determinant-one matrix calculus over scalar or series
//! coefficients: word evaluation, traces, reducibility, conjugator
//! solving, and lift verification.

mod conjugator;
pub(crate) mod linalg;
mod mat;
mod presentation;
mod reduce;
mod rep;
mod word;

pub use conjugator::{canonical_sign, conjugator};
pub use mat::Mat2;
pub use presentation::Presentation;
pub use reduce::{CommutatorWitness, Reducibility};
pub(crate) use reduce::{common_invariant_line, eigenlines, line_invariant};
pub use rep::{CharacterTable, Representation};
pub use word::GroupWord;

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Sl2Error {
    #[error("relator {relator} does not map to ±I; the representation is not projectively well defined")]
    NotCentral { relator: usize },
    #[error("character tables differ on generators or pairwise products")]
    CharacterMismatch,
    #[error("representation is reducible; the conjugator is not unique")]
    Reducible,
    #[error("representations are over different presentations")]
    PresentationMismatch,
    #[error("presentation has {generators} generators but {images} images were given")]
    ImageCountMismatch { generators: usize, images: usize },
    #[error("bad word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl Sl2Error {
    pub fn code(&self) -> &'static str {
        match self {
            Sl2Error::NotCentral { .. } => "NOT_CENTRAL",
            Sl2Error::CharacterMismatch => "CHARACTER_MISMATCH",
            Sl2Error::Reducible => "REDUCIBLE",
            Sl2Error::PresentationMismatch => "PRESENTATION_MISMATCH",
            Sl2Error::ImageCountMismatch { .. } => "IMAGE_COUNT_MISMATCH",
            Sl2Error::BadWord(_) => "BAD_WORD",
            Sl2Error::Algebra(e) => e.code(),
        }
    }
}
