//! Thompson's group F as piecewise-linear homeomorphisms of the real line,
//! with exact dyadic arithmetic throughout.
//!
//! * [`dyadic`]: the coordinate ring `Z[1/2]`.
//! * [`plmap`]: elements of F and eventually T-like maps.
//! * [`groupf`]: abelianization, `Rev`, T-like conjugation, automorphism
//!   words, and twisted-class projection.
//! * [`zlinalg`]: Smith normal form, cokernels and Reidemeister numbers of
//!   automorphisms of `Z^n`.
//! * [`sample`]: random elements for testing and benchmarking.

pub mod dyadic;
pub mod groupf;
pub mod plmap;
pub mod sample;
pub mod zlinalg;

use thiserror::Error;

pub use dyadic::Dyadic;
pub use groupf::{
    ab, apply_aut, conj_by_tlike, h1_matrix, is_derived_element, project_class, rev, verify_shift_lemma, AbPair,
    AutFactor, AutWord, GroupError,
};
pub use plmap::{Element, FMap, PlError, TLikeMap, Vertex};
pub use zlinalg::{
    class_rep, coker_invariants, in_image, reidemeister_of_matrix, snf, twisted_equiv_abelian, IntMatrix, LinalgError,
    ReidemeisterNumber, SnfResult,
};

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Pl(#[from] PlError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Pl(e) => e.code(),
            Error::Group(e) => e.code(),
            Error::Linalg(e) => e.code(),
        }
    }
}
