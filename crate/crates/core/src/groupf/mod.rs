//! Group-theoretic layer over [`crate::plmap`]: the abelianization of F, the
//! reversal automorphism, conjugation by eventually T-like maps, automorphism
//! words, and the projection of twisted classes to the abelianization.

mod aut;
mod conj;
mod twisted;

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use thiserror::Error;

use crate::plmap::{FMap, PlError};
use crate::zlinalg::{IntMatrix, LinalgError};

pub use aut::{apply_aut, h1_matrix, h1_matrix_analytic, h1_matrix_probed, rev_matrix, AutFactor, AutWord};
pub use conj::conj_by_tlike;
pub use twisted::{inner, project_class, twisted_conjugate, verify_shift_lemma};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("conjugation window inconsistent: {0}")]
    WindowInconsistency(String),
    #[error("H1 matrix mismatch: analytic {analytic}, probed {probed}")]
    ProbeMismatch { analytic: IntMatrix, probed: IntMatrix },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Pl(#[from] PlError),
}

impl GroupError {
    pub fn code(&self) -> &'static str {
        match self {
            GroupError::WindowInconsistency(_) => "WindowInconsistency",
            GroupError::ProbeMismatch { .. } => "ProbeMismatch",
            GroupError::Linalg(e) => e.code(),
            GroupError::Pl(e) => e.code(),
        }
    }
}

/// Image of an element in `H1(F) ≅ Z × Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AbPair {
    pub l: i64,
    pub r: i64,
}

impl AbPair {
    pub fn new(l: i64, r: i64) -> AbPair {
        AbPair { l, r }
    }

    pub fn to_vec(self) -> Vec<BigInt> {
        vec![BigInt::from(self.l), BigInt::from(self.r)]
    }

    pub fn is_zero(self) -> bool {
        self.l == 0 && self.r == 0
    }
}

impl Add for AbPair {
    type Output = AbPair;
    fn add(self, o: AbPair) -> AbPair {
        AbPair::new(self.l + o.l, self.r + o.r)
    }
}

impl fmt::Display for AbPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l, self.r)
    }
}

/// The abelianization `f ↦ (f_l, f_r)`.
pub fn ab(f: &FMap) -> AbPair {
    let (l, r) = f.translational_parts();
    AbPair::new(l, r)
}

/// Membership in the commutator subgroup: identity near both ends.
pub fn is_derived_element(f: &FMap) -> bool {
    ab(f).is_zero()
}

/// Conjugation by `x ↦ -x`.
pub fn rev(f: &FMap) -> FMap {
    f.reversed()
}
