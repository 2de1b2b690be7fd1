//! Exact integer linear algebra: Smith normal form, cokernels, and twisted
//! conjugacy in free abelian groups.
//!
//! For an automorphism `A` of `Z^n`, two vectors `u`, `v` are twisted
//! conjugate when `u - v` lies in the image of `I - A`. The classes are the
//! elements of `Coker(I - A)`, so the Reidemeister number is its order.

mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use matrix::IntMatrix;
pub use snf::{snf, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not an automorphism: |det| = {0}")]
    NotAutomorphism(BigInt),
    #[error("malformed matrix: {0}")]
    Malformed(String),
}

impl LinalgError {
    pub fn code(&self) -> &'static str {
        match self {
            LinalgError::NotSquare { .. } => "NotSquare",
            LinalgError::Dimension(_) => "DimensionMismatch",
            LinalgError::NotAutomorphism(_) => "NotAutomorphism",
            LinalgError::Malformed(_) => "MalformedMatrix",
        }
    }
}

/// Cardinality of a set of twisted classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReidemeisterNumber {
    Finite(BigInt),
    Infinite,
}

impl ReidemeisterNumber {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ReidemeisterNumber::Infinite)
    }
}

impl fmt::Display for ReidemeisterNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReidemeisterNumber::Finite(n) => write!(f, "{n}"),
            ReidemeisterNumber::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// `Coker(A) ≅ ⊕ Z/d_i ⊕ Z^free_rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CokerInvariants {
    /// Full diagonal of the Smith form of `A`.
    pub invariant_factors: Vec<BigInt>,
    /// The invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

fn require_square(a: &IntMatrix) -> Result<(), LinalgError> {
    if a.is_square() {
        Ok(())
    } else {
        Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

pub fn coker_invariants(a: &IntMatrix) -> Result<CokerInvariants, LinalgError> {
    require_square(a)?;
    let factors = snf(a).invariant_factors();
    let rank = factors.iter().filter(|d| !d.is_zero()).count();
    Ok(CokerInvariants {
        torsion: factors.iter().filter(|d| **d > BigInt::one()).cloned().collect(),
        free_rank: a.rows() - rank,
        invariant_factors: factors,
    })
}

/// `I - A`.
pub fn one_minus(a: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    require_square(a)?;
    Ok(IntMatrix::identity(a.rows()).sub(a))
}

fn require_automorphism(a: &IntMatrix) -> Result<(), LinalgError> {
    let det = a.det()?;
    if det.abs().is_one() {
        Ok(())
    } else {
        Err(LinalgError::NotAutomorphism(det.abs()))
    }
}

/// `#Coker(I - A)` for an automorphism `A` of `Z^n`.
///
/// Infinite exactly when `det(I - A) = 0`; otherwise `|det(I - A)|`, which
/// is cross-checked against the product of the invariant factors.
pub fn reidemeister_of_matrix(a: &IntMatrix) -> Result<ReidemeisterNumber, LinalgError> {
    require_square(a)?;
    require_automorphism(a)?;
    let b = one_minus(a)?;
    let det = b.det()?;
    if det.is_zero() {
        return Ok(ReidemeisterNumber::Infinite);
    }
    let product: BigInt = snf(&b).invariant_factors().iter().product();
    assert_eq!(product, det.abs(), "Smith form disagrees with the determinant of {b}");
    Ok(ReidemeisterNumber::Finite(det.abs()))
}

/// Whether `A x = v` has an integer solution.
pub fn in_image(a: &IntMatrix, v: &[BigInt]) -> Result<bool, LinalgError> {
    if v.len() != a.rows() {
        return Err(LinalgError::Dimension(format!(
            "vector of length {} for {} rows",
            v.len(),
            a.rows()
        )));
    }
    let r = snf(a);
    let w = r.u.mul_vec(v);
    let factors = r.invariant_factors();
    Ok(w.iter().enumerate().all(|(i, wi)| match factors.get(i) {
        Some(d) if !d.is_zero() => wi.is_multiple_of(d),
        _ => wi.is_zero(),
    }))
}

/// `u ~ v` under `x ↦ g + x - A g`, i.e. `u - v ∈ Im(I - A)`.
pub fn twisted_equiv_abelian(u: &[BigInt], v: &[BigInt], a: &IntMatrix) -> Result<bool, LinalgError> {
    require_automorphism(a)?;
    if u.len() != v.len() {
        return Err(LinalgError::Dimension("vectors differ in length".into()));
    }
    let diff: Vec<BigInt> = u.iter().zip(v).map(|(x, y)| x - y).collect();
    in_image(&one_minus(a)?, &diff)
}

/// Canonical coordinates of the twisted class of `v` in `Coker(I - A)`.
///
/// With `snf(I - A) = (U, D, V)`, returns `U v` with the `i`-th coordinate
/// reduced into `[0, d_i)` when `d_i > 0`. Two vectors get equal
/// representatives exactly when they are twisted conjugate.
pub fn class_rep(v: &[BigInt], a: &IntMatrix) -> Result<Vec<BigInt>, LinalgError> {
    require_automorphism(a)?;
    let b = one_minus(a)?;
    if v.len() != b.rows() {
        return Err(LinalgError::Dimension(format!(
            "vector of length {} for {} rows",
            v.len(),
            b.rows()
        )));
    }
    let r = snf(&b);
    let factors = r.invariant_factors();
    Ok(r.u
        .mul_vec(v)
        .into_iter()
        .enumerate()
        .map(|(i, w)| match factors.get(i) {
            Some(d) if !d.is_zero() => w.mod_floor(d),
            _ => w,
        })
        .collect())
}

/// Shorthand for building small integer vectors.
pub fn int_vec(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
