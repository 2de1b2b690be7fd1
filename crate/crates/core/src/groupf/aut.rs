use serde_json::json;

use crate::plmap::{FMap, PlError, TLikeMap};
use crate::zlinalg::IntMatrix;

use super::{ab, conj_by_tlike, rev, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutFactor {
    Rev,
    ConjBy(TLikeMap),
}

impl AutFactor {
    pub fn apply(&self, f: &FMap) -> Result<FMap, GroupError> {
        match self {
            AutFactor::Rev => Ok(rev(f)),
            AutFactor::ConjBy(g) => conj_by_tlike(f, g),
        }
    }
}

/// An automorphism of F written as a word in `Rev` and eventually T-like
/// conjugations. Factors act left to right; the empty word is the identity.
///
/// Words are compared syntactically only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AutWord {
    pub factors: Vec<AutFactor>,
}

impl AutWord {
    pub fn identity() -> AutWord {
        AutWord::default()
    }

    pub fn new(factors: Vec<AutFactor>) -> AutWord {
        AutWord { factors }
    }

    pub fn rev() -> AutWord {
        AutWord::new(vec![AutFactor::Rev])
    }

    pub fn conj(g: TLikeMap) -> AutWord {
        AutWord::new(vec![AutFactor::ConjBy(g)])
    }

    /// The word that applies `self` first, then `next`.
    pub fn then(&self, next: &AutWord) -> AutWord {
        AutWord::new(self.factors.iter().chain(&next.factors).cloned().collect())
    }

    pub fn rev_count(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, AutFactor::Rev)).count()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<serde_json::Value> = self
            .factors
            .iter()
            .map(|f| match f {
                AutFactor::Rev => json!({"kind": "rev"}),
                AutFactor::ConjBy(g) => json!({"kind": "conj", "g": g.to_json()}),
            })
            .collect();
        json!({ "factors": factors })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<AutWord, PlError> {
        let items = value
            .get("factors")
            .and_then(|f| f.as_array())
            .ok_or_else(|| PlError::Malformed("automorphism word needs a \"factors\" array".into()))?;
        let factors = items
            .iter()
            .map(|item| match item.get("kind").and_then(|k| k.as_str()) {
                Some("rev") => Ok(AutFactor::Rev),
                Some("conj") => {
                    let g = item
                        .get("g")
                        .cloned()
                        .ok_or_else(|| PlError::Malformed("conj factor needs \"g\"".into()))?;
                    Ok(AutFactor::ConjBy(TLikeMap::from_json(g)?))
                }
                other => Err(PlError::Malformed(format!("unknown factor kind {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AutWord::new(factors))
    }
}

pub fn apply_aut(phi: &AutWord, f: &FMap) -> Result<FMap, GroupError> {
    phi.factors.iter().try_fold(f.clone(), |acc, factor| factor.apply(&acc))
}

/// Matrix of `H1(Rev)` on `Z × Z` in the basis `(l, r)`.
pub fn rev_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, -1], vec![-1, 0]]).expect("2x2")
}

/// `H1(φ)` from the word alone: each `Rev` contributes the swap-and-negate
/// matrix, conjugations contribute the identity.
pub fn h1_matrix_analytic(phi: &AutWord) -> IntMatrix {
    if phi.rev_count().is_multiple_of(2) {
        IntMatrix::identity(2)
    } else {
        rev_matrix()
    }
}

/// `H1(φ)` measured on the probes `x ↦ x+1` (image `(1, 1)`) and the slope-2
/// generator (image `(0, 1)`), which form a basis of `Z × Z`.
pub fn h1_matrix_probed(phi: &AutWord) -> Result<IntMatrix, GroupError> {
    let a = ab(&apply_aut(phi, &FMap::translation(1))?);
    let b = ab(&apply_aut(phi, &FMap::slope_two_generator())?);
    // M (1,1)^T = a and M (0,1)^T = b
    Ok(IntMatrix::from_rows(&[vec![a.l - b.l, b.l], vec![a.r - b.r, b.r]]).expect("2x2"))
}

/// `H1(φ)`, computed both ways; disagreement is reported as an error.
pub fn h1_matrix(phi: &AutWord) -> Result<IntMatrix, GroupError> {
    let analytic = h1_matrix_analytic(phi);
    let probed = h1_matrix_probed(phi)?;
    if analytic != probed {
        return Err(GroupError::ProbeMismatch { analytic, probed });
    }
    Ok(analytic)
}
