use std::fmt;

use serde_json::json;

use super::{canonicalize, interpolate, interpolate_inverse, parse_points, segment_slopes, PlError, Vertex};
use crate::dyadic::Dyadic;

/// An element of Thompson's group F.
///
/// Left of the first vertex the map is `x + l`, right of the last it is
/// `x + r`. The vertex list is always canonical, so structural equality is
/// equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMap {
    breaks: Vec<Vertex>,
    left: i64,
    right: i64,
    // log2 of the slope of each interior segment
    slopes: Vec<i64>,
}

impl FMap {
    /// Validate raw break data and return the canonical element.
    pub fn new(breaks: Vec<Vertex>, left: i64, right: i64) -> Result<FMap, PlError> {
        segment_slopes(&breaks)?;
        match (breaks.first(), breaks.last()) {
            (Some(first), Some(last)) => {
                if first.y != &first.x + &Dyadic::from(left) {
                    return Err(PlError::TailMismatch(format!(
                        "first vertex ({}, {}) is not on y = x + {left}",
                        first.x, first.y
                    )));
                }
                if last.y != &last.x + &Dyadic::from(right) {
                    return Err(PlError::TailMismatch(format!(
                        "last vertex ({}, {}) is not on y = x + {right}",
                        last.x, last.y
                    )));
                }
            }
            _ if left != right => {
                return Err(PlError::TailMismatch(format!(
                    "no vertices but tails differ ({left} vs {right})"
                )))
            }
            _ => {}
        }
        Ok(FMap::from_canonical(canonicalize(&breaks), left, right))
    }

    fn from_canonical(breaks: Vec<Vertex>, left: i64, right: i64) -> FMap {
        let slopes = segment_slopes(&breaks).expect("canonical vertices are monotone");
        FMap {
            breaks,
            left,
            right,
            slopes,
        }
    }

    pub fn identity() -> FMap {
        FMap::translation(0)
    }

    pub fn translation(n: i64) -> FMap {
        FMap {
            breaks: Vec::new(),
            left: n,
            right: n,
            slopes: Vec::new(),
        }
    }

    /// The one-break element that is the identity on `(-inf, 0]`, has slope 2
    /// on `[0, 1]` and translates by 1 afterwards.
    pub fn slope_two_generator() -> FMap {
        FMap::new(vec![Vertex::ints(0, 0), Vertex::ints(1, 2)], 0, 1).expect("valid generator")
    }

    pub fn breaks(&self) -> &[Vertex] {
        &self.breaks
    }

    pub fn left_translation(&self) -> i64 {
        self.left
    }

    pub fn right_translation(&self) -> i64 {
        self.right
    }

    /// `(f_l, f_r)`.
    pub fn translational_parts(&self) -> (i64, i64) {
        (self.left, self.right)
    }

    pub fn is_identity(&self) -> bool {
        self.breaks.is_empty() && self.left == 0
    }

    /// Leftmost and rightmost break abscissae, or 0 for a pure translation.
    pub fn support_bounds(&self) -> (Dyadic, Dyadic) {
        match (self.breaks.first(), self.breaks.last()) {
            (Some(a), Some(b)) => (a.x.clone(), b.x.clone()),
            _ => (Dyadic::zero(), Dyadic::zero()),
        }
    }

    pub fn eval(&self, x: &Dyadic) -> Dyadic {
        match (self.breaks.first(), self.breaks.last()) {
            (Some(first), _) if *x <= first.x => x + &Dyadic::from(self.left),
            (_, Some(last)) if *x >= last.x => x + &Dyadic::from(self.right),
            (None, _) => x + &Dyadic::from(self.left),
            _ => interpolate(&self.breaks, &self.slopes, x),
        }
    }

    /// `f^{-1}(y)` without building the inverse.
    pub fn eval_inverse(&self, y: &Dyadic) -> Dyadic {
        match (self.breaks.first(), self.breaks.last()) {
            (Some(first), _) if *y <= first.y => y - &Dyadic::from(self.left),
            (_, Some(last)) if *y >= last.y => y - &Dyadic::from(self.right),
            (None, _) => y - &Dyadic::from(self.left),
            _ => interpolate_inverse(&self.breaks, &self.slopes, y),
        }
    }

    /// `self ∘ h`, i.e. `x ↦ self(h(x))`.
    pub fn compose(&self, h: &FMap) -> FMap {
        let mut xs: Vec<Dyadic> = h.breaks.iter().map(|v| v.x.clone()).collect();
        xs.extend(self.breaks.iter().map(|v| h.eval_inverse(&v.x)));
        xs.sort();
        xs.dedup();
        let vertices: Vec<Vertex> = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&h.eval(&x));
                Vertex::new(x, y)
            })
            .collect();
        FMap::from_canonical(canonicalize(&vertices), self.left + h.left, self.right + h.right)
    }

    pub fn inverse(&self) -> FMap {
        let breaks = self
            .breaks
            .iter()
            .map(|v| Vertex::new(v.y.clone(), v.x.clone()))
            .collect();
        FMap::from_canonical(breaks, -self.left, -self.right)
    }

    /// `x ↦ -f(-x)`.
    pub fn reversed(&self) -> FMap {
        let breaks = self.breaks.iter().rev().map(|v| Vertex::new(-&v.x, -&v.y)).collect();
        FMap::from_canonical(breaks, -self.right, -self.left)
    }

    /// Commutator `a b a^{-1} b^{-1}`.
    pub fn commutator(a: &FMap, b: &FMap) -> FMap {
        a.compose(b).compose(&a.inverse()).compose(&b.inverse())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": "F",
            "l": self.left,
            "r": self.right,
            "breaks": self.breaks,
        })
    }

    pub fn from_json(value: serde_json::Value) -> Result<FMap, PlError> {
        match value.get("type").and_then(|t| t.as_str()) {
            Some("F") => {}
            other => return Err(PlError::WrongType(other.unwrap_or("<missing>").to_string())),
        }
        let tail = |key: &str| {
            value
                .get(key)
                .and_then(|v| v.as_i64())
                .ok_or_else(|| PlError::Malformed(format!("{key:?} must be an integer")))
        };
        let (l, r) = (tail("l")?, tail("r")?);
        FMap::new(parse_points(value.get("breaks"), "breaks")?, l, r)
    }
}

impl Default for FMap {
    fn default() -> FMap {
        FMap::identity()
    }
}

impl fmt::Debug for FMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[l={}, r={}; ", self.left, self.right)?;
        for (i, v) in self.breaks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", v.x, v.y)?;
        }
        f.write_str("]")
    }
}
