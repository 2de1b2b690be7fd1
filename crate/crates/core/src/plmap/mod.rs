//! Piecewise-linear homeomorphisms of the real line with dyadic breaks and
//! power-of-two slopes.
//!
//! Two representations live here:
//!
//! * [`FMap`], an element of Thompson's group F: a finite vertex list with
//!   integer translation tails on either side.
//! * [`TLikeMap`], an eventually T-like homeomorphism: a finite core on
//!   `[L-1, R+1]` whose two outer unit windows repeat with period one.

mod fmap;
mod tlike;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyadic::Dyadic;

pub use fmap::FMap;
pub use tlike::TLikeMap;

/// A vertex `(x, y)` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: Dyadic,
    pub y: Dyadic,
}

impl Vertex {
    pub fn new(x: Dyadic, y: Dyadic) -> Vertex {
        Vertex { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Vertex {
        Vertex::new(x.into(), y.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("vertex {index} is not strictly to the upper right of its predecessor")]
    NonMonotone { index: usize },
    #[error("slope of segment {index} is not a power of two")]
    BadSlope { index: usize },
    #[error("translation tails do not meet the vertex list: {0}")]
    TailMismatch(String),
    #[error("coordinate is not a dyadic rational: {0}")]
    NonDyadic(String),
    #[error("periodicity seed violated: {0}")]
    PeriodSeedMismatch(String),
    #[error("anchors out of range: {0}")]
    AnchorRange(String),
    #[error("core does not span [L-1, R+1]: {0}")]
    CoreWindow(String),
    #[error("unexpected element type {0:?}")]
    WrongType(String),
    #[error("malformed element: {0}")]
    Malformed(String),
}

impl PlError {
    pub fn code(&self) -> &'static str {
        match self {
            PlError::NonMonotone { .. } => "NonMonotone",
            PlError::BadSlope { .. } => "BadSlope",
            PlError::TailMismatch(_) => "TailMismatch",
            PlError::NonDyadic(_) => "NonDyadic",
            PlError::PeriodSeedMismatch(_) => "PeriodSeedMismatch",
            PlError::AnchorRange(_) => "AnchorRange",
            PlError::CoreWindow(_) => "CoreWindow",
            PlError::WrongType(_) => "WrongType",
            PlError::Malformed(_) => "Malformed",
        }
    }
}

/// Log-2 slopes of consecutive segments, checking strict monotonicity and
/// power-of-two slopes.
pub(crate) fn segment_slopes(vertices: &[Vertex]) -> Result<Vec<i64>, PlError> {
    vertices
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let dx = &w[1].x - &w[0].x;
            let dy = &w[1].y - &w[0].y;
            if !dx.is_positive() || !dy.is_positive() {
                return Err(PlError::NonMonotone { index: i + 1 });
            }
            dy.pow2_ratio(&dx).ok_or(PlError::BadSlope { index: i })
        })
        .collect()
}

/// Drops every vertex whose incoming and outgoing slopes agree. Slopes
/// outside the list count as 1, matching the translation tails of F.
///
/// The input must be strictly monotone with power-of-two slopes.
pub fn canonicalize(vertices: &[Vertex]) -> Vec<Vertex> {
    let slopes = segment_slopes(vertices).expect("canonicalize needs a monotone power-of-two break list");
    let n = vertices.len();
    vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let incoming = if i == 0 { 0 } else { slopes[i - 1] };
            let outgoing = if i + 1 == n { 0 } else { slopes[i] };
            incoming != outgoing
        })
        .map(|(_, v)| v.clone())
        .collect()
}

/// Evaluate the piecewise-linear interpolant at `x`, which must lie in
/// `[first.x, last.x]`.
pub(crate) fn interpolate(vertices: &[Vertex], slopes: &[i64], x: &Dyadic) -> Dyadic {
    let idx = vertices.partition_point(|v| v.x <= *x);
    debug_assert!(idx >= 1 && (idx < vertices.len() || vertices[idx - 1].x == *x));
    let i = idx - 1;
    let v = &vertices[i];
    if v.x == *x || i == slopes.len() {
        return v.y.clone();
    }
    &v.y + &(x - &v.x).mul_pow2(slopes[i])
}

/// Inverse of [`interpolate`]: `y` must lie in `[first.y, last.y]`.
pub(crate) fn interpolate_inverse(vertices: &[Vertex], slopes: &[i64], y: &Dyadic) -> Dyadic {
    let idx = vertices.partition_point(|v| v.y <= *y);
    let i = idx - 1;
    let v = &vertices[i];
    if v.y == *y || i == slopes.len() {
        return v.x.clone();
    }
    &v.x + &(y - &v.y).mul_pow2(-slopes[i])
}

/// JSON form of either element type, tagged by `"type"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    F(FMap),
    TLike(TLikeMap),
}

impl Element {
    pub fn from_json(value: serde_json::Value) -> Result<Element, PlError> {
        match value.get("type").and_then(|t| t.as_str()) {
            Some("F") => Ok(Element::F(FMap::from_json(value)?)),
            Some("TLike") => Ok(Element::TLike(TLikeMap::from_json(value)?)),
            other => Err(PlError::WrongType(other.unwrap_or("<missing>").to_string())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Element::F(f) => f.to_json(),
            Element::TLike(g) => g.to_json(),
        }
    }
}

/// Parse a coordinate out of raw JSON, reporting non-dyadic strings.
pub(crate) fn parse_point(v: &serde_json::Value) -> Result<Vertex, PlError> {
    let coord = |key: &str| -> Result<Dyadic, PlError> {
        let raw = v
            .get(key)
            .ok_or_else(|| PlError::Malformed(format!("missing {key:?} in {v}")))?;
        match raw {
            serde_json::Value::String(s) => s.parse().map_err(|_| PlError::NonDyadic(s.clone())),
            serde_json::Value::Number(n) if n.is_i64() => Ok(Dyadic::from(n.as_i64().unwrap())),
            other => Err(PlError::NonDyadic(other.to_string())),
        }
    };
    Ok(Vertex::new(coord("x")?, coord("y")?))
}

pub(crate) fn parse_points(v: Option<&serde_json::Value>, key: &str) -> Result<Vec<Vertex>, PlError> {
    let arr = v
        .and_then(|a| a.as_array())
        .ok_or_else(|| PlError::Malformed(format!("{key:?} must be an array of points")))?;
    arr.iter().map(parse_point).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str, y: &str) -> Vertex {
        Vertex::new(x.parse().unwrap(), y.parse().unwrap())
    }

    #[test]
    fn canonicalize_examples() {
        let line = [Vertex::ints(0, 0), Vertex::ints(1, 1), Vertex::ints(2, 2)];
        assert!(canonicalize(&line).is_empty());

        let already = [Vertex::ints(0, 0), Vertex::ints(1, 2)];
        assert_eq!(canonicalize(&already), already.to_vec());

        let collinear = [v("0", "0"), v("1/2^1", "1"), v("1", "2")];
        assert_eq!(canonicalize(&collinear), vec![v("0", "0"), v("1", "2")]);
        let once = canonicalize(&collinear);
        assert_eq!(canonicalize(&once), once);
    }

    #[test]
    fn slopes_reject_bad_segments() {
        assert_eq!(
            segment_slopes(&[Vertex::ints(0, 0), Vertex::ints(1, 3)]),
            Err(PlError::BadSlope { index: 0 })
        );
        assert_eq!(
            segment_slopes(&[Vertex::ints(0, 0), Vertex::ints(1, 0)]),
            Err(PlError::NonMonotone { index: 1 })
        );
        assert_eq!(
            segment_slopes(&[v("0", "0"), v("1/2^2", "1"), v("5/2^2", "3/2^1")]),
            Ok(vec![2, -1])
        );
    }
}
