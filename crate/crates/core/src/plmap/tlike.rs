use std::fmt;

use num_bigint::BigInt;
use serde_json::json;

use super::{interpolate, interpolate_inverse, parse_points, segment_slopes, FMap, PlError, Vertex};
use crate::dyadic::Dyadic;

/// An eventually T-like homeomorphism of the real line.
///
/// The map is stored on its core window `[L-1, R+1]`. For `x >= R` it
/// satisfies `g(x+1) = g(x) + 1`, for `x <= L-1` likewise, so the unit
/// windows `[R, R+1]` and `[L-1, L]` determine it everywhere else.
///
/// Anchors are kept as given; they need not be the extremal ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TLikeMap {
    left: Dyadic,
    right: Dyadic,
    // first vertex at x = L-1, last at x = R+1
    core: Vec<Vertex>,
    slopes: Vec<i64>,
}

impl TLikeMap {
    pub fn new(left_anchor: Dyadic, right_anchor: Dyadic, core: Vec<Vertex>) -> Result<TLikeMap, PlError> {
        if left_anchor.is_positive() || right_anchor.is_negative() {
            return Err(PlError::AnchorRange(format!(
                "need L <= 0 <= R, got L = {left_anchor}, R = {right_anchor}"
            )));
        }
        let lo = &left_anchor - &Dyadic::one();
        let hi = &right_anchor + &Dyadic::one();
        match (core.first(), core.last()) {
            (Some(a), Some(b)) if core.len() >= 2 && a.x == lo && b.x == hi => {}
            _ => {
                return Err(PlError::CoreWindow(format!(
                    "core must start at x = {lo} and end at x = {hi}"
                )))
            }
        }
        let slopes = segment_slopes(&core)?;
        let at = |x: &Dyadic| interpolate(&core, &slopes, x);
        let (y_hi, y_r) = (&core[core.len() - 1].y, at(&right_anchor));
        if *y_hi != &y_r + &Dyadic::one() {
            return Err(PlError::PeriodSeedMismatch(format!(
                "g(R+1) = {y_hi} but g(R) + 1 = {}",
                &y_r + &Dyadic::one()
            )));
        }
        let (y_lo, y_l) = (&core[0].y, at(&left_anchor));
        if *y_lo != &y_l - &Dyadic::one() {
            return Err(PlError::PeriodSeedMismatch(format!(
                "g(L-1) = {y_lo} but g(L) - 1 = {}",
                &y_l - &Dyadic::one()
            )));
        }
        Ok(TLikeMap::from_valid(left_anchor, right_anchor, core))
    }

    /// Drop interior vertices whose slopes agree on both sides; the two
    /// window endpoints always stay.
    fn from_valid(left: Dyadic, right: Dyadic, core: Vec<Vertex>) -> TLikeMap {
        let slopes = segment_slopes(&core).expect("validated core");
        let n = core.len();
        let core: Vec<Vertex> = core
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i == 0 || i + 1 == n || slopes[i - 1] != slopes[i])
            .map(|(_, v)| v)
            .collect();
        let slopes = segment_slopes(&core).expect("validated core");
        TLikeMap {
            left,
            right,
            core,
            slopes,
        }
    }

    pub fn identity() -> TLikeMap {
        TLikeMap::from_valid(
            Dyadic::zero(),
            Dyadic::zero(),
            vec![Vertex::ints(-1, -1), Vertex::ints(1, 1)],
        )
    }

    /// View an element of F as an eventually T-like map, with
    /// `L = min(0, first break)` and `R = max(0, last break)`.
    pub fn from_f(f: &FMap) -> TLikeMap {
        let (first, last) = f.support_bounds();
        let left = first.min(Dyadic::zero());
        let right = last.max(Dyadic::zero());
        let lo = &left - &Dyadic::one();
        let hi = &right + &Dyadic::one();
        let mut core = vec![Vertex::new(lo.clone(), f.eval(&lo))];
        core.extend(f.breaks().iter().cloned());
        core.push(Vertex::new(hi.clone(), f.eval(&hi)));
        TLikeMap::new(left, right, core).expect("elements of F are eventually T-like")
    }

    pub fn left_anchor(&self) -> &Dyadic {
        &self.left
    }

    pub fn right_anchor(&self) -> &Dyadic {
        &self.right
    }

    pub fn core(&self) -> &[Vertex] {
        &self.core
    }

    pub fn is_identity(&self) -> bool {
        self.core.iter().all(|v| v.x == v.y)
    }

    fn core_lo(&self) -> &Vertex {
        &self.core[0]
    }

    fn core_hi(&self) -> &Vertex {
        &self.core[self.core.len() - 1]
    }

    pub fn eval(&self, x: &Dyadic) -> Dyadic {
        if *x > self.core_hi().x {
            let n = Dyadic::from((x - &self.right).floor());
            &self.eval_core(&(x - &n)) + &n
        } else if *x < self.core_lo().x {
            let n = Dyadic::from((&self.left - x).floor());
            &self.eval_core(&(x + &n)) - &n
        } else {
            self.eval_core(x)
        }
    }

    fn eval_core(&self, x: &Dyadic) -> Dyadic {
        interpolate(&self.core, &self.slopes, x)
    }

    /// `g^{-1}(y)`. The inverse is periodic outside `(g(L)-1, g(R))`.
    pub fn eval_inverse(&self, y: &Dyadic) -> Dyadic {
        if *y > self.core_hi().y {
            let n = Dyadic::from((y - &self.eval_core(&self.right)).floor());
            &interpolate_inverse(&self.core, &self.slopes, &(y - &n)) + &n
        } else if *y < self.core_lo().y {
            let n = Dyadic::from((&self.eval_core(&self.left) - y).floor());
            &interpolate_inverse(&self.core, &self.slopes, &(y + &n)) - &n
        } else {
            interpolate_inverse(&self.core, &self.slopes, y)
        }
    }

    /// `g(x) - x`.
    pub fn variation(&self, x: &Dyadic) -> Dyadic {
        &self.eval(x) - x
    }

    /// Every abscissa in `[lo, hi]` where the slope of `g` may change,
    /// sorted. May include points where the slope happens not to change.
    pub fn breaks_in(&self, lo: &Dyadic, hi: &Dyadic) -> Vec<Dyadic> {
        let mut out: Vec<Dyadic> = self
            .core
            .iter()
            .map(|v| v.x.clone())
            .filter(|x| x >= lo && x <= hi)
            .collect();

        if *hi > self.core_hi().x {
            let mut pattern: Vec<Dyadic> = vec![self.right.clone()];
            pattern.extend(
                self.core
                    .iter()
                    .map(|v| v.x.clone())
                    .filter(|x| *x > self.right && *x < self.core_hi().x),
            );
            let from = BigInt::from(1).max((lo - &self.right).floor() - 1);
            let to = (hi - &self.right).floor();
            let mut n = from;
            while n <= to {
                let shift = Dyadic::from(n.clone());
                out.extend(pattern.iter().map(|p| p + &shift).filter(|x| x >= lo && x <= hi));
                n += 1;
            }
        }
        if *lo < self.core_lo().x {
            let mut pattern: Vec<Dyadic> = vec![self.left.clone()];
            pattern.extend(
                self.core
                    .iter()
                    .map(|v| v.x.clone())
                    .filter(|x| *x < self.left && *x > self.core_lo().x),
            );
            let from = BigInt::from(1).max((&self.left - hi).floor() - 1);
            let to = (&self.left - lo).floor() + 1;
            let mut n = from;
            while n <= to {
                let shift = Dyadic::from(n.clone());
                out.extend(pattern.iter().map(|p| p - &shift).filter(|x| x >= lo && x <= hi));
                n += 1;
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// The inverse homeomorphism, with anchors `min(0, g(L))` and
    /// `max(0, g(R))`.
    pub fn inverse(&self) -> TLikeMap {
        let left = self.eval(&self.left).min(Dyadic::zero());
        let right = self.eval(&self.right).max(Dyadic::zero());
        let lo = &left - &Dyadic::one();
        let hi = &right + &Dyadic::one();
        let (x_lo, x_hi) = (self.eval_inverse(&lo), self.eval_inverse(&hi));
        let mut xs = self.breaks_in(&x_lo, &x_hi);
        xs.push(x_lo);
        xs.push(x_hi);
        xs.sort();
        xs.dedup();
        let core = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&x);
                Vertex::new(y, x)
            })
            .collect();
        TLikeMap::new(left, right, core).expect("inverse of an eventually T-like map is eventually T-like")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": "TLike",
            "L": self.left,
            "R": self.right,
            "core": self.core,
        })
    }

    pub fn from_json(value: serde_json::Value) -> Result<TLikeMap, PlError> {
        match value.get("type").and_then(|t| t.as_str()) {
            Some("TLike") => {}
            other => return Err(PlError::WrongType(other.unwrap_or("<missing>").to_string())),
        }
        let anchor = |key: &str| -> Result<Dyadic, PlError> {
            match value.get(key) {
                Some(serde_json::Value::String(s)) => s.parse().map_err(|_| PlError::NonDyadic(s.clone())),
                Some(serde_json::Value::Number(n)) if n.is_i64() => Ok(Dyadic::from(n.as_i64().unwrap())),
                _ => Err(PlError::Malformed(format!("{key:?} must be a dyadic string"))),
            }
        };
        let (l, r) = (anchor("L")?, anchor("R")?);
        TLikeMap::new(l, r, parse_points(value.get("core"), "core")?)
    }
}

impl fmt::Debug for TLikeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TLike[L={}, R={}; ", self.left, self.right)?;
        for (i, v) in self.core.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", v.x, v.y)?;
        }
        f.write_str("]")
    }
}
