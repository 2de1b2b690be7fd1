//! Random elements for property tests, benchmarks and the demo.
//!
//! Maps are built from matched lists of power-of-two piece lengths on the
//! domain and range side, so every sample is valid by construction; the
//! validators still run on the result. Coverage of break patterns matters
//! here, not uniformity.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dyadic::Dyadic;
use crate::groupf::{AutFactor, AutWord};
use crate::plmap::{FMap, TLikeMap, Vertex};

#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    /// Breaks stay inside `[-window, window]`.
    pub window: i64,
    pub max_breaks: usize,
    /// Tails are drawn from `[-max_translation, max_translation]`.
    pub max_translation: i64,
    /// Grid coordinates have denominator at most `2^grid_exp`.
    pub grid_exp: u64,
}

impl Default for SampleConfig {
    fn default() -> SampleConfig {
        SampleConfig {
            window: 8,
            max_breaks: 12,
            max_translation: 3,
            grid_exp: 2,
        }
    }
}

/// A grid point `n / 2^k` in `[lo, hi]` with `k <= max_exp`.
pub fn random_dyadic<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64, max_exp: u64) -> Dyadic {
    let k = rng.gen_range(0..=max_exp);
    let scale = 1i64 << k;
    Dyadic::new(rng.gen_range(lo * scale..=hi * scale), k)
}

/// Binary expansion of a positive dyadic as a list of powers of two.
fn pow2_pieces(len: &Dyadic) -> Vec<Dyadic> {
    assert!(len.is_positive());
    let n = len.numerator();
    let k = len.exponent() as i64;
    (0..n.bits())
        .filter(|&b| n.bit(b))
        .map(|b| Dyadic::one().mul_pow2(b as i64 - k))
        .collect()
}

fn split_random<R: Rng + ?Sized>(rng: &mut R, pieces: &mut Vec<Dyadic>) {
    let i = rng.gen_range(0..pieces.len());
    let half = pieces[i].mul_pow2(-1);
    pieces[i] = half.clone();
    pieces.insert(i, half);
}

/// Vertices of a random increasing PL path from `(x0, y0)` to
/// `(x0 + dx, y0 + dy)` with power-of-two slopes, using up to `max_extra`
/// additional splits beyond the minimum.
fn random_path<R: Rng + ?Sized>(
    rng: &mut R,
    x0: &Dyadic,
    y0: &Dyadic,
    dx: &Dyadic,
    dy: &Dyadic,
    max_extra: usize,
) -> Vec<Vertex> {
    let extra = rng.gen_range(0..=max_extra);
    let mut xs = pow2_pieces(dx);
    let mut ys = pow2_pieces(dy);
    while xs.len() < ys.len() {
        split_random(rng, &mut xs);
    }
    while ys.len() < xs.len() {
        split_random(rng, &mut ys);
    }
    for _ in 0..extra {
        split_random(rng, &mut xs);
        split_random(rng, &mut ys);
    }
    xs.shuffle(rng);
    ys.shuffle(rng);
    let mut out = vec![Vertex::new(x0.clone(), y0.clone())];
    let (mut x, mut y) = (x0.clone(), y0.clone());
    for (a, b) in xs.iter().zip(&ys) {
        x = &x + a;
        y = &y + b;
        out.push(Vertex::new(x.clone(), y.clone()));
    }
    out
}

/// A random element of F with at most `cfg.max_breaks` breaks in the window.
pub fn random_fmap<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> FMap {
    let t = cfg.max_translation;
    if rng.gen_ratio(1, 10) {
        return FMap::translation(rng.gen_range(-t..=t));
    }
    loop {
        let (l, r) = (rng.gen_range(-t..=t), rng.gen_range(-t..=t));
        let x0 = random_dyadic(rng, -cfg.window, cfg.window - 1, cfg.grid_exp);
        let room = &Dyadic::from(cfg.window) - &x0;
        let dx = random_dyadic(rng, 0, 2 * cfg.window, cfg.grid_exp);
        if !dx.is_positive() || dx > room {
            continue;
        }
        let dy = &dx + &Dyadic::from(r - l);
        if !dy.is_positive() {
            continue;
        }
        let y0 = &x0 + &Dyadic::from(l);
        let path = random_path(rng, &x0, &y0, &dx, &dy, 3);
        if path.len() > cfg.max_breaks {
            continue;
        }
        return FMap::new(path, l, r).expect("sampled path is a valid element of F");
    }
}

/// A random eventually T-like map whose core lies in the window.
pub fn random_tlike<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> TLikeMap {
    let reach = (cfg.window / 2).max(1);
    let one = Dyadic::one();
    loop {
        let left = -random_dyadic(rng, 0, reach - 1, cfg.grid_exp);
        let right = random_dyadic(rng, 0, reach - 1, cfg.grid_exp);
        let y_left = &left + &random_dyadic(rng, -2, 2, cfg.grid_exp);
        let y_right = if left == right {
            y_left.clone()
        } else {
            &right + &random_dyadic(rng, -2, 2, cfg.grid_exp)
        };
        let span = &right - &left;
        let rise = &y_right - &y_left;
        if span.is_positive() != rise.is_positive() || rise.is_negative() {
            continue;
        }

        let lo = &left - &one;
        let mut core = random_path(rng, &lo, &(&y_left - &one), &one, &one, 2);
        if span.is_positive() {
            let mid = random_path(rng, &left, &y_left, &span, &rise, 2);
            core.extend(mid.into_iter().skip(1));
        }
        let tail = random_path(rng, &right, &y_right, &one, &one, 2);
        core.extend(tail.into_iter().skip(1));
        if core.len() > cfg.max_breaks {
            continue;
        }
        return TLikeMap::new(left, right, core).expect("sampled core is eventually T-like");
    }
}

/// A random automorphism word of length at most `max_len`.
pub fn random_aut_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, cfg: &SampleConfig) -> AutWord {
    let len = rng.gen_range(0..=max_len);
    let factors = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                AutFactor::Rev
            } else {
                AutFactor::ConjBy(random_tlike(rng, cfg))
            }
        })
        .collect();
    AutWord::new(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pieces_sum_back() {
        let len: Dyadic = "13/2^3".parse().unwrap();
        let pieces = pow2_pieces(&len);
        assert_eq!(pieces.len(), 3);
        assert_eq!(pieces.iter().fold(Dyadic::zero(), |a, b| &a + b), len);
    }

    #[test]
    fn samples_respect_config() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = SampleConfig::default();
        let w = Dyadic::from(cfg.window);
        for _ in 0..300 {
            let f = random_fmap(&mut rng, &cfg);
            assert!(f.breaks().len() <= cfg.max_breaks);
            assert!(f.breaks().iter().all(|v| v.x >= -&w && v.x <= w));
            let g = random_tlike(&mut rng, &cfg);
            assert!(g.core().len() <= cfg.max_breaks);
            assert!(g.core().iter().all(|v| v.x >= -&w && v.x <= w));
        }
    }
}
