use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
/// entries positive and forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `D`, length `min(rows, cols)`, zeros last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by row/column gcd reduction.
///
/// Pivot rule: the entry of smallest nonzero absolute value in the trailing
/// submatrix, ties broken by lowest row-major index. The result is therefore
/// a deterministic function of `A`, which `class_rep` relies on.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_pivot(&d, t) else {
                return SnfResult { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = &d[(i, t)] / &d[(t, t)];
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &-&q);
                    u.add_row_multiple(i, t, &-&q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &d[(t, j)] / &d[(t, t)];
                if !q.is_zero() {
                    d.add_col_multiple(j, t, &-&q);
                    v.add_col_multiple(j, t, &-&q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d, v }
}

fn smallest_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(ix, _)| ix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SnfResult {
        let r = snf(a);
        assert_eq!(&(&r.u * a) * &r.v, r.d);
        assert_eq!(r.u.det().unwrap().abs(), BigInt::from(1));
        assert_eq!(r.v.det().unwrap().abs(), BigInt::from(1));
        r
    }

    #[test]
    fn all_ones() {
        let r = check(&m(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(r.d, m(&[vec![1, 0], vec![0, 0]]));
    }

    #[test]
    fn identity_is_fixed() {
        let r = check(&IntMatrix::identity(3));
        assert_eq!(r.d, IntMatrix::identity(3));
    }

    #[test]
    fn coprime_diagonal_merges() {
        let r = check(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(r.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn known_four_by_four() {
        let a = m(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let r = check(&a);
        let expect: Vec<BigInt> = [1, 3, 21, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(r.invariant_factors(), expect);
    }

    #[test]
    fn rectangular_and_zero() {
        let r = check(&m(&[vec![2, 4, 4], vec![-6, 6, 12]]));
        assert_eq!(r.invariant_factors(), vec![BigInt::from(2), BigInt::from(6)]);
        let z = check(&IntMatrix::zeros(2, 3));
        assert_eq!(z.rank(), 0);
    }
}
