use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

use super::LinalgError;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<IntMatrix, LinalgError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(LinalgError::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<IntMatrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        IntMatrix::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn pow(&self, k: u32) -> IntMatrix {
        assert!(self.is_square());
        (0..k).fold(IntMatrix::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let t = &self[(src, j)] * factor;
            self[(dst, j)] += t;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let t = &self[(i, src)] * factor;
            self[(i, dst)] += t;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let t = -&self[(i, j)];
            self[(i, j)] = t;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Accepts `{"rows":n,"cols":m,"entries":[...]}` or a nested array of
    /// rows. Entries may be JSON integers or decimal strings.
    pub fn from_json(value: &serde_json::Value) -> Result<IntMatrix, LinalgError> {
        let malformed = |what: &str| LinalgError::Malformed(what.to_string());
        let entry = |v: &serde_json::Value| -> Result<BigInt, LinalgError> {
            match v {
                serde_json::Value::String(s) => s.trim().parse().map_err(|_| malformed(s)),
                serde_json::Value::Number(n) => n.to_string().parse().map_err(|_| malformed(&n.to_string())),
                other => Err(malformed(&other.to_string())),
            }
        };
        match value {
            serde_json::Value::Array(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| {
                        r.as_array()
                            .ok_or_else(|| malformed("matrix rows must be arrays"))?
                            .iter()
                            .map(entry)
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                IntMatrix::from_rows(&rows)
            }
            serde_json::Value::Object(obj) => {
                let dim = |k: &str| {
                    obj.get(k)
                        .and_then(|v| v.as_u64())
                        .map(|v| v as usize)
                        .ok_or_else(|| malformed(&format!("{k:?} must be a positive integer")))
                };
                let entries = obj
                    .get("entries")
                    .and_then(|e| e.as_array())
                    .ok_or_else(|| malformed("\"entries\" must be an array"))?
                    .iter()
                    .map(entry)
                    .collect::<Result<Vec<_>, _>>()?;
                IntMatrix::new(dim("rows")?, dim("cols")?, entries)
            }
            other => Err(malformed(&other.to_string())),
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[[a, b], [c, d]]`
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![0, -1], vec![-1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[vec![1, 1], vec![1, 1]]).det().unwrap(), BigInt::zero());
        assert_eq!(
            m(&[vec![0, 2, 1], vec![3, -1, 4], vec![5, 9, -2]]).det().unwrap(),
            BigInt::from(84)
        );
        assert!(m(&[vec![1, 2]]).det().is_err());
    }

    #[test]
    fn products_and_powers() {
        let r = m(&[vec![0, -1], vec![-1, 0]]);
        assert_eq!(r.pow(2), IntMatrix::identity(2));
        assert_eq!(r.pow(3), r);
        assert_eq!(
            r.mul_vec(&[BigInt::from(2), BigInt::from(5)]),
            vec![BigInt::from(-5), BigInt::from(-2)]
        );
    }

    #[test]
    fn json_forms() {
        let a = m(&[vec![0, -1], vec![-1, 0]]);
        let obj = a.to_json();
        assert_eq!(obj.to_string(), r#"{"rows":2,"cols":2,"entries":["0","-1","-1","0"]}"#);
        assert_eq!(IntMatrix::from_json(&obj).unwrap(), a);
        let nested: serde_json::Value = serde_json::from_str("[[0,-1],[-1,0]]").unwrap();
        assert_eq!(IntMatrix::from_json(&nested).unwrap(), a);
        let ragged: serde_json::Value = serde_json::from_str("[[0,-1],[1]]").unwrap();
        assert!(IntMatrix::from_json(&ragged).is_err());
    }
}
