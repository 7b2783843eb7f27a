//! Dense exact linear algebra over a generic ring.
//!
//! Gaussian elimination pivots on *units*, which decides invertibility
//! exactly over every ring used here (fields, and dual-number extensions,
//! where a matrix is invertible iff its value part is).

use crate::error::{Error, Result};
use crate::scalar::Ring;
use std::fmt::Display;

/// Dense row-major matrix. Also used for module elements: an element of a
/// rectangular pair is a p x q matrix, a tensor-instance element is n x 1.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Mat::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize, proto: &R) -> Self {
        Mat::from_fn(rows, cols, |_, _| proto.ring_zero())
    }

    pub fn identity(n: usize, proto: &R) -> Self {
        Mat::from_fn(n, n, |r, c| {
            if r == c {
                proto.ring_one()
            } else {
                proto.ring_zero()
            }
        })
    }

    pub fn at(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    /// A scalar of the ring the entries live in. Panics on 0 x 0 matrices.
    pub fn proto(&self) -> &R {
        self.data.first().expect("empty matrix has no ring witness")
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "add shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "sub shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let proto = if self.data.is_empty() {
            other.proto()
        } else {
            self.proto()
        };
        let mut out = Mat::zero(self.rows, other.cols, proto);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).add(&a.mul(other.at(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> R {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut t = self.proto().ring_zero();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    /// Flatten to a column vector (row-major order).
    pub fn flatten(&self) -> Mat<R> {
        Mat {
            rows: self.rows * self.cols,
            cols: 1,
            data: self.data.clone(),
        }
    }

    /// Reshape a column vector back to the given shape.
    pub fn unflatten(&self, rows: usize, cols: usize) -> Mat<R> {
        assert_eq!(self.cols, 1, "unflatten expects a column vector");
        assert_eq!(self.rows, rows * cols, "unflatten length mismatch");
        Mat {
            rows,
            cols,
            data: self.data.clone(),
        }
    }

    /// Map entries into another ring through `f`.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Solve `self * x = rhs` for x; fails iff `self` is not invertible.
    pub fn solve(&self, rhs: &Mat<R>) -> Result<Mat<R>> {
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        assert_eq!(self.rows, rhs.rows, "solve rhs shape mismatch");
        let n = self.rows;
        if n == 0 {
            return Ok(rhs.clone());
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            // pivot on a unit entry
            let pivot = (col..n).find(|&r| a.at(r, col).is_unit());
            let pivot = match pivot {
                Some(p) => p,
                None => {
                    return Err(Error::NotInvertible(format!(
                        "no unit pivot in column {col}"
                    )))
                }
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                }
                for c in 0..b.cols {
                    b.data.swap(pivot * b.cols + c, col * b.cols + c);
                }
            }
            let inv = a.at(col, col).inv()?;
            for c in 0..n {
                let v = a.at(col, c).mul(&inv);
                a.set(col, c, v);
            }
            for c in 0..b.cols {
                let v = b.at(col, c).mul(&inv);
                b.set(col, c, v);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..n {
                    let v = a.at(r, c).sub(&factor.mul(a.at(col, c)));
                    a.set(r, c, v);
                }
                for c in 0..b.cols {
                    let v = b.at(r, c).sub(&factor.mul(b.at(col, c)));
                    b.set(r, c, v);
                }
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<Mat<R>> {
        let id = Mat::identity(self.rows, self.proto());
        self.solve(&id)
    }

    pub fn is_invertible(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        if self.rows == 0 {
            return true;
        }
        self.det().is_unit()
    }

    /// Determinant by unit-pivot elimination.
    pub fn det(&self) -> R {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        let proto = self.proto();
        if n == 0 {
            return proto.ring_one();
        }
        let mut a = self.clone();
        let mut det = proto.ring_one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.at(r, col).is_unit());
            let pivot = match pivot {
                Some(p) => p,
                None => {
                    // Over a field this means a singular matrix (det 0); over a
                    // dual-number ring the residual block is nilpotent-valued,
                    // so the determinant is a non-unit either way. Expand the
                    // remaining minor brute-force to stay exact.
                    return a.minor_det(col, &(col..n).collect::<Vec<_>>(), &mut det);
                }
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                }
                det = det.neg();
            }
            let d = a.at(col, col).clone();
            det = det.mul(&d);
            let inv = d.inv().expect("pivot is a unit");
            for r in col + 1..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).mul(&inv);
                for c in col..n {
                    let v = a.at(r, c).sub(&factor.mul(a.at(col, c)));
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    // Laplace expansion over the trailing non-unit block (tiny in practice).
    fn minor_det(&self, col: usize, rows: &[usize], acc: &mut R) -> R {
        fn expand<R: Ring>(m: &Mat<R>, rows: &[usize], cols: &[usize]) -> R {
            if rows.is_empty() {
                return m.proto().ring_one();
            }
            let mut sum = m.proto().ring_zero();
            let c0 = cols[0];
            for (i, &r) in rows.iter().enumerate() {
                let e = m.at(r, c0);
                if e.is_zero() {
                    continue;
                }
                let sub_rows: Vec<usize> = rows
                    .iter()
                    .copied()
                    .filter(|&x| x != r)
                    .collect();
                let v = e.mul(&expand(m, &sub_rows, &cols[1..]));
                sum = if i % 2 == 0 { sum.add(&v) } else { sum.sub(&v) };
            }
            sum
        }
        let cols: Vec<usize> = (col..self.cols).collect();
        acc.mul(&expand(self, rows, &cols))
    }

    /// Rank via elimination; only meaningful over a field.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..a.cols {
            let pivot = (row..a.rows).find(|&r| a.at(r, col).is_unit());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for c in 0..a.cols {
                    a.data.swap(pivot * a.cols + c, row * a.cols + c);
                }
            }
            let inv = a.at(row, col).inv().expect("unit pivot");
            for c in 0..a.cols {
                let v = a.at(row, c).mul(&inv);
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..a.cols {
                    let v = a.at(r, c).sub(&factor.mul(a.at(row, c)));
                    a.set(r, c, v);
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }

    /// Reduced column echelon form: canonical basis representation of the
    /// column span (equality of spans == equality of representations).
    pub fn reduced_column_echelon(&self) -> Mat<R> {
        let t = self.transpose().reduced_row_echelon();
        // drop zero rows, transpose back
        let nonzero: Vec<usize> = (0..t.rows)
            .filter(|&r| (0..t.cols).any(|c| !t.at(r, c).is_zero()))
            .collect();
        Mat::from_fn(self.rows, nonzero.len(), |r, c| t.at(nonzero[c], r).clone())
    }

    pub fn reduced_row_echelon(&self) -> Mat<R> {
        let mut a = self.clone();
        let mut row = 0usize;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let pivot = (row..a.rows).find(|&r| a.at(r, col).is_unit());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for c in 0..a.cols {
                    a.data.swap(pivot * a.cols + c, row * a.cols + c);
                }
            }
            let inv = a.at(row, col).inv().expect("unit pivot");
            for c in 0..a.cols {
                let v = a.at(row, c).mul(&inv);
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..a.cols {
                    let v = a.at(r, c).sub(&factor.mul(a.at(row, c)));
                    a.set(r, c, v);
                }
            }
            row += 1;
        }
        a
    }

    /// Basis of the right null space, as columns.
    pub fn nullspace(&self) -> Mat<R> {
        let rref = self.reduced_row_echelon();
        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..rref.cols {
            if r < rref.rows && rref.at(r, c).is_unit() && (0..rref.rows).all(|rr| rr == r || rref.at(rr, c).is_zero()) {
                pivot_cols.push(c);
                r += 1;
            }
        }
        let free_cols: Vec<usize> = (0..rref.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let proto = self.proto();
        let mut basis = Mat::zero(self.cols, free_cols.len(), proto);
        for (k, &fc) in free_cols.iter().enumerate() {
            basis.set(fc, k, proto.ring_one());
            for (pr, &pc) in pivot_cols.iter().enumerate() {
                basis.set(pc, k, rref.at(pr, fc).neg());
            }
        }
        basis
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        Mat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Render as nested lists of scalar strings, e.g. `[[1, -1/2], [0, 3]]`.
    pub fn render(&self) -> String {
        let mut s = String::from("[");
        for r in 0..self.rows {
            if r > 0 {
                s.push_str(", ");
            }
            s.push('[');
            for c in 0..self.cols {
                if c > 0 {
                    s.push_str(", ");
                }
                s.push_str(&format!("{}", self.at(r, c)));
            }
            s.push(']');
        }
        s.push(']');
        s
    }
}

impl<R: Ring> Display for Mat<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::Dual;
    use crate::scalar::{rat, rat_int, Fp, Rat};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat<Rat> {
        Mat::from_vec(2, 2, vec![rat_int(a), rat_int(b), rat_int(c), rat_int(d)])
    }

    #[test]
    fn inverse_round_trip() {
        let a = m2(1, 2, 3, 4);
        let ai = a.inverse().unwrap();
        assert_eq!(a.matmul(&ai), Mat::identity(2, &rat_int(0)));
        assert_eq!(a.det(), rat_int(-2));
    }

    #[test]
    fn singular_matrix_rejected() {
        let a = m2(1, 2, 2, 4);
        assert!(!a.is_invertible());
        assert!(a.inverse().is_err());
        assert!(a.det().is_zero());
    }

    #[test]
    fn dual_matrix_inverse_by_value_part() {
        // A + eps B invertible iff A is; check (A + eps B)^{-1} exactly.
        let a = m2(2, 1, 0, 1).map(|x| Dual::new(x.clone(), rat_int(1)));
        let ai = a.inverse().unwrap();
        let id = Mat::identity(2, a.proto());
        assert_eq!(a.matmul(&ai), id);

        // nilpotent-valued matrix is not invertible
        let n = m2(0, 0, 0, 0).map(|x| Dual::new(x.clone(), rat_int(1)));
        assert!(n.inverse().is_err());
        assert!(!n.det().is_unit());
    }

    #[test]
    fn gf_solve() {
        let p = Fp::field(7).unwrap();
        let a = Mat::from_vec(
            2,
            2,
            vec![p.embed_i64(2), p.embed_i64(3), p.embed_i64(1), p.embed_i64(4)],
        );
        let rhs = Mat::from_vec(2, 1, vec![p.embed_i64(1), p.embed_i64(0)]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.matmul(&x), rhs);
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Mat::from_vec(
            3,
            2,
            vec![
                rat_int(2), rat_int(4),
                rat_int(1), rat_int(2),
                rat_int(0), rat_int(1),
            ],
        );
        let b = Mat::from_vec(
            3,
            2,
            vec![
                rat_int(4), rat_int(2),
                rat_int(2), rat_int(1),
                rat_int(3), rat_int(0),
            ],
        );
        // same column span, different generators
        assert_eq!(a.reduced_column_echelon(), b.reduced_column_echelon());
    }

    #[test]
    fn nullspace_is_kernel() {
        let a = Mat::from_vec(2, 3, vec![
            rat_int(1), rat_int(2), rat_int(3),
            rat_int(0), rat_int(1), rat_int(1),
        ]);
        let ns = a.nullspace();
        assert_eq!(ns.cols, 1);
        assert!(a.matmul(&ns).is_zero());
    }

    #[test]
    fn rank_reporting() {
        assert_eq!(m2(1, 2, 2, 4).rank(), 1);
        assert_eq!(m2(1, 0, 0, 1).rank(), 2);
        let half = m2(1, 2, 2, 4).scale(&rat(1, 2));
        assert_eq!(half.rank(), 1);
    }
}
