use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};
use thiserror::Error;

use super::{Rational, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot multiply {left_rows}x{left_cols} by {right_rows}x{right_cols}")]
    Incompatible {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("vector of length {got} does not match {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: RationalMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            entries.extend(row);
        }
        RationalMatrix {
            rows: n_rows,
            cols: n_cols,
            entries,
        }
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[RationalVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::int(x)).collect())
                .collect(),
        )
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

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RationalVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<RationalVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, DimensionError> {
        if self.cols != other.rows {
            return Err(DimensionError::Incompatible {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Result<RationalVector, DimensionError> {
        if v.len() != self.cols {
            return Err(DimensionError::VectorLength {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn trace(&self) -> Result<Rational, DimensionError> {
        if !self.is_square() {
            return Err(DimensionError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)]))
    }

    /// Gauss-Jordan elimination to the unique reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let scaled = &m[(row, j)] * &inv;
                m[(row, j)] = scaled;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    if m[(row, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(row, j)];
                    m[(r, j)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref {
            reduced: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null-space basis: one vector per free column, in ascending column order,
    /// with that free variable set to 1 and the other free variables 0.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Particular solution of `self * x = b` with all free variables zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<RationalVector>, DimensionError> {
        if b.len() != self.rows {
            return Err(DimensionError::VectorLength {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut augmented = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                augmented[(i, j)] = self[(i, j)].clone();
            }
            augmented[(i, self.cols)] = b[i].clone();
        }
        let Rref { reduced, pivots, .. } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<RationalMatrix, DimensionError> {
        if !self.is_square() {
            return Err(DimensionError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Self::zeros(0, 0));
        }
        let mut augmented = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                augmented[(i, j)] = self[(i, j)].clone();
            }
            augmented[(i, n + i)] = Rational::one();
        }
        let Rref { reduced, pivots, .. } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(DimensionError::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Indices of a maximal linearly independent prefix-greedy subset of columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("incompatible matrix product")
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn rref_identity() {
        let r = m(&[&[1, 0], &[0, 1]]).rref();
        assert_eq!(r.reduced, RationalMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.reduced, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_permutation() {
        let r = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r.reduced, RationalMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let k = RationalMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(
            k,
            vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)],
            ]
        );
    }

    #[test]
    fn kernel_of_single_relation() {
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), vec![vec![int(-1), int(1)]]);
        assert!(RationalMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn solve_cases() {
        let b = vec![int(3), rational(-1, 2)];
        assert_eq!(RationalMatrix::identity(2).solve(&b).unwrap(), Some(b));
        assert_eq!(m(&[&[1, 1]]).solve(&[int(1)]).unwrap(), Some(vec![int(1), int(0)]));
        assert_eq!(m(&[&[1], &[0]]).solve(&[int(0), int(1)]).unwrap(), None);
        assert!(m(&[&[1]]).solve(&[int(0), int(1)]).is_err());
    }

    #[test]
    fn trace_cases() {
        assert_eq!(RationalMatrix::identity(3).trace().unwrap(), int(3));
        assert_eq!(m(&[&[2, 5], &[7, -2]]).trace().unwrap(), int(0));
        assert_eq!(RationalMatrix::zeros(0, 0).trace().unwrap(), int(0));
        assert!(matches!(
            RationalMatrix::zeros(2, 3).trace(),
            Err(DimensionError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(DimensionError::Singular));
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
        prop::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(move |v| {
            let rows_v = v
                .chunks(cols.max(1))
                .take(rows)
                .map(|c| c.iter().map(|&(n, d)| rational(n, d)).collect())
                .collect();
            if cols == 0 {
                RationalMatrix::zeros(rows, 0)
            } else {
                RationalMatrix::from_rows(rows_v)
            }
        })
    }

    fn any_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn kernel_vectors_are_annihilated(a in any_matrix()) {
            let kernel = a.kernel_basis();
            prop_assert_eq!(kernel.len() + a.rank(), a.cols());
            for v in kernel {
                prop_assert!(crate::algebra::is_zero_vector(&a.mul_vector(&v).unwrap()));
            }
        }

        #[test]
        fn rref_is_idempotent(a in any_matrix()) {
            let once = a.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once);
        }

        #[test]
        fn solutions_are_exact(a in any_matrix(), seed in prop::collection::vec(-3i64..=3, 6)) {
            let x0: Vec<_> = (0..a.cols()).map(|i| int(seed[i % seed.len()])).collect();
            let b = a.mul_vector(&x0).unwrap();
            let x = a.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.mul_vector(&x).unwrap(), b);
        }

        #[test]
        fn trace_is_cyclic((a, b) in (1usize..5, 1usize..5).prop_flat_map(|(n, k)| (small_matrix(n, k), small_matrix(k, n)))) {
            prop_assert_eq!((&a * &b).trace().unwrap(), (&b * &a).trace().unwrap());
        }
    }
}
