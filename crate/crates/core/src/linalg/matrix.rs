use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::Dimension {
                    context: "Matrix::from_rows",
                    expected: ncols,
                    got: row.len(),
                });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * s.clone()).collect(),
        }
    }

    /// Matrix-vector product; zero entries are skipped so signed-permutation
    /// matrices multiply in linear time.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "matvec dimension mismatch");
        let mut out = vec![T::zero(); self.rows];
        for r in 0..self.rows {
            let row = self.row(r);
            let mut acc = T::zero();
            for (a, x) in row.iter().zip(v) {
                if a.is_zero() || x.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * x.clone();
            }
            out[r] = acc;
        }
        out
    }

    /// Stacks square blocks along the diagonal.
    pub fn block_diag(blocks: &[&Matrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows()).sum();
        let m: usize = blocks.iter().map(|b| b.cols()).sum();
        let mut out = Self::zeros(n, m);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    if !b[(r, c)].is_zero() {
                        out[(ro + r, co + c)] = b[(r, c)].clone();
                    }
                }
            }
            ro += b.rows();
            co += b.cols();
        }
        out
    }

    /// Flattens the entries into a single row-major vector.
    pub fn to_vec(&self) -> Vec<T> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, v: Vec<T>) -> Self {
        Self::new(rows, cols, v)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.entries[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    /// Zero-skipping product: sparse operands (signed permutations, echelon
    /// rows) multiply far below the cubic bound.
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = rhs.row(k);
                for (c, b) in rhs_row.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out[(r, c)].clone();
                    out[(r, c)] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}
