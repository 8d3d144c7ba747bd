//! Dense matrices over the rationals.
//!
//! All routines use exact Gauss-Jordan elimination. Pivot columns are chosen
//! left to right and free coordinates are set to zero, so every output
//! (kernel bases, particular solutions, one-sided inverses) is a deterministic
//! function of the input bits.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Row-major dense matrix. `0 x n` and `n x 0` matrices are legal and stand
/// for maps into or out of the zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(alloc::format!("{} entries for a {}x{} matrix", data.len(), rows, cols)));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from integer entries in row-major order.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        RatMatrix { rows, cols, data: entries.iter().map(|&e| rat(e)).collect() }
    }

    pub fn scalar(q: Rat) -> Self {
        RatMatrix { rows: 1, cols: 1, data: vec![q] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, q: &Rat) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| e * q).collect() }
    }

    pub fn try_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &RatMatrix, f: impl Fn(&Rat, &Rat) -> Rat) -> Result<RatMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(alloc::format!(
                "shape {}x{} vs {}x{}",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            )));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Horizontal block `[a | b | ...]`; all blocks need the same row count.
    pub fn hstack(blocks: &[&RatMatrix]) -> Result<RatMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Dimension("hstack row counts differ".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    /// Vertical block; all blocks need the same column count.
    pub fn vstack(blocks: &[&RatMatrix]) -> Result<RatMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack column counts differ".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Ok(RatMatrix { rows, cols, data })
    }

    /// Block diagonal `diag(a, b)`.
    pub fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        let mut out = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    /// Sub-block of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> RatMatrix {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn column(&self, j: usize) -> RatMatrix {
        self.block(0, self.rows, j, j + 1)
    }

    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &RatMatrix) -> RatMatrix {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    /// Stacks the columns into a single column (column-major vectorization).
    pub fn vec_columns(&self) -> RatMatrix {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RatMatrix { rows: self.rows * self.cols, cols: 1, data }
    }

    /// Inverse of [`RatMatrix::vec_columns`].
    pub fn unvec_columns(v: &RatMatrix, rows: usize, cols: usize) -> RatMatrix {
        Self::from_fn(rows, cols, |i, j| v.get(j * rows + i, 0).clone())
    }

    /// Reduced row echelon form and the pivot columns, chosen left to right.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the kernel, one per free column of the row
    /// reduction, in increasing order.
    pub fn kernel_basis(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (col, &f) in free.iter().enumerate() {
            k.set(f, col, Rat::one());
            for (row, &p) in pivots.iter().enumerate() {
                k.set(p, col, -r.get(row, f));
            }
        }
        k
    }

    /// Some `x` with `self * x = b`; free coordinates are zero.
    pub fn solve(&self, b: &RatMatrix) -> Result<RatMatrix> {
        if b.rows != self.rows {
            return Err(Error::Dimension(alloc::format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows,
                b.rows
            )));
        }
        let aug = Self::hstack(&[self, b])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// A retraction `r` with `r * self = I`; requires full column rank.
    pub fn left_inverse(&self) -> Result<RatMatrix> {
        let rank = self.rank();
        if rank != self.cols {
            return Err(Error::NotInjective { rank, cols: self.cols });
        }
        Ok(self.transpose().solve(&Self::identity(self.cols))?.transpose())
    }

    /// A section `s` with `self * s = I`; requires full row rank.
    pub fn right_inverse(&self) -> Result<RatMatrix> {
        let rank = self.rank();
        if rank != self.rows {
            return Err(Error::NotSurjective { rank, rows: self.rows });
        }
        self.solve(&Self::identity(self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        self.right_inverse()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Renders entries as `p/q` (or `p`) strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| alloc::format!("{}", self.get(i, j))).collect()).collect()
    }

    /// Parses rows of `p/q` strings. The expected shape is passed explicitly
    /// because a matrix with zero rows carries no column count.
    pub fn from_strings(rows: usize, cols: usize, entries: &[Vec<String>]) -> Result<RatMatrix> {
        if entries.len() != rows {
            return Err(Error::Dimension(alloc::format!("expected {} rows, found {}", rows, entries.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            if row.len() != cols {
                return Err(Error::Dimension(alloc::format!("expected {} columns, found {}", cols, row.len())));
            }
            for e in row {
                data.push(parse_rat(e)?);
            }
        }
        Ok(RatMatrix { rows, cols, data })
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(alloc::format!("not a rational number: {s:?}"));
    let q = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Rat::new(n, d)
        }
        None => Rat::from_integer(s.parse().map_err(|_| bad())?),
    };
    debug_assert!(q.denom().is_positive());
    Ok(q)
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_strings()).finish()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods report it.

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_add(rhs).expect("matrix sum shape")
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }
}

/// Linear equations `A_i * X * B_i = C_i` in one unknown matrix `X`.
///
/// Solved through the column-major identity `vec(A X B) = (B^T kron A) vec(X)`.
#[derive(Debug, Clone)]
pub struct MatrixEquations {
    rows: usize,
    cols: usize,
    lhs: Vec<RatMatrix>,
    rhs: Vec<RatMatrix>,
}

impl MatrixEquations {
    pub fn new(rows: usize, cols: usize) -> Self {
        MatrixEquations { rows, cols, lhs: Vec::new(), rhs: Vec::new() }
    }

    /// Adds `a * X * b = c`.
    pub fn push(&mut self, a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> Result<&mut Self> {
        if a.cols != self.rows || b.rows != self.cols || c.rows != a.rows || c.cols != b.cols {
            return Err(Error::Dimension("matrix equation shape".into()));
        }
        self.lhs.push(b.transpose().kron(a));
        self.rhs.push(c.vec_columns());
        Ok(self)
    }

    pub fn solve(&self) -> Result<RatMatrix> {
        let n = self.rows * self.cols;
        let lhs: Vec<&RatMatrix> = self.lhs.iter().collect();
        let rhs: Vec<&RatMatrix> = self.rhs.iter().collect();
        let a = if lhs.is_empty() { RatMatrix::zeros(0, n) } else { RatMatrix::vstack(&lhs)? };
        let b = if rhs.is_empty() { RatMatrix::zeros(0, 1) } else { RatMatrix::vstack(&rhs)? };
        let x = a.solve(&b)?;
        Ok(RatMatrix::unvec_columns(&x, self.rows, self.cols))
    }
}
