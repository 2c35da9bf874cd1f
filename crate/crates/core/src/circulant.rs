//! Circulant matrices described by their first row, and the two-parameter
//! family `A(n, ±a, b)` with `a` on the diagonal and `b` everywhere else.
//!
//! Row `i` (zero-based) of `Circ(α_1, …, α_n)` is the first row rotated right
//! by `i` places, so `A[i][j] = α[(j - i) mod n]`. Nothing here builds the
//! `n × n` matrix unless [`CirculantSpec::dense`] is called.

use crate::error::{Error, Result};
use crate::scalar::{sum_ltr, Scalar};

/// Default bound on `n` for [`CirculantSpec::dense`].
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// Matrix-free access to a square operator. Implemented by both circulant
/// descriptions so the oracles can use the `O(n)` path for `A(n, ±a, b)`.
pub trait LinearOperator<T: Scalar>: Sync {
    fn dim(&self) -> usize;

    /// `out = A x`. Slices must have length `dim()`.
    fn apply_into(&self, x: &[T], out: &mut [T]);

    /// `out = Aᵀ x`.
    fn apply_transpose_into(&self, x: &[T], out: &mut [T]);

    fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.dim(), x.len())?;
        let mut out = vec![T::zero(); self.dim()];
        self.apply_into(x, &mut out);
        Ok(out)
    }

    fn apply_transpose(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.dim(), x.len())?;
        let mut out = vec![T::zero(); self.dim()];
        self.apply_transpose_into(x, &mut out);
        Ok(out)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `Circ(α_1, …, α_n)`, stored as its first row.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantSpec<T> {
    first_row: Vec<T>,
}

impl<T: Scalar> CirculantSpec<T> {
    pub fn new(first_row: Vec<T>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::EmptyRow);
        }
        if first_row.iter().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite {
                what: "circulant entries",
            });
        }
        Ok(Self { first_row })
    }

    /// `Circ(1, 0, …, 0)`.
    pub fn identity(n: usize) -> Result<Self> {
        let mut row = vec![T::zero(); n];
        if let Some(first) = row.first_mut() {
            *first = T::one();
        }
        Self::new(row)
    }

    pub fn n(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[T] {
        &self.first_row
    }

    /// `α_1 + ⋯ + α_n`, summed left to right.
    pub fn row_sum(&self) -> T {
        sum_ltr(self.first_row.iter().copied())
    }

    /// `|α_1| + ⋯ + |α_n|`, summed left to right.
    pub fn abs_row_sum(&self) -> T {
        sum_ltr(self.first_row.iter().map(|a| a.abs()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_row.iter().all(|&a| a >= T::zero())
    }

    /// Entry `A[i][j]` (zero-based).
    pub fn entry(&self, i: usize, j: usize) -> T {
        let n = self.n();
        self.first_row[(j + n - i % n) % n]
    }

    /// First row of `Aᵀ`: `(α_1, α_n, α_{n-1}, …, α_2)`.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        let row = (0..n).map(|k| self.first_row[(n - k) % n]).collect();
        Self { first_row: row }
    }

    /// Whether the first row equals `(±a, b, …, b)` exactly.
    pub fn as_two_param(&self) -> Option<TwoParamSpec<T>> {
        let (&diag, rest) = self.first_row.split_first()?;
        let b = rest.first().copied().unwrap_or(T::zero());
        if rest.iter().any(|&x| x != b) {
            return None;
        }
        Some(canonicalize(self.n(), diag, b).expect("entries are finite"))
    }

    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        self.apply(x)
    }

    pub fn dense(&self) -> Result<DenseMatrix<T>> {
        self.dense_with_cap(DEFAULT_DENSE_CAP)
    }

    pub fn dense_with_cap(&self, cap: usize) -> Result<DenseMatrix<T>> {
        let n = self.n();
        if n > cap {
            return Err(Error::TooLarge { n, cap });
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend((0..n).map(|j| self.entry(i, j)));
        }
        Ok(DenseMatrix { n, data })
    }

    pub fn cast<U: Scalar>(&self) -> CirculantSpec<U> {
        CirculantSpec {
            first_row: self
                .first_row
                .iter()
                .map(|a| U::lit(a.to_f64_lossy()))
                .collect(),
        }
    }
}

impl<T: Scalar> LinearOperator<T> for CirculantSpec<T> {
    fn dim(&self) -> usize {
        self.n()
    }

    fn apply_into(&self, x: &[T], out: &mut [T]) {
        let n = self.n();
        for (i, y) in out.iter_mut().enumerate() {
            // A[i][j] = α[(j - i) mod n]
            *y = sum_ltr((0..n).map(|j| self.first_row[(j + n - i) % n] * x[j]));
        }
    }

    fn apply_transpose_into(&self, x: &[T], out: &mut [T]) {
        let n = self.n();
        for (i, y) in out.iter_mut().enumerate() {
            *y = sum_ltr((0..n).map(|j| self.first_row[(i + n - j) % n] * x[j]));
        }
    }
}

/// Sign of the diagonal in `A(n, ±a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagonalSign {
    Plus,
    Minus,
}

impl DiagonalSign {
    pub fn apply<T: Scalar>(self, x: T) -> T {
        match self {
            DiagonalSign::Plus => x,
            DiagonalSign::Minus => -x,
        }
    }
}

/// `A(n, sign·a, b)` with `a, b ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoParamSpec<T> {
    n: usize,
    a: T,
    b: T,
    sign: DiagonalSign,
}

impl<T: Scalar> TwoParamSpec<T> {
    pub fn new(n: usize, a: T, b: T, sign: DiagonalSign) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRow);
        }
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite { what: "a and b" });
        }
        if a < T::zero() {
            return Err(Error::Negative { what: "a" });
        }
        if b < T::zero() {
            return Err(Error::Negative { what: "b" });
        }
        // normalise -0.0 so that equality and printing behave
        Ok(Self {
            n,
            a: a.abs(),
            b: b.abs(),
            sign,
        })
    }

    /// `A(n, -a, b)`.
    pub fn minus(n: usize, a: T, b: T) -> Result<Self> {
        Self::new(n, a, b, DiagonalSign::Minus)
    }

    /// `A(n, a, b)`.
    pub fn plus(n: usize, a: T, b: T) -> Result<Self> {
        Self::new(n, a, b, DiagonalSign::Plus)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn sign(&self) -> DiagonalSign {
        self.sign
    }

    /// The diagonal entry `sign·a`.
    pub fn diagonal(&self) -> T {
        self.sign.apply(self.a)
    }

    /// `(sign·a, b, …, b)` as a general circulant.
    pub fn expand(&self) -> CirculantSpec<T> {
        let mut row = vec![self.b; self.n];
        row[0] = self.diagonal();
        CirculantSpec { first_row: row }
    }

    /// `(n-1)b + a`: the maximal absolute row sum, whatever the sign.
    pub fn abs_row_sum(&self) -> T {
        T::from_usize_lossy(self.n - 1) * self.b + self.a
    }

    pub fn regime(&self) -> crate::Regime {
        crate::Regime::classify(self.n, self.a, self.b)
    }

    pub fn cast<U: Scalar>(&self) -> TwoParamSpec<U> {
        TwoParamSpec {
            n: self.n,
            a: U::lit(self.a.to_f64_lossy()),
            b: U::lit(self.b.to_f64_lossy()),
            sign: self.sign,
        }
    }
}

impl<T: Scalar> LinearOperator<T> for TwoParamSpec<T> {
    fn dim(&self) -> usize {
        self.n
    }

    /// `y_i = b·Σx + (sign·a − b)·x_i`.
    fn apply_into(&self, x: &[T], out: &mut [T]) {
        let total = sum_ltr(x.iter().copied());
        let shift = self.diagonal() - self.b;
        for (y, &xi) in out.iter_mut().zip(x) {
            *y = self.b * total + shift * xi;
        }
    }

    fn apply_transpose_into(&self, x: &[T], out: &mut [T]) {
        self.apply_into(x, out)
    }
}

/// Brings arbitrary real `(n, a, b)` to a `TwoParamSpec` with the same
/// induced norms for every `p`.
///
/// With `b ≥ 0` the matrix is kept and only the diagonal sign is split off.
/// With `b < 0` the whole matrix is negated first, which leaves every
/// induced norm unchanged.
pub fn canonicalize<T: Scalar>(n: usize, a: T, b: T) -> Result<TwoParamSpec<T>> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite { what: "a and b" });
    }
    let (a, b) = if b < T::zero() { (-a, -b) } else { (a, b) };
    let sign = if a < T::zero() {
        DiagonalSign::Minus
    } else {
        DiagonalSign::Plus
    };
    TwoParamSpec::new(n, a.abs(), b.abs(), sign)
}

/// Row-major square matrix, used by oracles and tests.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            check_len(n, row.len())?;
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend((0..n).map(|j| self.get(j, i)));
        }
        Self { n, data }
    }

    /// `AᵀA`.
    pub fn gram(&self) -> Self {
        let n = self.n;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = sum_ltr((0..n).map(|k| self.get(k, i) * self.get(k, j)));
            }
        }
        Self { n, data }
    }

    /// Max absolute row sum (the `∞ → ∞` norm).
    pub fn max_abs_row_sum(&self) -> T {
        (0..self.n)
            .map(|i| sum_ltr(self.row(i).iter().map(|a| a.abs())))
            .fold(T::zero(), T::max)
    }

    /// Max absolute column sum (the `1 → 1` norm).
    pub fn max_abs_col_sum(&self) -> T {
        self.transpose().max_abs_row_sum()
    }
}

impl<T: Scalar> LinearOperator<T> for DenseMatrix<T> {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply_into(&self, x: &[T], out: &mut [T]) {
        for (i, y) in out.iter_mut().enumerate() {
            *y = sum_ltr(self.row(i).iter().zip(x).map(|(&a, &v)| a * v));
        }
    }

    fn apply_transpose_into(&self, x: &[T], out: &mut [T]) {
        for (j, y) in out.iter_mut().enumerate() {
            *y = sum_ltr((0..self.n).map(|i| self.get(i, j) * x[i]));
        }
    }
}
