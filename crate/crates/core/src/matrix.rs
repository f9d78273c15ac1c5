//! Dense matrices over Z/mZ with exact arithmetic.
//!
//! Freeness of a row family is decided per prime factor: over a local ring
//! Z/p^e a family is a basis of its span exactly when its image mod p is
//! linearly independent, and a composite modulus reduces to its local
//! components. Standard-form reduction performs Gauss-Jordan elimination
//! with unit pivots, recording the row transform and any column swaps.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::ring::{self, RingSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, got: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("modulus mismatch: {left} against {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rows do not form a basis: ran out of unit pivots")]
    NotFree,
    #[error("standard form requires a local ring, but modulus {0} is composite")]
    CompositeModulus(u64),
}

/// A rows x cols matrix of canonical residues with a fixed modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixZm {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>, // row-major
}

impl MatrixZm {
    /// Builds a matrix from row slices, reducing every entry mod `modulus`.
    pub fn from_rows(modulus: u64, rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        assert!(modulus >= 2, "modulus must be at least 2");
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::EmptyMatrix);
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::RaggedRows { row: i, expected: cols, got: row.len() });
            }
        }
        let entries = rows.iter().flatten().map(|&x| x % modulus).collect();
        Ok(Self { rows: rows.len(), cols, modulus, entries })
    }

    /// Unlike [`from_rows`](Self::from_rows), zero dimensions are allowed
    /// here: derived blocks such as the P part of a square standard form
    /// can be empty.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        modulus: u64,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c) % modulus)
            .collect();
        Self { rows, cols, modulus, entries }
    }

    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        Self::from_fn(rows, cols, modulus, |_, _| 0)
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        Self::from_fn(n, n, modulus, |r, c| u64::from(r == c))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        assert!(row < self.rows && col < self.cols, "matrix index out of range");
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        assert!(row < self.rows, "row index out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u64> {
        assert!(col < self.cols, "column index out of range");
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.modulus, |r, c| self.get(c, r))
    }

    /// Entrywise negation `x -> (m - x) mod m`.
    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, self.modulus, |r, c| {
            ring::neg_mod(self.get(r, c), self.modulus)
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dimension_mismatch(other));
        }
        Ok(Self::from_fn(self.rows, self.cols, self.modulus, |r, c| {
            ring::add_mod(self.get(r, c), other.get(r, c), self.modulus)
        }))
    }

    /// Exact matrix product, entries reduced mod m.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_modulus(other)?;
        if self.cols != other.rows {
            return Err(self.dimension_mismatch(other));
        }
        Ok(Self::from_fn(self.rows, other.cols, self.modulus, |r, c| {
            let mut acc = 0;
            for i in 0..self.cols {
                acc = ring::add_mod(
                    acc,
                    ring::mul_mod(self.get(r, i), other.get(i, c), self.modulus),
                    self.modulus,
                );
            }
            acc
        }))
    }

    /// Row vector times matrix: `u * M` for `u` of length `rows`.
    pub fn row_vec_mul(&self, u: &[u64]) -> Result<Vec<u64>, MatrixError> {
        if u.len() != self.rows {
            return Err(MatrixError::LengthMismatch { expected: self.rows, got: u.len() });
        }
        Ok((0..self.cols)
            .map(|c| {
                let mut acc = 0;
                for (r, &coeff) in u.iter().enumerate() {
                    acc = ring::add_mod(
                        acc,
                        ring::mul_mod(coeff, self.get(r, c), self.modulus),
                        self.modulus,
                    );
                }
                acc
            })
            .collect())
    }

    /// Matrix times column vector: `M * x^t` for `x` of length `cols`.
    pub fn mul_col_vec(&self, x: &[u64]) -> Result<Vec<u64>, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::LengthMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for (c, &value) in x.iter().enumerate() {
                    acc = ring::add_mod(
                        acc,
                        ring::mul_mod(self.get(r, c), value, self.modulus),
                        self.modulus,
                    );
                }
                acc
            })
            .collect())
    }

    /// Horizontal concatenation `(self | right)`.
    pub fn hstack(&self, right: &Self) -> Result<Self, MatrixError> {
        self.check_modulus(right)?;
        if self.rows != right.rows {
            return Err(self.dimension_mismatch(right));
        }
        Ok(Self::from_fn(self.rows, self.cols + right.cols, self.modulus, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                right.get(r, c - self.cols)
            }
        }))
    }

    /// Gathers columns: output column `j` is `self` column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        debug_assert!(is_permutation(perm, self.cols));
        Self::from_fn(self.rows, self.cols, self.modulus, |r, c| self.get(r, perm[c]))
    }

    /// Scatters columns: output column `perm[j]` is `self` column `j`;
    /// inverse of [`permute_columns`](Self::permute_columns).
    pub fn unpermute_columns(&self, perm: &[usize]) -> Self {
        debug_assert!(is_permutation(perm, self.cols));
        let mut inverse = vec![0; self.cols];
        for (j, &target) in perm.iter().enumerate() {
            inverse[target] = j;
        }
        self.permute_columns(&inverse)
    }

    /// Entrywise reduction into Z/qZ; the natural ring map when q divides m.
    pub fn reduced_mod(&self, q: u64) -> Self {
        Self::from_fn(self.rows, self.cols, q, |r, c| self.get(r, c))
    }

    fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.cols + col] = value % self.modulus;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn scale_row(&mut self, row: usize, factor: u64) {
        for c in 0..self.cols {
            let v = ring::mul_mod(self.get(row, c), factor, self.modulus);
            self.set(row, c, v);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: u64) {
        for c in 0..self.cols {
            let v = ring::add_mod(
                self.get(dst, c),
                ring::mul_mod(factor, self.get(src, c), self.modulus),
                self.modulus,
            );
            self.set(dst, c, v);
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<(), MatrixError> {
        if self.modulus != other.modulus {
            return Err(MatrixError::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    fn dimension_mismatch(&self, other: &Self) -> MatrixError {
        MatrixError::DimensionMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }
}

impl fmt::Display for MatrixZm {
    /// One row per line, entries comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(r).iter().join(","))?;
        }
        Ok(())
    }
}

fn is_permutation(perm: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    perm.len() == n
        && perm.iter().all(|&p| {
            p < n && !std::mem::replace(&mut seen[p], true)
        })
}

/// Row rank of the matrix reduced mod a prime, by Gaussian elimination
/// over the field Z/pZ.
fn rank_mod_prime(m: &MatrixZm, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows()).map(|r| m.row(r).iter().map(|&x| x % p).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == m.rows() {
            break;
        }
        let Some(pivot) = (rank..m.rows()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = ring::inverse_mod(a[rank][col], p).expect("nonzero residue mod prime is a unit");
        for c in col..m.cols() {
            a[rank][c] = ring::mul_mod(a[rank][c], inv, p);
        }
        for r in rank + 1..m.rows() {
            let factor = a[r][col];
            if factor != 0 {
                for c in col..m.cols() {
                    let sub = ring::mul_mod(factor, a[rank][c], p);
                    a[r][c] = ring::sub_mod(a[r][c], sub, p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// True iff the rows of `m` are linearly independent over Z/mZ.
///
/// Criterion: for every prime factor p of the modulus, the reduction of
/// `m` mod p has full row rank. Over a local component this is exactly
/// independence of the image mod the maximal ideal; composite moduli are
/// checked component by component.
pub fn rows_are_free(m: &MatrixZm, ring: &RingSpec) -> bool {
    assert_eq!(m.modulus(), ring.modulus(), "matrix and ring modulus differ");
    ring.factors().iter().all(|pp| rank_mod_prime(m, pp.prime) == m.rows())
}

/// Result of reducing a free generator matrix to `(I_k | P)` over a local
/// ring.
///
/// Invariant: `transform * G`, with columns gathered through
/// `column_permutation`, equals `(I_k | P)` entry for entry, and
/// `transform` is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    /// The k x (n-k) right block.
    pub p: MatrixZm,
    /// Maps standard-form column positions back to original columns.
    pub column_permutation: Vec<usize>,
    /// The accumulated invertible row transform (k x k).
    pub transform: MatrixZm,
}

/// Gauss-Jordan reduction of a free matrix over a local ring to
/// `(I_k | P)`, using unit pivots only.
///
/// Pivot selection scans columns left to right and rows top to bottom for
/// the first unit (an entry nonzero mod p); columns without one are
/// swapped towards the back and the swap recorded. Failing to find k unit
/// pivots means the rows were not a basis.
pub fn standard_form(g: &MatrixZm, ring: &RingSpec) -> Result<StandardForm, MatrixError> {
    assert_eq!(g.modulus(), ring.modulus(), "matrix and ring modulus differ");
    if !ring.is_local() {
        return Err(MatrixError::CompositeModulus(ring.modulus()));
    }
    let p = ring.factors()[0].prime;
    let (k, n) = (g.rows(), g.cols());
    let mut work = g.clone();
    let mut transform = MatrixZm::identity(k, g.modulus());
    let mut permutation: Vec<usize> = (0..n).collect();

    for i in 0..k {
        // First unit at column >= i, scanning row-major within each column.
        let pivot = (i..n)
            .flat_map(|j| (i..k).map(move |r| (r, j)))
            .find(|&(r, j)| work.get(r, j) % p != 0);
        let Some((r, j)) = pivot else {
            return Err(MatrixError::NotFree);
        };
        work.swap_cols(i, j);
        permutation.swap(i, j);
        work.swap_rows(i, r);
        transform.swap_rows(i, r);
        let inv = ring
            .inverse(work.get(i, i))
            .expect("pivot was selected to be a unit");
        work.scale_row(i, inv);
        transform.scale_row(i, inv);
        for r2 in 0..k {
            if r2 != i {
                let factor = ring.neg(work.get(r2, i));
                if factor != 0 {
                    work.add_scaled_row(r2, i, factor);
                    transform.add_scaled_row(r2, i, factor);
                }
            }
        }
    }

    let p_block = MatrixZm::from_fn(k, n - k, g.modulus(), |r, c| work.get(r, k + c));
    Ok(StandardForm { p: p_block, column_permutation: permutation, transform })
}

/// Smallest `s <= max_size` such that some `s` columns admit a dependency
/// with every coefficient nonzero; `None` if no dependency of size up to
/// `max_size` exists.
///
/// A dependency with a zero coefficient would already appear at a smaller
/// subset size, so restricting the coefficient search to nonzero symbols
/// loses nothing.
pub fn min_dependent_columns(m: &MatrixZm, max_size: usize) -> Option<usize> {
    let modulus = m.modulus();
    let columns: Vec<Vec<u64>> = (0..m.cols()).map(|c| m.column(c)).collect();
    for size in 1..=max_size.min(m.cols()) {
        for subset in (0..m.cols()).combinations(size) {
            // Coefficient tuples with every coordinate in [1, m).
            for offsets in ring::enumerate_vectors(modulus - 1, size) {
                let dependent = (0..m.rows()).all(|r| {
                    let mut acc = 0;
                    for (&col, &offset) in subset.iter().zip(&offsets) {
                        acc = ring::add_mod(
                            acc,
                            ring::mul_mod(offset + 1, columns[col][r], modulus),
                            modulus,
                        );
                    }
                    acc == 0
                });
                if dependent {
                    return Some(size);
                }
            }
        }
    }
    None
}
