//! Free (n,k)-codes over Z/mZ: validation, encoding, control matrices,
//! dual codes, and minimal distance.
//!
//! A control matrix H is certified by exactly two conditions: G*H^t = 0
//! and the rows of H are linearly independent. Over a local ring H comes
//! from the standard form (I_k | P) as (-P^t | I_{n-k}); over a composite
//! modulus it is assembled from the local components by entrywise CRT
//! lifting and then re-certified.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::matrix::{self, MatrixError, MatrixZm};
use crate::ring::{self, RingError, RingSpec};

/// Default cap on brute-force vector enumerations.
pub const DEFAULT_VECTOR_CAP: u64 = 1 << 24;

/// Default cap on the column-subset size in the dependency search.
pub const DEFAULT_COLUMN_SEARCH_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator rows do not form a basis")]
    RowsNotFree,
    #[error("rank k = {k} must satisfy 1 <= k < n = {n}")]
    RankRange { k: usize, n: usize },
    #[error("ring modulus {ring} does not match matrix modulus {matrix}")]
    ModulusMismatch { ring: u64, matrix: u64 },
    #[error("enumerating {base}^{len} vectors exceeds the cap of {cap}")]
    CapExceeded { base: u64, len: usize, cap: u64 },
    #[error("no column dependency found among subsets of size up to {cap}")]
    ColumnCapExceeded { cap: usize },
    #[error("internal error: constructed control matrix failed its certificate")]
    ControlCertificateFailed,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Number of nonzero coordinates.
pub fn hamming_weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn dot_mod(a: &[u64], b: &[u64], m: u64) -> u64 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| ring::add_mod(acc, ring::mul_mod(x, y, m), m))
}

fn ensure_enumerable(base: u64, len: usize, cap: u64) -> Result<(), CodeError> {
    match (base as u128).checked_pow(len as u32) {
        Some(size) if size <= cap as u128 => Ok(()),
        _ => Err(CodeError::CapExceeded { base, len, cap }),
    }
}

/// All vectors orthogonal to every row of `g`, by exhaustive enumeration
/// of (Z/mZ)^n in lexicographic order. Orthogonality to the rows extends
/// to the whole row span by bilinearity.
pub fn dual_of_span(g: &MatrixZm, cap: u64) -> Result<Vec<Vec<u64>>, CodeError> {
    let m = g.modulus();
    ensure_enumerable(m, g.cols(), cap)?;
    Ok(ring::enumerate_vectors(m, g.cols())
        .filter(|y| (0..g.rows()).all(|r| dot_mod(g.row(r), y, m) == 0))
        .collect())
}

/// All vectors of (Z/mZ)^len orthogonal to every vector in `set`.
pub fn dual_of_set(
    set: &[Vec<u64>],
    modulus: u64,
    len: usize,
    cap: u64,
) -> Result<Vec<Vec<u64>>, CodeError> {
    ensure_enumerable(modulus, len, cap)?;
    Ok(ring::enumerate_vectors(modulus, len)
        .filter(|y| set.iter().all(|x| dot_mod(x, y, modulus) == 0))
        .collect())
}

/// A free (n,k)-code over Z/mZ, held as a generator matrix whose rows are
/// a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    ring: RingSpec,
    generator: MatrixZm,
}

impl LinearCode {
    /// Validates and wraps a generator matrix: the modulus must match the
    /// ring, the rank must satisfy 1 <= k < n, and the rows must be free.
    pub fn new(ring: RingSpec, generator: MatrixZm) -> Result<Self, CodeError> {
        if generator.modulus() != ring.modulus() {
            return Err(CodeError::ModulusMismatch {
                ring: ring.modulus(),
                matrix: generator.modulus(),
            });
        }
        let (k, n) = (generator.rows(), generator.cols());
        if k >= n {
            return Err(CodeError::RankRange { k, n });
        }
        if !matrix::rows_are_free(&generator, &ring) {
            return Err(CodeError::RowsNotFree);
        }
        Ok(Self { ring, generator })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generator(&self) -> &MatrixZm {
        &self.generator
    }

    /// Code length n.
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// Code rank k.
    pub fn rank(&self) -> usize {
        self.generator.rows()
    }

    /// Number of codewords m^k, if it fits in a u128.
    pub fn cardinality(&self) -> Option<u128> {
        (self.ring.modulus() as u128).checked_pow(self.rank() as u32)
    }

    /// `message * G`. Messages are length-k vectors of residues.
    pub fn encode(&self, message: &[u64]) -> Result<Vec<u64>, CodeError> {
        Ok(self.generator.row_vec_mul(message)?)
    }

    /// Builds a control matrix H with G*H^t = 0 and free rows.
    ///
    /// Both conditions are re-verified on the result before it is
    /// returned; a failure there is an internal error, never silently
    /// ignored.
    pub fn control_matrix(&self) -> Result<ControlMatrix, CodeError> {
        let h = if self.ring.is_local() {
            control_matrix_local(&self.ring, &self.generator)?
        } else {
            // One control matrix per local component, then entrywise CRT
            // lift back into Z/mZ. Component generators are free because
            // freeness was checked per prime factor at construction.
            let components = (0..self.ring.component_count())
                .map(|i| {
                    let local = self.ring.component_ring(i)?;
                    let g_i = self.generator.reduced_mod(local.modulus());
                    control_matrix_local(&local, &g_i)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (k, n) = (self.rank(), self.length());
            MatrixZm::from_fn(n - k, n, self.ring.modulus(), |r, c| {
                let residues: Vec<u64> = components.iter().map(|h_i| h_i.get(r, c)).collect();
                self.ring
                    .crt_lift(&residues)
                    .expect("one residue per component")
            })
        };
        if !self.verify_control(&h) {
            return Err(CodeError::ControlCertificateFailed);
        }
        Ok(ControlMatrix { matrix: h })
    }

    /// True iff `h` is (n-k) x n over the same ring, G*h^t = 0, and the
    /// rows of `h` are linearly independent.
    pub fn verify_control(&self, h: &MatrixZm) -> bool {
        h.modulus() == self.ring.modulus()
            && h.rows() == self.length() - self.rank()
            && h.cols() == self.length()
            && self
                .generator
                .mul(&h.transpose())
                .map(|product| product.is_zero())
                .unwrap_or(false)
            && matrix::rows_are_free(h, &self.ring)
    }

    /// The full codeword set, enumerated message by message.
    pub fn codewords(&self, cap: u64) -> Result<BTreeSet<Vec<u64>>, CodeError> {
        ensure_enumerable(self.ring.modulus(), self.rank(), cap)?;
        ring::enumerate_vectors(self.ring.modulus(), self.rank())
            .map(|u| self.encode(&u))
            .collect()
    }

    /// The dual code as an explicit vector set, by exhaustive enumeration.
    pub fn dual_brute_force(&self, cap: u64) -> Result<Vec<Vec<u64>>, CodeError> {
        dual_of_span(&self.generator, cap)
    }

    /// Minimal Hamming weight over the nonzero codewords.
    pub fn min_distance_enum(&self, cap: u64) -> Result<usize, CodeError> {
        ensure_enumerable(self.ring.modulus(), self.rank(), cap)?;
        let mut best = usize::MAX;
        for message in ring::enumerate_vectors(self.ring.modulus(), self.rank()).skip(1) {
            let weight = hamming_weight(&self.encode(&message)?);
            if weight < best {
                best = weight;
                if best == 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// True iff the dual of the dual equals the code itself, both sides
    /// computed by exhaustive enumeration.
    pub fn biorthogonality_check(&self, cap: u64) -> Result<bool, CodeError> {
        let dual = self.dual_brute_force(cap)?;
        let double_dual = dual_of_set(&dual, self.ring.modulus(), self.length(), cap)?;
        let codewords = self.codewords(cap)?;
        Ok(double_dual.len() == codewords.len()
            && double_dual.iter().all(|x| codewords.contains(x)))
    }

    /// Summary with the correction capacity implied by a known minimal
    /// distance.
    pub fn report(&self, minimal_distance: usize) -> CodeReport {
        CodeReport {
            minimal_distance,
            correction_capacity: (minimal_distance - 1) / 2,
            cardinality: self.cardinality(),
        }
    }
}

fn control_matrix_local(ring: &RingSpec, g: &MatrixZm) -> Result<MatrixZm, CodeError> {
    let sf = matrix::standard_form(g, ring)?;
    let (k, n) = (g.rows(), g.cols());
    // H = (-P^t | I_{n-k}) in standard-form coordinates, then undo the
    // column permutation so H checks against the original G.
    let h_std = sf
        .p
        .transpose()
        .neg()
        .hstack(&MatrixZm::identity(n - k, g.modulus()))?;
    Ok(h_std.unpermute_columns(&sf.column_permutation))
}

/// A certified control matrix: (n-k) x n with G*H^t = 0 and free rows.
///
/// Only produced by [`LinearCode::control_matrix`], which verifies both
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlMatrix {
    matrix: MatrixZm,
}

impl ControlMatrix {
    pub fn matrix(&self) -> &MatrixZm {
        &self.matrix
    }

    /// Minimal distance as the minimal number of dependent columns,
    /// searching subsets of size up to `max_subset_size`.
    pub fn min_distance_columns(&self, max_subset_size: usize) -> Result<usize, CodeError> {
        matrix::min_dependent_columns(&self.matrix, max_subset_size)
            .ok_or(CodeError::ColumnCapExceeded { cap: max_subset_size })
    }
}

/// Key figures of a code: minimal distance d, correction capacity
/// t = floor((d-1)/2), and cardinality m^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub minimal_distance: usize,
    pub correction_capacity: usize,
    pub cardinality: Option<u128>,
}
