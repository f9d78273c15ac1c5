//! Linear codes over finite rings Z/mZ.
//!
//! The crate builds free (n,k)-codes from generator matrices, derives
//! certified control matrices (over local rings directly, over composite
//! moduli through the CRT idempotent decomposition), computes minimal
//! distances by codeword enumeration and by column-dependency search, and
//! decodes through a weight-bounded syndrome table.

pub mod code;
pub mod decoder;
pub mod matrix;
pub mod ring;

pub use code::{
    dual_of_set, dual_of_span, hamming_weight, CodeError, CodeReport, ControlMatrix, LinearCode,
    DEFAULT_COLUMN_SEARCH_CAP, DEFAULT_VECTOR_CAP,
};
pub use decoder::{
    build_table, decode, enumerate_low_weight, is_codeword, syndrome, DecodeError, DecodeOutcome,
    Syndrome, SyndromeTable,
};
pub use matrix::{min_dependent_columns, rows_are_free, standard_form, MatrixError, MatrixZm, StandardForm};
pub use ring::{enumerate_vectors, PrimePower, Residue, RingError, RingSpec, MAX_MODULUS};
