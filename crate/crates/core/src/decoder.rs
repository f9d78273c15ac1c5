//! Syndrome decoding.
//!
//! The syndrome of a word is H*x^t for a control matrix H; it vanishes
//! exactly on codewords, and two words share a syndrome exactly when they
//! differ by a codeword. Every error of weight at most t = floor((d-1)/2)
//! is the unique weight-bounded vector with its syndrome, so a table from
//! syndromes to low-weight errors decodes any such error in one lookup.
//! The table is built eagerly; a syndrome collision between two distinct
//! low-weight vectors proves the requested t exceeds the code's true
//! correction capacity and is reported as a hard error.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::code::ControlMatrix;
use crate::ring::{self, RingSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(
        "vectors {first:?} and {second:?} share a syndrome: t = {t} exceeds the correction capacity"
    )]
    DuplicateSyndrome { t: usize, first: Vec<u64>, second: Vec<u64> },
    #[error("syndrome table exceeds the cap of {cap} entries")]
    TableCapExceeded { cap: u64 },
}

/// The value H*x^t: a length n-k vector of canonical residues, usable as
/// an ordered or hashed key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syndrome(Vec<u64>);

impl Syndrome {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// Computes H*x^t. Additive in x.
pub fn syndrome(h: &ControlMatrix, x: &[u64]) -> Result<Syndrome, DecodeError> {
    let matrix = h.matrix();
    if x.len() != matrix.cols() {
        return Err(DecodeError::LengthMismatch { expected: matrix.cols(), got: x.len() });
    }
    Ok(Syndrome(matrix.mul_col_vec(x).expect("length checked above")))
}

/// True iff the syndrome of `x` vanishes. `x` must have length n.
pub fn is_codeword(h: &ControlMatrix, x: &[u64]) -> bool {
    syndrome(h, x).expect("x must have the code length").is_zero()
}

/// Streams every vector of (Z/mZ)^n with Hamming weight at most `t`,
/// in a fixed order: weight ascending, then support positions
/// lexicographic, then symbol values lexicographic.
///
/// Yields exactly `sum over w of C(n,w) * (m-1)^w` distinct vectors.
pub fn enumerate_low_weight(n: usize, t: usize, ring: &RingSpec) -> LowWeightVectors {
    assert!(t <= n, "weight bound t = {t} exceeds the length n = {n}");
    LowWeightVectors {
        n,
        modulus: ring.modulus(),
        max_weight: t,
        weight: 0,
        support: Vec::new(),
        symbols: Vec::new(),
        done: false,
    }
}

/// See [`enumerate_low_weight`].
pub struct LowWeightVectors {
    n: usize,
    modulus: u64,
    max_weight: usize,
    weight: usize,
    support: Vec<usize>,
    symbols: Vec<u64>,
    done: bool,
}

impl LowWeightVectors {
    fn advance(&mut self) {
        // Symbol odometer, rightmost position fastest, digits in [1, m).
        for i in (0..self.weight).rev() {
            self.symbols[i] += 1;
            if self.symbols[i] < self.modulus {
                return;
            }
            self.symbols[i] = 1;
        }
        if next_combination(&mut self.support, self.n) {
            return;
        }
        self.weight += 1;
        if self.weight > self.max_weight {
            self.done = true;
            return;
        }
        self.support = (0..self.weight).collect();
        self.symbols = vec![1; self.weight];
    }
}

impl Iterator for LowWeightVectors {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let mut vector = vec![0; self.n];
        for (&position, &symbol) in self.support.iter().zip(&self.symbols) {
            vector[position] = symbol;
        }
        self.advance();
        Some(vector)
    }
}

/// Steps an ascending position combination to its lexicographic successor;
/// false when exhausted.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Map from syndromes to the unique error vector of weight at most t.
///
/// The zero syndrome maps to the zero vector, and no two stored errors
/// share a syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    t: usize,
    entries: BTreeMap<Syndrome, Vec<u64>>,
}

impl SyndromeTable {
    /// The weight bound the table was built for.
    pub fn correction_capacity(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, s: &Syndrome) -> Option<&Vec<u64>> {
        self.entries.get(s)
    }

    /// Entries in syndrome order.
    pub fn iter(&self) -> impl Iterator<Item = (&Syndrome, &Vec<u64>)> {
        self.entries.iter()
    }
}

/// Tabulates the syndrome of every vector of weight at most `t`.
///
/// Two distinct low-weight vectors with equal syndromes make a table
/// unsound, so that case fails loudly instead of picking a coset leader
/// arbitrarily: it means `t` exceeds the code's correction capacity.
pub fn build_table(
    h: &ControlMatrix,
    t: usize,
    max_entries: u64,
) -> Result<SyndromeTable, DecodeError> {
    let ring = RingSpec::new(h.matrix().modulus()).expect("control matrix modulus is valid");
    let mut entries: BTreeMap<Syndrome, Vec<u64>> = BTreeMap::new();
    let mut count: u64 = 0;
    for error in enumerate_low_weight(h.matrix().cols(), t, &ring) {
        count += 1;
        if count > max_entries {
            return Err(DecodeError::TableCapExceeded { cap: max_entries });
        }
        let s = syndrome(h, &error).expect("enumerated vectors have length n");
        if let Some(previous) = entries.insert(s, error.clone()) {
            return Err(DecodeError::DuplicateSyndrome { t, first: previous, second: error });
        }
    }
    Ok(SyndromeTable { t, entries })
}

/// Result of decoding one received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    /// The error was identified; `codeword = received - error` has zero
    /// syndrome.
    Corrected { codeword: Vec<u64>, error: Vec<u64> },
    /// No vector of weight at most t has the received word's syndrome:
    /// more than t errors occurred.
    Failure,
}

/// Looks up the received word's syndrome and subtracts the stored error.
///
/// `table` must have been built from the same control matrix `h`.
/// Failure is a valid outcome, not an error.
pub fn decode(
    table: &SyndromeTable,
    h: &ControlMatrix,
    received: &[u64],
) -> Result<DecodeOutcome, DecodeError> {
    let s = syndrome(h, received)?;
    let Some(error) = table.get(&s) else {
        return Ok(DecodeOutcome::Failure);
    };
    let m = h.matrix().modulus();
    let codeword: Vec<u64> = received
        .iter()
        .zip(error)
        .map(|(&r, &e)| ring::sub_mod(r, e, m))
        .collect();
    assert!(
        is_codeword(h, &codeword),
        "internal error: corrected word has a nonzero syndrome"
    );
    Ok(DecodeOutcome::Corrected { codeword, error: error.clone() })
}
