//! Golden fixtures shared by the integration suites: the reference
//! (20,10)-code over Z/4 together with its control matrix and a worked
//! single-error transmission.

use ringcodes::{LinearCode, MatrixZm, RingSpec};

/// Right block P of the generator matrix G = (I_10 | P) over Z/4.
pub const P_ROWS: [[u64; 10]; 10] = [
    [1, 0, 3, 0, 1, 3, 0, 2, 2, 0],
    [1, 3, 0, 3, 2, 1, 1, 3, 3, 3],
    [3, 1, 2, 0, 1, 1, 3, 2, 3, 0],
    [2, 0, 2, 2, 2, 3, 3, 3, 3, 3],
    [0, 0, 3, 0, 0, 0, 2, 0, 0, 0],
    [3, 1, 3, 2, 3, 3, 3, 1, 2, 2],
    [2, 0, 0, 1, 2, 1, 0, 1, 1, 2],
    [2, 0, 1, 3, 1, 1, 1, 0, 3, 1],
    [0, 2, 1, 1, 2, 2, 1, 3, 0, 3],
    [0, 0, 1, 2, 1, 2, 2, 0, 1, 1],
];

/// The expected control matrix H = (-P^t | I_10) over Z/4.
pub const H_ROWS: [[u64; 20]; 10] = [
    [3, 3, 1, 2, 0, 1, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 3, 0, 0, 3, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 2, 2, 1, 1, 0, 3, 3, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 2, 0, 2, 3, 1, 3, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [3, 2, 3, 2, 0, 1, 2, 3, 2, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 3, 3, 1, 0, 1, 3, 3, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 3, 1, 1, 2, 1, 0, 3, 3, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [2, 1, 2, 1, 0, 3, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [2, 1, 1, 1, 0, 2, 3, 1, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 2, 2, 3, 1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Transmitted codeword.
pub const CODEWORD: &str = "10202230013001002303";

/// Received word: the codeword with one corrupted symbol at position 6.
pub const RECEIVED: &str = "10202130013001002303";

/// Error vector recovering the codeword: symbol 3 at position 6.
pub const ERROR: &str = "00000300000000000000";

/// Syndrome of the received word.
pub const SYNDROME_OF_RECEIVED: [u64; 10] = [3, 1, 3, 2, 3, 3, 3, 1, 2, 2];

pub fn digits(s: &str) -> Vec<u64> {
    s.chars().map(|c| c.to_digit(10).unwrap() as u64).collect()
}

/// The reference (20,10)-code over Z/4 with generator (I_10 | P).
pub fn z4_code() -> LinearCode {
    let ring = RingSpec::new(4).unwrap();
    let generator = MatrixZm::from_fn(10, 20, 4, |r, c| {
        if c < 10 {
            u64::from(r == c)
        } else {
            P_ROWS[r][c - 10]
        }
    });
    LinearCode::new(ring, generator).unwrap()
}

pub fn golden_h() -> MatrixZm {
    let rows: Vec<Vec<u64>> = H_ROWS.iter().map(|r| r.to_vec()).collect();
    MatrixZm::from_rows(4, &rows).unwrap()
}
