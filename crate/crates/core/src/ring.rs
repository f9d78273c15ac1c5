//! Exact arithmetic in Z/mZ and its decomposition into local components.
//!
//! A modulus `m` factors into prime powers `p_i^e_i`, and Z/mZ splits into
//! the product of the local rings Z/p_i^e_i through a complete system of
//! orthogonal idempotents. [`RingSpec`] carries the factorization and the
//! idempotents and provides the projection and lift maps between the ring
//! and its local components.

use thiserror::Error;

/// Largest supported modulus.
///
/// Residues are stored in `u64` and every product goes through a `u128`
/// intermediate, so arithmetic is exact for any modulus up to this bound;
/// the bound also keeps trial-division factorization instantaneous.
pub const MAX_MODULUS: u64 = 1 << 32;

/// A canonical residue: an integer in `[0, m)` relative to an ambient ring.
pub type Residue = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("unsupported modulus {0}: must be between 2 and {MAX_MODULUS}")]
    UnsupportedModulus(u64),
    #[error("{value} is not a unit modulo {modulus}: no inverse exists")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("component index {index} out of range: ring has {count} local components")]
    ComponentIndex { index: usize, count: usize },
    #[error("expected {expected} component residues, got {got}")]
    ComponentCount { expected: usize, got: usize },
}

/// One local factor `p^e` of the modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
    /// `prime^exponent`, the modulus of the local component ring.
    pub power: u64,
}

/// The ring Z/mZ together with its prime-power factorization and the
/// complete orthogonal idempotent system splitting it into local rings.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    modulus: u64,
    factors: Vec<PrimePower>,
    idempotents: Vec<Residue>,
}

impl RingSpec {
    /// Builds the ring Z/mZ, factoring `m` by trial division and computing
    /// the idempotent of each component (`e_i = 1 mod p_i^e_i`,
    /// `e_i = 0 mod p_j^e_j` for `j != i`).
    pub fn new(modulus: u64) -> Result<Self, RingError> {
        if modulus < 2 || modulus > MAX_MODULUS {
            return Err(RingError::UnsupportedModulus(modulus));
        }
        let factors = factorize(modulus);
        let idempotents = factors
            .iter()
            .map(|pp| {
                let rest = modulus / pp.power;
                // rest is a unit mod p^e since the prime powers are coprime.
                let inv = inverse_mod(rest % pp.power, pp.power)
                    .expect("cofactor is coprime to its prime power");
                mul_mod(rest, inv, modulus)
            })
            .collect();
        Ok(Self {
            modulus,
            factors,
            idempotents,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Prime-power factors in increasing prime order.
    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Idempotents aligned with [`factors`](Self::factors).
    pub fn idempotents(&self) -> &[Residue] {
        &self.idempotents
    }

    pub fn component_count(&self) -> usize {
        self.factors.len()
    }

    /// A local ring has a single prime-power factor.
    pub fn is_local(&self) -> bool {
        self.factors.len() == 1
    }

    /// The local ring Z/p_i^e_i of component `i`.
    pub fn component_ring(&self, index: usize) -> Result<RingSpec, RingError> {
        let pp = self.component(index)?;
        RingSpec::new(pp.power)
    }

    fn component(&self, index: usize) -> Result<&PrimePower, RingError> {
        self.factors.get(index).ok_or(RingError::ComponentIndex {
            index,
            count: self.factors.len(),
        })
    }

    pub fn reduce(&self, x: u64) -> Residue {
        x % self.modulus
    }

    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        add_mod(a, b, self.modulus)
    }

    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        sub_mod(a, b, self.modulus)
    }

    pub fn mul(&self, a: Residue, b: Residue) -> Residue {
        mul_mod(a, b, self.modulus)
    }

    pub fn neg(&self, a: Residue) -> Residue {
        neg_mod(a, self.modulus)
    }

    /// True iff `x` is invertible, i.e. `gcd(x, m) = 1`.
    pub fn is_unit(&self, x: Residue) -> bool {
        gcd(x % self.modulus, self.modulus) == 1
    }

    /// The multiplicative inverse of `x`, if `x` is a unit.
    pub fn inverse(&self, x: Residue) -> Result<Residue, RingError> {
        inverse_mod(x % self.modulus, self.modulus).ok_or(RingError::NotAUnit {
            value: x % self.modulus,
            modulus: self.modulus,
        })
    }

    /// Projects `x` onto component `i`, i.e. reduces it mod `p_i^e_i`.
    pub fn project(&self, x: Residue, index: usize) -> Result<Residue, RingError> {
        Ok((x % self.modulus) % self.component(index)?.power)
    }

    /// The unique residue congruent to `components[i]` mod `p_i^e_i` for
    /// every component; inverse of [`project`](Self::project).
    pub fn crt_lift(&self, components: &[Residue]) -> Result<Residue, RingError> {
        if components.len() != self.factors.len() {
            return Err(RingError::ComponentCount {
                expected: self.factors.len(),
                got: components.len(),
            });
        }
        let mut acc = 0;
        for (&c, &e) in components.iter().zip(&self.idempotents) {
            acc = add_mod(acc, mul_mod(c % self.modulus, e, self.modulus), self.modulus);
        }
        Ok(acc)
    }
}

fn factorize(mut m: u64) -> Vec<PrimePower> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut exponent = 0;
            let mut power = 1;
            while m % p == 0 {
                m /= p;
                exponent += 1;
                power *= p;
            }
            factors.push(PrimePower {
                prime: p,
                exponent,
                power,
            });
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push(PrimePower {
            prime: m,
            exponent: 1,
            power: m,
        });
    }
    factors
}

pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    add_mod(a % m, m - b % m, m)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn neg_mod(a: u64, m: u64) -> u64 {
    (m - a % m) % m
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid; `None` when `a` and `m` are not coprime.
pub(crate) fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0_i128, 1_i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

/// Iterates over all of `(Z/mZ)^len` in lexicographic order, starting at
/// the zero vector.
pub fn enumerate_vectors(modulus: u64, len: usize) -> Vectors {
    Vectors {
        modulus,
        next: Some(vec![0; len]),
    }
}

/// See [`enumerate_vectors`].
pub struct Vectors {
    modulus: u64,
    next: Option<Vec<u64>>,
}

impl Iterator for Vectors {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        // Odometer increment on the rightmost position.
        let mut succ = current.clone();
        for digit in succ.iter_mut().rev() {
            *digit += 1;
            if *digit < self.modulus {
                self.next = Some(succ);
                return Some(current);
            }
            *digit = 0;
        }
        // Wrapped around: `current` was the last vector.
        Some(current)
    }
}
