//! Shared arithmetic and the domain types every pipeline speaks.
//!
//! The central object is a [`Partition`]: the multiset of Jordan block sizes
//! that a tensor product `J(a,s) (x) J(b,t)` decomposes into. Everything else
//! here is exact integer support: binomial coefficients (arbitrary precision),
//! the p-adic valuation of a binomial coefficient via carry counting, and the
//! [`Characteristic`]/[`BlockSpec`] types describing a problem instance.

use num::bigint::BigUint;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors for invalid problem instances built from user input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic must be 0 or a prime, got {0}")]
    InvalidCharacteristic(u64),
    #[error("characteristic {0} exceeds the supported bound 2^31")]
    CharacteristicTooLarge(u64),
    #[error("Jordan block sizes must be at least 1, got s={s}, t={t}")]
    InvalidBlockSize { s: usize, t: usize },
}

/// Exact binomial coefficient `C(n, k)` as a big integer.
///
/// Out-of-range indices are handled by the usual convention:
/// `k < 0` or `k > n` yields 0.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // (acc * (n-k+i)) is always divisible by i, so this stays exact.
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// p-adic valuation of `C(n, k)` without computing the coefficient.
///
/// Counts the carries when adding `k` and `n - k` in base `p` (Kummer's
/// theorem). This is what makes divisibility scans cheap at sizes where
/// the coefficient itself would be astronomically large.
///
/// # Panics
///
/// Panics if `k > n` (the valuation of 0 is undefined) or if `p < 2`.
pub fn binomial_valuation(n: u64, k: u64, p: u64) -> u64 {
    assert!(k <= n, "binomial_valuation: k={k} exceeds n={n}");
    assert!(p >= 2, "binomial_valuation: p={p} is not a prime");
    let (mut a, mut b) = (k, n - k);
    let mut carry = 0u64;
    let mut carries = 0u64;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = u64::from(digit >= p);
        carries += carry;
        a /= p;
        b /= p;
    }
    carries
}

/// Field characteristic: zero or a prime below `2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Characteristic(u64);

impl Characteristic {
    /// Characteristic zero (the rational-number regime).
    pub const ZERO: Characteristic = Characteristic(0);

    /// Validates `value` as a characteristic: 0 is accepted, primes up to
    /// `2^31` are accepted (trial division — instant at that size), anything
    /// else is rejected.
    pub fn new(value: u64) -> Result<Characteristic, Error> {
        if value == 0 {
            return Ok(Characteristic(0));
        }
        if value > 1 << 31 {
            return Err(Error::CharacteristicTooLarge(value));
        }
        if !is_prime(value) {
            return Err(Error::InvalidCharacteristic(value));
        }
        Ok(Characteristic(value))
    }

    /// Raw value: 0 or a prime.
    pub fn value(self) -> u64 {
        self.0
    }

    /// True in the characteristic-zero regime.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The prime, if positive characteristic.
    pub fn prime(self) -> Option<u64> {
        (self.0 != 0).then_some(self.0)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// An integer partition: weakly decreasing positive parts.
///
/// Used both for Jordan block-size multisets and for the intermediate
/// difference sequences the algorithms produce.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Wraps a weakly decreasing sequence of positive parts.
    ///
    /// # Panics
    ///
    /// Panics if the sequence increases anywhere or contains a zero part.
    pub fn new(parts: Vec<usize>) -> Partition {
        for w in parts.windows(2) {
            assert!(
                w[0] >= w[1],
                "partition parts must be weakly decreasing: {parts:?}"
            );
        }
        if let Some(&last) = parts.last() {
            assert!(last > 0, "partition parts must be positive: {parts:?}");
        }
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of all parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: `conj[i] = #{ j : parts[j] > i }`.
    ///
    /// Transposes the Young diagram; applying it twice is the identity.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (0..first)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition { parts }
    }

    /// Recovers block sizes from a sequence of prefix dimensions.
    ///
    /// `dims[i]` is the dimension swallowed by the first `i + 1` steps of a
    /// filtration; the successive differences must therefore be weakly
    /// decreasing, strictly positive until they stabilize at zero, and the
    /// sequence must end at `total`. The returned partition is the conjugate
    /// of the difference sequence.
    ///
    /// # Panics
    ///
    /// Panics if the differences increase somewhere, resume after hitting
    /// zero, or the sequence does not reach `total` — any of which means the
    /// caller's dimension computation is wrong.
    pub fn from_prefix_dims(dims: &[usize], total: usize) -> Partition {
        assert_eq!(
            dims.last().copied().unwrap_or(0),
            total,
            "prefix dimensions {dims:?} do not reach total {total}"
        );
        let mut diffs = Vec::with_capacity(dims.len());
        let mut prev = 0usize;
        for &d in dims {
            assert!(
                d >= prev,
                "prefix dimensions must be weakly increasing: {dims:?}"
            );
            diffs.push(d - prev);
            prev = d;
        }
        for w in diffs.windows(2) {
            assert!(
                w[0] >= w[1],
                "prefix dimension differences must be weakly decreasing: {dims:?}"
            );
        }
        while diffs.last() == Some(&0) {
            diffs.pop();
        }
        Partition::new(diffs).conjugate()
    }

    /// Groups equal parts as `(size, multiplicity)` pairs, largest size first.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Whether the product of the two eigenvalues is zero or not.
///
/// Over an algebraically closed field the decomposition of
/// `J(a,s) (x) J(b,t)` depends on `a` and `b` only through this class, so no
/// field elements are ever stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EigenvalueClass {
    /// `a*b = 0`: at least one block is nilpotent.
    #[serde(rename = "zero")]
    Zero,
    /// `a*b != 0`: both eigenvalues invertible.
    #[serde(rename = "nonzero-product")]
    NonzeroProduct,
}

impl fmt::Display for EigenvalueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueClass::Zero => write!(f, "zero"),
            EigenvalueClass::NonzeroProduct => write!(f, "nonzero-product"),
        }
    }
}

/// A problem instance: block sizes, which eigenvalues vanish, and the
/// characteristic of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSpec {
    s: usize,
    t: usize,
    alpha_zero: bool,
    beta_zero: bool,
    characteristic: Characteristic,
}

impl BlockSpec {
    /// Builds a spec for `J(a, s) (x) J(b, t)` over a field of the given
    /// characteristic, where `alpha_zero`/`beta_zero` record whether `a`/`b`
    /// vanish. Block sizes must be at least 1.
    pub fn new(
        s: usize,
        t: usize,
        alpha_zero: bool,
        beta_zero: bool,
        characteristic: Characteristic,
    ) -> Result<BlockSpec, Error> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidBlockSize { s, t });
        }
        Ok(BlockSpec {
            s,
            t,
            alpha_zero,
            beta_zero,
            characteristic,
        })
    }

    /// Same spec with the factors swapped so that `s <= t`.
    ///
    /// The tensor product is symmetric, so this changes nothing about the
    /// answer; every algorithm normalizes first and works with `s <= t`.
    pub fn normalized(&self) -> BlockSpec {
        if self.s <= self.t {
            *self
        } else {
            BlockSpec {
                s: self.t,
                t: self.s,
                alpha_zero: self.beta_zero,
                beta_zero: self.alpha_zero,
                characteristic: self.characteristic,
            }
        }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn alpha_zero(&self) -> bool {
        self.alpha_zero
    }

    pub fn beta_zero(&self) -> bool {
        self.beta_zero
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    /// The eigenvalue class of the product.
    pub fn eigenvalue_class(&self) -> EigenvalueClass {
        if self.alpha_zero || self.beta_zero {
            EigenvalueClass::Zero
        } else {
            EigenvalueClass::NonzeroProduct
        }
    }
}

/// The answer: which eigenvalue class the blocks carry and their sizes.
///
/// All blocks of `J(a,s) (x) J(b,t)` share the single eigenvalue `a*b`, so a
/// partition of `s*t` plus the eigenvalue class pins the Jordan form exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub eigenvalue_class: EigenvalueClass,
    pub blocks: Partition,
}

impl Decomposition {
    pub fn new(eigenvalue_class: EigenvalueClass, blocks: Partition) -> Decomposition {
        Decomposition {
            eigenvalue_class,
            blocks,
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.eigenvalue_class {
            EigenvalueClass::Zero => "0",
            EigenvalueClass::NonzeroProduct => "ab",
        };
        for (i, (size, mult)) in self.blocks.grouped().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "J({label},{size})")?;
            if *mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}
