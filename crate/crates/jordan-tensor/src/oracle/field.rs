//! Exact coefficient fields for the brute-force pipeline: `GF(p)` for prime
//! characteristic and arbitrary-precision rationals for characteristic zero.
//!
//! The field is a runtime value (the prime is an input), so arithmetic goes
//! through a context object rather than bare operator impls.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use num::Integer;
use std::fmt;

/// Arithmetic context for an exact field.
pub trait Field: Clone + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Canonical image of an integer.
    fn embed_bigint(&self, n: &BigInt) -> Self::Elem;

    fn embed_i64(&self, n: i64) -> Self::Elem {
        self.embed_bigint(&BigInt::from(n))
    }

    /// Row rank of a dense matrix given as rows. The default is plain
    /// Gaussian elimination; fields with expensive division may override
    /// with something fraction-free.
    fn rank_rows(&self, mut m: Vec<Vec<Self::Elem>>, cols: usize) -> usize {
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !self.is_zero(&m[r][col])) else {
                continue;
            };
            m.swap(rank, p);
            let pivot_row = m[rank].clone();
            let inv_pivot = self.inv(&pivot_row[col]);
            for row in m.iter_mut().skip(rank + 1) {
                if self.is_zero(&row[col]) {
                    continue;
                }
                let factor = self.mul(&row[col], &inv_pivot);
                for c in col..cols {
                    let delta = self.mul(&factor, &pivot_row[c]);
                    row[c] = self.sub(&row[c], &delta);
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

/// The prime field `GF(p)`, elements stored as `u64` in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// # Panics
    ///
    /// Panics if `p < 2` or `p` exceeds `2^31` (products must fit in `u128`
    /// comfortably and the characteristic type enforces the same bound).
    pub fn new(p: u64) -> PrimeField {
        assert!(
            (2..=1u64 << 31).contains(&p),
            "prime field modulus out of range: {p}"
        );
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }

    fn embed_bigint(&self, n: &BigInt) -> u64 {
        use num::ToPrimitive;
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero rational");
        a.recip()
    }

    fn embed_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination on a
    /// common-denominator integer copy — much faster than carrying reduced
    /// fractions through the elimination.
    fn rank_rows(&self, m: Vec<Vec<BigRational>>, cols: usize) -> usize {
        let int_rows: Vec<Vec<BigInt>> = m
            .into_iter()
            .map(|row| {
                let mut lcm = BigInt::one();
                for e in &row {
                    if !e.is_zero() {
                        lcm = lcm.lcm(e.denom());
                    }
                }
                row.into_iter()
                    .map(|e| {
                        let scaled = e * BigRational::from_integer(lcm.clone());
                        debug_assert!(scaled.denom().is_one());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(int_rows, cols)
    }
}

/// Integer row rank by one-step Bareiss elimination with row pivoting and
/// column skipping; every interior division is exact.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &pivot_rows[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                // still rescale so the Sylvester identity keeps holding
                for e in row.iter_mut().skip(col + 1) {
                    let num = &pivot_row[col] * &*e;
                    let (quot, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    *e = quot;
                }
                continue;
            }
            for c in col + 1..cols {
                let num = &pivot_row[col] * &row[c] - &row[col] * &pivot_row[c];
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[c] = quot;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(7);
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.embed_i64(-1), 6);
        assert_eq!(f.embed_i64(15), 1);
    }

    #[test]
    fn prime_field_inverse_everywhere() {
        for p in [2u64, 3, 5, 13, 31] {
            let f = PrimeField::new(p);
            for a in 1..p {
                assert_eq!(f.mul(&a, &f.inv(&a)), f.one(), "a={a} p={p}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "inverse of zero")]
    fn prime_field_rejects_zero_inverse() {
        PrimeField::new(5).inv(&0);
    }

    #[test]
    fn rational_field_basics() {
        let f = Rationals;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.add(&half, &half), f.one());
        assert_eq!(f.inv(&half), f.embed_i64(2));
    }

    #[test]
    fn bareiss_rank_matches_hand_examples() {
        // rank 1: second row is twice the first
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(2)],
        ];
        assert_eq!(bareiss_rank(m, 2), 1);
        // full rank with a zero leading pivot
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(0)],
        ];
        assert_eq!(bareiss_rank(m, 2), 2);
        // zero matrix
        let m = vec![vec![BigInt::zero(); 3]; 2];
        assert_eq!(bareiss_rank(m, 3), 0);
    }
}
