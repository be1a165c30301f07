//! Brute-force cross-check: build the literal Kronecker product of two
//! Jordan blocks over an exact field and read its Jordan structure off the
//! rank profile of powers. No combinatorics involved — this is the
//! independent referee for the two algorithmic pipelines.
//!
//! Characteristic `p` runs over `GF(p)`; characteristic zero runs over
//! arbitrary-precision rationals (not a large-prime stand-in, which would
//! silently assume the genericity statement this crate wants to test).

mod field;
mod matrix;
mod structure;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::{jordan_matrix, kronecker, partition_from_ranks, Matrix};
pub use structure::{
    build_generating_set, theta_power_matrix, GeneratingSet, Generator, GeneratorInfo, GradedBasis,
    TermInfo,
};

use crate::arith::{BlockSpec, Decomposition};

fn oracle_blocks<F: Field>(field: &F, spec: &BlockSpec) -> Decomposition {
    let alpha = if spec.alpha_zero() {
        field.zero()
    } else {
        field.one()
    };
    let beta = if spec.beta_zero() {
        field.zero()
    } else {
        field.one()
    };
    let a = jordan_matrix(field, &alpha, spec.s());
    let b = jordan_matrix(field, &beta, spec.t());
    let m = kronecker(&a, &b);
    let eigenvalue = field.mul(&alpha, &beta);
    Decomposition::new(
        spec.eigenvalue_class(),
        partition_from_ranks(&m, &eigenvalue),
    )
}

/// Decomposes by brute force over the exact field selected by the
/// characteristic. Handles every eigenvalue class.
///
/// Representative eigenvalues 0/1 stand in for the zero/nonzero flags; the
/// answer only depends on the flags, which the eigenvalue-invariance suite
/// verifies against other nonzero choices.
pub fn decompose_via_oracle(spec: &BlockSpec) -> Decomposition {
    let spec = spec.normalized();
    match spec.characteristic().prime() {
        None => oracle_blocks(&Rationals, &spec),
        Some(p) => oracle_blocks(&PrimeField::new(p), &spec),
    }
}

/// Generating-set description over the field selected by the
/// characteristic, for output layers.
pub fn generating_set_info(
    s: usize,
    t: usize,
    characteristic: crate::arith::Characteristic,
) -> Vec<GeneratorInfo> {
    match characteristic.prime() {
        None => build_generating_set(&Rationals, s, t).describe(),
        Some(p) => build_generating_set(&PrimeField::new(p), s, t).describe(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{BlockSpec, Characteristic};

    fn spec(s: usize, t: usize, az: bool, bz: bool, p: u64) -> BlockSpec {
        BlockSpec::new(s, t, az, bz, Characteristic::new(p).unwrap()).unwrap()
    }

    #[test]
    fn oracle_reproduces_known_decompositions() {
        assert_eq!(
            decompose_via_oracle(&spec(4, 5, false, false, 2))
                .blocks
                .parts(),
            &[8, 4, 4, 4]
        );
        assert_eq!(
            decompose_via_oracle(&spec(4, 5, false, false, 5))
                .blocks
                .parts(),
            &[5, 5, 5, 5]
        );
        assert_eq!(
            decompose_via_oracle(&spec(4, 5, false, false, 0))
                .blocks
                .parts(),
            &[8, 6, 4, 2]
        );
        assert_eq!(
            decompose_via_oracle(&spec(2, 3, true, true, 0))
                .blocks
                .parts(),
            &[2, 2, 1, 1]
        );
        assert_eq!(
            decompose_via_oracle(&spec(2, 3, true, false, 3))
                .blocks
                .parts(),
            &[2, 2, 2]
        );
    }

    #[test]
    fn oracle_normalizes_argument_order() {
        let a = decompose_via_oracle(&spec(5, 4, false, false, 7));
        let b = decompose_via_oracle(&spec(4, 5, false, false, 7));
        assert_eq!(a, b);
    }

    #[test]
    fn generating_sets_match_oracle_partitions() {
        for p in [0u64, 2, 3, 5, 7] {
            for s in 1..=5 {
                for t in s..=5 {
                    let from_oracle = decompose_via_oracle(&spec(s, t, false, false, p)).blocks;
                    let ch = Characteristic::new(p).unwrap();
                    let from_gens = match ch.prime() {
                        None => build_generating_set(&Rationals, s, t).partition(),
                        Some(q) => build_generating_set(&PrimeField::new(q), s, t).partition(),
                    };
                    assert_eq!(from_oracle, from_gens, "s={s} t={t} p={p}");
                }
            }
        }
    }
}
