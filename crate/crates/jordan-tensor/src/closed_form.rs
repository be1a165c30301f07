//! Closed-form decompositions that need no elimination at all.
//!
//! Two regimes admit explicit answers:
//!
//! * characteristic zero (and, by the genericity result, any `p >= s+t-1`),
//!   where the block sizes follow fixed patterns in `s` and `t`;
//! * a vanishing eigenvalue product, where the answer is independent of the
//!   characteristic and the cumulative dimension profile is an explicit
//!   quadratic/linear sequence.

use crate::arith::{BlockSpec, Decomposition, EigenvalueClass, Partition};
use crate::minors;

/// Characteristic-zero decomposition of `J(a,s) (x) J(b,t)`, split over the
/// four combinations of vanishing eigenvalues.
///
/// * `a = 0 = b`: `J(0,s)` with multiplicity `t-s+1`, plus `J(0, s - ceil(i/2))`
///   for `i = 1 .. 2s-2`;
/// * `a = 0 != b`: `J(0,s)` with multiplicity `t`;
/// * `a != 0 = b`: `J(0,t)` with multiplicity `s`;
/// * `a*b != 0`: one block of each size `s+t+1-2i` for `i = 1 .. s`.
pub fn decompose_char0(spec: &BlockSpec) -> Decomposition {
    let spec = spec.normalized();
    let (s, t) = (spec.s(), spec.t());
    let blocks = match (spec.alpha_zero(), spec.beta_zero()) {
        (true, true) => {
            let mut parts = vec![s; t - s + 1];
            parts.extend((1..=2 * s - 2).map(|i| s - i.div_ceil(2)));
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts)
        }
        (true, false) => Partition::new(vec![s; t]),
        (false, true) => Partition::new(vec![t; s]),
        (false, false) => Partition::new((1..=s).map(|i| s + t + 1 - 2 * i).collect()),
    };
    Decomposition::new(spec.eigenvalue_class(), blocks)
}

/// Decomposition when the eigenvalue product vanishes, valid in every
/// characteristic.
///
/// The cumulative dimension profile `a_i` of the associated filtration is
/// explicit, so the block sizes come straight out of
/// [`Partition::from_prefix_dims`]:
///
/// * `a = 0 = b`: `a_i = (s+t)i - i^2` for `1 <= i <= s`;
/// * `a = 0 != b`: `a_i = t*i` for `1 <= i <= s`;
/// * `a != 0 = b`: `a_i = s*i` for `1 <= i <= t`.
///
/// # Panics
///
/// Panics when both eigenvalues are nonzero — that case genuinely depends on
/// the characteristic and belongs to the other pipelines.
pub fn decompose_zero_eigenvalue(spec: &BlockSpec) -> Decomposition {
    let spec = spec.normalized();
    let (s, t) = (spec.s(), spec.t());
    let dims: Vec<usize> = match (spec.alpha_zero(), spec.beta_zero()) {
        (true, true) => (1..=s).map(|i| (s + t) * i - i * i).collect(),
        (true, false) => (1..=s).map(|i| t * i).collect(),
        (false, true) => (1..=t).map(|i| s * i).collect(),
        (false, false) => panic!("decompose_zero_eigenvalue called with both eigenvalues nonzero"),
    };
    let blocks = Partition::from_prefix_dims(&dims, s * t);
    Decomposition::new(EigenvalueClass::Zero, blocks)
}

/// Does this characteristic behave like characteristic zero for these sizes?
///
/// Always true when `p = 0` or `p >= s+t-1`. Below that bound the question is
/// settled honestly: run the minor-gcd sweep and check that every vanishing
/// index agrees with its characteristic-zero value.
pub fn is_generic(spec: &BlockSpec) -> bool {
    let spec = spec.normalized();
    let (s, t) = (spec.s(), spec.t());
    let p = spec.characteristic();
    if p.is_zero() || p.value() as usize >= s + t - 1 {
        return true;
    }
    (1..s + t - 1).all(|u| {
        minors::quotient_dimension(s, t, u, p)
            == minors::quotient_dimension(s, t, u, crate::arith::Characteristic::ZERO)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Characteristic;

    fn spec(s: usize, t: usize, az: bool, bz: bool, p: u64) -> BlockSpec {
        BlockSpec::new(s, t, az, bz, Characteristic::new(p).unwrap()).unwrap()
    }

    #[test]
    fn char0_nonzero_product_is_the_odd_ladder() {
        let d = decompose_char0(&spec(4, 5, false, false, 0));
        assert_eq!(d.blocks.parts(), &[8, 6, 4, 2]);
        assert_eq!(d.eigenvalue_class, EigenvalueClass::NonzeroProduct);

        let d = decompose_char0(&spec(1, 1, false, false, 0));
        assert_eq!(d.blocks.parts(), &[1]);

        let d = decompose_char0(&spec(3, 3, false, false, 0));
        assert_eq!(d.blocks.parts(), &[5, 3, 1]);
    }

    #[test]
    fn char0_single_zero_eigenvalue_copies_a_block() {
        let d = decompose_char0(&spec(2, 3, true, false, 0));
        assert_eq!(d.blocks.parts(), &[2, 2, 2]);
        assert_eq!(d.eigenvalue_class, EigenvalueClass::Zero);

        let d = decompose_char0(&spec(2, 3, false, true, 0));
        assert_eq!(d.blocks.parts(), &[3, 3]);
    }

    #[test]
    fn char0_double_zero_eigenvalue() {
        let d = decompose_char0(&spec(2, 3, true, true, 0));
        assert_eq!(d.blocks.parts(), &[2, 2, 1, 1]);

        let d = decompose_char0(&spec(1, 4, true, true, 0));
        assert_eq!(d.blocks.parts(), &[1, 1, 1, 1]);

        let d = decompose_char0(&spec(3, 4, true, true, 0));
        assert_eq!(d.blocks.parts(), &[3, 3, 2, 2, 1, 1]);
    }

    #[test]
    fn zero_eigenvalue_dimension_profiles() {
        let d = decompose_zero_eigenvalue(&spec(2, 3, true, true, 2));
        assert_eq!(d.blocks.parts(), &[2, 2, 1, 1]);

        let d = decompose_zero_eigenvalue(&spec(2, 3, true, false, 5));
        assert_eq!(d.blocks.parts(), &[2, 2, 2]);

        let d = decompose_zero_eigenvalue(&spec(2, 3, false, true, 7));
        assert_eq!(d.blocks.parts(), &[3, 3]);
    }

    #[test]
    fn zero_eigenvalue_is_characteristic_independent() {
        for p in [0u64, 2, 3, 5, 7] {
            for s in 1..=8 {
                for t in s..=8 {
                    for (az, bz) in [(true, true), (true, false), (false, true)] {
                        let with_p = decompose_zero_eigenvalue(&spec(s, t, az, bz, p));
                        let char0 = decompose_char0(&spec(s, t, az, bz, 0));
                        assert_eq!(with_p, char0, "s={s} t={t} az={az} bz={bz} p={p}");
                        assert_eq!(with_p.blocks.weight(), s * t);
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "both eigenvalues nonzero")]
    fn zero_eigenvalue_rejects_nonzero_product() {
        decompose_zero_eigenvalue(&spec(2, 2, false, false, 0));
    }

    #[test]
    fn genericity_examples() {
        assert!(is_generic(&spec(4, 5, false, false, 11)));
        assert!(!is_generic(&spec(4, 5, false, false, 2)));
        assert!(is_generic(&spec(1, 9, false, false, 2)));
        assert!(is_generic(&spec(3, 3, false, false, 0)));
        // p = 7 divides the top Roberts determinant for (4,5), so it is not generic
        assert!(!is_generic(&spec(4, 5, false, false, 7)));
    }
}
