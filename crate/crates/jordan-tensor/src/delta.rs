//! Block sizes via graded determinants and a flag scan.
//!
//! Model `J(a,s) (x) J(b,t)` with `a*b != 0` as multiplication by
//! `theta = x + y` on `R = k[x,y]/(x^s, y^t)`. For each `i < s` there is one
//! interesting graded map, `theta^(s+t-2-2i) : R_i -> R_{s+t-2-i}`, between
//! pieces of equal dimension `i+1`; its determinant has the closed
//! product-of-binomials form computed by [`roberts_determinant`]. Whether
//! that determinant vanishes modulo `p` is all the decomposition depends on:
//! the flag sequence is scanned left to right, a clear flag emits one block
//! and a run of `f` set flags ending in a clear one emits `f+1` equal blocks.

use crate::arith::{
    binomial, binomial_valuation, BlockSpec, Characteristic, Decomposition, Partition,
};
use num::bigint::BigUint;
use num::traits::{One, Zero};
use num::Integer;

/// Determinant of the graded map `theta^(s+t-2-2i) : R_i -> R_{s+t-2-i}`,
/// up to sign, as a product of binomial ratios:
///
/// `D(i) = prod_{j=0..i} C(s+t-2-2i+j, t-1-i) / C(t-1-i+j, t-1-i)`.
///
/// Every factor divides exactly; the result is a positive integer.
///
/// # Panics
///
/// Panics unless `1 <= s <= t` and `i < s`.
pub fn roberts_determinant(s: usize, t: usize, i: usize) -> BigUint {
    assert!(1 <= s && s <= t, "requires 1 <= s <= t, got ({s}, {t})");
    assert!(i < s, "row index i={i} out of range for s={s}");
    let k = (t - 1 - i) as i64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..=i {
        num *= binomial((s + t - 2 - 2 * i + j) as u64, k);
        den *= binomial((t - 1 - i + j) as u64, k);
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "graded determinant must be an integer");
    assert!(!quot.is_zero());
    quot
}

/// p-adic valuation of [`roberts_determinant`] via carry counting, without
/// ever forming the (potentially huge) determinant.
pub fn roberts_valuation(s: usize, t: usize, i: usize, p: u64) -> u64 {
    assert!(1 <= s && s <= t, "requires 1 <= s <= t, got ({s}, {t})");
    assert!(i < s, "row index i={i} out of range for s={s}");
    let k = (t - 1 - i) as u64;
    let mut val = 0i64;
    for j in 0..=i {
        let n_top = (s + t - 2 - 2 * i + j) as u64;
        let n_bot = (t - 1 - i + j) as u64;
        val += binomial_valuation(n_top, k, p) as i64;
        val -= binomial_valuation(n_bot, k, p) as i64;
    }
    assert!(
        val >= 0,
        "valuation of an integer determinant cannot be negative"
    );
    val as u64
}

/// The vanishing flags of the graded determinants: `flags[i]` is true
/// exactly when `p > 0` and `p` divides `D(i)`.
///
/// The last flag is always clear — the map for `i = s-1` is never singular —
/// which is what guarantees the scan below terminates inside the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    flags: Vec<bool>,
}

impl DeltaSequence {
    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Flags as 0/1 integers, for serialization.
    pub fn as_bits(&self) -> Vec<u8> {
        self.flags.iter().map(|&f| u8::from(f)).collect()
    }
}

/// Computes the flag sequence for `1 <= s <= t` over the given
/// characteristic. In characteristic zero all flags are clear.
pub fn delta_sequence(s: usize, t: usize, characteristic: Characteristic) -> DeltaSequence {
    assert!(1 <= s && s <= t, "requires 1 <= s <= t, got ({s}, {t})");
    let flags: Vec<bool> = match characteristic.prime() {
        None => vec![false; s],
        Some(p) => (0..s).map(|i| roberts_valuation(s, t, i, p) > 0).collect(),
    };
    assert!(
        !flags[s - 1],
        "the top graded determinant D({}) must not vanish mod {characteristic}",
        s - 1
    );
    DeltaSequence { flags }
}

/// One run of equal-size blocks found by the flag scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeadingModule {
    /// Jordan block size.
    pub length: usize,
    /// How many blocks of that size.
    pub multiplicity: usize,
}

/// The scan result: block sizes with multiplicities, sizes strictly
/// decreasing, multiplicities summing to `s` and total weight `s*t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingModuleReport {
    pub modules: Vec<LeadingModule>,
}

impl LeadingModuleReport {
    /// Expands the runs into a plain block partition.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for m in &self.modules {
            parts.extend(std::iter::repeat_n(m.length, m.multiplicity));
        }
        Partition::new(parts)
    }
}

/// Left-to-right scan of the flag sequence.
///
/// At a clear flag `i`: emit one block of size `s+t-1-2i`, advance one step.
/// At a run of `f` set flags starting at `i` (the run must end, because the
/// final flag is clear): emit `f+1` blocks of size `s+t-1-2i-f`, advance
/// past the run and its terminating clear flag.
///
/// # Panics
///
/// Panics on a malformed sequence (wrong length or set final flag).
pub fn scan_leading_modules(delta: &DeltaSequence, s: usize, t: usize) -> LeadingModuleReport {
    assert_eq!(delta.len(), s, "flag sequence length must be s");
    let flags = delta.flags();
    assert!(!flags[s - 1], "final flag must be clear");
    let mut modules = Vec::new();
    let mut i = 0;
    while i < s {
        if !flags[i] {
            modules.push(LeadingModule {
                length: s + t - 1 - 2 * i,
                multiplicity: 1,
            });
            i += 1;
        } else {
            let mut f = 0;
            while flags[i + f] {
                f += 1;
            }
            modules.push(LeadingModule {
                length: s + t - 1 - 2 * i - f,
                multiplicity: f + 1,
            });
            i += f + 1;
        }
    }
    let report = LeadingModuleReport { modules };
    debug_assert_eq!(
        report.modules.iter().map(|m| m.multiplicity).sum::<usize>(),
        s
    );
    debug_assert_eq!(
        report
            .modules
            .iter()
            .map(|m| m.length * m.multiplicity)
            .sum::<usize>(),
        s * t
    );
    debug_assert!(report.modules.windows(2).all(|w| w[0].length > w[1].length));
    report
}

/// Full decomposition by the determinant-flag scan.
///
/// # Panics
///
/// Panics if the eigenvalue product is zero (use the closed form).
pub fn decompose_via_delta(spec: &BlockSpec) -> Decomposition {
    let spec = spec.normalized();
    assert!(
        !spec.alpha_zero() && !spec.beta_zero(),
        "decompose_via_delta requires a nonzero eigenvalue product"
    );
    let (s, t) = (spec.s(), spec.t());
    let delta = delta_sequence(s, t, spec.characteristic());
    let report = scan_leading_modules(&delta, s, t);
    Decomposition::new(spec.eigenvalue_class(), report.to_partition())
}

/// Nilpotency exponent of `theta = x + y` on `k[x,y]/(x^s, y^t)`: the largest
/// `n` such that `theta^n != 0`, i.e. such that some surviving coefficient
/// `C(n, k)` with `max(0, n-t+1) <= k <= min(s-1, n)` is nonzero mod `p`.
///
/// Always `s+t-2` in characteristic zero, and never below `t-1` (the
/// coefficient `C(t-1, 0) = 1` survives), so the largest Jordan block size —
/// which is `n+1` — lies in `[t, s+t-1]`.
pub fn nilpotency(s: usize, t: usize, characteristic: Characteristic) -> usize {
    assert!(1 <= s && s <= t, "requires 1 <= s <= t, got ({s}, {t})");
    let Some(p) = characteristic.prime() else {
        return s + t - 2;
    };
    for n in (t - 1..=s + t - 2).rev() {
        let lo = n.saturating_sub(t - 1);
        let hi = (s - 1).min(n);
        if (lo..=hi).any(|k| binomial_valuation(n as u64, k as u64, p) == 0) {
            return n;
        }
    }
    unreachable!("theta^(t-1) always has the surviving coefficient C(t-1, 0) = 1")
}
