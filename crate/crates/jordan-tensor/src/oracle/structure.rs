//! Constructive module structure of `R = k[x,y]/(x^s, y^t)` under
//! multiplication by `theta = x + y`.
//!
//! `R` with the `theta` action is exactly `J(1,s) (x) J(1,t)` shifted by its
//! eigenvalue, so a `k[theta]`-module decomposition of `R` realizes the
//! Jordan structure with explicit vectors. The construction below produces
//! `s` homogeneous generators, one per degree `0 ..= s-1`: it starts from
//! `1`, reads off how far `theta` pushes each generator (its socle degree),
//! shifts by powers of `x` to fill equal-length strands, and finds each next
//! generator inside the kernel of an explicit `theta`-power map between
//! graded pieces.

use super::field::Field;
use super::matrix::Matrix;
use crate::arith::{binomial, Partition};
use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

/// The monomial basis of `R = k[x,y]/(x^s, y^t)`, graded by total degree.
///
/// Degree `d` holds the monomials `x^a y^(d-a)` with `a < s` and `d-a < t`,
/// listed by ascending `a`. The dimensions read
/// `1, 2, ..., s-1, s, ..., s, s-1, ..., 1` with `t-s+1` middle copies of
/// `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedBasis {
    s: usize,
    t: usize,
}

impl GradedBasis {
    pub fn new(s: usize, t: usize) -> GradedBasis {
        assert!(s >= 1 && t >= 1, "box exponents must be positive");
        GradedBasis { s, t }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Largest nonzero degree, `s + t - 2`.
    pub fn top_degree(&self) -> usize {
        self.s + self.t - 2
    }

    fn x_range(&self, d: usize) -> std::ops::RangeInclusive<usize> {
        let lo = d.saturating_sub(self.t - 1);
        let hi = (self.s - 1).min(d);
        lo..=hi
    }

    /// Dimension of the degree-`d` piece (0 outside `0 ..= top_degree`).
    pub fn dim(&self, d: usize) -> usize {
        if d > self.top_degree() {
            return 0;
        }
        let r = self.x_range(d);
        r.end() - r.start() + 1
    }

    /// The monomials of degree `d` as `(x_exp, y_exp)` pairs, ascending in
    /// the `x` exponent.
    pub fn monomials(&self, d: usize) -> Vec<(usize, usize)> {
        if d > self.top_degree() {
            return Vec::new();
        }
        self.x_range(d).map(|a| (a, d - a)).collect()
    }
}

/// Matrix of multiplication by `theta^(to_deg - from_deg)` from the degree
/// `from_deg` piece to the degree `to_deg` piece, in the monomial bases.
///
/// The entry at monomial row `x^c y^(to-c)`, column `x^a y^(from-a)` is the
/// binomial `C(to - from, c - a)` reduced into the field.
pub fn theta_power_matrix<F: Field>(
    field: &F,
    basis: &GradedBasis,
    from_deg: usize,
    to_deg: usize,
) -> Matrix<F> {
    assert!(from_deg <= to_deg, "theta only raises degree");
    assert!(to_deg <= basis.top_degree(), "target degree out of range");
    let power = (to_deg - from_deg) as u64;
    let rows = basis.monomials(to_deg);
    let cols = basis.monomials(from_deg);
    Matrix::from_fn(field.clone(), rows.len(), cols.len(), |i, j| {
        let diff = rows[i].0 as i64 - cols[j].0 as i64;
        field.embed_bigint(&BigInt::from(binomial(power, diff)))
    })
}

/// One homogeneous generator of a cyclic `k[theta]`-summand.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator<F: Field> {
    /// Degree of the generator (they come out consecutively, `0 ..= s-1`).
    pub degree: usize,
    /// Length of the strand `gen, theta*gen, theta^2*gen, ...` — a Jordan
    /// block size.
    pub chain_length: usize,
    /// True for the generator that opens a new kernel family; the others in
    /// a family are its `x`-shifts.
    pub leading: bool,
    /// Coefficients in the monomial basis of the generator's degree.
    pub coeffs: Vec<F::Elem>,
}

/// A full generating set: `s` homogeneous generators whose `theta`-strands
/// decompose `R` into a direct sum, with strand lengths forming exactly the
/// Jordan block partition.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingSet<F: Field> {
    pub field: F,
    pub basis: GradedBasis,
    pub generators: Vec<Generator<F>>,
}

impl<F: Field> GeneratingSet<F> {
    /// The block-size partition realized by the strand lengths.
    pub fn partition(&self) -> Partition {
        let mut lengths: Vec<usize> = self.generators.iter().map(|g| g.chain_length).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths)
    }

    /// Plain serializable description (string coefficients, zero terms
    /// dropped).
    pub fn describe(&self) -> Vec<GeneratorInfo> {
        self.generators
            .iter()
            .map(|g| {
                let terms = self
                    .basis
                    .monomials(g.degree)
                    .iter()
                    .zip(&g.coeffs)
                    .filter(|(_, c)| !self.field.is_zero(c))
                    .map(|(&(x_exp, y_exp), c)| TermInfo {
                        coeff: c.to_string(),
                        x_exp,
                        y_exp,
                    })
                    .collect();
                GeneratorInfo {
                    degree: g.degree,
                    chain_length: g.chain_length,
                    leading: g.leading,
                    terms,
                }
            })
            .collect()
    }
}

/// Field-independent description of a generator, for output layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub degree: usize,
    pub chain_length: usize,
    pub leading: bool,
    pub terms: Vec<TermInfo>,
}

/// One monomial term `coeff * x^x_exp * y^y_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermInfo {
    pub coeff: String,
    pub x_exp: usize,
    pub y_exp: usize,
}

/// Largest `d` with `theta^(d - deg) * v != 0`, for a nonzero homogeneous
/// `v` of degree `deg`.
fn socle_degree<F: Field>(field: &F, basis: &GradedBasis, deg: usize, v: &[F::Elem]) -> usize {
    assert!(
        v.iter().any(|e| !field.is_zero(e)),
        "socle degree of the zero vector is undefined"
    );
    let mut d = deg;
    let mut cur = v.to_vec();
    while d < basis.top_degree() {
        let step = theta_power_matrix(field, basis, d, d + 1);
        let next = step.apply(&cur);
        if next.iter().all(|e| field.is_zero(e)) {
            break;
        }
        cur = next;
        d += 1;
    }
    d
}

/// Multiplication by `x`: degree `deg` coefficients to degree `deg + 1`
/// coefficients (monomials with `x`-exponent `s-1` die).
fn shift_by_x<F: Field>(field: &F, basis: &GradedBasis, deg: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let target = basis.monomials(deg + 1);
    let mut out = vec![field.zero(); target.len()];
    for ((a, _), coeff) in basis.monomials(deg).iter().zip(v) {
        if a + 1 < basis.s() {
            let pos = (a + 1) - target[0].0;
            out[pos] = coeff.clone();
        }
    }
    out
}

/// Builds the generating set over the given field.
///
/// Starting from `kappa = 1`: measure the socle degree `n` of the strand
/// `k[theta] * kappa`, emit `kappa, kappa*x, ..., kappa*x^m` where `m` is
/// the gap between this family's socle and the previous one, then pick the
/// next `kappa` as any nonzero vector killed by
/// `theta^(n - next_degree) : R_(next_degree) -> R_n`, until `s` generators
/// exist.
///
/// # Panics
///
/// Panics if a required kernel is zero, if the kernel's socle degree
/// depends on the choice of vector, or if the strand lengths fail to sum to
/// `s*t` — all impossible unless the theory (or this code) is wrong.
pub fn build_generating_set<F: Field>(field: &F, s: usize, t: usize) -> GeneratingSet<F> {
    assert!(1 <= s && s <= t, "requires 1 <= s <= t, got ({s}, {t})");
    let basis = GradedBasis::new(s, t);
    let mut generators: Vec<Generator<F>> = Vec::new();

    // kappa_(0) = 1, the unit of R
    let mut kappa: Vec<F::Elem> = vec![field.one()];
    let mut kappa_deg = 0usize;
    // conventional previous socle degree, one past the top
    let mut prev_socle = s + t - 1;

    while generators.len() < s {
        let socle = socle_degree(field, &basis, kappa_deg, &kappa);
        assert!(
            socle >= t - 1 && socle < prev_socle,
            "socle degree {socle} out of range at generator degree {kappa_deg}"
        );
        let shifts = (prev_socle - 1) - socle;
        assert!(
            generators.len() + shifts < s,
            "generator family overshoots the expected count"
        );
        let mut shifted = kappa.clone();
        for j in 0..=shifts {
            if j > 0 {
                shifted = shift_by_x(field, &basis, kappa_deg + j - 1, &shifted);
                // each x-shift must keep the strand length; verify honestly
                assert_eq!(
                    socle_degree(field, &basis, kappa_deg + j, &shifted),
                    socle + j,
                    "x-shift changed the strand length"
                );
            }
            generators.push(Generator {
                degree: kappa_deg + j,
                chain_length: socle - kappa_deg + 1,
                leading: j == 0,
                coeffs: shifted.clone(),
            });
        }
        if generators.len() == s {
            break;
        }

        let next_deg = kappa_deg + shifts + 1;
        let kernel_map = theta_power_matrix(field, &basis, next_deg, socle);
        let kernel = kernel_map.null_space();
        assert!(
            !kernel.is_empty(),
            "no kernel available for the next generator at degree {next_deg}"
        );
        // the strand length must not depend on which kernel vector we pick
        if kernel.len() >= 2 {
            assert_eq!(
                socle_degree(field, &basis, next_deg, &kernel[0]),
                socle_degree(field, &basis, next_deg, &kernel[1]),
                "kernel vectors with different strand lengths"
            );
        }
        kappa = kernel.into_iter().next().unwrap();
        kappa_deg = next_deg;
        prev_socle = socle;
    }

    let set = GeneratingSet {
        field: field.clone(),
        basis,
        generators,
    };
    assert_eq!(
        set.generators.iter().map(|g| g.chain_length).sum::<usize>(),
        s * t,
        "strand lengths must exhaust R"
    );
    for (i, g) in set.generators.iter().enumerate() {
        assert_eq!(g.degree, i, "generator degrees must be consecutive from 0");
    }
    set
}
