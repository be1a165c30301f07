//! Block sizes via gcds of minors of a banded binomial matrix.
//!
//! For a nonzero eigenvalue product, the block partition of
//! `J(a,s) (x) J(b,t)` is determined by the dimensions of the quotients
//! `k[x,y] / (x^s, y^t, (x+y)^u)` as `u` grows. Each such dimension reduces
//! to one combinatorial quantity: the first index `i0` at which the gcd of
//! the `(i+1)`-minors of a banded matrix of binomial coefficients vanishes
//! modulo the characteristic. The band entries are the coefficients of
//! `(x+y)^u` that survive in the monomial box `x^(<s) y^(<t)`.
//!
//! The same minor gcds can be computed a second, independent way — as gcds
//! of Schur polynomial evaluations at `(1, ..., 1)` via the hook-content
//! product — which the test suites use to cross-validate the determinant
//! arithmetic.

use crate::arith::{binomial, BlockSpec, Characteristic, Decomposition, Partition};
use num::bigint::{BigInt, BigUint};
use num::traits::{One, Signed, Zero};
use num::Integer;

/// A triple of box exponents `(s, t, u)` stored in ascending order.
///
/// The three generators `x^s`, `y^t`, `(x+y)^u` play symmetric roles up to a
/// linear change of coordinates, so every computation may assume
/// `s <= t <= u` and sort first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortedTriple {
    s: usize,
    t: usize,
    u: usize,
}

impl SortedTriple {
    /// Sorts the exponents ascending. All must be at least 1.
    pub fn new(a: usize, b: usize, c: usize) -> SortedTriple {
        assert!(
            a >= 1 && b >= 1 && c >= 1,
            "exponents must be positive: ({a}, {b}, {c})"
        );
        let mut v = [a, b, c];
        v.sort_unstable();
        SortedTriple {
            s: v[0],
            t: v[1],
            u: v[2],
        }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn u(&self) -> usize {
        self.u
    }

    /// Number of coefficients of `(x+y)^u` that survive in the box, i.e.
    /// `r = s+t-1-u`. `None` when `u >= s+t-1`: there the third generator is
    /// redundant and the quotient dimension is simply `s*t`.
    pub fn band_width(&self) -> Option<usize> {
        (self.s + self.t)
            .checked_sub(self.u + 1)
            .filter(|&r| r >= 1)
    }
}

/// The surviving coefficients of `(x+y)^u` modulo `(x^s, y^t)`:
/// `q_j = C(u, s-j)` for `j = 1 ..= r`, i.e. binomials `C(u, k)` for
/// `k` from `s-1` down to `u-t+1`.
///
/// # Panics
///
/// Panics when `u >= s+t-1` (no coefficient survives; callers must branch on
/// [`SortedTriple::band_width`] first).
pub fn expansion_coefficients(triple: &SortedTriple) -> Vec<BigUint> {
    let r = triple
        .band_width()
        .expect("expansion_coefficients: no surviving band, u >= s+t-1");
    (1..=r)
        .map(|j| binomial(triple.u() as u64, triple.s() as i64 - j as i64))
        .collect()
}

/// The banded coefficient matrix whose `(i+1)`-minors are scanned.
///
/// Shape `(r-i) x (i+1)`; row `a`, column `b` (zero-based) holds
/// `q[i + a - b]`, so the first row reads `q_{i+1} ... q_1` and each row
/// shifts the band one step.
///
/// # Panics
///
/// Panics unless `0 <= i <= r-1`.
pub fn band_matrix(q: &[BigUint], i: usize) -> Vec<Vec<BigInt>> {
    let r = q.len();
    assert!(
        i < r,
        "band_matrix: index i={i} out of range for band width {r}"
    );
    (0..r - i)
        .map(|a| {
            (0..=i)
                .map(|b| BigInt::from(q[i + a - b].clone()))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination — exact over integers.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&row| !m[row][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = quot;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Calls `f` with every size-`k` subset of `0..n`, in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next combination
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + n - k {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
        if k == 0 {
            return;
        }
    }
}

/// Gcd of the absolute values of all `size x size` minors of `m`.
///
/// Returns 0 when the matrix has fewer than `size` rows or columns (no
/// minors exist) or when every minor vanishes. Stops early once the gcd
/// reaches 1.
pub fn minor_gcd(m: &[Vec<BigInt>], size: usize) -> BigUint {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if size == 0 || rows < size || cols < size {
        return BigUint::zero();
    }
    let mut acc = BigUint::zero();
    let mut done = false;
    for_each_combination(rows, size, |row_set| {
        if done {
            return;
        }
        for_each_combination(cols, size, |col_set| {
            if done {
                return;
            }
            let sub: Vec<Vec<BigInt>> = row_set
                .iter()
                .map(|&r| col_set.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            let d = det_bareiss(sub).abs().to_biguint().unwrap();
            acc = acc.gcd(&d);
            if acc.is_one() {
                done = true;
            }
        });
    });
    acc
}

/// Minor gcds `delta_0, delta_1, ...` probed in order until one vanishes
/// modulo the characteristic; returns the first vanishing index together
/// with every gcd inspected along the way.
///
/// Indices past the matrix (where no `(i+1)`-minor can exist because
/// `i+1 > r-i`) count as vanishing, which is what terminates the search in
/// characteristic zero.
fn vanishing_scan(q: &[BigUint], characteristic: Characteristic) -> (usize, Vec<BigUint>) {
    let r = q.len();
    assert!(r >= 1);
    let mut deltas = Vec::new();
    for i in 0..=r {
        let delta_i = if i >= r {
            BigUint::zero()
        } else {
            minor_gcd(&band_matrix(q, i), i + 1)
        };
        let vanishes = match characteristic.prime() {
            None => delta_i.is_zero(),
            Some(p) => (&delta_i % p).is_zero(),
        };
        deltas.push(delta_i);
        if vanishes {
            return (i, deltas);
        }
    }
    unreachable!("minor gcds cannot stay nonzero past the band")
}

/// First index `i0` whose minor gcd vanishes modulo the characteristic
/// (`= 0` exactly, in characteristic zero).
pub fn first_vanishing_index(q: &[BigUint], characteristic: Characteristic) -> usize {
    vanishing_scan(q, characteristic).0
}

/// Everything the minor scan learns about one quotient
/// `k[x,y] / (x^s, y^t, (x+y)^u)` (exponents sorted).
///
/// The two syzygy degrees satisfy `a_deg + b_deg = s + t + u`, and the
/// quotient dimension is `s*t + s*u + t*u - a_deg*b_deg`, always between 0
/// and `s*t`.
#[derive(Debug, Clone)]
pub struct SyzygyReport {
    pub triple: SortedTriple,
    /// Surviving binomial band of `(x+y)^u`.
    pub q: Vec<BigUint>,
    /// Minor gcds inspected by the scan, `delta_0 ..= delta_{i0}`.
    pub deltas: Vec<BigUint>,
    /// First vanishing index.
    pub i0: usize,
    /// Smaller syzygy degree `u + i0`.
    pub a_deg: usize,
    /// Larger syzygy degree `s + t - i0`.
    pub b_deg: usize,
    /// Dimension of the quotient over the given characteristic.
    pub dim: usize,
}

/// Runs the minor scan for the quotient with exponents `(s, t, u)` (sorted
/// internally). Returns `None` when the sorted `u` is at least `s'+t'-1`:
/// the third generator is redundant and the dimension is just `s'*t'`.
pub fn syzygy_report(
    s: usize,
    t: usize,
    u: usize,
    characteristic: Characteristic,
) -> Option<SyzygyReport> {
    let triple = SortedTriple::new(s, t, u);
    triple.band_width()?;
    let q = expansion_coefficients(&triple);
    let (i0, deltas) = vanishing_scan(&q, characteristic);
    let (s, t, u) = (triple.s(), triple.t(), triple.u());
    let a_deg = u + i0;
    let b_deg = s + t - i0;
    let products = s * t + s * u + t * u;
    assert!(
        a_deg * b_deg <= products && products - a_deg * b_deg <= s * t,
        "syzygy degrees ({a_deg}, {b_deg}) give an impossible dimension for ({s}, {t}, {u})"
    );
    let dim = products - a_deg * b_deg;
    // Internal consistency: the graded dimension count implied by the syzygy
    // degrees must be a genuine (non-negative, finite) Hilbert function.
    let coeffs = hilbert_coeffs(s, t, u, a_deg, b_deg);
    assert_eq!(
        coeffs.iter().sum::<usize>(),
        dim,
        "Hilbert coefficients disagree with the quotient dimension"
    );
    Some(SyzygyReport {
        triple,
        q,
        deltas,
        i0,
        a_deg,
        b_deg,
        dim,
    })
}

/// Dimension of `k[x,y] / (x^s, y^t, (x+y)^u)` over a field of the given
/// characteristic. Exponents may come in any order.
pub fn quotient_dimension(s: usize, t: usize, u: usize, characteristic: Characteristic) -> usize {
    match syzygy_report(s, t, u, characteristic) {
        Some(report) => report.dim,
        None => {
            let triple = SortedTriple::new(s, t, u);
            triple.s() * triple.t()
        }
    }
}

/// Coefficients of the Hilbert series
/// `(1 - w^s - w^t - w^u + w^a + w^b) / (1-w)^2`, which must be a polynomial
/// with non-negative coefficients when the degrees are consistent.
///
/// # Panics
///
/// Panics if `a + b != s + t + u`, if the series fails to terminate, or if a
/// negative coefficient appears — each of which signals a wrong vanishing
/// index upstream.
pub fn hilbert_coeffs(s: usize, t: usize, u: usize, a_deg: usize, b_deg: usize) -> Vec<usize> {
    assert_eq!(a_deg + b_deg, s + t + u, "syzygy degrees must sum to s+t+u");
    let top = s + t + u;
    let mut c = vec![0i64; top + 1];
    c[0] += 1;
    c[s] -= 1;
    c[t] -= 1;
    c[u] -= 1;
    c[a_deg] += 1;
    c[b_deg] += 1;
    // dividing by (1-w) twice = two prefix-sum passes
    for _ in 0..2 {
        for i in 1..=top {
            c[i] += c[i - 1];
        }
    }
    assert!(
        c[top] == 0 && c[top - 1] == 0,
        "Hilbert series does not terminate for ({s}, {t}, {u}, {a_deg}, {b_deg})"
    );
    while c.last() == Some(&0) {
        c.pop();
    }
    assert!(
        c.iter().all(|&x| x >= 0),
        "negative Hilbert coefficient for ({s}, {t}, {u}, {a_deg}, {b_deg}): {c:?}"
    );
    c.into_iter().map(|x| x as usize).collect()
}

/// Full decomposition by the dimension sweep: compute the quotient dimension
/// for `u = 1, 2, ...` until it saturates at `s*t`, then read the block
/// partition off the prefix-dimension profile.
///
/// # Panics
///
/// Panics if the eigenvalue product is zero (use the closed form) — the sweep
/// only models the invertible-eigenvalue situation.
pub fn decompose_via_minors(spec: &BlockSpec) -> Decomposition {
    let spec = spec.normalized();
    assert!(
        !spec.alpha_zero() && !spec.beta_zero(),
        "decompose_via_minors requires a nonzero eigenvalue product"
    );
    let (s, t) = (spec.s(), spec.t());
    let total = s * t;
    let mut dims = Vec::new();
    for u in 1..=s + t - 1 {
        let d = quotient_dimension(s, t, u, spec.characteristic());
        dims.push(d);
        if d == total {
            break;
        }
    }
    let blocks = Partition::from_prefix_dims(&dims, total);
    Decomposition::new(spec.eigenvalue_class(), blocks)
}

/// Schur polynomial evaluated at `vars` ones, by the hook-content product:
/// the number of semistandard tableaux of the given shape with entries
/// `1 ..= vars`.
pub fn schur_ones(shape: &Partition, vars: usize) -> BigUint {
    let parts = shape.parts();
    if parts.is_empty() {
        return BigUint::one();
    }
    if parts.len() > vars {
        return BigUint::zero();
    }
    let conj = shape.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (row, &len) in parts.iter().enumerate() {
        for col in 0..len {
            // vars + content, with content = col - row; row < vars was checked
            num *= (vars + col - row) as u64;
            // hook length = arm + leg + 1
            den *= ((len - col) + (conj.parts()[col] - row) - 1) as u64;
        }
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "hook-content product must divide exactly");
    quot
}

/// The minor gcd `delta_i`, recomputed through Schur evaluations instead of
/// determinants.
///
/// Each `(i+1)`-row choice `j_1 < ... < j_{i+1}` inside the band corresponds
/// (by the dual Jacobi-Trudi identity, reading the matrix entries as
/// elementary symmetric evaluations) to the shape conjugate to
/// `(s - i - j_m + m - 1)_m`, and the minor equals that Schur polynomial at
/// `u` ones. The gcd over all choices must equal
/// `minor_gcd(band_matrix(q, i), i + 1)`.
///
/// Returns 0 when no `(i+1)`-minor exists, mirroring [`minor_gcd`].
pub fn minor_gcd_via_schur(triple: &SortedTriple, i: usize) -> BigUint {
    let Some(r) = triple.band_width() else {
        return BigUint::zero();
    };
    if i >= r || i + 1 > r - i {
        return BigUint::zero();
    }
    let (s, u) = (triple.s(), triple.u());
    let mut acc = BigUint::zero();
    for_each_combination(r - i, i + 1, |subset| {
        if acc.is_one() {
            return;
        }
        let mut parts = Vec::with_capacity(i + 1);
        for (m, &j0) in subset.iter().enumerate() {
            // subset is zero-based; the shape component is s - i - j + m - 1
            // for one-based j and m, i.e. s - i - (j0 + 1) + m.
            let part = s as i64 - i as i64 - (j0 as i64 + 1) + m as i64;
            assert!(
                part >= 0,
                "negative shape component: band index mapping bug"
            );
            if part > 0 {
                parts.push(part as usize);
            }
        }
        let lambda = Partition::new(parts).conjugate();
        acc = acc.gcd(&schur_ones(&lambda, u));
    });
    acc
}
