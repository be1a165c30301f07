//! Jordan decomposition of a tensor product of Jordan blocks.
//!
//! Over an algebraically closed field of characteristic `p >= 0`, the
//! Kronecker product `J(a, s) (x) J(b, t)` of two Jordan blocks is again
//! similar to a direct sum of Jordan blocks, all with eigenvalue `a * b`.
//! The block sizes depend only on `s`, `t`, `p`, and on which of `a`, `b`
//! vanish — never on the particular nonzero eigenvalues. This crate computes
//! that block partition three independent ways and cross-checks them:
//!
//! * [`delta`] — a flag scan over graded determinants of binomial matrices;
//!   the fast route, linear passes over exact integer products.
//! * [`minors`] — a dimension sweep driven by gcds of minors of banded
//!   binomial matrices, the module-theoretic route through complete
//!   intersections `(x^s, y^t, (x + y)^u)`.
//! * [`oracle`] — brute force: build the Kronecker matrix over `GF(p)` or
//!   over the exact rationals and read block sizes off rank profiles. The
//!   characteristic-zero oracle really computes over the rationals; it is
//!   not a "large prime" stand-in.
//!
//! [`closed_form`] holds the characteristic-zero and zero-eigenvalue closed
//! forms, and [`cli`] the record/CSV/JSON layer used by the `jordan-tensor`
//! binary.

pub mod arith;
pub mod cli;
pub mod closed_form;
pub mod delta;
pub mod minors;
pub mod oracle;

pub use arith::{BlockSpec, Characteristic, Decomposition, EigenvalueClass, Error, Partition};
