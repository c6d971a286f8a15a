//! Exact computer algebra for certifying nilpotent structure on determinantal
//! curve charts.
//!
//! The crate builds, for every integer `b0 >= 1`, the monomial space curve
//! with value semigroup `<3, 3*b0+4, 3*b0+5>`, presents it by the maximal
//! minors of a 3x2 matrix, and mechanically checks the chain of symbolic
//! facts that make the first chart of its projectivized dualizing module
//! carry a function `f` with `f^(b0+1) = 0` and `f^b0 != 0`.
//!
//! Layering, bottom up:
//!
//! * [`polyring`] — exact coefficients (arbitrary-precision rationals or a
//!   prime field), sparse multivariate polynomials, monomial orders, and a
//!   text parser/printer.
//! * [`groebner`] — Buchberger engine plus the ideal-theoretic operations the
//!   certificate needs: normal forms, elimination, quotients, saturation,
//!   nilpotency orders, ring-map kernels, weighted Hilbert functions.
//! * [`modsyz`] — polynomial matrices, maximal minors, syzygy modules, chart
//!   ideals of two-generator module presentations.
//! * [`semigroup`] — numerical semigroup membership, gaps, Frobenius numbers,
//!   and the delta invariant.
//! * [`certificate`] — the verification pipeline (steps S1..S7), witness
//!   search procedures, and machine-readable reports.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads.
//!
//! Error policy: structurally malformed calls (mismatched rings, bad matrix
//! shapes) panic; data-dependent failures (parse errors, exhausted witness
//! boxes, missing substitution images) return `Result`.

pub mod certificate;
pub mod groebner;
pub mod modsyz;
pub mod polyring;
pub mod semigroup;
