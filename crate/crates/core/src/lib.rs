//! Exact combinatorics of boson normal ordering and Feynman-type graph
//! counting.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is organized around five layers:
//!
//! * [`egf`] — truncated exponential-generating-function algebra
//!   (exp, log, composition, rational powers, the product formula),
//! * [`bell`] — partial and complete Bell polynomials plus the named
//!   sequence families (Bell, involution, idempotent, Hermite),
//! * [`boson`] — normal ordering of words in a and a†: a brute-force
//!   rewrite engine, a Bargmann-representation check, and the closed-form
//!   kernels with their vertex operators,
//! * [`counting`] — the graph-counting series Z(L, V, λ) via two
//!   independent routes, and its closed forms,
//! * [`graphs`] — the exhaustive partition-pair enumeration that tabulates
//!   isomorphism classes of the counted graphs.
//!
//! The crate is `no_std` (alloc only); all values are immutable after
//! construction and all operations are pure, so everything is freely
//! shareable across threads.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod bell;
pub mod boson;
pub mod counting;
pub mod egf;
pub mod graphs;

pub use arith::Rat;
pub use bell::{BellTriangle, WeightSequence};
pub use boson::{BosonOp, BosonPolynomial, KernelSeries, WordSpec};
pub use counting::{ClosedForm, CountingProblem};
pub use egf::EgfSeries;
pub use graphs::{GraphClass, GraphClassRow};
