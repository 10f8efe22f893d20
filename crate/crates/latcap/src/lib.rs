//! Exact-arithmetic capacities on finite lattices.
//!
//! The crate provides:
//!
//! * [`lattice`] — validated finite lattices, Möbius functions, antichains,
//!   and linear extensions;
//! * [`capacity`] — Möbius inversion, successive difference functionals and
//!   their duals, and monotonicity classification;
//! * [`ideal`] — the distributive lattice of nonempty up-sets and completely
//!   monotone extensions (greedy, Möbius, dual-Möbius);
//! * [`lp`] — an exact rational primal simplex with Bland's rule;
//! * [`frechet`] — tree functionals, optimal pairwise bounds, λ-difference
//!   operators, and marginal-constrained optimization;
//! * [`stochastic`] — dominance and membership couplings, their feasibility
//!   conditions, and joint marginal bounds.
//!
//! All arithmetic is exact: every value is an arbitrary-precision rational
//! and every comparison is an equality, never a tolerance.

pub mod capacity;
pub mod error;
pub mod frechet;
pub mod ideal;
pub mod lattice;
pub mod lp;
pub mod rational;
pub mod stochastic;

pub use error::{Error, Result};
pub use lattice::{Elem, Lattice, Subset};
pub use rational::{format_rational, parse_rational, rat, Rational};
