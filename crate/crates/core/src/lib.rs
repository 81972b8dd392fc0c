//! Pentagonal cylinder chains `P_n` and pentagonal Möbius chains `P'_n`.
//!
//! The crate builds both chain families, evaluates their degree-Kirchhoff
//! index, Kemeny's constant, spanning-tree count, Gutman index and Schultz
//! index in exact arithmetic, and checks each closed form against
//! independent brute-force computations:
//!
//! * [`graphs`] constructs the chains, vertex classes and automorphisms.
//! * [`numerics`] holds the exact kernels: big rationals, quadratic rings
//!   `Z[√d]` / `Q(√d)`, fraction-free determinants, characteristic
//!   polynomials, linear solves and a Jacobi eigensolver.
//! * [`spectral`] builds (normalized) Laplacians and the reflection
//!   decomposition of the normalized Laplacian into `L_A` and `L_S`.
//! * [`closed_form`] evaluates every closed form, the determinant identities
//!   behind them (each paired with an explicit matrix constructor), and the
//!   Table-style report.
//! * [`oracles`] computes the same invariants from first principles.
//! * [`verify`] runs the full invariant sweep and emits a JSON-lines log.
//! * [`cli`] is the command-line surface.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod graphs;
pub mod numerics;
pub mod oracles;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{ChainFamily, ChainGraph, VertexClass, VertexId, VertexPermutation};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
