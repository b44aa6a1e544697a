//! Exact-arithmetic workbench for the Lie algebras of physical states built
//! from lattice vertex operator (super)algebras.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate. The main pieces:
//!
//! - [`series`]: truncated Laurent/power series in up to three variables with
//!   exact rational coefficients, plus the standard q-series (colored
//!   partitions, eta products, Eisenstein series, `j - 720`).
//! - [`lattice`]: integral lattices by Gram matrix, ADE root systems,
//!   short-vector enumeration, theta series and the 2-cocycle.
//! - [`fock`]: the bosonic Fock space of a lattice with exact mode, vertex,
//!   Virasoro, DDF and longitudinal operators, physical-state bases and the
//!   weight-one Lie bracket.
//! - [`superfock`]: the Neveu-Schwarz tensor of the lattice Fock space with a
//!   fermionic exterior algebra, N=1/N=2 superconformal operators, super
//!   physical states and their brackets, and the N=1 DDF operators.
//! - [`n2algebra`]: the closed-form N=2 Lie algebra on determinant-zero
//!   2x2 matrices, with its SL(2,Z) actions.
//! - [`bkm`]: BKM matrix checks, affine denominator specializations, Hecke
//!   operators on Jacobi coefficient tables, the fake monster character and
//!   the Gritsenko/Borcherds product expansions.

pub mod arith;
pub mod bkm;
pub mod fock;
pub mod lattice;
pub mod linalg;
pub mod n2algebra;
pub mod series;
pub mod superfock;

pub use arith::Q;
