//! Neveu-Schwarz super Fock space. (under construction)

use crate::lattice::IntegralLattice;
use std::sync::Arc;

/// `II_{2,2}` in the basis order used by the closed-form N=2 algebra:
/// h1 = rho1, h2 = rho2', h3 = rho2, h4 = rho1' with (rho_i, rho_j') = delta_ij.
pub fn ii22_paper_basis() -> Arc<IntegralLattice> {
    IntegralLattice::from_gram_i64(
        "II_{2,2}",
        &[vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]],
    )
    .expect("valid gram")
}
