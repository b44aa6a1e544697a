//! The 2-cocycle of an even lattice.
//!
//! On basis vectors: `eps(b_i, b_j) = 1` for `i < j`, `(-1)^{(b_i,b_j)}` for
//! `i > j`, and `(-1)^{(b_i,b_i)/2}` on the diagonal, extended bimultiplicatively.
//! The diagonal term makes `eps(a, -a) = (-1)^{(a,a)/2}` hold on every even
//! lattice; for an isotropic basis it reduces to the plain `i <= j` recipe.

use super::{IntegralLattice, LatticeVector};
use crate::arith::{q_int, Q};
use num_traits::Zero;

#[derive(Debug, thiserror::Error)]
pub enum CocycleError {
    #[error("cocycle undefined: pairing exponent {0} is not an integer")]
    NonIntegralPairing(String),
}

/// Bimultiplicative 2-cocycle data: `eps(a, b) = (-1)^{a^T M b}` with `M` the
/// integer matrix below.
#[derive(Debug, Clone)]
pub struct Cocycle {
    m: Vec<Vec<i64>>,
}

impl Cocycle {
    /// Cocycle of an even lattice in its fixed basis order. Reordering the
    /// basis changes `eps` (but not its isomorphism class), so the basis is
    /// never silently permuted.
    pub fn new(lat: &IntegralLattice) -> Self {
        assert!(lat.is_even(), "cocycle construction needs an even lattice");
        let n = lat.rank();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let g = crate::arith::q_to_i64(lat.gram_entry(i, j)).expect("integral gram");
                if i > j {
                    m[i][j] = g.rem_euclid(2);
                } else if i == j {
                    m[i][j] = (g / 2).rem_euclid(2);
                }
            }
        }
        Cocycle { m }
    }

    /// The exponent `a^T M b` as a rational (integral for lattice points).
    fn exponent(&self, a: &LatticeVector, b: &LatticeVector) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if self.m[i][j] != 0 && !bj.is_zero() {
                    acc += ai * q_int(self.m[i][j]) * bj;
                }
            }
        }
        acc
    }

    /// `eps(a, b)` for integral pairings; error otherwise.
    pub fn value(&self, a: &LatticeVector, b: &LatticeVector) -> Result<i8, CocycleError> {
        let e = self.exponent(a, b);
        if !crate::arith::q_is_integer(&e) {
            return Err(CocycleError::NonIntegralPairing(crate::arith::q_format(&e)));
        }
        Ok(if (e.numer() % 2i32).is_zero() { 1 } else { -1 })
    }

    /// `eps` extended to the rational span: pairs whose exponent is not an
    /// integer get the trivial sign. Used by DDF words through points of
    /// `L tensor Q`; on the lattice itself this agrees with [`Self::value`].
    pub fn value_or_one(&self, a: &LatticeVector, b: &LatticeVector) -> i8 {
        self.value(a, b).unwrap_or(1)
    }

    pub fn value_i64(&self, a: &[i64], b: &[i64]) -> i8 {
        let av: LatticeVector = a.iter().map(|&x| q_int(x)).collect();
        let bv: LatticeVector = b.iter().map(|&x| q_int(x)).collect();
        self.value(&av, &bv).expect("integer vectors have integral pairings")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{root_system, vec_from_i64, RootFamily};

    fn lcg(state: &mut u64) -> i64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*state >> 33) % 7) as i64 - 3
    }

    fn check_all_conditions(lat: &IntegralLattice, trials: usize) {
        let eps = Cocycle::new(lat);
        let n = lat.rank();
        let mut state = 0x9e3779b97f4a7c15u64;
        let rand_vec = |state: &mut u64| -> LatticeVector {
            (0..n).map(|_| q_int(lcg(state))).collect()
        };
        let zero: LatticeVector = vec![Q::zero(); n];
        for _ in 0..trials {
            let a = rand_vec(&mut state);
            let b = rand_vec(&mut state);
            let c = rand_vec(&mut state);
            let e = |x: &LatticeVector, y: &LatticeVector| eps.value(x, y).unwrap() as i64;
            // cocycle identity
            let apb: LatticeVector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let bpc: LatticeVector = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            assert_eq!(e(&a, &b) * e(&apb, &c), e(&a, &bpc) * e(&b, &c));
            // commutator condition
            let ab = lat.inner(&a, &b);
            let sign = if (ab.numer() % 2i32).is_zero() { 1 } else { -1 };
            assert_eq!(e(&a, &b), sign * e(&b, &a));
            // eps(a, -a) = (-1)^{(a,a)/2}
            let na: LatticeVector = a.iter().map(|x| -x.clone()).collect();
            let half_norm = lat.norm(&a) / q_int(2);
            let s2 = if (half_norm.numer() % 2i32).is_zero() { 1 } else { -1 };
            assert_eq!(e(&a, &na), s2);
            // eps(0, a) = eps(a, 0) = 1
            assert_eq!(e(&zero, &a), 1);
            assert_eq!(e(&a, &zero), 1);
        }
    }

    #[test]
    fn cocycle_conditions_on_test_lattices() {
        let rs = root_system(&[(RootFamily::A, 1)]).unwrap();
        check_all_conditions(&IntegralLattice::root_lattice(&rs), 200);
        let rs2 = root_system(&[(RootFamily::A, 2)]).unwrap();
        check_all_conditions(&IntegralLattice::root_lattice(&rs2), 200);
        let e8 = root_system(&[(RootFamily::E, 8)]).unwrap();
        check_all_conditions(&IntegralLattice::root_lattice(&e8), 200);
        check_all_conditions(&IntegralLattice::hyperbolic_plane(), 200);
        let l253 = IntegralLattice::direct_sum(
            "II_{25,1}",
            &[IntegralLattice::leech(), IntegralLattice::hyperbolic_plane()],
        );
        check_all_conditions(&l253, 50);
    }

    #[test]
    fn isotropic_basis_keeps_paper_recipe() {
        // On a basis of isotropic vectors the diagonal corrections vanish and
        // eps(b_i, b_j) = 1 for i <= j exactly.
        let h = IntegralLattice::hyperbolic_plane();
        let eps = Cocycle::new(&h);
        assert_eq!(eps.value_i64(&[1, 0], &[0, 1]), 1);
        assert_eq!(eps.value_i64(&[0, 1], &[1, 0]), -1); // (b2,b1) = 1, odd
        assert_eq!(eps.value_i64(&[1, 0], &[1, 0]), 1);
    }

    #[test]
    fn rational_points_get_trivial_sign() {
        let h = IntegralLattice::hyperbolic_plane();
        let eps = Cocycle::new(&h);
        let half: LatticeVector = vec![crate::arith::q_ratio(1, 2), Q::zero()];
        let b1 = vec_from_i64(&[0, 1]);
        assert!(eps.value(&b1, &half).is_err());
        assert_eq!(eps.value_or_one(&b1, &half), 1);
    }
}
