//! Theta series and specialized Jacobi theta series of positive-definite
//! even lattices.

use super::{short_vector_counts, short_vectors, IntegralLattice, LatticeError, LatticeVector};
use crate::arith::{q_int, q_one, Q};
use crate::series::{ExactSeries, MultiSeries};
use num_traits::{Signed, Zero};
use std::sync::Arc;

fn component_blocks(lat: &IntegralLattice) -> Vec<Arc<IntegralLattice>> {
    let comps = lat.components();
    if comps.len() <= 1 {
        return vec![Arc::new(lat.clone())];
    }
    let mut out = Vec::new();
    let mut off = 0usize;
    for (idx, &r) in comps.iter().enumerate() {
        let gram: Vec<Vec<Q>> = (0..r)
            .map(|i| (0..r).map(|j| lat.gram_entry(off + i, off + j).clone()).collect())
            .collect();
        out.push(
            IntegralLattice::from_gram(&format!("{}[{}]", lat.label(), idx), gram)
                .expect("component blocks of a valid lattice are valid"),
        );
        off += r;
    }
    out
}

/// `Theta_L(q) = sum_lambda q^{lambda^2/2}` truncated below integer exponent
/// `order`. Direct sums factorize into products of component theta series.
pub fn theta_series(lat: &IntegralLattice, order: i64) -> Result<ExactSeries, LatticeError> {
    if !lat.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite(lat.signature()));
    }
    if !lat.is_even() {
        return Err(LatticeError::NotEven);
    }
    let mut acc = ExactSeries::one("q", 2 * order);
    for block in component_blocks(lat) {
        let max_norm = 2 * order - 2;
        let counts = short_vector_counts(&block, max_norm)?;
        let mut t = ExactSeries::one("q", 2 * order);
        for (norm, count) in counts {
            // exponent = norm / 2, doubled = norm
            let e2 = i64::try_from(norm).expect("norm fits i64");
            t.add_to(e2, &q_int(count as i64));
        }
        acc = acc.mul(&t).expect("same variable");
    }
    Ok(acc)
}

/// The two-variable specialization `sum_lambda q^{lambda^2/2} xi^{(lambda,v0)}`
/// of `Theta_L(tau, z)` along `z = zeta v0`, truncated below `q^q_order`.
/// Pairings `(lambda, v0)` must be half-integers; `xi_trunc2` optionally
/// truncates the xi direction (doubled exponent bound).
pub fn jacobi_theta_specialized(
    lat: &IntegralLattice,
    v0: &LatticeVector,
    q_order: i64,
    xi_trunc2: Option<i64>,
) -> Result<MultiSeries, LatticeError> {
    if !lat.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite(lat.signature()));
    }
    if !lat.is_even() {
        return Err(LatticeError::NotEven);
    }
    if v0.len() != lat.rank() {
        return Err(LatticeError::WrongLength { got: v0.len(), want: lat.rank() });
    }
    let vars = ["q", "xi"];
    let mut acc = MultiSeries::one(&vars, vec![Some(2 * q_order), xi_trunc2]);
    let mut off = 0usize;
    for block in component_blocks(lat) {
        let r = block.rank();
        let v0_block: LatticeVector = v0[off..off + r].to_vec();
        off += r;
        let mut t = MultiSeries::one(&vars, vec![Some(2 * q_order), xi_trunc2]);
        if v0_block.iter().all(|c| c.is_zero()) {
            // Collapses to the plain theta series of the block.
            let theta = theta_series(&block, q_order)?;
            for (e2, c) in theta.iter() {
                t.set(vec![*e2, 0], c.clone());
            }
        } else {
            for v in short_vectors(&block, 2 * q_order - 2)? {
                let norm = block.norm(&v);
                let pairing = block.inner(&v, &v0_block);
                let pairing2 = pairing * q_int(2);
                if !pairing2.denom().is_zero() && !crate::arith::q_is_integer(&pairing2) {
                    return Err(LatticeError::Json(format!(
                        "pairing {} with v0 is not a half-integer",
                        crate::arith::q_format(&(pairing2 / q_int(2)))
                    )));
                }
                let e2 = crate::arith::q_to_i64(&norm).expect("even norm fits");
                let x2 = crate::arith::q_to_i64(&pairing2).expect("doubled pairing fits");
                t.add_to(&[e2, x2], &q_one());
            }
        }
        acc = acc.mul(&t).expect("same variables");
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{root_system, RootFamily};
    use crate::series::eisenstein;

    #[test]
    fn theta_e8_is_eisenstein_4() {
        let rs = root_system(&[(RootFamily::E, 8)]).unwrap();
        let l = IntegralLattice::root_lattice(&rs);
        let theta = theta_series(&l, 5).unwrap();
        let e4 = eisenstein(4, 5).unwrap();
        assert_eq!(theta, e4);
    }

    #[test]
    fn theta_a1_squares() {
        let rs = root_system(&[(RootFamily::A, 1)]).unwrap();
        let l = IntegralLattice::root_lattice(&rs);
        // Theta_{A1} = 1 + 2q + 2q^4 + 2q^9 + ... (norm of n*alpha is 2n^2)
        let theta = theta_series(&l, 10).unwrap();
        for n in 0..10i64 {
            let expected = if n == 0 {
                q_int(1)
            } else if (0..10).any(|k: i64| k * k == n) {
                q_int(2)
            } else {
                Q::zero()
            };
            assert_eq!(theta.coeff(n), expected, "coefficient of q^{n}");
        }
    }

    #[test]
    fn theta_of_direct_sum_is_product() {
        let rs = root_system(&[(RootFamily::A, 1)]).unwrap();
        let a1 = IntegralLattice::root_lattice(&rs);
        let a1a1 = IntegralLattice::direct_sum("A1+A1", &[a1.clone(), a1.clone()]);
        let lhs = theta_series(&a1a1, 8).unwrap();
        let t = theta_series(&a1, 8).unwrap();
        assert_eq!(lhs, t.mul(&t).unwrap());

        let rs8 = root_system(&[(RootFamily::E, 8)]).unwrap();
        let e8 = IntegralLattice::root_lattice(&rs8);
        let e8e8 = IntegralLattice::direct_sum("E8+E8", &[e8.clone(), e8.clone()]);
        let lhs8 = theta_series(&e8e8, 4).unwrap();
        let t8 = theta_series(&e8, 4).unwrap();
        assert_eq!(lhs8, t8.mul(&t8).unwrap());
    }

    #[test]
    fn jacobi_theta_a1_along_root() {
        let rs = root_system(&[(RootFamily::A, 1)]).unwrap();
        let l = IntegralLattice::root_lattice(&rs);
        let alpha = vec![q_one()];
        // 1 + q(xi^2 + xi^-2) + q^4(xi^4 + xi^-4) + ...
        let jt = jacobi_theta_specialized(&l, &alpha, 10, None).unwrap();
        assert_eq!(jt.coeff2(&[0, 0]), q_int(1));
        assert_eq!(jt.coeff2(&[2, 4]), q_int(1));
        assert_eq!(jt.coeff2(&[2, -4]), q_int(1));
        assert_eq!(jt.coeff2(&[2, 0]), Q::zero());
        assert_eq!(jt.coeff2(&[8, 8]), q_int(1));
        // xi -> 1/xi symmetry
        for (e, c) in jt.iter() {
            assert_eq!(jt.coeff2(&[e[0], -e[1]]), *c);
        }
    }

    #[test]
    fn jacobi_theta_at_zero_is_theta() {
        let rs = root_system(&[(RootFamily::A, 1), (RootFamily::A, 1)]).unwrap();
        let l = IntegralLattice::root_lattice(&rs);
        let zero = vec![Q::zero(), Q::zero()];
        let jt = jacobi_theta_specialized(&l, &zero, 6, None).unwrap();
        let theta = theta_series(&l, 6).unwrap();
        for (e2, c) in theta.iter() {
            assert_eq!(jt.coeff2(&[*e2, 0]), *c);
        }
        assert_eq!(jt.num_terms(), theta.num_terms());
    }
}
