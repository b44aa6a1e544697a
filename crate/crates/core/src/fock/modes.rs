//! Virasoro operators and superconformal currents as exact mode sums over a
//! basis/dual-basis pair. The orthonormal formulas of the conformal elements
//! are rewritten with dual pairs, which is basis-free and keeps every
//! coefficient rational on Lorentzian lattices.

use super::state::{apply_bmode, apply_fmode, Frame, State};
use crate::arith::{q_int, q_ratio, Q};
use num_traits::Zero;

/// Bosonic Virasoro `L_n = (1/2) sum_k sum_i :b_i(n-k) b*_i(k):`.
pub fn virasoro_bosonic(frame: &Frame, n: i64, v: &State) -> State {
    let d = frame.rank();
    let mw = v.max_bosonic_weight();
    let mut out = State::zero();
    // k >= 1: annihilation b*_i(k) on the right.
    for k in 1..=mw {
        for i in 0..d {
            let inner = apply_bmode(frame, &frame.dual_vec(i), k, v);
            if inner.is_zero() {
                continue;
            }
            out.add_scaled(&apply_bmode(frame, &frame.basis_vec(i), n - k, &inner), &q_ratio(1, 2));
        }
    }
    // k <= -1: creation b*_i(k) on the left, b_i(n-k) applied first.
    for k in (n - mw).min(-1)..=-1 {
        for i in 0..d {
            let inner = apply_bmode(frame, &frame.basis_vec(i), n - k, v);
            if inner.is_zero() {
                continue;
            }
            out.add_scaled(&apply_bmode(frame, &frame.dual_vec(i), k, &inner), &q_ratio(1, 2));
        }
    }
    // k = 0: sum_i b_i(n) (b*_i, point) = point(n).
    for (m, c) in v.iter() {
        let single = State::from_monomial(m.clone(), c.clone());
        out.add_scaled(&apply_bmode(frame, &m.point.clone(), n, &single), &q_ratio(1, 2));
    }
    out
}

/// Fermionic Virasoro part
/// `L_n^f = (1/2) sum_j sum_r (-r - 1/2) :b~_j(r) b~*_j(n-r):`.
pub fn virasoro_fermionic(frame: &Frame, n: i64, v: &State) -> State {
    let d = frame.rank();
    let fw2 = v.iter().map(|(m, _)| m.fermionic_weight2()).max().unwrap_or(0);
    let cap2 = fw2 + 2 * n.abs() + 4;
    let mut out = State::zero();
    let mut r2 = -cap2 | 1; // odd
    if r2 % 2 == 0 {
        r2 -= 1;
    }
    while r2 <= cap2 {
        let s2 = 2 * n - r2;
        // coefficient (-r - 1/2) as a rational from the doubled mode
        let coef = q_ratio(-(r2 + 1), 2);
        if !coef.is_zero() {
            for j in 0..d {
                // normal order: smaller mode to the left (applied last);
                // swapping the two odd factors contributes a minus sign.
                let (first_vec, first_mode, second_vec, second_mode, sign) = if r2 <= s2 {
                    (frame.dual_vec(j), s2, frame.basis_vec(j), r2, q_int(1))
                } else {
                    (frame.basis_vec(j), r2, frame.dual_vec(j), s2, q_int(-1))
                };
                let inner = apply_fmode(frame, &first_vec, first_mode, v);
                if inner.is_zero() {
                    continue;
                }
                let full = apply_fmode(frame, &second_vec, second_mode, &inner);
                out.add_scaled(&full, &(coef.clone() * sign * q_ratio(1, 2)));
            }
        }
        r2 += 2;
    }
    out
}

/// Full Virasoro on the Neveu-Schwarz space: bosonic plus fermionic part.
pub fn virasoro_ns(frame: &Frame, n: i64, v: &State) -> State {
    let mut out = virasoro_bosonic(frame, n, v);
    out.add_state(&virasoro_fermionic(frame, n, v));
    out
}

/// N=1 supercurrent mode `G_r = sum_j sum_k b_j(k) b~*_j(r-k)` with `r`
/// doubled (odd).
pub fn super_g(frame: &Frame, r2: i64, v: &State) -> State {
    assert!(r2 % 2 != 0, "G modes are half-integers (doubled odd)");
    let d = frame.rank();
    let mwb = v.max_bosonic_weight();
    let fw2 = v.iter().map(|(m, _)| m.fermionic_weight2()).max().unwrap_or(0);
    // bosonic mode k ranges: annihilation <= mwb; creation bounded by what
    // the fermionic annihilation partner can absorb: r2 - 2k <= fw2.
    let k_lo = (r2 - fw2).div_euclid(2).min(0);
    let mut out = State::zero();
    for k in k_lo..=mwb.max(0) {
        let f2 = r2 - 2 * k;
        for j in 0..d {
            // bosonic and fermionic factors commute; apply fermionic first.
            let inner = apply_fmode(frame, &frame.dual_vec(j), f2, v);
            if inner.is_zero() {
                continue;
            }
            out.add_state(&apply_bmode(frame, &frame.basis_vec(j), k, &inner));
        }
    }
    out
}

/// A rational isotropic frame for the N=2 operators: spans of `L+`, `L-`
/// with `(h+_i, h-_j) = delta_ij` and both sides isotropic.
#[derive(Debug, Clone)]
pub struct IsotropicFrame {
    pub hplus: Vec<Vec<Q>>,
    pub hminus: Vec<Vec<Q>>,
}

impl IsotropicFrame {
    pub fn new(frame: &Frame, hplus: Vec<Vec<Q>>, hminus: Vec<Vec<Q>>) -> Result<Self, String> {
        let l = hplus.len();
        if hminus.len() != l || 2 * l != frame.rank() {
            return Err("isotropic frame needs rank/2 vectors on each side".into());
        }
        for i in 0..l {
            for j in 0..l {
                if !frame.inner(&hplus[i], &hplus[j]).is_zero()
                    || !frame.inner(&hminus[i], &hminus[j]).is_zero()
                {
                    return Err("isotropic frame sides must be isotropic".into());
                }
                let pairing = frame.inner(&hplus[i], &hminus[j]);
                let expected = if i == j { crate::arith::q_one() } else { Q::zero() };
                if pairing != expected {
                    return Err("isotropic frame pairing must be delta_ij".into());
                }
            }
        }
        Ok(IsotropicFrame { hplus, hminus })
    }

    /// Standard frame for a direct sum of hyperbolic planes in consecutive
    /// coordinate pairs `(rho_i, rho_i')`.
    pub fn hyperbolic_pairs(frame: &Frame) -> Result<Self, String> {
        let d = frame.rank();
        if d % 2 != 0 {
            return Err("need even rank".into());
        }
        let mut hplus = Vec::new();
        let mut hminus = Vec::new();
        for i in 0..d / 2 {
            hplus.push(frame.basis_vec(2 * i));
            hminus.push(frame.basis_vec(2 * i + 1));
        }
        Self::new(frame, hplus, hminus)
    }
}

/// N=2 supercurrent `G+_r = sum_i sum_k h+_i(k) h~-_i(r-k)` (and `G-` with
/// plus and minus swapped).
pub fn super_g_pm(frame: &Frame, iso: &IsotropicFrame, plus: bool, r2: i64, v: &State) -> State {
    assert!(r2 % 2 != 0);
    let mwb = v.max_bosonic_weight();
    let fw2 = v.iter().map(|(m, _)| m.fermionic_weight2()).max().unwrap_or(0);
    let k_lo = (r2 - fw2).div_euclid(2).min(0);
    let mut out = State::zero();
    for k in k_lo..=mwb.max(0) {
        let f2 = r2 - 2 * k;
        for i in 0..iso.hplus.len() {
            let (bos, fer) = if plus {
                (&iso.hplus[i], &iso.hminus[i])
            } else {
                (&iso.hminus[i], &iso.hplus[i])
            };
            let inner = apply_fmode(frame, fer, f2, v);
            if inner.is_zero() {
                continue;
            }
            out.add_state(&apply_bmode(frame, bos, k, &inner));
        }
    }
    out
}

/// N=2 current `J_n = sum_i sum_r :a_i(r) a*_i(n-r):` with `a_i = h~-_i`,
/// `a*_i = h~+_i` (fermionic normal ordering with signs).
pub fn super_j(frame: &Frame, iso: &IsotropicFrame, n: i64, v: &State) -> State {
    let fw2 = v.iter().map(|(m, _)| m.fermionic_weight2()).max().unwrap_or(0);
    let cap2 = fw2 + 2 * n.abs() + 4;
    let mut out = State::zero();
    let mut r2 = -cap2 | 1;
    if r2 % 2 == 0 {
        r2 -= 1;
    }
    while r2 <= cap2 {
        let s2 = 2 * n - r2;
        for i in 0..iso.hplus.len() {
            let a = &iso.hminus[i];
            let astar = &iso.hplus[i];
            let (first, first_mode, second, second_mode, sign) = if r2 <= s2 {
                (astar, s2, a, r2, q_int(1))
            } else {
                (a, r2, astar, s2, q_int(-1))
            };
            let inner = apply_fmode(frame, first, first_mode, v);
            if inner.is_zero() {
                continue;
            }
            out.add_scaled(&apply_fmode(frame, second, second_mode, &inner), &sign);
        }
        r2 += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::state::{weight, Monomial};
    use crate::lattice::IntegralLattice;
    use std::sync::Arc;

    fn ii11_frame() -> Arc<Frame> {
        Frame::new(IntegralLattice::hyperbolic_plane())
    }

    #[test]
    fn l0_eigenvalue_is_weight() {
        let frame = ii11_frame();
        // v = b_0(-2) b_1(-1) e^{alpha}, alpha = (1, 1): weight 3 + 1 = 4.
        let alpha = vec![q_int(1), q_int(1)];
        let m = Monomial {
            bmodes: vec![(-2, 0), (-1, 1)],
            fmodes: vec![],
            point: alpha,
        };
        let v = State::from_monomial(m.clone(), crate::arith::q_one());
        let w = weight(&frame, &m);
        assert_eq!(w, q_int(4));
        assert_eq!(virasoro_bosonic(&frame, 0, &v), v.scale(&w));
    }

    #[test]
    fn l1_on_h_minus_one() {
        let frame = ii11_frame();
        // L_1 h(-1) e^0 = 0; L_1 h(-1) e^alpha = (h, alpha) e^alpha.
        let h = frame.basis_vec(0);
        let e0 = State::point_state(vec![Q::zero(), Q::zero()]);
        let v0 = apply_bmode(&frame, &h, -1, &e0);
        assert!(virasoro_bosonic(&frame, 1, &v0).is_zero());
        let alpha = vec![q_int(1), q_int(2)];
        let ea = State::point_state(alpha.clone());
        let va = apply_bmode(&frame, &h, -1, &ea);
        let expect = ea.scale(&frame.inner(&h, &alpha));
        assert_eq!(virasoro_bosonic(&frame, 1, &va), expect);
    }

    #[test]
    fn virasoro_commutator_with_central_charge() {
        // [L_m, L_n] = (m-n) L_{m+n} + d (m^3 - m)/12 delta_{m+n} on a
        // sample of states, d = 2.
        let frame = ii11_frame();
        let alpha = vec![q_int(1), q_int(-1)];
        let mut states = vec![State::point_state(alpha.clone())];
        let h0 = frame.basis_vec(0);
        let h1 = frame.basis_vec(1);
        states.push(apply_bmode(&frame, &h0, -1, &states[0].clone()));
        states.push(apply_bmode(&frame, &h1, -2, &states[1].clone()));
        for m in -3i64..=3 {
            for n in -3i64..=3 {
                for v in &states {
                    let lhs = virasoro_bosonic(&frame, m, &virasoro_bosonic(&frame, n, v))
                        .sub(&virasoro_bosonic(&frame, n, &virasoro_bosonic(&frame, m, v)));
                    let mut rhs = virasoro_bosonic(&frame, m + n, v).scale(&q_int(m - n));
                    if m + n == 0 {
                        let central = q_ratio(2 * (m * m * m - m), 12);
                        rhs.add_scaled(v, &central);
                    }
                    assert_eq!(lhs, rhs, "[L_{m}, L_{n}]");
                }
            }
        }
    }

    #[test]
    fn super_virasoro_relations_on_ns_states() {
        // {G_r, G_s} = 2 L_{r+s} + (c/3)(r^2 - 1/4) delta_{r+s}, c = 3d/2,
        // d = 2, on sampled NS states.
        let frame = ii11_frame();
        let alpha = vec![q_int(1), q_int(0)];
        let e_a = State::point_state(alpha);
        let h0 = frame.basis_vec(0);
        let mut states = vec![e_a.clone()];
        states.push(apply_fmode(&frame, &h0, -1, &e_a));
        states.push(apply_bmode(&frame, &h0, -1, &states[1].clone()));
        states.push(apply_fmode(&frame, &frame.basis_vec(1), -3, &states[1].clone()));
        let c = q_int(3); // 3d/2 = 3
        for r2 in [-3i64, -1, 1, 3] {
            for s2 in [-3i64, -1, 1, 3] {
                for v in &states {
                    let lhs_a = super_g(&frame, r2, &super_g(&frame, s2, v));
                    let lhs_b = super_g(&frame, s2, &super_g(&frame, r2, v));
                    let mut lhs = lhs_a;
                    lhs.add_state(&lhs_b);
                    let n = (r2 + s2) / 2;
                    let mut rhs = virasoro_ns(&frame, n, v).scale(&q_int(2));
                    if r2 + s2 == 0 {
                        let r = q_ratio(r2, 2);
                        let central = &c / q_int(3) * (&r * &r - q_ratio(1, 4));
                        rhs.add_scaled(v, &central);
                    }
                    assert_eq!(lhs, rhs, "{{G_{r2}/2, G_{s2}/2}}");
                }
            }
        }
    }

    #[test]
    fn l0_degree_on_fermions() {
        let frame = ii11_frame();
        let e0 = State::point_state(vec![Q::zero(), Q::zero()]);
        let v = apply_fmode(&frame, &frame.basis_vec(0), -1, &e0);
        // weight 1/2
        assert_eq!(virasoro_fermionic(&frame, 0, &v), v.scale(&q_ratio(1, 2)));
        assert!(virasoro_bosonic(&frame, 0, &v).is_zero());
    }
}
