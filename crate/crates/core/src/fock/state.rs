//! States of the (super) Fock space: exact linear combinations of
//! normal-ordered monomials over lattice points.
//!
//! A monomial is a multiset of bosonic modes, a wedge of fermionic modes and
//! a lattice point; purely bosonic states have an empty wedge. Modes carry a
//! direction index into the lattice basis; arbitrary directions of
//! `L tensor Q` act by expanding over the basis. All coefficients are exact
//! rationals.

use crate::arith::{q_int, q_ratio, Q};
use crate::lattice::{Cocycle, IntegralLattice, LatticeVector};
use crate::linalg::Matrix;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;

/// The ambient data every state refers to: the lattice, its dual basis and
/// the 2-cocycle in the fixed basis order.
#[derive(Debug, Clone)]
pub struct Frame {
    lattice: Arc<IntegralLattice>,
    dual: Matrix,
    cocycle: Cocycle,
}

impl Frame {
    pub fn new(lattice: Arc<IntegralLattice>) -> Arc<Frame> {
        let dual = lattice.dual_basis();
        let cocycle = Cocycle::new(&lattice);
        Arc::new(Frame { lattice, dual, cocycle })
    }

    pub fn lattice(&self) -> &Arc<IntegralLattice> {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        self.lattice.inner(&a.to_vec(), &b.to_vec())
    }

    /// Pairing of a direction vector with a basis direction:
    /// `(h, b_d) = (h G)_d`.
    pub fn pair_basis(&self, h: &[Q], d: usize) -> Q {
        let mut acc = Q::zero();
        for (i, hi) in h.iter().enumerate() {
            if !hi.is_zero() {
                acc += hi * self.lattice.gram_entry(i, d);
            }
        }
        acc
    }

    /// Basis vector `b_i` as a coordinate vector.
    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.rank()];
        v[i] = crate::arith::q_one();
        v
    }

    /// Dual basis vector `b*_i` (pairs to `delta_ij` with the basis).
    pub fn dual_vec(&self, i: usize) -> Vec<Q> {
        self.dual[i].clone()
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn same_as(&self, other: &Frame) -> bool {
        self.lattice.label() == other.lattice.label() && self.lattice.gram() == other.lattice.gram()
    }
}

/// A normal-ordered Fock monomial.
///
/// `bmodes`: bosonic modes `(n, dir)` with `n < 0`, sorted ascending by
/// `(n, dir)`, repeats allowed. `fmodes`: fermionic modes `(2r, dir)` with
/// `r` a negative half-integer (stored doubled, odd), strictly decreasing by
/// `(2r, dir)`, no repeats; the list order is the wedge order. `point`: the
/// lattice point (rational during DDF words).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub bmodes: Vec<(i64, usize)>,
    pub fmodes: Vec<(i64, usize)>,
    pub point: Vec<Q>,
}

impl Monomial {
    pub fn point_only(point: Vec<Q>) -> Monomial {
        Monomial { bmodes: Vec::new(), fmodes: Vec::new(), point }
    }

    /// Total mode weight (bosonic plus fermionic), a nonnegative half-integer.
    pub fn mode_weight2(&self) -> i64 {
        let b: i64 = self.bmodes.iter().map(|(n, _)| -2 * n).sum();
        let f: i64 = self.fmodes.iter().map(|(r2, _)| -r2).sum();
        b + f
    }

    pub fn bosonic_weight(&self) -> i64 {
        self.bmodes.iter().map(|(n, _)| -n).sum()
    }

    pub fn fermionic_weight2(&self) -> i64 {
        self.fmodes.iter().map(|(r2, _)| -r2).sum()
    }

    /// Fermion-number parity: true for odd.
    pub fn parity_odd(&self) -> bool {
        self.fmodes.len() % 2 == 1
    }
}

/// An exact linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct State {
    terms: BTreeMap<Monomial, Q>,
}

impl State {
    pub fn zero() -> State {
        State { terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: Monomial, coef: Q) -> State {
        let mut s = State::zero();
        s.add_term(m, coef);
        s
    }

    pub fn point_state(point: Vec<Q>) -> State {
        State::from_monomial(Monomial::point_only(point), crate::arith::q_one())
    }

    pub fn add_term(&mut self, m: Monomial, coef: Q) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += coef;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, coef);
            }
        }
    }

    pub fn add_state(&mut self, other: &State) {
        for (m, c) in other.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &State, factor: &Q) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in other.iter() {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Q) -> State {
        if factor.is_zero() {
            return State::zero();
        }
        State { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect() }
    }

    pub fn neg(&self) -> State {
        self.scale(&-crate::arith::q_one())
    }

    pub fn sub(&self, other: &State) -> State {
        let mut out = self.clone();
        out.add_scaled(other, &-crate::arith::q_one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The common lattice point of all monomials, if unique.
    pub fn single_point(&self) -> Option<Vec<Q>> {
        let mut it = self.terms.keys();
        let first = it.next()?.point.clone();
        if it.all(|m| m.point == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Maximum bosonic mode weight over the monomials.
    pub fn max_bosonic_weight(&self) -> i64 {
        self.terms.keys().map(|m| m.bosonic_weight()).max().unwrap_or(0)
    }
}

/// L0-weight of a monomial: mode weight plus half the point norm.
pub fn weight(frame: &Frame, m: &Monomial) -> Q {
    q_ratio(m.mode_weight2(), 2) + frame.inner(&m.point, &m.point) / q_int(2)
}

/// Apply the bosonic mode `h(n)` (direction vector `h`, any `n`).
pub fn apply_bmode(frame: &Frame, h: &[Q], n: i64, v: &State) -> State {
    let mut out = State::zero();
    for (m, c) in v.iter() {
        if n == 0 {
            out.add_term(m.clone(), c * frame.inner(h, &m.point));
        } else if n < 0 {
            for (d, hd) in h.iter().enumerate() {
                if hd.is_zero() {
                    continue;
                }
                let mut nm = m.clone();
                let pos = nm.bmodes.partition_point(|&e| e < (n, d));
                nm.bmodes.insert(pos, (n, d));
                out.add_term(nm, c * hd);
            }
        } else {
            // Derivation: n * (h, b_d) per occurrence of mode (-n, d).
            let mut i = 0;
            while i < m.bmodes.len() {
                let (mode, d) = m.bmodes[i];
                let run = m.bmodes[i..].iter().take_while(|&&e| e == (mode, d)).count();
                if mode == -n {
                    let pairing = frame.pair_basis(h, d);
                    if !pairing.is_zero() {
                        let mut nm = m.clone();
                        nm.bmodes.remove(i);
                        out.add_term(nm, c * q_int(n) * pairing * q_int(run as i64));
                    }
                }
                i += run;
            }
        }
    }
    out
}

/// Apply the fermionic mode `a(r)` (direction vector `a`, doubled mode `r2`,
/// odd). Creation wedges in with position signs; annihilation is the
/// superderivation.
pub fn apply_fmode(frame: &Frame, a: &[Q], r2: i64, v: &State) -> State {
    assert!(r2 % 2 != 0, "fermionic modes are half-integers (doubled odd)");
    let mut out = State::zero();
    for (m, c) in v.iter() {
        if r2 < 0 {
            for (d, ad) in a.iter().enumerate() {
                if ad.is_zero() {
                    continue;
                }
                // fmodes sorted strictly decreasing by (mode2, dir).
                let key = (r2, d);
                let pos = m.fmodes.partition_point(|&e| e > key);
                if m.fmodes.get(pos) == Some(&key) {
                    continue; // exterior square
                }
                let mut nm = m.clone();
                nm.fmodes.insert(pos, key);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term(nm, c * ad * q_int(sign));
            }
        } else {
            for (j, &(mode2, d)) in m.fmodes.iter().enumerate() {
                if mode2 == -r2 {
                    let pairing = frame.pair_basis(a, d);
                    if !pairing.is_zero() {
                        let mut nm = m.clone();
                        nm.fmodes.remove(j);
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        out.add_term(nm, c * pairing * q_int(sign));
                    }
                }
            }
        }
    }
    out
}

/// Multiply by the group element `e^{pt}`: translate points with the cocycle
/// sign (trivial sign on pairs leaving the integral lattice).
pub fn translate(frame: &Frame, pt: &[Q], v: &State) -> State {
    let mut out = State::zero();
    for (m, c) in v.iter() {
        let eps = frame.cocycle().value_or_one(&pt.to_vec(), &m.point);
        let mut nm = m.clone();
        for (x, p) in nm.point.iter_mut().zip(pt) {
            *x += p;
        }
        out.add_term(nm, c * q_int(eps as i64));
    }
    out
}

/// Graded piece check: every monomial has the given point and L0-weight.
pub fn is_graded(frame: &Frame, v: &State, point: &[Q], w: &Q) -> bool {
    v.iter().all(|(m, _)| m.point == point && &weight(frame, m) == w)
}

pub fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(a: &[Q], c: &Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_from_lattice(v: &LatticeVector) -> Vec<Q> {
    v.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_one;

    fn a1_frame() -> Arc<Frame> {
        let rs = crate::lattice::root_system(&[(crate::lattice::RootFamily::A, 1)]).unwrap();
        Frame::new(IntegralLattice::root_lattice(&rs))
    }

    #[test]
    fn mode_action_rules() {
        let frame = a1_frame();
        let alpha = frame.basis_vec(0);
        let e_beta = State::point_state(alpha.clone());
        // alpha(0) e^beta = (alpha, beta) e^beta
        let r = apply_bmode(&frame, &alpha, 0, &e_beta);
        assert_eq!(r, e_beta.scale(&q_int(2)));
        // alpha(1) alpha(-1) e^0 = (alpha, alpha) e^0
        let e0 = State::point_state(vec![Q::zero()]);
        let created = apply_bmode(&frame, &alpha, -1, &e0);
        let killed = apply_bmode(&frame, &alpha, 1, &created);
        assert_eq!(killed, e0.scale(&q_int(2)));
        // alpha(-2) e^0 is a single monomial
        let m2 = apply_bmode(&frame, &alpha, -2, &e0);
        assert_eq!(m2.num_terms(), 1);
        // commutator [alpha(m), alpha(n)] = m (alpha,alpha) delta_{m+n} on a
        // deeper state
        let v = apply_bmode(&frame, &alpha, -1, &created); // alpha(-1)^2 e^0
        let lhs = apply_bmode(&frame, &alpha, 1, &apply_bmode(&frame, &alpha, -1, &v));
        let rhs = apply_bmode(&frame, &alpha, -1, &apply_bmode(&frame, &alpha, 1, &v));
        assert_eq!(lhs.sub(&rhs), v.scale(&q_int(2)));
    }

    #[test]
    fn fermion_action_rules() {
        let frame = a1_frame();
        let a = frame.basis_vec(0);
        let e0 = State::point_state(vec![Q::zero()]);
        // a(-1/2)^2 = 0
        let once = apply_fmode(&frame, &a, -1, &e0);
        assert_eq!(once.num_terms(), 1);
        let twice = apply_fmode(&frame, &a, -1, &once);
        assert!(twice.is_zero());
        // {a(1/2), a(-1/2)} v = (a,a) v on e^0
        let anni = apply_fmode(&frame, &a, 1, &once);
        assert_eq!(anni, e0.scale(&q_int(2)));
        // anticommutation sign: a(-1/2) wedge a(-3/2) vs reversed
        let deep = apply_fmode(&frame, &a, -3, &e0);
        let ab = apply_fmode(&frame, &a, -1, &deep);
        let ba = apply_fmode(&frame, &a, -3, &once);
        assert_eq!(ab, ba.neg());
    }

    #[test]
    fn translation_uses_cocycle() {
        let frame = a1_frame();
        let alpha = frame.basis_vec(0);
        let neg_alpha = vec_scale(&alpha, &-q_one());
        let e_alpha = State::point_state(alpha.clone());
        // e^{-alpha} e^{alpha} = eps(-alpha, alpha) e^0 with
        // eps(-a, a) = (-1)^{(a,a)/2} = -1 for a root.
        let r = translate(&frame, &neg_alpha, &e_alpha);
        let e0 = State::point_state(vec![Q::zero()]);
        assert_eq!(r, e0.neg());
    }
}
