//! Exact short-vector enumeration (Fincke-Pohst with rational LDL).
//!
//! No floating point: the Gram matrix is decomposed as `L D L^T` over the
//! rationals and the usual layer-by-layer bounds are computed with exact
//! comparisons. Positive-definite lattices only.

use super::{IntegralLattice, LatticeError, LatticeVector};
use crate::arith::{floor_sqrt, q_int, Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

struct Ldl {
    /// Unit lower-triangular coefficients: `l[j][k]` for j > k.
    l: Vec<Vec<Q>>,
    /// Positive diagonal.
    d: Vec<Q>,
}

fn ldl(gram: &[Vec<Q>]) -> Option<Ldl> {
    let n = gram.len();
    let mut a: Vec<Vec<Q>> = gram.to_vec();
    let mut l = vec![vec![Q::zero(); n]; n];
    let mut d = vec![Q::zero(); n];
    for k in 0..n {
        d[k] = a[k][k].clone();
        if !d[k].is_positive() {
            return None;
        }
        for i in k + 1..n {
            l[i][k] = &a[i][k] / &d[k];
        }
        for i in k + 1..n {
            for j in k + 1..=i {
                let t = &l[i][k] * &a[j][k];
                a[i][j] -= t;
                if i != j {
                    a[j][i] = a[i][j].clone();
                }
            }
        }
    }
    Some(Ldl { l, d })
}

/// Shared enumeration core. Calls `emit(&coords, norm)` once per pair
/// `{v, -v}` of nonzero vectors with `norm(v) <= max_norm`; the canonical
/// representative has its highest-index nonzero coordinate positive.
fn enumerate<F: FnMut(&[i64], &Q)>(
    lat: &IntegralLattice,
    max_norm: i64,
    mut emit: F,
) -> Result<(), LatticeError> {
    if !lat.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite(lat.signature()));
    }
    if max_norm < 0 {
        return Ok(());
    }
    let n = lat.rank();
    let dec = ldl(lat.gram()).ok_or(LatticeError::NotPositiveDefinite(lat.signature()))?;
    let budget = q_int(max_norm);

    // Depth-first from coordinate n-1 down to 0. rem[k] is the norm budget
    // left for levels 0..=k; x holds the fixed coordinates above.
    let mut x = vec![0i64; n];
    struct Frame {
        level: usize,
        lo: i64,
        hi: i64,
        next: i64,
        center: Q,
        rem: Q,
        all_zero_above: bool,
    }

    // Exact integer range { t : d (t - c)^2 <= rem } = [ceil(c-s), floor(c+s)]
    // with s = sqrt(rem/d). floor(c+s) is floor(c) + floor(s) or one more;
    // ceil(c-s) is ceil(c) - floor(s) or one less. Possibly empty (lo > hi).
    let range_for = |d: &Q, c: &Q, rem: &Q| -> (i64, i64) {
        let within = |t: i64| -> bool {
            let diff = q_int(t) - c;
            &(&diff * &diff) * d <= *rem
        };
        let fl = i64::try_from(floor_sqrt(&(rem / d))).expect("enumeration range overflow");
        let cf = i64::try_from(crate::arith::q_floor(c)).expect("coordinate overflow");
        let cc = i64::try_from(crate::arith::q_ceil(c)).expect("coordinate overflow");
        let mut hi = cf + fl + 1;
        if !within(hi) {
            hi -= 1;
        }
        let mut lo = cc - fl - 1;
        if !within(lo) {
            lo += 1;
        }
        (lo, hi)
    };

    let center_at = |level: usize, x: &[i64]| -> Q {
        let mut c = Q::zero();
        for j in level + 1..n {
            if x[j] != 0 {
                c -= &dec.l[j][level] * q_int(x[j]);
            }
        }
        c
    };

    let mut stack: Vec<Frame> = Vec::with_capacity(n);
    {
        let level = n - 1;
        let center = Q::zero();
        let (lo, hi) = range_for(&dec.d[level], &center, &budget);
        // Only the nonnegative half at the top level; zero handled inside.
        stack.push(Frame {
            level,
            lo: lo.max(0),
            hi,
            next: lo.max(0),
            center,
            rem: budget.clone(),
            all_zero_above: true,
        });
    }

    while let Some(frame) = stack.last_mut() {
        if frame.next > frame.hi {
            stack.pop();
            continue;
        }
        let t = frame.next;
        frame.next += 1;
        let level = frame.level;
        x[level] = t;
        let all_zero = frame.all_zero_above && t == 0;
        // If everything above is zero, skip the negative half at this level
        // (the canonical representative has its top nonzero coordinate > 0).
        if frame.all_zero_above && t < 0 {
            continue;
        }
        let diff = q_int(t) - &frame.center;
        let used = &(&diff * &diff) * &dec.d[level];
        if used > frame.rem {
            continue;
        }
        let rem = &frame.rem - used;
        if level == 0 {
            if !all_zero {
                let norm = &budget - &rem;
                emit(&x, &norm);
            }
            continue;
        }
        let next_level = level - 1;
        let center = center_at(next_level, &x);
        let (mut lo, hi) = range_for(&dec.d[next_level], &center, &rem);
        if all_zero {
            lo = lo.max(0);
        }
        stack.push(Frame {
            level: next_level,
            lo,
            hi,
            next: lo,
            center,
            rem,
            all_zero_above: all_zero,
        });
    }
    Ok(())
}

/// All nonzero vectors `v` with `(v,v) <= max_norm`, each exactly once, in a
/// deterministic order, closed under negation.
pub fn short_vectors(
    lat: &IntegralLattice,
    max_norm: i64,
) -> Result<Vec<LatticeVector>, LatticeError> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    enumerate(lat, max_norm, |coords, _norm| {
        out.push(coords.to_vec());
        out.push(coords.iter().map(|&c| -c).collect());
    })?;
    out.sort();
    Ok(out
        .into_iter()
        .map(|coords| coords.into_iter().map(q_int).collect())
        .collect())
}

/// Counts of nonzero vectors by norm, without materializing them. The map
/// key is the exact norm (an even integer for even lattices).
pub fn short_vector_counts(
    lat: &IntegralLattice,
    max_norm: i64,
) -> Result<BTreeMap<BigInt, u64>, LatticeError> {
    let mut counts: BTreeMap<BigInt, u64> = BTreeMap::new();
    enumerate(lat, max_norm, |_coords, norm| {
        assert!(norm.denom() == &BigInt::from(1), "integral lattice norms are integers");
        *counts.entry(norm.numer().clone()).or_insert(0) += 2;
    })?;
    Ok(counts)
}


#[cfg(test)]
mod bench_probe {
    use super::*;

    #[test]
    #[ignore]
    fn leech_norm6_counts_probe() {
        let l = IntegralLattice::leech();
        let t0 = std::time::Instant::now();
        let counts = short_vector_counts(&l, 6).unwrap();
        eprintln!("leech norm<=6 counts: {:?} in {:?}", counts, t0.elapsed());
        assert_eq!(counts[&num_bigint::BigInt::from(4)], 196560);
        assert_eq!(counts[&num_bigint::BigInt::from(6)], 16773120);
    }
}
