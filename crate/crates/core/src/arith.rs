//! Small helpers around arbitrary-precision rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field: arbitrary-precision rationals.
pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a `"num/den"` or `"num"` string into a rational.
pub fn q_parse(s: &str) -> Result<Q, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
            let den: BigInt = d.trim().parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Q::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
            Ok(Q::from_integer(num))
        }
    }
}

/// Format a rational as `"num/den"`, or `"num"` when the denominator is one.
pub fn q_format(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when the rational is an integer.
pub fn q_is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

/// The rational as an `i64`, when it is an integer that fits.
pub fn q_to_i64(q: &Q) -> Option<i64> {
    if !q_is_integer(q) {
        return None;
    }
    i64::try_from(q.numer().clone()).ok()
}

/// Floor of the exact square root of a nonnegative rational: the largest
/// integer `t` with `t^2 <= q`.
pub fn floor_sqrt(q: &Q) -> BigInt {
    assert!(!q.is_negative(), "floor_sqrt of negative rational");
    if q.is_zero() {
        return BigInt::zero();
    }
    // isqrt(num * den) / den <= sqrt(num/den) < (isqrt(num*den) + 1) / den
    let num = q.numer().magnitude().clone();
    let den = q.denom().magnitude().clone();
    let mut t = (num * &den).sqrt() / &den;
    // Guard against the integer-division slack above.
    let big = |u: &BigUint| BigInt::from(u.clone());
    loop {
        let t1 = &t + 1u32;
        if Q::from_integer(big(&t1) * big(&t1)) <= *q {
            t = t1;
        } else {
            break;
        }
    }
    while Q::from_integer(big(&t) * big(&t)) > *q {
        t -= 1u32;
    }
    BigInt::from(t)
}

/// Floor of a rational as a BigInt.
pub fn q_floor(q: &Q) -> BigInt {
    q.floor().to_integer()
}

/// Ceiling of a rational as a BigInt.
pub fn q_ceil(q: &Q) -> BigInt {
    q.ceil().to_integer()
}

/// Exact binomial coefficient `C(n, k)` for rational `n` and nonnegative `k`:
/// `n (n-1) ... (n-k+1) / k!`.
pub fn q_binomial(n: &Q, k: u64) -> Q {
    let mut acc = q_one();
    for j in 0..k {
        acc *= n - q_int(j as i64);
        acc /= q_int((j + 1) as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3", "-7", "22/7", "-5/3", "0"] {
            let q = q_parse(s).unwrap();
            assert_eq!(q_format(&q), s);
        }
        assert_eq!(q_format(&q_parse("4/2").unwrap()), "2");
        assert!(q_parse("1/0").is_err());
        assert!(q_parse("x").is_err());
    }

    #[test]
    fn floor_sqrt_exact_boundaries() {
        assert_eq!(floor_sqrt(&q_int(0)), BigInt::from(0));
        assert_eq!(floor_sqrt(&q_int(15)), BigInt::from(3));
        assert_eq!(floor_sqrt(&q_int(16)), BigInt::from(4));
        assert_eq!(floor_sqrt(&q_ratio(17, 4)), BigInt::from(2));
        assert_eq!(floor_sqrt(&q_ratio(1, 2)), BigInt::from(0));
    }

    #[test]
    fn binomial_handles_negative_and_fractional_tops() {
        assert_eq!(q_binomial(&q_int(5), 2), q_int(10));
        // C(-24, 2) = 300
        assert_eq!(q_binomial(&q_int(-24), 2), q_int(300));
        // C(1/2, 2) = -1/8
        assert_eq!(q_binomial(&q_ratio(1, 2), 2), q_ratio(-1, 8));
    }
}
