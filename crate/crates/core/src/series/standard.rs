//! The specific q-series the workbench is built around: colored partition
//! generating functions, eta products, Eisenstein series, `j - 720`,
//! Ramanujan tau, and the Neveu-Schwarz multiplicity series.

use super::{ExactSeries, SeriesError};
use crate::arith::{q_int, q_one, q_ratio, Q};
use num_traits::One;

/// Euler factor product `prod_{n>=1} (1 - q^{scale*n})^exponent` with doubled
/// truncation `trunc2`.
fn euler_product(var: &str, scale: i64, exponent: i64, trunc2: i64) -> Result<ExactSeries, SeriesError> {
    assert!(scale >= 1);
    let mut base = ExactSeries::one(var, trunc2);
    let mut n = scale;
    while 2 * n < trunc2 {
        let mut f = ExactSeries::one(var, trunc2);
        f.set(2 * n, -q_one());
        base = base.mul(&f)?.truncate2(trunc2);
        n += scale;
    }
    Ok(base.pow_int(exponent)?.truncate2(trunc2))
}

/// Generating function of integer partitions in `colors` colors:
/// `prod_{n>=1} (1 - q^n)^{-colors}` to `q^order` exclusive.
pub fn partitions_colored(colors: i64, order: i64) -> ExactSeries {
    assert!(colors >= 1, "need at least one color");
    euler_product("q", 1, -colors, 2 * order).expect("euler product cannot fail")
}

/// Coefficient `p_colors(n)`; zero for negative `n`.
pub fn partitions_colored_at(colors: i64, n: i64) -> Q {
    if n < 0 {
        return Q::from_integer(0.into());
    }
    partitions_colored(colors, n + 1).coeff(n)
}

/// An eta product `prod_i eta(scale_i tau)^{e_i}` expanded in q. Each factor
/// contributes `q^{scale*e/24} prod (1-q^{scale n})^e`; the total leading
/// exponent must be a half-integer to be representable.
pub fn eta_product(factors: &[(i64, i64)], order: i64) -> Result<ExactSeries, SeriesError> {
    let lead = eta_lead(factors);
    // lead is in units of 1/24; representable iff a half-integer.
    let den = lead.denom();
    if !(den.is_one() || den == &num_bigint::BigInt::from(2)) {
        return Err(SeriesError::UnrepresentableExponent(crate::arith::q_format(&lead)));
    }
    let shift2 = i64::try_from((lead * q_int(2)).to_integer())
        .map_err(|_| SeriesError::UnrepresentableExponent("overflow".into()))?;
    // Product terms through 2*order - shift2 so the shifted result is exact
    // below q^order.
    let prod = eta_euler_part(factors, 2 * order - shift2)?;
    Ok(prod.shift2(shift2))
}

fn eta_lead(factors: &[(i64, i64)]) -> Q {
    let mut lead = Q::from_integer(0.into());
    for &(scale, exponent) in factors {
        assert!(scale >= 1, "eta scales must be positive");
        lead += q_ratio(scale * exponent, 24);
    }
    lead
}

fn eta_euler_part(factors: &[(i64, i64)], trunc2: i64) -> Result<ExactSeries, SeriesError> {
    let mut prod = ExactSeries::one("q", trunc2);
    for &(scale, exponent) in factors {
        prod = prod.mul(&euler_product("q", scale, exponent, trunc2)?)?.truncate2(trunc2);
    }
    Ok(prod)
}

/// Eta product with the fractional leading exponent returned separately: the
/// value is `q^lead * series` where `series` starts at exponent zero and is
/// exact below `q^order`.
pub fn eta_product_split(factors: &[(i64, i64)], order: i64) -> Result<(ExactSeries, Q), SeriesError> {
    Ok((eta_euler_part(factors, 2 * order)?, eta_lead(factors)))
}

/// Divisor power sum `sigma_k(n)` for `n >= 1`.
pub fn sigma(k: u32, n: i64) -> Q {
    assert!(n >= 1);
    let mut acc = Q::from_integer(0.into());
    for d in 1..=n {
        if n % d == 0 {
            acc += q_int(d).pow(k as i32);
        }
    }
    acc
}

/// Eisenstein series with constant term one: `E_2 = 1 - 24 sum sigma_1(n) q^n`,
/// `E_4 = 1 + 240 sum sigma_3(n) q^n`, `E_6 = 1 - 504 sum sigma_5(n) q^n`.
pub fn eisenstein(k: i64, order: i64) -> Result<ExactSeries, SeriesError> {
    let (mult, pw): (i64, u32) = match k {
        2 => (-24, 1),
        4 => (240, 3),
        6 => (-504, 5),
        other => return Err(SeriesError::UnsupportedWeight(other)),
    };
    let mut s = ExactSeries::one("q", 2 * order);
    for n in 1..order {
        s.set(2 * n, q_int(mult) * sigma(pw, n));
    }
    Ok(s)
}

/// `j(q) - 720 = E_4^3 / Delta - 720` with `Delta = q prod (1-q^n)^24`,
/// expanded from `q^{-1}`.
pub fn j_minus_720(order: i64) -> ExactSeries {
    let e4 = eisenstein(4, order + 2).expect("weight 4 supported");
    let eta24inv = eta_product(&[(1, -24)], order).expect("leading exponent -1 is integral");
    let mut j = e4.pow_int(3).expect("cube").mul(&eta24inv).expect("same variable");
    j = j.truncate2(2 * order);
    j.add_to(0, &q_int(-720));
    j
}

/// Ramanujan tau: coefficient of `q^n` in `q prod (1-q^m)^24`.
pub fn ramanujan_tau(n: i64) -> Q {
    assert!(n >= 1, "tau(n) needs n >= 1");
    eta_product(&[(1, 24)], n + 1).expect("integral leading exponent").coeff(n)
}

/// The N=1 multiplicity series
/// `prod_{i in Z>=0 + 1/2} (1+q^i)^8 / prod_{i>=1} (1-q^i)^8`,
/// with half-integer exponents. `order` is the integer exponent bound.
pub fn ns_multiplicity_series(order: i64) -> ExactSeries {
    let trunc2 = 2 * order;
    let mut num = ExactSeries::one("q", trunc2);
    let mut e2 = 1i64; // doubled exponent of q^{1/2}, q^{3/2}, ...
    while e2 < trunc2 {
        let mut f = ExactSeries::one("q", trunc2);
        f.set(e2, q_one());
        num = num.mul(&f.pow_int(8).expect("positive power")).expect("same variable");
        e2 += 2;
    }
    let den = euler_product("q", 1, -8, trunc2).expect("euler product");
    num.mul(&den).expect("same variable")
}
