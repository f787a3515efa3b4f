use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `a` or `a/b` (optional leading minus, decimal digits only).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) || den.starts_with('-') {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Resultant of two rational polynomials by the Euclidean recurrence
/// `res(a, b) = (-1)^(mn) lc(b)^(m-k) res(b, a mod b)`.
pub fn resultant(a: &QPoly, b: &QPoly) -> BigRational {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return BigRational::zero();
    };
    if n == 0 {
        return pow(&b.coeff(0), m);
    }
    if m == 0 {
        return pow(&a.coeff(0), n);
    }
    let r = a.rem(b).expect("nonzero divisor");
    let Some(k) = r.degree() else {
        return BigRational::zero();
    };
    let sign = if (m * n) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    let lc = b.lead().expect("nonzero").clone();
    sign * pow(&lc, m - k) * resultant(b, &r)
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}
