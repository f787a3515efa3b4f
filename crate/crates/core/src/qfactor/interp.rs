//! Kronecker's interpolation search for integer factors of a fixed degree.
//!
//! A factor `h` of degree `d` of an integer polynomial `g` satisfies
//! `h(a) | g(a)` at every integer `a`. Choosing `d + 1` points and one divisor
//! per point determines `h` by interpolation. Candidates are built in Newton
//! form one node at a time; every divided difference of an integer polynomial
//! at integer nodes is an integer, which prunes most of the divisor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QFactorError;
use crate::arith::{BigRational, QPoly};

/// Trial division bound for divisor enumeration.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `|n|` in increasing order; `n != 0`.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>, QFactorError> {
    let mut m = n.abs().to_u128().ok_or(QFactorError::ValueTooLarge)?;
    assert!(m != 0, "divisors of zero");
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut d: u128 = 2;
    while d * d <= m && d <= TRIAL_LIMIT as u128 {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        // Anything left with a factor below the trial limit was removed, so a
        // cofactor below limit^2 is prime.
        if m >= (TRIAL_LIMIT as u128) * (TRIAL_LIMIT as u128) {
            return Err(QFactorError::ValueTooLarge);
        }
        factors.push((m, 1));
    }
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &x in &divs {
            let mut pk = 1u128;
            for _ in 0..=e {
                next.push(x * pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs.into_iter().map(BigInt::from).collect())
}

pub fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Integer evaluation points `0, 1, -1, 2, -2, ...`.
fn point_sequence() -> impl Iterator<Item = i64> {
    (0..).map(|k: i64| if k % 2 == 1 { k / 2 + 1 } else { -(k / 2) })
}

/// Searches for a primitive integer factor of `g` of exact degree `d`
/// (positive leading coefficient). `g` must be primitive, nonconstant.
pub fn find_factor(g: &[BigInt], d: usize) -> Result<Option<Vec<BigInt>>, QFactorError> {
    let lc = g.last().expect("nonzero").clone();
    let mut nodes: Vec<BigInt> = Vec::with_capacity(d + 1);
    let mut values: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    for a in point_sequence() {
        if nodes.len() == d + 1 {
            break;
        }
        let a = BigInt::from(a);
        let v = eval_int(g, &a);
        if v.is_zero() {
            // a is an integer root: x - a is a factor.
            if d == 1 {
                return Ok(Some(vec![-a, BigInt::one()]));
            }
            continue;
        }
        let divs = divisors(&v)?;
        let mut signed = Vec::with_capacity(divs.len() * 2);
        for dv in divs {
            signed.push(-dv.clone());
            signed.push(dv);
        }
        nodes.push(a);
        values.push(signed);
    }
    let target = QPoly::from_ints(g);
    let mut newton = Vec::with_capacity(d + 1);
    Ok(dfs(&nodes, &values, &lc, &target, &mut newton))
}

fn dfs(
    nodes: &[BigInt],
    values: &[Vec<BigInt>],
    lc: &BigInt,
    target: &QPoly,
    newton: &mut Vec<BigInt>,
) -> Option<Vec<BigInt>> {
    let i = newton.len();
    let d = nodes.len() - 1;
    let a = &nodes[i];
    // Value of the partial Newton interpolant at the new node, and the
    // product of node differences that scales the next coefficient.
    let mut partial = BigInt::zero();
    let mut basis = BigInt::one();
    for (j, c) in newton.iter().enumerate() {
        partial += c * &basis;
        basis *= a - &nodes[j];
    }
    for v in &values[i] {
        let num = v - &partial;
        let (ci, r) = num.div_rem(&basis);
        if !r.is_zero() {
            continue;
        }
        if i == d {
            if !ci.is_positive() || !(lc % &ci).is_zero() {
                continue;
            }
            newton.push(ci);
            let h = newton_to_monomial(nodes, newton);
            newton.pop();
            let hq = QPoly::from_ints(&h);
            if target.rem(&hq).expect("nonzero").is_zero() {
                return Some(h);
            }
        } else {
            newton.push(ci);
            if let Some(h) = dfs(nodes, values, lc, target, newton) {
                return Some(h);
            }
            newton.pop();
        }
    }
    None
}

fn newton_to_monomial(nodes: &[BigInt], newton: &[BigInt]) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = Vec::new();
    // Horner on the Newton basis, from the top coefficient down.
    for k in (0..newton.len()).rev() {
        // acc = acc * (x - nodes[k]) + newton[k]
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &nodes[k];
        }
        next[0] += &newton[k];
        while next.last().is_some_and(|c| c.is_zero()) {
            next.pop();
        }
        acc = next;
    }
    acc
}

/// Smallest-degree nontrivial factor (primitive, positive leading
/// coefficient), or `None` if `g` is irreducible over the integers.
pub fn smallest_factor(g: &[BigInt]) -> Result<Option<Vec<BigInt>>, QFactorError> {
    let n = g.len() - 1;
    for d in 1..=n / 2 {
        if let Some(h) = find_factor(g, d)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

pub fn to_rational_monic(h: &[BigInt]) -> QPoly {
    QPoly::new(h.iter().cloned().map(BigRational::from_integer).collect()).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(&BigInt::from(-12)).unwrap(), ints(&[1, 2, 3, 4, 6, 12]));
        assert_eq!(divisors(&BigInt::from(1)).unwrap(), ints(&[1]));
    }

    #[test]
    fn finds_quadratic_factor_of_x4_minus_1() {
        let g = ints(&[-1, 0, 0, 0, 1]);
        let h = find_factor(&g, 2).unwrap().unwrap();
        let hq = QPoly::from_ints(&h);
        assert!(QPoly::from_ints(&g).rem(&hq).unwrap().is_zero());
    }

    #[test]
    fn phi12_has_no_quadratic_factor() {
        assert_eq!(find_factor(&ints(&[1, 0, -1, 0, 1]), 2).unwrap(), None);
        assert_eq!(smallest_factor(&ints(&[1, 0, -1, 0, 1])).unwrap(), None);
    }

    #[test]
    fn newton_conversion_roundtrip() {
        // h(x) = 2x^2 - 3 at nodes 0, 1, -1: values -3, -1, -1.
        let nodes = ints(&[0, 1, -1]);
        // Newton: c0 = -3, c1 = 2, c2 = 2
        let h = newton_to_monomial(&nodes, &ints(&[-3, 2, 2]));
        assert_eq!(h, ints(&[-3, 0, 2]));
    }
}
