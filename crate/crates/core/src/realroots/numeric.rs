//! Simultaneous root approximation by Aberth iteration.
//!
//! A double-precision pass supplies starting points; the big fixed-point
//! pass then polishes them. Results are hints: every consumer re-verifies
//! whatever exact object it reconstructs from them.

use num_complex::Complex64;

use super::fixed::{eval_with_derivative, CFix};
use super::{isolate_real_roots, RealRootsError};
use crate::arith::QPoly;
use crate::qfactor::squarefree_part;

pub const START_PRECISION: u32 = 128;
pub const MAX_PRECISION: u32 = 2048;
const HIGH_PRECISION_ITERATIONS: usize = 200;
const F64_ITERATIONS: usize = 500;

fn aberth_f64(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    // Fujiwara-style radius.
    let radius = (0..n).map(|i| monic[i].norm().powf(1.0 / (n - i) as f64)).fold(0.0f64, f64::max).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7;
            Complex64::from_polar(radius, t)
        })
        .collect();
    for _ in 0..F64_ITERATIONS {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for c in monic.iter().rev() {
                dp = dp * z[i] + p;
                p = p * z[i] + c;
            }
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] -= w;
            worst = worst.max(w.norm() / (1.0 + z[i].norm()));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// All roots of a polynomial with fixed-point complex coefficients, at the
/// coefficients' precision. `None` if the iteration fails or a residual
/// exceeds `2^(-prec/2) (1 + |z|)^deg` relative to the coefficient size.
pub fn complex_roots(coeffs: &[CFix]) -> Option<Vec<CFix>> {
    let n = coeffs.len().checked_sub(1)?;
    let prec = coeffs[n].prec;
    if n == 0 || coeffs[n].is_zero() {
        return None;
    }
    let seeds = aberth_f64(&coeffs.iter().map(CFix::to_c64).collect::<Vec<_>>());
    let mut z: Vec<CFix> = seeds.into_iter().map(|s| CFix::from_c64(s, prec)).collect();
    let one = CFix::one(prec);
    for _ in 0..HIGH_PRECISION_ITERATIONS {
        let mut worst = f64::NEG_INFINITY;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, &z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p.checked_div(&dp)?;
            let mut s = CFix::zero(prec);
            for j in (0..n).filter(|&j| j != i) {
                s = &s + &(&z[i] - &z[j]).inv()?;
            }
            let w = ratio.checked_div(&(&one - &(&ratio * &s)))?;
            z[i] = &z[i] - &w;
            worst = worst.max(w.log2_abs() - (1.0 + z[i].to_c64().norm()).log2());
        }
        if worst < -(prec as f64) + 16.0 {
            break;
        }
    }
    let coeff_scale = coeffs.iter().map(CFix::log2_abs).fold(f64::NEG_INFINITY, f64::max);
    let lead_scale = coeffs[n].log2_abs();
    for r in &z {
        let (p, _) = eval_with_derivative(coeffs, r);
        let bound = -(prec as f64) / 2.0 + n as f64 * (1.0 + r.to_c64().norm()).log2() + coeff_scale.max(lead_scale);
        if p.log2_abs() >= bound {
            return None;
        }
    }
    Some(z)
}

/// The `n` complex `n`th roots of `c`, at the precision of `c`.
pub fn nth_roots(c: &CFix, n: u32) -> Option<Vec<CFix>> {
    let prec = c.prec;
    if c.is_zero() {
        return Some(vec![CFix::zero(prec); n as usize]);
    }
    let mut coeffs = vec![CFix::zero(prec); n as usize + 1];
    coeffs[0] = -c;
    coeffs[n as usize] = CFix::one(prec);
    complex_roots(&coeffs)
}

/// Numeric roots of a squarefree rational polynomial, reconciled with the
/// exact real-root isolation.
#[derive(Clone, Debug)]
pub struct NumericRoots {
    /// Precision, in bits, at which the roots passed all checks.
    pub precision: u32,
    /// Real roots first (increasing, imaginary part exactly zero), then
    /// conjugate pairs `(z, conj z)` with `im z > 0`.
    pub roots: Vec<CFix>,
    pub real_count: usize,
}

impl NumericRoots {
    pub fn pair_count(&self) -> usize {
        (self.roots.len() - self.real_count) / 2
    }
}

/// Approximates all roots of `f`, starting at `precision_bits` and doubling
/// up to [`MAX_PRECISION`].
pub fn numeric_roots(f: &QPoly, precision_bits: u32) -> Result<NumericRoots, RealRootsError> {
    let n = f.degree().ok_or(RealRootsError::ZeroPolynomial)?;
    if n == 0 {
        return Err(RealRootsError::Constant);
    }
    if squarefree_part(f).degree() != Some(n) {
        return Err(RealRootsError::NotSquarefree);
    }
    let intervals = isolate_real_roots(f)?;
    let mut prec = precision_bits.max(32);
    loop {
        if let Some(found) = roots_with_intervals(f, &intervals, prec) {
            return Ok(found);
        }
        if prec >= MAX_PRECISION {
            return Err(RealRootsError::NoConvergence { max_precision: MAX_PRECISION });
        }
        prec = (prec * 2).min(MAX_PRECISION);
    }
}

/// One attempt at exactly `prec` bits; `Ok(None)` if the attempt fails its checks.
pub fn numeric_roots_at(f: &QPoly, prec: u32) -> Result<Option<NumericRoots>, RealRootsError> {
    let n = f.degree().ok_or(RealRootsError::ZeroPolynomial)?;
    if n == 0 {
        return Err(RealRootsError::Constant);
    }
    let intervals = isolate_real_roots(f)?;
    Ok(roots_with_intervals(f, &intervals, prec))
}

fn roots_with_intervals(f: &QPoly, intervals: &[super::IsolatingInterval], prec: u32) -> Option<NumericRoots> {
    let coeffs: Vec<CFix> = f.monic().coeffs().iter().map(|c| CFix::from_rational(c, prec)).collect();
    let found = complex_roots(&coeffs)?;
    let roots = reconcile(found, intervals, prec)?;
    Some(NumericRoots { precision: prec, roots, real_count: intervals.len() })
}

/// Value of a rational polynomial at a fixed-point point.
pub fn eval_rational(f: &QPoly, z: &CFix) -> CFix {
    let mut acc = CFix::zero(z.prec);
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * z) + &CFix::from_rational(c, z.prec);
    }
    acc
}

fn reconcile(mut found: Vec<CFix>, intervals: &[super::IsolatingInterval], prec: u32) -> Option<Vec<CFix>> {
    let tol_bits = -(prec as i64) / 4;
    let tol = num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(1) << (prec / 4));
    let near_real = found.iter().filter(|z| z.im_below_pow2(tol_bits)).count();
    if near_real != intervals.len() {
        return None;
    }
    let mut out = Vec::with_capacity(found.len());
    for iv in intervals {
        let hits: Vec<usize> = found
            .iter()
            .enumerate()
            .filter(|(_, z)| {
                let x = z.re_rational();
                z.im_below_pow2(tol_bits) && x >= &iv.lo - &tol && x <= &iv.hi + &tol
            })
            .map(|(k, _)| k)
            .collect();
        if hits.len() != 1 {
            return None;
        }
        out.push(found.remove(hits[0]).real_part());
    }
    let (mut upper, lower): (Vec<CFix>, Vec<CFix>) =
        found.into_iter().partition(|z| z.im > num_bigint::BigInt::from(0));
    if upper.len() != lower.len() {
        return None;
    }
    let mut lower = lower;
    upper.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)));
    for u in upper {
        let target = u.conj();
        let (k, _) =
            lower.iter().enumerate().map(|(k, l)| (k, (l - &target).log2_abs())).min_by(|a, b| a.1.total_cmp(&b.1))?;
        if !(&lower[k] - &target).abs_below_pow2(tol_bits) {
            return None;
        }
        lower.remove(k);
        out.push(u.clone());
        out.push(target);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn unit_imaginary_pair() {
        let r = numeric_roots(&p(&[1, 0, 1]), 64).unwrap();
        assert_eq!(r.real_count, 0);
        let z = r.roots[0].to_c64();
        assert!((z - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert_eq!(r.roots[1], r.roots[0].conj());
    }

    #[test]
    fn fifth_roots_of_two_have_common_modulus() {
        let r = numeric_roots(&p(&[-2, 0, 0, 0, 0, 1]), 128).unwrap();
        assert_eq!(r.precision, 128);
        assert_eq!((r.real_count, r.pair_count()), (1, 2));
        for z in &r.roots {
            assert!((z.to_c64().norm() - 2f64.powf(0.2)).abs() < 1e-12);
        }
    }

    #[test]
    fn dorrie_quintic_matches_sturm() {
        let r = numeric_roots(&p(&[-2, -4, 0, 0, 0, 1]), START_PRECISION).unwrap();
        assert_eq!((r.real_count, r.pair_count()), (3, 1));
    }

    #[test]
    fn cube_roots_of_unity_from_fixed_point() {
        let roots = nth_roots(&CFix::one(128), 3).unwrap();
        for z in roots {
            assert!((z.pow(3).to_c64() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(numeric_roots(&p(&[1, -2, 1]), 64).unwrap_err(), RealRootsError::NotSquarefree);
    }
}
