//! Fixed-point complex numbers: `(re + i*im) / 2^prec` with big-integer parts.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFix {
    pub re: BigInt,
    pub im: BigInt,
    pub prec: u32,
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // Nearest integer to n/d for d > 0.
    let (q, r) = n.div_mod_floor(d);
    if (r << 1u32) >= *d {
        q + 1
    } else {
        q
    }
}

fn big_to_f64(x: &BigInt, prec: u32) -> f64 {
    // Keep 64 significant fraction bits so large precisions do not overflow f64.
    if prec > 64 {
        (x >> (prec - 64)).to_f64().unwrap_or(f64::NAN) * 2f64.powi(-64)
    } else {
        x.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(prec as i32))
    }
}

impl CFix {
    pub fn zero(prec: u32) -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero(), prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(1, prec)
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self { re: BigInt::from(n) << prec, im: BigInt::zero(), prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let re = round_div(&(q.numer() << prec), q.denom());
        Self { re, im: BigInt::zero(), prec }
    }

    pub fn from_c64(z: Complex64, prec: u32) -> Self {
        let conv = |x: f64| -> BigInt {
            if !x.is_finite() || x == 0.0 {
                return BigInt::zero();
            }
            // x = m * 2^e exactly with integer m.
            let (m, e) = decompose(x);
            let shift = e + prec as i64;
            if shift >= 0 {
                BigInt::from(m) << (shift as u32)
            } else {
                BigInt::from(m) >> ((-shift) as u32)
            }
        };
        Self { re: conv(z.re), im: conv(z.im), prec }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(big_to_f64(&self.re, self.prec), big_to_f64(&self.im, self.prec))
    }

    /// Re-expresses the value at another precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        let adj = |x: &BigInt| {
            if prec >= self.prec {
                x << (prec - self.prec)
            } else {
                x >> (self.prec - prec)
            }
        };
        Self { re: adj(&self.re), im: adj(&self.im), prec }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im, prec: self.prec }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Squared modulus, scaled by `2^(2 prec)`.
    pub fn norm_sqr_scaled(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Approximate `log2 |z|`; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        let n = self.norm_sqr_scaled();
        if n.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = n.bits();
        let top = if bits > 60 { &n >> (bits - 60) } else { n.clone() };
        let shift = bits.saturating_sub(60) as f64;
        (top.to_f64().expect("60-bit value").log2() + shift) / 2.0 - self.prec as f64
    }

    /// `|z| < 2^bits`, by an integer comparison.
    pub fn abs_below_pow2(&self, bits: i64) -> bool {
        // |z|^2 * 2^(2 prec) < 2^(2 bits + 2 prec)
        let e = 2 * bits + 2 * self.prec as i64;
        if e < 0 {
            return self.is_zero();
        }
        self.norm_sqr_scaled() < (BigInt::from(1) << (e as u32))
    }

    /// `|im z| < 2^bits`.
    pub fn im_below_pow2(&self, bits: i64) -> bool {
        let e = bits + self.prec as i64;
        e >= 0 && self.im.abs() < (BigInt::from(1) << (e as u32))
    }

    pub fn real_part(&self) -> Self {
        Self { re: self.re.clone(), im: BigInt::zero(), prec: self.prec }
    }

    /// Exact rational value of the real part.
    pub fn re_rational(&self) -> BigRational {
        BigRational::new(self.re.clone(), BigInt::from(1) << self.prec)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self { re: &self.re * k, im: &self.im * k, prec: self.prec }
    }

    /// Nearest Gaussian integer and the rounding distance as an approximate `log2`.
    pub fn round_gaussian(&self) -> (BigInt, BigInt, f64) {
        let half = BigInt::from(1) << self.prec.saturating_sub(1);
        let r = (&self.re + &half) >> self.prec;
        let i = (&self.im + &half) >> self.prec;
        let delta = Self { re: &self.re - (&r << self.prec), im: &self.im - (&i << self.prec), prec: self.prec };
        (r, i, delta.log2_abs())
    }

    /// `None` on division by zero.
    pub fn checked_div(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.prec, b.prec);
        let d = b.norm_sqr_scaled();
        if d.is_zero() {
            return None;
        }
        let re = (&self.re * &b.re + &self.im * &b.im) << self.prec;
        let im = (&self.im * &b.re - &self.re * &b.im) << self.prec;
        Some(Self { re: re.div_floor(&d), im: im.div_floor(&d), prec: self.prec })
    }

    pub fn inv(&self) -> Option<Self> {
        Self::one(self.prec).checked_div(self)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn decompose(x: f64) -> (i64, i64) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let mant =
        if exp == 0 { (bits & 0xf_ffff_ffff_ffff) << 1 } else { (bits & 0xf_ffff_ffff_ffff) | 0x10_0000_0000_0000 };
    (sign * mant as i64, exp - 1075)
}

impl Add for &CFix {
    type Output = CFix;
    fn add(self, o: &CFix) -> CFix {
        debug_assert_eq!(self.prec, o.prec);
        CFix { re: &self.re + &o.re, im: &self.im + &o.im, prec: self.prec }
    }
}

impl Sub for &CFix {
    type Output = CFix;
    fn sub(self, o: &CFix) -> CFix {
        debug_assert_eq!(self.prec, o.prec);
        CFix { re: &self.re - &o.re, im: &self.im - &o.im, prec: self.prec }
    }
}

impl Mul for &CFix {
    type Output = CFix;
    fn mul(self, o: &CFix) -> CFix {
        debug_assert_eq!(self.prec, o.prec);
        let re = (&self.re * &o.re - &self.im * &o.im) >> self.prec;
        let im = (&self.re * &o.im + &self.im * &o.re) >> self.prec;
        CFix { re, im, prec: self.prec }
    }
}

impl Neg for &CFix {
    type Output = CFix;
    fn neg(self) -> CFix {
        CFix { re: -&self.re, im: -&self.im, prec: self.prec }
    }
}

/// Horner evaluation of a polynomial with fixed-point coefficients.
pub fn eval(coeffs: &[CFix], z: &CFix) -> CFix {
    let mut acc = CFix::zero(z.prec);
    for c in coeffs.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}

/// Value and derivative at `z` in one pass.
pub fn eval_with_derivative(coeffs: &[CFix], z: &CFix) -> (CFix, CFix) {
    let mut p = CFix::zero(z.prec);
    let mut dp = CFix::zero(z.prec);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn arithmetic_roundtrip() {
        let p = 100;
        let a = CFix::from_rational(&q(1, 3), p);
        let b = CFix::from_c64(Complex64::new(0.5, -2.0), p);
        let c = (&a * &b).checked_div(&b).unwrap();
        assert!((&c - &a).abs_below_pow2(-90));
        let z = b.to_c64();
        assert_eq!(z, Complex64::new(0.5, -2.0));
        assert!((b.log2_abs() - (4.25f64).sqrt().log2()).abs() < 1e-12);
    }

    #[test]
    fn high_precision_to_f64() {
        let a = CFix::from_rational(&q(-7, 4), 2048);
        assert_eq!(a.to_c64(), Complex64::new(-1.75, 0.0));
        assert_eq!(a.with_prec(64).to_c64(), Complex64::new(-1.75, 0.0));
    }

    #[test]
    fn gaussian_rounding() {
        let a = CFix::from_c64(Complex64::new(2.75, -1.25), 64);
        let (r, i, d) = a.round_gaussian();
        assert_eq!((r, i), (BigInt::from(3), BigInt::from(-1)));
        assert!((d - (0.125f64).sqrt().log2()).abs() < 1e-9);
    }
}
