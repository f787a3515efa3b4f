//! Dense univariate polynomials over any [`Field`].
//!
//! Coefficients are stored lowest power first and trailing zeros are always
//! trimmed, so the zero polynomial has an empty coefficient vector and the
//! degree is the index of the last entry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Coeff, Field, Rationals};
use super::ArithError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

/// Polynomials with rational coefficients.
pub type QPoly = Poly<BigRational>;

impl<E: Coeff> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_coeff()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `c * x^k`.
    pub fn monomial(c: E, k: usize) -> Self {
        let mut coeffs = vec![E::zero_coeff(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> E {
        self.coeffs.get(k).cloned().unwrap_or_else(E::zero_coeff)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

pub fn add<F: Field>(k: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.coeffs.get(i), b.coeffs.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    Poly::new(out)
}

pub fn neg<F: Field>(k: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    Poly::new(a.coeffs.iter().map(|c| k.neg(c)).collect())
}

pub fn sub<F: Field>(k: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.coeffs.get(i), b.coeffs.get(i)) {
            (Some(x), Some(y)) => k.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => k.neg(y),
            (None, None) => unreachable!(),
        });
    }
    Poly::new(out)
}

pub fn mul<F: Field>(k: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero_coeff() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero_coeff() {
                continue;
            }
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    Poly::new(out)
}

pub fn scale<F: Field>(k: &F, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
    Poly::new(a.coeffs.iter().map(|x| k.mul(x, c)).collect())
}

/// Divides by the leading coefficient. The zero polynomial is returned unchanged.
pub fn monic<F: Field>(k: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    match a.lead() {
        None => Poly::zero(),
        Some(lc) if k.is_one(lc) => a.clone(),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            scale(k, a, &inv)
        }
    }
}

/// Quotient and remainder with `f = q*g + r`, `deg r < deg g`.
pub fn divmod<F: Field>(
    k: &F,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>), ArithError> {
    let dg = g.degree().ok_or(ArithError::DivisionByZero)?;
    let lc = g.lead().expect("nonzero divisor");
    let lc_is_one = k.is_one(lc);
    let lc_inv = k.inv(lc).ok_or(ArithError::NonInvertible)?;
    if f.len() <= dg {
        return Ok((Poly::zero(), f.clone()));
    }
    let mut rem: Vec<F::Elem> = f.coeffs.clone();
    let mut quot = vec![k.zero(); rem.len() - dg];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dg];
        if top.is_zero_coeff() {
            continue;
        }
        let c = if lc_is_one { top.clone() } else { k.mul(top, &lc_inv) };
        for (j, gj) in g.coeffs.iter().enumerate() {
            if gj.is_zero_coeff() {
                continue;
            }
            rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, gj));
        }
        quot[i] = c;
    }
    rem.truncate(dg);
    Ok((Poly::new(quot), Poly::new(rem)))
}

pub fn rem<F: Field>(k: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>, ArithError> {
    divmod(k, f, g).map(|(_, r)| r)
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(k: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut a = monic(k, a);
    let mut b = monic(k, b);
    while !b.is_zero() {
        let r = rem(k, &a, &b).expect("nonzero divisor");
        a = b;
        b = monic(k, &r);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd<F: Field>(k: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
    let one = Poly::new(vec![k.one()]);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), one);
    while !r1.is_zero() {
        let (q, r) = divmod(k, &r0, &r1).expect("nonzero divisor");
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.lead() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            (scale(k, &r0, &inv), scale(k, &s0, &inv), scale(k, &t0, &inv))
        }
    }
}

/// `base^exponent mod modulus` by square-and-multiply.
pub fn powmod<F: Field>(
    k: &F,
    base: &Poly<F::Elem>,
    mut exponent: u64,
    modulus: &Poly<F::Elem>,
) -> Result<Poly<F::Elem>, ArithError> {
    if modulus.degree().is_none_or(|d| d == 0) {
        return Err(ArithError::ConstantModulus);
    }
    let mut acc = Poly::new(vec![k.one()]);
    let mut b = rem(k, base, modulus)?;
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = rem(k, &mul(k, &acc, &b), modulus)?;
        }
        exponent >>= 1;
        if exponent > 0 {
            b = rem(k, &mul(k, &b, &b), modulus)?;
        }
    }
    Ok(acc)
}

pub fn eval<F: Field>(k: &F, f: &Poly<F::Elem>, at: &F::Elem) -> F::Elem {
    let mut acc = k.zero();
    for c in f.coeffs.iter().rev() {
        acc = k.add(&k.mul(&acc, at), c);
    }
    acc
}

pub fn derivative<F: Field>(k: &F, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    Poly::new(f.coeffs.iter().enumerate().skip(1).map(|(i, c)| k.mul(c, &k.from_int(i as i64))).collect())
}

/// `f(g(x))`.
pub fn compose<F: Field>(k: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut acc = Poly::zero();
    for c in f.coeffs.iter().rev() {
        acc = add(k, &mul(k, &acc, g), &Poly::new(vec![c.clone()]));
    }
    acc
}

/// Product of the given polynomials (1 for an empty list).
pub fn product<'a, F: Field + 'a>(k: &F, factors: impl IntoIterator<Item = &'a Poly<F::Elem>>) -> Poly<F::Elem>
where
    F::Elem: 'a,
{
    factors.into_iter().fold(Poly::new(vec![k.one()]), |acc, f| mul(k, &acc, f))
}

/// Maps coefficients into another field.
pub fn map_coeffs<E: Coeff, T: Coeff>(f: &Poly<E>, m: impl Fn(&E) -> T) -> Poly<T> {
    Poly::new(f.coeffs.iter().map(m).collect())
}

fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x^n - c`.
    pub fn binomial(n: usize, c: BigRational) -> Self {
        let mut v = vec![<BigRational as Zero>::zero(); n + 1];
        v[0] = -c;
        v[n] = BigRational::one();
        Self::new(v)
    }

    pub fn divmod(&self, g: &Self) -> Result<(Self, Self), ArithError> {
        divmod(&Rationals, self, g)
    }

    pub fn rem(&self, g: &Self) -> Result<Self, ArithError> {
        rem(&Rationals, self, g)
    }

    /// Exact quotient; errors if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Self, ArithError> {
        let (q, r) = self.divmod(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::Inexact)
        }
    }

    pub fn gcd(&self, g: &Self) -> Self {
        gcd(&Rationals, self, g)
    }

    pub fn powmod(&self, exponent: u64, modulus: &Self) -> Result<Self, ArithError> {
        powmod(&Rationals, self, exponent, modulus)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        eval(&Rationals, self, at)
    }

    pub fn derivative(&self) -> Self {
        derivative(&Rationals, self)
    }

    pub fn monic(&self) -> Self {
        monic(&Rationals, self)
    }

    pub fn compose(&self, g: &Self) -> Self {
        compose(&Rationals, self, g)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_i64s(&[1]), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        scale(&Rationals, self, c)
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        self.compose(&Self::new(vec![c.clone(), BigRational::one()]))
    }

    /// Squarefree test via `gcd(f, f') = 1`.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Splits `f = content * primitive` with `primitive` integral, primitive and
    /// with positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRational, Vec<BigInt>) {
        if self.is_zero() {
            return (<BigRational as Zero>::zero(), Vec::new());
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), prim)
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for QPoly {
    /// Canonical text form, e.g. `x^5 - 4*x - 2`; parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_coeff() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        add(&Rationals, self, rhs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        sub(&Rationals, self, rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        mul(&Rationals, self, rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        neg(&Rationals, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(p(&[-1, 0, 1]).divmod(&p(&[-1, 1])).unwrap(), (p(&[1, 1]), p(&[])));
        assert_eq!(p(&[-2, 0, 0, 0, 0, 1]).divmod(&p(&[0, 0, 1])).unwrap(), (p(&[0, 0, 0, 1]), p(&[-2])));
        // x^3 + 2x + 7 = x (x^2 + 1) + (x + 7)
        assert_eq!(p(&[7, 2, 0, 1]).divmod(&p(&[1, 0, 1])).unwrap(), (p(&[0, 1]), p(&[7, 1])));
    }

    #[test]
    fn divmod_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).divmod(&QPoly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        let f = p(&[-2, 0, 0, 0, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[1]));
        // (x-1)^2 (x+2) and (x-1)(x+3)
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn powmod_examples() {
        let x = QPoly::x();
        let mut m11 = vec![0i64; 12];
        m11[0] = -1;
        m11[11] = 1;
        assert_eq!(x.powmod(12, &p(&m11)).unwrap(), x);
        assert_eq!(x.powmod(0, &p(&[1, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(x.powmod(4, &p(&[-2, 0, 1])).unwrap(), p(&[4]));
        assert_eq!(x.powmod(3, &p(&[5])), Err(ArithError::ConstantModulus));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p(&[-2, -4, 0, 0, 0, 1]).to_string(), "x^5 - 4*x - 2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        let half = QPoly::new(vec![q_int(1) / q_int(2), q_int(-3) / q_int(2)]);
        assert_eq!(half.to_string(), "-3/2*x + 1/2");
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let f = QPoly::new(vec![q_int(-1) / q_int(3), q_int(0), q_int(-2) / q_int(3)]);
        let (c, prim) = f.primitive_part();
        assert_eq!(prim, vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)]);
        assert_eq!(c, q_int(-1) / q_int(3));
    }
}
