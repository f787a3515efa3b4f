//! Coefficient fields.
//!
//! Every polynomial routine in the crate is written against [`Field`], a
//! context object that performs arithmetic on plain element values. The
//! rationals are a zero-sized context; algebraic extensions `F[y]/(m)` carry
//! their modulus and represent elements as reduced polynomials over `F`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{self, Poly};

/// Element types that know whether they are zero without a field context.
pub trait Coeff: Clone + PartialEq + Debug {
    fn is_zero_coeff(&self) -> bool;
    fn zero_coeff() -> Self;
}

impl Coeff for BigRational {
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }

    fn zero_coeff() -> Self {
        <BigRational as Zero>::zero()
    }
}

impl<E: Coeff> Coeff for Poly<E> {
    fn is_zero_coeff(&self) -> bool {
        self.coeffs().is_empty()
    }

    fn zero_coeff() -> Self {
        Poly::zero()
    }
}

/// A field given as a context object; elements are plain values.
pub trait Field: Clone + Debug {
    type Elem: Coeff;

    fn zero(&self) -> Self::Elem {
        <Self::Elem as Coeff>::zero_coeff()
    }
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &BigRational) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero_coeff()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if Zero::is_zero(a) {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &BigRational) -> BigRational {
        q.clone()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        One::is_one(a)
    }
}

/// A simple algebraic extension `F[y]/(m)` with `m` monic.
///
/// Irreducibility of `m` is the caller's responsibility; if it fails,
/// [`Field::inv`] returns `None` for zero divisors.
#[derive(Clone, Debug, PartialEq)]
pub struct Extension<F: Field> {
    base: F,
    modulus: Poly<F::Elem>,
}

impl<F: Field> Extension<F> {
    /// Builds the extension; the modulus is made monic. Panics on a constant modulus.
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Self {
        let modulus = poly::monic(&base, &modulus);
        assert!(modulus.degree().is_some_and(|d| d >= 1), "extension modulus must be nonconstant");
        Self { base, modulus }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Reduces an arbitrary polynomial to its canonical representative.
    pub fn reduce(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.len() <= self.degree() {
            return a.clone();
        }
        poly::rem(&self.base, a, &self.modulus).expect("modulus is nonzero")
    }

    /// The class of the generator `y`.
    pub fn generator(&self) -> Poly<F::Elem> {
        self.reduce(&Poly::monomial(self.base.one(), 1))
    }

    /// Embeds a base-field element.
    pub fn embed(&self, a: &F::Elem) -> Poly<F::Elem> {
        Poly::new(vec![a.clone()])
    }

    /// Evaluates a polynomial with base-field coefficients at an extension element.
    pub fn eval_base_poly(&self, f: &Poly<F::Elem>, at: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.embed(c));
        }
        acc
    }
}

impl<F: Field> Field for Extension<F> {
    type Elem = Poly<F::Elem>;

    fn one(&self) -> Self::Elem {
        Poly::new(vec![self.base.one()])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::add(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        poly::neg(&self.base, a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::sub(&self.base, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&poly::mul(&self.base, a, b))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = poly::xgcd(&self.base, a, &self.modulus);
        if g.degree() != Some(0) {
            return None;
        }
        // xgcd returns a monic gcd, so g == 1 here.
        Some(self.reduce(&s))
    }
    fn from_rational(&self, q: &BigRational) -> Self::Elem {
        Poly::new(vec![self.base.from_rational(q)])
    }
}
