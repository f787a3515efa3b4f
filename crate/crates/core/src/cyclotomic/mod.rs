//! Cyclotomic fields `Q(zeta_n)`, Lagrange resolvents over `Q(zeta_{p(p-1)})`,
//! the tower that reaches `zeta_p` by radicals, and the `zeta_11` example.

pub mod example71;
pub mod gauss;
pub mod resolvent;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{Extension, Field, QPoly, Rationals};
use crate::qfactor::modp::{is_prime, pow_mod, prime_factors};

pub use example71::{example71_verify, naive_tower, undoubled_tower};
pub use gauss::{gauss_tower_trace, GaussTrace};
pub use resolvent::{lagrange_resolvents, resolvent_identities_check, ResolventSet, SUPPORTED_PRIMES};

/// Largest index accepted by [`cyclotomic_poly`].
pub const MAX_INDEX: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CyclotomicError {
    #[error("cyclotomic index {0} is outside 1..=1000")]
    IndexOutOfRange(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is outside the supported range")]
    OutOfRange(u64),
    #[error("resolvent sets are available for p in {{3, 5, 7, 11}}, not {0}")]
    UnsupportedPrime(u64),
}

fn table() -> &'static RwLock<HashMap<u32, QPoly>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, QPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Phi_n`, computed as `x^n - 1` divided by `Phi_d` for the proper divisors `d`.
pub fn cyclotomic_poly(n: u32) -> Result<QPoly, CyclotomicError> {
    if n == 0 || n > MAX_INDEX {
        return Err(CyclotomicError::IndexOutOfRange(n as u64));
    }
    if let Some(f) = table().read().expect("table lock").get(&n) {
        return Ok(f.clone());
    }
    let mut f = QPoly::binomial(n as usize, BigRational::one());
    for d in (1..n).filter(|d| n % d == 0) {
        f = f.exact_div(&cyclotomic_poly(d)?).expect("Phi_d divides x^n - 1");
    }
    table().write().expect("table lock").insert(n, f.clone());
    Ok(f)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

/// Smallest primitive root modulo an odd prime `p <= 1000`.
pub fn primitive_root_mod(p: u64) -> Result<u64, CyclotomicError> {
    if p < 3 || !is_prime(p) {
        return Err(CyclotomicError::NotOddPrime(p));
    }
    if p > MAX_INDEX as u64 {
        return Err(CyclotomicError::OutOfRange(p));
    }
    let factors = prime_factors(p - 1);
    let root = (2..p)
        .find(|&t| factors.iter().all(|&q| pow_mod(t, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root");
    Ok(root)
}

/// `Q(zeta_n)` as `Q[x]/(Phi_n)`, with a table of reduced powers of `zeta_n`.
#[derive(Clone, Debug)]
pub struct CycloField {
    n: u32,
    ext: Extension<Rationals>,
    powers: Arc<Vec<QPoly>>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl CycloField {
    pub fn new(n: u32) -> Result<Self, CyclotomicError> {
        let ext = Extension::new(Rationals, cyclotomic_poly(n)?);
        let zeta = ext.generator();
        let mut powers = Vec::with_capacity(n as usize);
        let mut acc = ext.one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = ext.mul(&acc, &zeta);
        }
        Ok(Self { n, ext, powers: Arc::new(powers) })
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    pub fn modulus(&self) -> &QPoly {
        self.ext.modulus()
    }

    pub fn extension(&self) -> &Extension<Rationals> {
        &self.ext
    }

    pub fn zeta(&self) -> QPoly {
        self.zeta_pow(1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> QPoly {
        self.powers[k.rem_euclid(self.n as i64) as usize].clone()
    }

    pub fn element(&self, rep: &QPoly) -> QPoly {
        self.ext.reduce(rep)
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^(n-1)`.
    pub fn conj(&self, a: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for (k, c) in a.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = self.add(&acc, &self.powers[(self.n as usize - k) % self.n as usize].scale(c));
            }
        }
        acc
    }

    pub fn is_rational(&self, a: &QPoly) -> bool {
        a.degree().is_none_or(|d| d == 0)
    }

    pub fn is_real(&self, a: &QPoly) -> bool {
        self.conj(a) == *a
    }

    /// Image of `a` in `C` under `zeta -> exp(2 pi i / n)`.
    pub fn to_c64(&self, a: &QPoly) -> Complex64 {
        let step = 2.0 * std::f64::consts::PI / self.n as f64;
        a.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), step * k as f64))
            .sum()
    }

    /// Image of `a` in `Q(zeta_m)` for a multiple `m` of `n`, via `zeta_n = zeta_m^(m/n)`.
    pub fn lift(&self, a: &QPoly, to: &CycloField) -> QPoly {
        assert!(to.n % self.n == 0, "target index must be a multiple");
        let step = (to.n / self.n) as i64;
        let mut acc = QPoly::zero();
        for (k, c) in a.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = to.add(&acc, &to.zeta_pow(step * k as i64).scale(c));
            }
        }
        acc
    }
}

impl Field for CycloField {
    type Elem = QPoly;

    fn one(&self) -> QPoly {
        self.ext.one()
    }
    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ext.add(a, b)
    }
    fn neg(&self, a: &QPoly) -> QPoly {
        self.ext.neg(a)
    }
    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ext.sub(a, b)
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ext.mul(a, b)
    }
    fn inv(&self, a: &QPoly) -> Option<QPoly> {
        self.ext.inv(a)
    }
    fn from_rational(&self, q: &BigRational) -> QPoly {
        self.ext.from_rational(q)
    }
}
