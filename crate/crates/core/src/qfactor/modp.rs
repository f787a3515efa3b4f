//! Dense polynomials over the prime field with `p` elements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Coefficients lowest power first, trimmed, each in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    pub fn from_ints(p: u64, ints: &[BigInt]) -> Self {
        let pb = BigInt::from(p);
        Self::new(p, ints.iter().map(|x| x.mod_floor(&pb).to_u64().expect("reduced")).collect())
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b % self.p) % self.p;
            }
        }
        Self::new(self.p, v)
    }

    pub fn rem(&self, m: &Self) -> Self {
        let dm = m.degree().expect("nonzero modulus");
        let inv = self.inv(m.c[dm]);
        let mut r = self.c.clone();
        while r.len() > dm {
            let top = r.len() - 1;
            let f = r[top] * inv % self.p;
            if f != 0 {
                for j in 0..=dm {
                    let k = top - dm + j;
                    r[k] = (r[k] + self.p - f * m.c[j] % self.p) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Self::new(self.p, r)
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = self.inv(lc);
                Self::new(self.p, self.c.iter().map(|&x| x * inv % self.p).collect())
            }
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn derivative(&self) -> Self {
        let v = self.c.iter().enumerate().skip(1).map(|(i, &a)| (i as u64 % self.p) * a % self.p).collect();
        Self::new(self.p, v)
    }

    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b).rem(m);
            }
        }
        acc
    }

    /// `x^(p^k) mod self`.
    pub fn frobenius_power(&self, k: u32) -> Self {
        let mut h = Self::x(self.p).rem(self);
        for _ in 0..k {
            h = h.powmod(self.p, self);
        }
        h
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// Ben-Or: no irreducible factor of degree `k <= n/2` divides `self`.
    pub fn ben_or_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let x = Self::x(self.p);
        let mut h = x.rem(self);
        for _ in 1..=n / 2 {
            h = h.powmod(self.p, self);
            if !h.sub(&x).gcd(self).is_one() {
                return false;
            }
        }
        true
    }

    /// Rabin: `x^(p^n) = x mod f` and `gcd(x^(p^(n/q)) - x, f) = 1` for primes `q | n`.
    pub fn rabin_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let x = Self::x(self.p);
        if self.frobenius_power(n as u32) != x.rem(self) {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|q| {
            let h = self.frobenius_power((n as u64 / q) as u32);
            h.sub(&x).gcd(self).is_one()
        })
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_tests_agree_on_small_cases() {
        // x^2 + 1 over F_3 is irreducible, over F_5 it is not.
        let f3 = FpPoly::new(3, vec![1, 0, 1]);
        let f5 = FpPoly::new(5, vec![1, 0, 1]);
        assert!(f3.ben_or_irreducible() && f3.rabin_irreducible());
        assert!(!f5.ben_or_irreducible() && !f5.rabin_irreducible());
        // x^4 + x + 1 over F_2
        let g = FpPoly::new(2, vec![1, 1, 0, 0, 1]);
        assert!(g.ben_or_irreducible() && g.rabin_irreducible());
        // (x^2+x+1)^2 over F_2
        let h = FpPoly::new(2, vec![1, 1, 1]);
        let hh = h.mul(&h);
        assert!(!hh.ben_or_irreducible() && !hh.rabin_irreducible());
    }

    #[test]
    fn primes() {
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert!(is_prime(97) && !is_prime(91));
    }
}
