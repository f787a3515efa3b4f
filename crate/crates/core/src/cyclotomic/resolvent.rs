//! Lagrange resolvents `rho(omega^[n], eps_j)` inside `Q(zeta_N)`, `N = p(p-1)`.
//!
//! With `zeta = exp(2 pi i / N)` we take `omega = zeta^(p-1)` (order `p`) and
//! `eps_j = zeta^(p j)` (so `eps_1` has order `p - 1`). Since `phi(p-1) < p`,
//! an element of the subfield `Q(zeta^p) = Q(zeta_{p-1})` has its reduced
//! representative supported on exponents divisible by `p`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{primitive_root_mod, CycloField, CyclotomicError};
use crate::arith::{Field, QPoly};
use crate::qfactor::modp::pow_mod;
use crate::report::Report;

pub const SUPPORTED_PRIMES: [u32; 4] = [3, 5, 7, 11];

#[derive(Clone, Debug)]
pub struct ResolventSet {
    pub p: u32,
    /// Smallest primitive root modulo `p`.
    pub tau: u32,
    /// The ambient field `Q(zeta_{p(p-1)})`.
    pub field: CycloField,
    /// `rho(omega^[0], eps_j)` at index `j - 1`, for `j = 1..=p-1`.
    resolvents: Vec<QPoly>,
}

/// The resolvent set for `p` in {3, 5, 7, 11}.
pub fn lagrange_resolvents(p: u32) -> Result<ResolventSet, CyclotomicError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(CyclotomicError::UnsupportedPrime(p as u64));
    }
    let tau = primitive_root_mod(p as u64)? as u32;
    let field = CycloField::new(p * (p - 1))?;
    let mut rs = ResolventSet { p, tau, field, resolvents: Vec::new() };
    rs.resolvents = (1..p).map(|j| rs.resolvent_at(0, j)).collect();
    Ok(rs)
}

impl ResolventSet {
    fn n(&self) -> i64 {
        (self.p * (self.p - 1)) as i64
    }

    /// Exponent of `zeta` giving `omega^[n] = omega^(tau^n)`.
    fn omega_exponent(&self, n: u64) -> i64 {
        (self.p as i64 - 1) * pow_mod(self.tau as u64, n, self.p as u64) as i64
    }

    pub fn omega(&self) -> QPoly {
        self.field.zeta_pow(self.p as i64 - 1)
    }

    /// `omega^[n]`.
    pub fn omega_power(&self, n: u64) -> QPoly {
        self.field.zeta_pow(self.omega_exponent(n))
    }

    /// `eps_j = exp(2 pi i j / (p-1))`.
    pub fn epsilon(&self, j: u32) -> QPoly {
        self.field.zeta_pow(self.p as i64 * j as i64)
    }

    /// `rho(omega^[n], eps_j) = sum_k eps_j^k omega^[n+k]` for `k = 0..=p-2`.
    pub fn resolvent_at(&self, n: u64, j: u32) -> QPoly {
        let mut acc = QPoly::zero();
        for k in 0..(self.p - 1) as u64 {
            let e = self.p as i64 * j as i64 * k as i64 + self.omega_exponent(n + k);
            acc = self.field.add(&acc, &self.field.zeta_pow(e.rem_euclid(self.n())));
        }
        acc
    }

    /// `rho(omega^[0], eps_j)` for `1 <= j <= p-1`.
    pub fn resolvent(&self, j: u32) -> &QPoly {
        &self.resolvents[j as usize - 1]
    }

    /// `rho(omega^[0], eps_j)^(p-1)`.
    pub fn resolvent_power(&self, j: u32) -> QPoly {
        self.field.pow(self.resolvent(j), self.p as u64 - 1)
    }

    /// The representative of `a` in `Q(zeta_{p-1})` (as a polynomial in
    /// `zeta_{p-1}`), or `None` if `a` is outside that subfield.
    pub fn descend(&self, a: &QPoly) -> Option<QPoly> {
        let p = self.p as usize;
        let mut out = Vec::new();
        for (k, c) in a.coeffs().iter().enumerate() {
            if k % p == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(QPoly::new(out))
    }
}

/// Exact check of the resolvent identities for one prime.
pub fn resolvent_identities_check(rs: &ResolventSet) -> Report {
    let k = &rs.field;
    let p = rs.p;
    let mut report = Report::new(format!(
        "resolvent identities for p = {p} (tau = {tau}, ambient Q(zeta({n})) of degree {d})",
        tau = rs.tau,
        n = p * (p - 1),
        d = k.degree()
    ));

    let shift = (1..p).all(|j| {
        (0..p as u64).all(|n| {
            let eps_inv = k.zeta_pow(-(p as i64) * j as i64 * n as i64);
            rs.resolvent_at(n, j) == k.mul(&eps_inv, rs.resolvent(j))
        })
    });
    report.push("shift identity rho(omega^[n], eps_j) = eps_j^(-n) rho(omega^[0], eps_j)", shift);

    let powers: Vec<QPoly> = (1..p).map(|j| rs.resolvent_power(j)).collect();
    let product = (1..p).all(|j| {
        let e = ((p - 1) * (p - 2) / 2) as u64;
        let mut rhs = k.zeta_pow(p as i64 * j as i64 * e as i64);
        for n in 0..(p - 1) as u64 {
            rhs = k.mul(&rhs, &rs.resolvent_at(n, j));
        }
        powers[j as usize - 1] == rhs
    });
    report.push("power-product identity rho^(p-1) = eps_j^((p-1)(p-2)/2) prod_k rho(omega^[k], eps_j)", product);

    let sums = (1..=(p - 2) as u64).all(|e| {
        let s = (1..p).fold(QPoly::zero(), |acc, j| k.add(&acc, &k.zeta_pow(p as i64 * j as i64 * e as i64)));
        s.is_zero()
    });
    report.push("sum_j eps_j^k = 0 for 1 <= k <= p-2", sums);

    let membership = powers.iter().all(|a| rs.descend(a).is_some());
    report.push("rho(omega^[0], eps_j)^(p-1) lies in Q(zeta(p-1))", membership);

    let total = (1..p).fold(QPoly::zero(), |acc, j| k.add(&acc, rs.resolvent(j)));
    let mean = total.scale(&BigRational::new(1.into(), (p as i64 - 1).into()));
    report.push("omega = (1/(p-1)) sum_j rho(omega^[0], eps_j)", mean == rs.omega());

    report.push("rho(omega^[0], eps_(p-1)) = -1", *rs.resolvent(p - 1) == k.from_int(-1));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_resolvent_squares_to_minus_three() {
        let rs = lagrange_resolvents(3).unwrap();
        let k = &rs.field;
        let w = rs.omega();
        assert_eq!(*rs.resolvent(1), k.sub(&w, &k.mul(&w, &w)));
        assert_eq!(rs.resolvent_power(1), k.from_int(-3));
        assert!(resolvent_identities_check(&rs).all_passed());
    }

    #[test]
    fn p5_identities_and_descent() {
        let rs = lagrange_resolvents(5).unwrap();
        let report = resolvent_identities_check(&rs);
        assert!(report.all_passed(), "{report}");
        for j in 1..5 {
            assert!(rs.descend(&rs.resolvent_power(j)).unwrap().degree().unwrap_or(0) < 2);
        }
        assert_eq!(*rs.resolvent(4), rs.field.from_int(-1));
    }

    #[test]
    fn unsupported_primes() {
        assert_eq!(lagrange_resolvents(13).unwrap_err(), CyclotomicError::UnsupportedPrime(13));
        assert_eq!(lagrange_resolvents(4).unwrap_err(), CyclotomicError::UnsupportedPrime(4));
    }
}
