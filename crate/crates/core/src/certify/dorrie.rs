//! The quintics `x^5 - a x - b` with `4^4 a^5 > 5^5 b^4`, `p | a`, `p | b`
//! and `p^2` not dividing `b`: irreducible by Eisenstein at `p`, with exactly
//! three real roots, hence not solvable by radicals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{dorrie_poly, dorrie_size_condition, kronecker_certify, SolvabilityCertificate, Verdict};
use crate::qfactor::modp::{is_prime, prime_factors};
use crate::qfactor::IrreducibilityWitness;
use crate::realroots::{sturm_count, Bound};
use crate::report::Report;

/// Largest `count` accepted by [`dorrie_generate`].
pub const MAX_GENERATE: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DorrieFamilyMember {
    pub a: BigInt,
    pub b: BigInt,
    pub p: u64,
    pub checks: Report,
    pub certificate: Option<SolvabilityCertificate>,
}

impl DorrieFamilyMember {
    pub fn all_passed(&self) -> bool {
        self.checks.all_passed()
    }
}

impl fmt::Display for DorrieFamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.checks)?;
        if let Some(c) = &self.certificate {
            write!(f, "\ncertificate: {} with {} real roots", c.verdict, c.real_root_count.unwrap_or(0))?;
        }
        Ok(())
    }
}

/// Evaluates the family conditions for `(a, b, p)` and certifies `x^5 - a x - b`.
pub fn dorrie_validate(a: &BigInt, b: &BigInt, p: u64) -> DorrieFamilyMember {
    let f = dorrie_poly(a, b);
    let mut checks = Report::new(format!("{f} with p = {p}"));
    let pb = BigInt::from(p);

    let lhs = BigInt::from(256) * num_traits::pow(a.clone(), 5);
    let rhs = BigInt::from(3125) * num_traits::pow(b.clone(), 4);
    let size = dorrie_size_condition(a, b);
    checks.push_detail("4^4 a^5 > 5^5 b^4", size, format!("{lhs} vs {rhs}"));
    let prime = is_prime(p);
    checks.push("p is prime", prime);
    let divides_a = prime && (a % &pb).is_zero();
    let divides_b = prime && (b % &pb).is_zero();
    let square_free = prime && !(b % (&pb * &pb)).is_zero();
    checks.push("p divides a", divides_a);
    checks.push("p divides b", divides_b);
    checks.push("p^2 does not divide b", square_free);
    let eisenstein = prime && IrreducibilityWitness::Eisenstein { prime: p, shift: 0 }.verify(&f);
    checks.push("Eisenstein's criterion holds at p", eisenstein);
    let r = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).ok();
    checks.push_detail(
        "exactly three real roots (Sturm)",
        r == Some(3),
        format!("{} real roots", r.map_or("?".into(), |r| r.to_string())),
    );

    let conditions = size && prime && divides_a && divides_b && square_free;
    let certificate = kronecker_certify(&f).ok();
    if conditions {
        let ok = certificate.as_ref().is_some_and(|c| c.verdict == Verdict::Unsolvable && c.real_root_count == Some(3));
        checks.push("certificate is UNSOLVABLE with r = 3", ok);
    }
    DorrieFamilyMember { a: a.clone(), b: b.clone(), p, checks, certificate }
}

/// Members passing every check, in the order: `|a| + |b|` ascending, then `a`
/// ascending, then `b` before `-b`, then `p` ascending. The first `seed`
/// members are skipped. Returns `None` when `count` exceeds [`MAX_GENERATE`].
pub fn dorrie_generate(count: usize, seed: u64) -> Option<Vec<DorrieFamilyMember>> {
    if count > MAX_GENERATE {
        return None;
    }
    let mut out = Vec::with_capacity(count);
    let mut skip = seed;
    let mut s: u64 = 2;
    while out.len() < count {
        // a >= 1 is forced by the size condition, and b = 0 fails p^2 not dividing b.
        for a in 1..s {
            let b = s - a;
            let g = a.gcd(&b);
            if g == 1 {
                continue;
            }
            for b in [BigInt::from(b), -BigInt::from(b)] {
                let a = BigInt::from(a);
                if !dorrie_size_condition(&a, &b) {
                    continue;
                }
                for p in prime_factors(g) {
                    let p2 = BigInt::from(p * p);
                    if (&b % &p2).is_zero() {
                        continue;
                    }
                    let m = dorrie_validate(&a, &b, p);
                    if !m.all_passed() {
                        continue;
                    }
                    if skip > 0 {
                        skip -= 1;
                    } else {
                        out.push(m);
                        if out.len() == count {
                            return Some(out);
                        }
                    }
                }
            }
        }
        s += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn member(a: i64, b: i64, p: u64) -> DorrieFamilyMember {
        dorrie_validate(&a.into(), &b.into(), p)
    }

    #[test]
    fn smallest_member() {
        let m = member(4, 2, 2);
        assert!(m.all_passed(), "{m}");
        assert_eq!(m.certificate.unwrap().verdict, Verdict::Unsolvable);
    }

    #[test]
    fn failing_conditions() {
        let m = member(5, 5, 5);
        assert!(!m.checks.checks[0].passed);
        let m = member(6, 4, 2);
        assert!(m.checks.failures().any(|c| c.name == "p^2 does not divide b"));
        assert!(!member(4, 2, 4).all_passed());
    }

    #[test]
    fn generation_order_and_seed() {
        assert_eq!(dorrie_generate(0, 0).unwrap().len(), 0);
        let first = dorrie_generate(3, 0).unwrap();
        assert_eq!((first[0].a.clone(), first[0].b.clone(), first[0].p), (4.into(), 2.into(), 2));
        assert_eq!(first[1].b, BigInt::from(-2));
        let shifted = dorrie_generate(2, 1).unwrap();
        assert_eq!(shifted[0], first[1]);
        assert!(dorrie_generate(MAX_GENERATE + 1, 0).is_none());
        assert!(first.iter().all(|m| m.a.is_positive()));
    }
}
