//! The conjugation pattern of the roots `x_j = alpha zeta_p^j` of `x^p - c`,
//! checked exactly in `Q(zeta_p)(alpha)` with `alpha` the real `p`th root of `c`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::arith::{Extension, Field, Poly, QPoly};
use crate::cyclotomic::CycloField;
use crate::qfactor::{rational_roots, QFactorError};
use crate::report::Report;

/// Primes accepted by [`conjugation_pattern_check`].
pub const PATTERN_PRIMES: [u32; 3] = [3, 5, 7];

/// Which shape of root expression is being tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternCase {
    /// `alpha` real: `x_{g+j} = conj(x_{l-j})`.
    RealAlpha,
    /// `alpha` non-real with `beta = alpha conj(alpha)` in the base: `x_{g+j} = conj(x_{l+j})`.
    NonRealAlpha,
}

impl fmt::Display for PatternCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternCase::RealAlpha => write!(f, "case I (alpha real)"),
            PatternCase::NonRealAlpha => write!(f, "case II (alpha non-real, beta = alpha*conj(alpha))"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("p must be one of 3, 5, 7, got {0}")]
    UnsupportedPrime(u32),
    #[error("c must be a positive rational, got {0}")]
    NotPositive(BigRational),
    #[error("x^{p} - {c} is reducible: {c} = {beta}^{p}")]
    Reducible { p: u32, c: BigRational, beta: BigRational },
    #[error(transparent)]
    Factor(#[from] QFactorError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationPatternReport {
    pub p: u32,
    pub c: BigRational,
    pub case: PatternCase,
    /// Indices `j` in `1..=p` with `x_j` real.
    pub real_indices: Vec<u32>,
    /// The pair `(l, g)` with `x_g = conj(x_l)` used for the index relations.
    pub pair: (u32, u32),
    pub checks: Report,
}

impl ConjugationPatternReport {
    pub fn real_count(&self) -> usize {
        self.real_indices.len()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.all_passed()
    }
}

impl fmt::Display for ConjugationPatternReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "roots of x^{} - {}: x_j = alpha*zeta({})^j, j = 1..{}", self.p, self.c, self.p, self.p)?;
        writeln!(f, "{}", self.case)?;
        let idx: Vec<String> = self.real_indices.iter().map(|j| j.to_string()).collect();
        writeln!(f, "real roots: {} (indices {})", self.real_count(), idx.join(", "))?;
        writeln!(f, "pair: l = {}, g = {}", self.pair.0, self.pair.1)?;
        write!(f, "{}", self.checks)
    }
}

/// The splitting field `Q(zeta_p)[y]/(y^p - c)` with `y = alpha`.
struct Splitting {
    p: u32,
    cf: CycloField,
    k: Extension<CycloField>,
}

impl Splitting {
    fn new(p: u32, c: &BigRational) -> Self {
        let cf = CycloField::new(p).expect("p is a small prime");
        let mut m = vec![QPoly::zero(); p as usize + 1];
        m[0] = cf.from_rational(&-c.clone());
        m[p as usize] = cf.one();
        let k = Extension::new(cf.clone(), Poly::new(m));
        Self { p, cf, k }
    }

    /// `x_j = alpha zeta^j`, index taken modulo `p`.
    fn root(&self, j: i64) -> Poly<QPoly> {
        Poly::new(vec![QPoly::zero(), self.cf.zeta_pow(j.rem_euclid(self.p as i64))])
    }

    /// Conjugation fixes `alpha` and acts on the cyclotomic coefficients.
    fn conj(&self, a: &Poly<QPoly>) -> Poly<QPoly> {
        Poly::new(a.coeffs().iter().map(|c| self.cf.conj(c)).collect())
    }
}

fn inverse_mod(a: i64, p: i64) -> i64 {
    (1..p).find(|x| (a * x).rem_euclid(p) == 1).expect("p is prime")
}

/// Exact check of the conjugation pattern of the roots of `x^p - c`.
pub fn conjugation_pattern_check(
    p: u32,
    c: &BigRational,
    case: PatternCase,
) -> Result<ConjugationPatternReport, PatternError> {
    if !PATTERN_PRIMES.contains(&p) {
        return Err(PatternError::UnsupportedPrime(p));
    }
    if !c.is_positive() {
        return Err(PatternError::NotPositive(c.clone()));
    }
    if let Some(beta) = rational_roots(&QPoly::binomial(p as usize, c.clone()))?.into_iter().next() {
        return Err(PatternError::Reducible { p, c: c.clone(), beta });
    }
    let s = Splitting::new(p, c);
    let pi = p as i64;
    let roots: Vec<Poly<QPoly>> = (1..=pi).map(|j| s.root(j)).collect();
    let mut checks = Report::new(format!("conjugation pattern of x^{p} - {c}, {case}"));

    let cq = s.k.from_rational(c);
    checks.push("x_j^p = c for every j", roots.iter().all(|x| s.k.pow(x, p as u64) == cq));
    let distinct = (0..roots.len()).all(|a| (a + 1..roots.len()).all(|b| roots[a] != roots[b]));
    checks.push("the p roots are distinct", distinct);

    let real_indices: Vec<u32> = (1..=p).filter(|&j| s.conj(&roots[j as usize - 1]) == roots[j as usize - 1]).collect();
    checks.push_detail("exactly one real root", real_indices.len() == 1, format!("{} real", real_indices.len()));

    let (l, g) = (1i64, pi - 1);
    checks.push(format!("x_{g} = conj(x_{l})"), s.root(g) == s.conj(&s.root(l)));

    match case {
        PatternCase::RealAlpha => {
            let relation = (0..pi).all(|j| s.root(g + j) == s.conj(&s.root(l - j)));
            checks.push(format!("x_(g+j) = conj(x_(l-j)) for j = 0..{}", pi - 1), relation);
            let all_pairs = (1..pi).all(|l2| (0..pi).all(|j| s.root(-l2 + j) == s.conj(&s.root(l2 - j))));
            checks.push("the relation holds for every conjugate pair (l, g)", all_pairs);
            let mid = ((g + l) * inverse_mod(2, pi)).rem_euclid(pi);
            let real = real_indices.first().map(|&r| r as i64 % pi);
            checks.push_detail(
                "the real root sits at index (g+l)/2 mod p",
                real == Some(mid),
                format!("(g+l)/2 = {mid} mod {p}"),
            );
        }
        PatternCase::NonRealAlpha => {
            // alpha' = alpha zeta is non-real, and beta = alpha' conj(alpha') = alpha^2.
            let alpha2 = s.root(1);
            checks.push("alpha' = alpha*zeta is non-real", s.conj(&alpha2) != alpha2);
            let beta = s.k.mul(&alpha2, &s.conj(&alpha2));
            let in_base = beta.degree().is_none_or(|d| d == 0);
            checks.push_detail(
                "hypothesis: beta = alpha'*conj(alpha') lies in Q(zeta_p)",
                in_base,
                "beta = alpha^2, which is not in Q(zeta_p); the second relation shape does not apply",
            );
            let relation = (0..pi).all(|j| s.root(g + j) == s.conj(&s.root(l + j)));
            checks.push("x_(g+j) = conj(x_(l+j)) for all j", relation);
        }
    }
    Ok(ConjugationPatternReport { p, c: c.clone(), case, real_indices, pair: (l as u32, g as u32), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn fifth_roots_of_two() {
        let r = conjugation_pattern_check(5, &int(2), PatternCase::RealAlpha).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.real_indices, vec![5]);
    }

    #[test]
    fn cube_roots_of_five() {
        let r = conjugation_pattern_check(3, &int(5), PatternCase::RealAlpha).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.real_count(), 1);
    }

    #[test]
    fn perfect_power_is_rejected() {
        let e = conjugation_pattern_check(5, &int(32), PatternCase::RealAlpha).unwrap_err();
        assert_eq!(e, PatternError::Reducible { p: 5, c: int(32), beta: int(2) });
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            conjugation_pattern_check(11, &int(2), PatternCase::RealAlpha),
            Err(PatternError::UnsupportedPrime(11))
        ));
        assert!(matches!(
            conjugation_pattern_check(3, &int(-2), PatternCase::RealAlpha),
            Err(PatternError::NotPositive(_))
        ));
    }

    #[test]
    fn second_shape_fails_for_pure_radicals() {
        let r = conjugation_pattern_check(7, &int(3), PatternCase::NonRealAlpha).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.real_count(), 1);
        assert!(r.checks.failures().any(|c| c.name.contains("x_(l+j)")));
    }
}
