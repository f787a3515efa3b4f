//! Irreducibility testing and complete factorization over the rationals.
//!
//! Every positive answer carries an [`IrreducibilityWitness`] that can be
//! re-verified by [`IrreducibilityWitness::verify`] without repeating the
//! search that produced it.

pub mod interp;
pub mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::QPoly;
use modp::{is_prime, FpPoly};

/// Largest degree accepted by the interpolation factorizer.
pub const DEFAULT_DEGREE_BOUND: usize = 12;
/// Prime bound used by the irreducibility pipeline's mod-p stage.
pub const DEFAULT_PRIME_BOUND: u64 = 100;
/// Shifts tried for Eisenstein's criterion, `f(x + c)`.
pub const EISENSTEIN_SHIFTS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QFactorError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial has no irreducibility status")]
    Constant,
    #[error("unsupported degree {degree} (bound {bound})")]
    UnsupportedDegree { degree: usize, bound: usize },
    #[error("integer value too large for trial-division divisor enumeration")]
    ValueTooLarge,
}

/// Evidence that a rational polynomial is irreducible over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "witness", rename_all = "kebab-case")]
pub enum IrreducibilityWitness {
    /// Degree at most 3 and no rational root.
    RationalRootExhausted { degree: usize },
    /// Eisenstein's criterion at `prime` applied to `f(x + shift)`.
    Eisenstein { prime: u64, shift: i64 },
    /// Irreducible modulo `prime`, which does not divide the leading coefficient.
    ModPIrreducible { prime: u64 },
    /// Exhaustive interpolation search found no factor of degree `<= degree/2`.
    CompleteFactorization { degree: usize },
}

impl IrreducibilityWitness {
    pub fn method_name(&self) -> &'static str {
        match self {
            Self::RationalRootExhausted { .. } => "rational-root-exhausted",
            Self::Eisenstein { .. } => "eisenstein",
            Self::ModPIrreducible { .. } => "mod-p-irreducible",
            Self::CompleteFactorization { .. } => "complete-factorization",
        }
    }

    /// Re-checks the witness against `f` directly.
    pub fn verify(&self, f: &QPoly) -> bool {
        let Some(n) = f.degree() else { return false };
        if n == 0 {
            return false;
        }
        let (_, prim) = f.primitive_part();
        match *self {
            Self::RationalRootExhausted { degree } => {
                degree == n && n <= 3 && !has_rational_root_by_substitution(&prim)
            }
            Self::Eisenstein { prime, shift } => {
                is_prime(prime) && eisenstein_holds(&shifted_primitive(f, shift), prime)
            }
            Self::ModPIrreducible { prime } => {
                if !is_prime(prime) {
                    return false;
                }
                let fp = FpPoly::from_ints(prime, &prim);
                fp.degree() == Some(n) && fp.rabin_irreducible()
            }
            Self::CompleteFactorization { degree } => {
                if degree != n {
                    return false;
                }
                if n == 1 {
                    return true;
                }
                if n <= 3 {
                    return !has_rational_root_by_substitution(&prim);
                }
                matches!(interp::smallest_factor(&prim), Ok(None))
            }
        }
    }
}

/// Outcome of the irreducibility pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityWitness),
    /// A nontrivial monic factor.
    Reducible {
        factor: QPoly,
    },
}

/// `f / gcd(f, f')`, made monic.
pub fn squarefree_part(f: &QPoly) -> QPoly {
    assert!(!f.is_zero(), "squarefree part of zero");
    if f.degree() == Some(0) {
        return QPoly::from_i64s(&[1]);
    }
    let g = f.gcd(&f.derivative());
    f.exact_div(&g).expect("gcd divides f").monic()
}

/// All rational roots, sorted increasingly.
pub fn rational_roots(f: &QPoly) -> Result<Vec<BigRational>, QFactorError> {
    if f.is_zero() {
        return Err(QFactorError::ZeroPolynomial);
    }
    let (_, mut prim) = f.primitive_part();
    let mut roots = Vec::new();
    if prim.first().is_some_and(|c| c.is_zero()) {
        roots.push(BigRational::zero());
        while prim.first().is_some_and(|c| c.is_zero()) {
            prim.remove(0);
        }
    }
    if prim.len() > 1 {
        let nums = interp::divisors(&prim[0])?;
        let dens = interp::divisors(prim.last().expect("nonempty"))?;
        let fq = QPoly::from_ints(&prim);
        for d in &dens {
            for n in &nums {
                if !n.gcd(d).is_one() {
                    continue;
                }
                for s in [n.clone(), -n.clone()] {
                    let r = BigRational::new(s, d.clone());
                    if fq.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn has_rational_root_by_substitution(prim: &[BigInt]) -> bool {
    if prim.first().is_none_or(|c| c.is_zero()) {
        return true;
    }
    let (Ok(nums), Ok(dens)) = (interp::divisors(&prim[0]), interp::divisors(prim.last().expect("nonempty"))) else {
        return true;
    };
    dens.iter().any(|d| {
        nums.iter().any(|n| {
            [n.clone(), -n.clone()].into_iter().any(|s| {
                // d^n f(s/d) as an integer sum.
                let k = prim.len() - 1;
                let mut acc = BigInt::zero();
                for (i, c) in prim.iter().enumerate() {
                    acc += c * s.pow(i as u32) * d.pow((k - i) as u32);
                }
                acc.is_zero()
            })
        })
    })
}

fn shifted_primitive(f: &QPoly, shift: i64) -> Vec<BigInt> {
    let g = f.shift(&BigRational::from_integer(BigInt::from(shift)));
    g.primitive_part().1
}

fn eisenstein_holds(prim: &[BigInt], p: u64) -> bool {
    let p = BigInt::from(p);
    let Some((lc, rest)) = prim.split_last() else { return false };
    if rest.is_empty() || (lc % &p).is_zero() {
        return false;
    }
    rest.iter().all(|c| (c % &p).is_zero()) && !(&rest[0] % (&p * &p)).is_zero()
}

/// Smallest prime for which Eisenstein's criterion applies to the primitive
/// integer form of `f`, or `None`.
pub fn eisenstein_witness(f: &QPoly) -> Result<Option<u64>, QFactorError> {
    if f.is_zero() {
        return Err(QFactorError::ZeroPolynomial);
    }
    Ok(eisenstein_prime(&f.primitive_part().1))
}

fn eisenstein_prime(prim: &[BigInt]) -> Option<u64> {
    let (_, rest) = prim.split_last()?;
    if rest.is_empty() {
        return None;
    }
    let g = rest.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return None;
    }
    // Only primes dividing every lower coefficient can work.
    let g = g.to_u64()?;
    modp::prime_factors(g).into_iter().find(|&p| eisenstein_holds(prim, p))
}

/// Eisenstein with the shifts in [`EISENSTEIN_SHIFTS`].
pub fn eisenstein_shifted(f: &QPoly) -> Option<(u64, i64)> {
    EISENSTEIN_SHIFTS.iter().find_map(|&c| eisenstein_prime(&shifted_primitive(f, c)).map(|p| (p, c)))
}

/// Smallest prime `p <= prime_bound` with `p` not dividing the leading
/// coefficient such that `f mod p` is irreducible, by the Ben-Or test.
pub fn modp_irreducible_witness(f: &QPoly, prime_bound: u64) -> Option<u64> {
    let n = f.degree()?;
    if n == 0 {
        return None;
    }
    let (_, prim) = f.primitive_part();
    (2..=prime_bound).filter(|&p| is_prime(p)).find(|&p| {
        let fp = FpPoly::from_ints(p, &prim);
        if fp.degree() != Some(n) {
            return false;
        }
        if !fp.gcd(&fp.derivative()).is_one() {
            return false;
        }
        fp.ben_or_irreducible()
    })
}

/// Irreducibility pipeline: rational roots, then Eisenstein (with shifts),
/// then mod-p, then exhaustive interpolation search.
pub fn irreducibility(f: &QPoly) -> Result<Irreducibility, QFactorError> {
    irreducibility_with(f, DEFAULT_PRIME_BOUND, DEFAULT_DEGREE_BOUND)
}

pub fn irreducibility_with(f: &QPoly, prime_bound: u64, degree_bound: usize) -> Result<Irreducibility, QFactorError> {
    let n = f.degree().ok_or(QFactorError::ZeroPolynomial)?;
    if n == 0 {
        return Err(QFactorError::Constant);
    }
    if n == 1 {
        return Ok(Irreducibility::Irreducible(IrreducibilityWitness::CompleteFactorization { degree: 1 }));
    }
    if let Some(r) = rational_roots(f)?.into_iter().next() {
        return Ok(Irreducibility::Reducible { factor: QPoly::new(vec![-r, BigRational::one()]) });
    }
    if n <= 3 {
        return Ok(Irreducibility::Irreducible(IrreducibilityWitness::RationalRootExhausted { degree: n }));
    }
    if let Some((prime, shift)) = eisenstein_shifted(f) {
        return Ok(Irreducibility::Irreducible(IrreducibilityWitness::Eisenstein { prime, shift }));
    }
    if let Some(prime) = modp_irreducible_witness(f, prime_bound) {
        return Ok(Irreducibility::Irreducible(IrreducibilityWitness::ModPIrreducible { prime }));
    }
    if n > degree_bound {
        return Err(QFactorError::UnsupportedDegree { degree: n, bound: degree_bound });
    }
    let (_, prim) = f.primitive_part();
    match interp::smallest_factor(&prim)? {
        Some(h) => Ok(Irreducibility::Reducible { factor: interp::to_rational_monic(&h) }),
        None => Ok(Irreducibility::Irreducible(IrreducibilityWitness::CompleteFactorization { degree: n })),
    }
}

/// `f = unit * product(factors)` with monic irreducible factors listed with
/// multiplicity, sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(QPoly, IrreducibilityWitness)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> QPoly {
        self.factors.iter().fold(QPoly::constant(self.unit.clone()), |acc, (f, _)| &acc * f)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

/// Complete factorization over the rationals by interpolation search.
pub fn factor_over_q(f: &QPoly) -> Result<Factorization, QFactorError> {
    factor_over_q_with(f, DEFAULT_DEGREE_BOUND)
}

pub fn factor_over_q_with(f: &QPoly, degree_bound: usize) -> Result<Factorization, QFactorError> {
    let n = f.degree().ok_or(QFactorError::ZeroPolynomial)?;
    if n > degree_bound {
        return Err(QFactorError::UnsupportedDegree { degree: n, bound: degree_bound });
    }
    let unit = f.lead().expect("nonzero").clone();
    let mut rest = f.monic();
    let mut monic_factors: Vec<QPoly> = Vec::new();
    for r in rational_roots(f)? {
        let lin = QPoly::new(vec![-r, BigRational::one()]);
        while let Ok(q) = rest.exact_div(&lin) {
            monic_factors.push(lin.clone());
            rest = q;
        }
    }
    while rest.degree().is_some_and(|d| d > 0) {
        let d = rest.degree().expect("nonzero");
        if d <= 3 {
            monic_factors.push(rest.clone());
            break;
        }
        let (_, prim) = rest.primitive_part();
        match interp::smallest_factor(&prim)? {
            Some(h) => {
                let hq = interp::to_rational_monic(&h);
                rest = rest.exact_div(&hq).expect("found factor divides");
                monic_factors.push(hq);
            }
            None => {
                monic_factors.push(rest.clone());
                break;
            }
        }
    }
    monic_factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let mut factors = Vec::with_capacity(monic_factors.len());
    for g in monic_factors {
        match irreducibility(&g)? {
            Irreducibility::Irreducible(w) => factors.push((g, w)),
            Irreducibility::Reducible { factor } => {
                unreachable!("factor {g} re-checked as reducible (divisor {factor})")
            }
        }
    }
    let out = Factorization { unit, factors };
    debug_assert_eq!(&out.reconstruct(), f);
    Ok(out)
}

/// True if the integer coefficients of `f` are bounded by `bound` in absolute value.
pub fn height_at_most(f: &QPoly, bound: i64) -> bool {
    let b = BigInt::from(bound);
    f.coeffs().iter().all(|c| c.is_integer() && c.to_integer().abs() <= b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, q};

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn squarefree_examples() {
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(squarefree_part(&a), &p(&[-1, 1]) * &p(&[2, 1]));
        let f = p(&[-2, -4, 0, 0, 0, 1]);
        assert_eq!(squarefree_part(&f), f);
        assert_eq!(squarefree_part(&p(&[0, 0, 0, 1])), p(&[0, 1]));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&p(&[-1, 0, 1])).unwrap(), vec![int(-1), int(1)]);
        assert!(rational_roots(&p(&[-2, -4, 0, 0, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[-3, 2])).unwrap(), vec![q(3, 2)]);
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_witness(&p(&[-2, -4, 0, 0, 0, 1])).unwrap(), Some(2));
        assert_eq!(eisenstein_witness(&p(&[1, 0, 1])).unwrap(), None);
        assert_eq!(eisenstein_witness(&p(&[3, -3, 0, 1])).unwrap(), Some(3));
        // x^2 + 1 becomes Eisenstein at 2 after x -> x + 1.
        assert_eq!(eisenstein_shifted(&p(&[1, 0, 1])), Some((2, 1)));
    }

    #[test]
    fn modp_examples() {
        assert_eq!(modp_irreducible_witness(&p(&[1, 0, 1]), 10), Some(3));
        assert_eq!(modp_irreducible_witness(&p(&[-1, 0, 1]), 100), None);
        let f = p(&[-2, -4, 0, 0, 0, 1]);
        let prime = modp_irreducible_witness(&f, 100).expect("some prime works");
        assert!(IrreducibilityWitness::ModPIrreducible { prime }.verify(&f));
    }

    #[test]
    fn factor_examples() {
        let fx = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        let polys: Vec<QPoly> = fx.factors.iter().map(|(f, _)| f.clone()).collect();
        assert_eq!(polys, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
        assert!(factor_over_q(&p(&[1, 0, -1, 0, 1])).unwrap().is_irreducible());
        assert!(factor_over_q(&p(&[1, 3, -3, -4, 1, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn factor_keeps_multiplicities_and_unit() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 0, 6]);
        let fx = factor_over_q(&f).unwrap();
        assert_eq!(fx.reconstruct(), f);
        assert_eq!(fx.factors.len(), 3);
        assert_eq!(fx.unit, int(6));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let mut c = vec![0i64; 14];
        c[0] = 2;
        c[13] = 1;
        assert_eq!(factor_over_q(&p(&c)), Err(QFactorError::UnsupportedDegree { degree: 13, bound: 12 }));
    }

    #[test]
    fn pipeline_reports_factor_for_reducible_input() {
        match irreducibility(&p(&[-1, 0, 1])).unwrap() {
            Irreducibility::Reducible { factor } => assert_eq!(factor.degree(), Some(1)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            irreducibility(&p(&[-2, -4, 0, 0, 0, 1])).unwrap(),
            Irreducibility::Irreducible(IrreducibilityWitness::Eisenstein { prime: 2, shift: 0 })
        );
    }

    #[test]
    fn tampered_witnesses_fail() {
        let f = p(&[-2, -4, 0, 0, 0, 1]);
        assert!(IrreducibilityWitness::Eisenstein { prime: 2, shift: 0 }.verify(&f));
        assert!(!IrreducibilityWitness::Eisenstein { prime: 3, shift: 0 }.verify(&f));
        assert!(!IrreducibilityWitness::RationalRootExhausted { degree: 5 }.verify(&f));
        assert!(!IrreducibilityWitness::ModPIrreducible { prime: 2 }.verify(&f));
    }
}
