//! Unsolvability certificates from Kronecker's criterion: an irreducible
//! polynomial of odd prime degree over `Q` that is solvable by radicals has
//! exactly one real root or only real roots. A certificate records the
//! irreducibility witness and the isolating intervals of the real roots, and
//! [`verify`] re-checks both from scratch.

pub mod dorrie;
pub mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, QPoly};
use crate::qfactor::modp::is_prime;
use crate::qfactor::{irreducibility, Irreducibility, IrreducibilityWitness, QFactorError};
use crate::realroots::{isolate_real_roots, sturm_count, Bound, IsolatingInterval, RealRootsError};

pub use dorrie::{dorrie_generate, dorrie_validate, DorrieFamilyMember, MAX_GENERATE};
pub use parse::{parse_poly, PolyParseError};

/// Version of the certificate JSON layout.
pub const SCHEMA_VERSION: u32 = 1;
/// The rule every certificate cites.
pub const RULE: &str = "Kronecker criterion (Theorem 6.1 contrapositive)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Irreducible of odd prime degree `p` with `1 < r < p` real roots.
    Unsolvable,
    InconclusiveOneReal,
    InconclusiveAllReal,
    /// Degree not an odd prime, or reducible.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Unsolvable => "UNSOLVABLE",
            Verdict::InconclusiveOneReal => "INCONCLUSIVE_ONE_REAL",
            Verdict::InconclusiveAllReal => "INCONCLUSIVE_ALL_REAL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        };
        write!(f, "{s}")
    }
}

/// Verdict for an irreducible polynomial of odd prime degree `p` with `r` real roots.
pub fn verdict_for(p: usize, r: usize) -> Verdict {
    match r {
        1 => Verdict::InconclusiveOneReal,
        _ if r == p => Verdict::InconclusiveAllReal,
        _ => Verdict::Unsolvable,
    }
}

/// An isolating interval with exact rational endpoints written as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalText {
    pub lo: String,
    pub hi: String,
}

impl From<&IsolatingInterval> for IntervalText {
    fn from(iv: &IsolatingInterval) -> Self {
        Self { lo: iv.lo.to_string(), hi: iv.hi.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvabilityCertificate {
    pub schema: u32,
    /// Canonical text of the primitive integral form of the input.
    pub input: String,
    pub degree: usize,
    /// Present when the degree is an odd prime and the polynomial is irreducible.
    pub irreducible: Option<IrreducibilityWitness>,
    pub real_root_count: Option<usize>,
    pub intervals: Vec<IntervalText>,
    pub verdict: Verdict,
    pub rule: String,
    /// A nontrivial factor, for reducible input of odd prime degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error(transparent)]
    Factor(#[from] QFactorError),
    #[error(transparent)]
    RealRoots(#[from] RealRootsError),
}

/// `c f` with integer coprime coefficients and positive leading coefficient.
pub fn normalize(f: &QPoly) -> QPoly {
    QPoly::from_ints(&f.primitive_part().1)
}

fn is_odd_prime(n: usize) -> bool {
    n >= 3 && is_prime(n as u64)
}

/// Applies the criterion to `f`.
pub fn kronecker_certify(f: &QPoly) -> Result<SolvabilityCertificate, CertifyError> {
    let degree = f.degree().ok_or(CertifyError::ZeroPolynomial)?;
    let f = normalize(f);
    let mut cert = SolvabilityCertificate {
        schema: SCHEMA_VERSION,
        input: f.to_string(),
        degree,
        irreducible: None,
        real_root_count: None,
        intervals: Vec::new(),
        verdict: Verdict::NotApplicable,
        rule: RULE.to_string(),
        factor: None,
    };
    if !is_odd_prime(degree) {
        return Ok(cert);
    }
    match irreducibility(&f)? {
        Irreducibility::Reducible { factor } => {
            cert.factor = Some(factor.to_string());
            Ok(cert)
        }
        Irreducibility::Irreducible(w) => {
            let intervals = isolate_real_roots(&f)?;
            cert.irreducible = Some(w);
            cert.real_root_count = Some(intervals.len());
            cert.intervals = intervals.iter().map(IntervalText::from).collect();
            cert.verdict = verdict_for(degree, intervals.len());
            Ok(cert)
        }
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("rule must be \"{RULE}\"")]
    Rule,
    #[error("input does not parse: {0}")]
    Input(String),
    #[error("input is not in normalized form")]
    NotNormalized,
    #[error("stated degree {stated}, actual {actual}")]
    Degree { stated: usize, actual: usize },
    #[error("verdict {stated} does not match the recomputed {expected}")]
    Verdict { stated: Verdict, expected: Verdict },
    #[error("irreducibility witness missing")]
    MissingWitness,
    #[error("irreducibility witness {0} does not verify")]
    Witness(String),
    #[error("a certificate for this input must not carry an irreducibility witness")]
    UnexpectedWitness,
    #[error("factor missing or not a nontrivial divisor")]
    Factor,
    #[error("stated real root count {stated:?}, Sturm count {actual}")]
    RootCount { stated: Option<usize>, actual: usize },
    #[error("{stated} intervals listed for {count} real roots")]
    IntervalCount { stated: usize, count: usize },
    #[error("interval {index} is malformed or does not isolate exactly one root")]
    Interval { index: usize },
    #[error("intervals are not disjoint and increasing")]
    Order,
}

fn parse_interval(iv: &IntervalText) -> Option<(BigRational, BigRational)> {
    let lo = parse_rational(&iv.lo)?;
    let hi = parse_rational(&iv.hi)?;
    (lo < hi).then_some((lo, hi))
}

/// Re-checks every claim of a certificate: the input and degree, the
/// irreducibility witness, the Sturm count, each isolating interval and the verdict.
pub fn verify(cert: &SolvabilityCertificate) -> Result<(), VerifyError> {
    if cert.schema != SCHEMA_VERSION {
        return Err(VerifyError::Schema(cert.schema));
    }
    if cert.rule != RULE {
        return Err(VerifyError::Rule);
    }
    let f = parse_poly(&cert.input).map_err(|e| VerifyError::Input(e.to_string()))?;
    if f.is_zero() || normalize(&f) != f {
        return Err(VerifyError::NotNormalized);
    }
    let degree = f.degree().expect("nonzero");
    if cert.degree != degree {
        return Err(VerifyError::Degree { stated: cert.degree, actual: degree });
    }
    let not_applicable = |cert: &SolvabilityCertificate| {
        if cert.verdict != Verdict::NotApplicable {
            return Err(VerifyError::Verdict { stated: cert.verdict, expected: Verdict::NotApplicable });
        }
        if cert.irreducible.is_some() {
            return Err(VerifyError::UnexpectedWitness);
        }
        Ok(())
    };
    if !is_odd_prime(degree) {
        return not_applicable(cert);
    }
    if let Some(text) = &cert.factor {
        let g = parse_poly(text).map_err(|_| VerifyError::Factor)?;
        let proper = g.degree().is_some_and(|d| d >= 1 && d < degree);
        if !proper || f.rem(&g).map_or(true, |r| !r.is_zero()) {
            return Err(VerifyError::Factor);
        }
        return not_applicable(cert);
    }
    let w = cert.irreducible.as_ref().ok_or(VerifyError::MissingWitness)?;
    if !w.verify(&f) {
        return Err(VerifyError::Witness(format!("{w:?}")));
    }
    let actual = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).map_err(|e| VerifyError::Input(e.to_string()))?;
    if cert.real_root_count != Some(actual) {
        return Err(VerifyError::RootCount { stated: cert.real_root_count, actual });
    }
    if cert.intervals.len() != actual {
        return Err(VerifyError::IntervalCount { stated: cert.intervals.len(), count: actual });
    }
    let mut previous_hi: Option<BigRational> = None;
    for (index, iv) in cert.intervals.iter().enumerate() {
        let (lo, hi) = parse_interval(iv).ok_or(VerifyError::Interval { index })?;
        if f.eval(&lo).is_zero() || f.eval(&hi).is_zero() {
            return Err(VerifyError::Interval { index });
        }
        let n = sturm_count(&f, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
            .map_err(|_| VerifyError::Interval { index })?;
        if n != 1 {
            return Err(VerifyError::Interval { index });
        }
        if previous_hi.as_ref().is_some_and(|p| p > &lo) {
            return Err(VerifyError::Order);
        }
        previous_hi = Some(hi);
    }
    let expected = verdict_for(degree, actual);
    if cert.verdict != expected {
        return Err(VerifyError::Verdict { stated: cert.verdict, expected });
    }
    Ok(())
}

/// Human-readable certificate.
pub fn emit_text(cert: &SolvabilityCertificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("input: {}\n", cert.input));
    out.push_str(&format!("degree: {}\n", cert.degree));
    match (&cert.irreducible, &cert.factor) {
        (Some(w), _) => out.push_str(&format!("irreducible: {}\n", describe_witness(w))),
        (None, Some(g)) => out.push_str(&format!("reducible: factor {g}\n")),
        (None, None) => out.push_str("irreducibility: not examined (degree is not an odd prime)\n"),
    }
    if let Some(r) = cert.real_root_count {
        out.push_str(&format!("real roots: {r}\n"));
        for iv in &cert.intervals {
            out.push_str(&format!("  ({}, {})\n", iv.lo, iv.hi));
        }
    }
    out.push_str(&format!("verdict: {}\n", cert.verdict));
    out.push_str(&format!("rule: {}\n", cert.rule));
    out.push_str(match cert.verdict {
        Verdict::Unsolvable => "more than one real root and a pair of non-real roots: not solvable by radicals\n",
        Verdict::InconclusiveOneReal => "one real root: the criterion does not decide solvability\n",
        Verdict::InconclusiveAllReal => "all roots real: the criterion does not decide solvability\n",
        Verdict::NotApplicable => "the criterion applies only to irreducible polynomials of odd prime degree\n",
    });
    out
}

pub fn describe_witness(w: &IrreducibilityWitness) -> String {
    match w {
        IrreducibilityWitness::RationalRootExhausted { degree } => {
            format!("degree {degree} with no rational root")
        }
        IrreducibilityWitness::Eisenstein { prime, shift: 0 } => format!("Eisenstein at {prime}"),
        IrreducibilityWitness::Eisenstein { prime, shift } => format!("Eisenstein at {prime} after x -> x + {shift}"),
        IrreducibilityWitness::ModPIrreducible { prime } => format!("irreducible modulo {prime}"),
        IrreducibilityWitness::CompleteFactorization { degree: 1 } => "linear".into(),
        IrreducibilityWitness::CompleteFactorization { degree } => {
            format!("no factor of degree at most {} by exhaustive search", degree / 2)
        }
    }
}

pub fn emit_json(cert: &SolvabilityCertificate) -> String {
    serde_json::to_string_pretty(cert).expect("certificate serializes")
}

pub fn parse_json(text: &str) -> Result<SolvabilityCertificate, serde_json::Error> {
    serde_json::from_str(text)
}

/// `4^4 a^5 > 5^5 b^4`.
pub fn dorrie_size_condition(a: &BigInt, b: &BigInt) -> bool {
    let lhs = BigInt::from(256) * num_traits::pow(a.clone(), 5);
    let rhs = BigInt::from(3125) * num_traits::pow(b.clone(), 4);
    lhs > rhs
}

/// `x^5 - a x - b`.
pub fn dorrie_poly(a: &BigInt, b: &BigInt) -> QPoly {
    QPoly::from_ints(&[-b.clone(), -a.clone(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::one()])
}
