//! Step-by-step classification of a radical tower.
//!
//! The current field is tracked exactly while it stays representable: `Q`,
//! `Q(zeta_n)`, or a simple number field of degree at most 8 together with a
//! numeric value of its generator (which fixes the embedding into `C`).
//! Expressions are mapped into the field by exact root finding, using the
//! numeric value only to select among the exact candidates. Beyond that reach
//! steps are reported undetermined rather than guessed.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::expr::{step_shape, Expr};
use super::{conjugate_closure, BaseField, ClosureReport, TowerDesc};
use crate::arith::{resultant, Field, Poly, QPoly};
use crate::cyclotomic::{cyclotomic_poly, euler_phi};
use crate::numberfield::{roots_in_field, roots_in_field_over, NumberField};
use crate::qfactor::modp::is_prime;
use crate::qfactor::rational_roots;
use crate::realroots::numeric_roots;

/// Largest field degree tracked exactly.
pub const MAX_TRACKED_DEGREE: usize = 8;

/// Classification of one step `K <= K(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepClass {
    /// `(1,1)`: `u` already lies in `K`.
    Trivial {
        witness: String,
    },
    /// `(u,b)`: `b` is prime and `x^b - u^b` has no root in `K`, hence is irreducible.
    Radical {
        b: u32,
        witness: String,
    },
    Undetermined {
        reason: String,
    },
}

impl fmt::Display for StepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepClass::Trivial { witness } => write!(f, "(1,1): {witness}"),
            StepClass::Radical { b, witness } => write!(f, "(u,{b}): {witness}"),
            StepClass::Undetermined { reason } => write!(f, "undetermined: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub generator: Expr,
    pub exponent: Option<u32>,
    pub radicand: Option<Expr>,
    pub class: StepClass,
    /// Whether `zeta_b` lies in the field before the step, when known.
    pub zeta_available: Option<bool>,
    /// The radicand has a `b`th root in the field, the generator is not in
    /// the field, and `zeta_b` is missing: the step is not a binomial step.
    pub precondition_violated: bool,
    /// Description of the field after the step.
    pub field_after: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerReport {
    pub base: BaseField,
    pub steps: Vec<StepReport>,
    pub closure: ClosureReport,
    /// Primes `q` used as step exponents with `zeta_q` in the field before every such step.
    pub roots_of_unity_present: Vec<u32>,
}

impl TowerReport {
    pub fn conjugate_closed(&self) -> bool {
        self.closure.closed()
    }

    pub fn precondition_violations(&self) -> Vec<usize> {
        self.steps.iter().enumerate().filter(|(_, s)| s.precondition_violated).map(|(i, _)| i + 1).collect()
    }
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base)?;
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {}: {}", i + 1, s.generator)?;
            match (&s.exponent, &s.radicand) {
                (Some(b), Some(c)) => writeln!(f, "  exponent {b}, radicand {c}")?,
                _ => writeln!(f, "  exponent not determined")?,
            }
            writeln!(f, "  {}", s.class)?;
            if s.precondition_violated {
                writeln!(f, "  PRECONDITION VIOLATED: zeta({}) is not in the field", s.exponent.unwrap_or(0))?;
            }
            writeln!(f, "  field: {}", s.field_after)?;
        }
        let closure = if self.conjugate_closed() {
            "yes".to_string()
        } else {
            let idx: Vec<String> = self.closure.failing_steps().iter().map(|i| i.to_string()).collect();
            format!("no (steps {})", idx.join(", "))
        };
        writeln!(f, "conjugate-closed: {closure}")?;
        let q: Vec<String> = self.roots_of_unity_present.iter().map(|q| q.to_string()).collect();
        write!(f, "roots of unity present before their steps: [{}]", q.join(", "))
    }
}

/// An exactly represented field with a chosen complex embedding.
#[derive(Clone, Debug)]
struct Known {
    nf: NumberField,
    /// Value of the field generator under the embedding.
    y: Complex64,
    /// `Some(n)` when the field is `Q(zeta_n)` with generator `zeta_n`.
    cyclo: Option<u32>,
    label: String,
}

#[derive(Clone, Debug)]
enum State {
    Known(Box<Known>),
    /// `Q(zeta_n)` of degree above the tracked limit.
    LargeCyclo(u32),
    Opaque(String),
}

impl State {
    fn label(&self) -> String {
        match self {
            State::Known(k) => format!("{} [degree {}]", k.label, k.nf.degree()),
            State::LargeCyclo(n) => format!("Q(zeta({n})) [degree {}]", euler_phi(*n as u64)),
            State::Opaque(reason) => format!("not tracked ({reason})"),
        }
    }
}

fn rationals() -> State {
    let nf = NumberField::new(&QPoly::x()).expect("x is irreducible");
    State::Known(Box::new(Known { nf, y: Complex64::new(0.0, 0.0), cyclo: Some(1), label: "Q".into() }))
}

fn cyclo_state(n: u32) -> State {
    if n <= 2 {
        return rationals();
    }
    if euler_phi(n as u64) as usize > MAX_TRACKED_DEGREE {
        return State::LargeCyclo(n);
    }
    let phi = cyclotomic_poly(n).expect("index checked by the parser");
    match NumberField::new(&phi) {
        Ok(nf) => State::Known(Box::new(Known { nf, y: zeta_c64(n), cyclo: Some(n), label: format!("Q(zeta({n}))") })),
        Err(e) => State::Opaque(format!("Q(zeta({n})) could not be built: {e}")),
    }
}

fn zeta_c64(n: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
}

fn poly_c64(a: &QPoly, y: Complex64) -> Complex64 {
    a.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * y + c.to_f64().unwrap_or(f64::NAN))
}

/// `x^b - c` over the field.
fn binomial_over(k: &NumberField, b: u32, c: &QPoly) -> Poly<QPoly> {
    let mut coeffs = vec![QPoly::zero(); b as usize + 1];
    coeffs[0] = k.field().neg(c);
    coeffs[b as usize] = k.field().one();
    Poly::new(coeffs)
}

impl Known {
    fn value(&self, a: &QPoly) -> Complex64 {
        poly_c64(a, self.y)
    }

    /// The candidate whose numeric value is `target`, if exactly one is close.
    fn select(&self, cands: &[QPoly], target: Complex64) -> Result<Option<QPoly>, String> {
        let scale = 1.0 + target.norm();
        let mut dist: Vec<(f64, &QPoly)> = cands.iter().map(|c| ((self.value(c) - target).norm() / scale, c)).collect();
        dist.sort_by(|a, b| a.0.total_cmp(&b.0));
        match dist.as_slice() {
            [] => Ok(None),
            [(d, c), rest @ ..] if *d < 1e-8 => {
                if rest.first().is_some_and(|(d2, _)| *d2 < 1e-5) {
                    Err("numeric selection among exact candidates is ambiguous".into())
                } else {
                    Ok(Some((*c).clone()))
                }
            }
            _ => Ok(None),
        }
    }

    fn has_zeta(&self, b: u32) -> Result<bool, String> {
        if b <= 2 {
            return Ok(true);
        }
        if let Some(n) = self.cyclo {
            return Ok(n % b == 0 || (n % 2 == 1 && (2 * n) % b == 0));
        }
        let phi = cyclotomic_poly(b).map_err(|e| e.to_string())?;
        Ok(!roots_in_field(&phi, &self.nf).map_err(|e| e.to_string())?.is_empty())
    }

    /// The exact element denoted by `e`, or the reason it cannot be given.
    fn element(&self, e: &Expr) -> Result<QPoly, String> {
        let k = &self.nf;
        Ok(match e {
            Expr::Int(n) => k.rational(&BigRational::from_integer(n.clone())),
            Expr::Neg(a) => k.field().neg(&self.element(a)?),
            Expr::Add(a, b) => k.add(&self.element(a)?, &self.element(b)?),
            Expr::Sub(a, b) => k.field().sub(&self.element(a)?, &self.element(b)?),
            Expr::Mul(a, b) => k.mul(&self.element(a)?, &self.element(b)?),
            Expr::Div(a, b) => {
                let d = self.element(b)?;
                k.mul(&self.element(a)?, &k.invert(&d).map_err(|_| format!("division by zero in {e}"))?)
            }
            Expr::Pow(a, n) => {
                let v = self.element(a)?;
                let v = if *n < 0 { k.invert(&v).map_err(|_| format!("zero to a negative power in {e}"))? } else { v };
                k.pow(&v, n.unsigned_abs())
            }
            Expr::Conj(a) => self.element(&a.conj().map_err(|c| c.0)?)?,
            Expr::Zeta(n) => {
                let phi = cyclotomic_poly(*n).map_err(|x| x.to_string())?;
                let cands = roots_in_field(&phi, k).map_err(|x| x.to_string())?;
                self.select(&cands, zeta_c64(*n))?.ok_or_else(|| format!("zeta({n}) is not in {}", self.label))?
            }
            Expr::Root(m, a) => {
                let c = self.element(a)?;
                let target = e.eval_c64().ok_or_else(|| format!("{e} has no numeric value"))?;
                let cands = roots_in_field_over(&binomial_over(k, *m, &c), k).map_err(|x| x.to_string())?;
                self.select(&cands, target)?.ok_or_else(|| format!("{e} is not in {}", self.label))?
            }
        })
    }

    /// `K(u)` with `u^b = c`, where `x^b - c` is irreducible over `K`.
    fn adjoin(&self, u: &Expr, u_value: Complex64, b: u32, c: &QPoly) -> State {
        let d = self.nf.degree();
        let total = d * b as usize;
        if total > MAX_TRACKED_DEGREE {
            return State::Opaque(format!("degree {total} exceeds {MAX_TRACKED_DEGREE}"));
        }
        let label = if d == 1 { format!("Q({u})") } else { format!("{}({u})", self.label) };
        for t in 1..=8i64 {
            let Some(modulus) = primitive_element_poly(&self.nf, b, c, t) else { continue };
            let Ok(nf) = NumberField::new(&modulus) else { continue };
            let guess = self.y + u_value * t as f64;
            let Some(y) = snap_to_root(&modulus, guess) else { continue };
            return State::Known(Box::new(Known { nf, y, cyclo: None, label }));
        }
        State::Opaque(format!("no primitive element found for {label}"))
    }
}

/// Minimal polynomial of `y + t u` over `Q`, where `y` generates `k` and
/// `u^b = c`: the resultant in `y` of `g(y)` and `(x - y)^b - t^b c(y)`,
/// recovered by interpolation. `None` if it is not squarefree.
fn primitive_element_poly(k: &NumberField, b: u32, c: &QPoly, t: i64) -> Option<QPoly> {
    let n = k.degree() * b as usize;
    let tb = BigRational::from_integer(num_traits::pow(BigInt::from(t), b as usize));
    let xs: Vec<BigRational> = (0..=n as i64).map(|x| BigRational::from_integer(x.into())).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x0| {
            let h = &QPoly::new(vec![x0.clone(), -BigRational::one()]).pow(b) - &c.scale(&tb);
            resultant(k.modulus(), &h)
        })
        .collect();
    let f = lagrange_interpolate(&xs, &ys).monic();
    (f.degree() == Some(n) && f.is_squarefree()).then_some(f)
}

fn lagrange_interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = QPoly::new(vec![-xj.clone(), BigRational::one()]);
                basis = (&basis * &lin).scale(&(xi - xj).recip());
            }
        }
        acc = &acc + &basis;
    }
    acc
}

fn snap_to_root(f: &QPoly, guess: Complex64) -> Option<Complex64> {
    let roots = numeric_roots(f, 128).ok()?;
    let mut best: Vec<(f64, Complex64)> =
        roots.roots.iter().map(|r| r.to_c64()).map(|r| ((r - guess).norm(), r)).collect();
    best.sort_by(|a, b| a.0.total_cmp(&b.0));
    let scale = 1.0 + guess.norm();
    (best[0].0 < 1e-6 * scale && best.get(1).is_none_or(|s| s.0 > 1e-4 * scale)).then_some(best[0].1)
}

/// Squarefree part of a nonzero integer by trial division, when it can be
/// settled below `10^6`.
fn squarefree_int(n: &BigInt) -> Option<BigInt> {
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= m && d <= limit {
        let mut count = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            count += 1;
        }
        if count % 2 == 1 {
            out *= &d;
        }
        d += 1;
    }
    if m > BigInt::from(1_000_000_000_000u64) {
        return None;
    }
    out *= m;
    Some(if n.is_negative() { -out } else { out })
}

struct Outcome {
    class: StepClass,
    zeta_available: Option<bool>,
    precondition_violated: bool,
    next: Option<State>,
}

fn undetermined(reason: impl Into<String>) -> Outcome {
    Outcome {
        class: StepClass::Undetermined { reason: reason.into() },
        zeta_available: None,
        precondition_violated: false,
        next: None,
    }
}

/// Classifies every step of the tower.
pub fn tower_validate(desc: &TowerDesc) -> TowerReport {
    let mut state = match desc.base {
        BaseField::Rationals => rationals(),
        BaseField::Cyclotomic(n) => cyclo_state(n),
    };
    let mut steps = Vec::new();
    for u in &desc.steps {
        let shape = step_shape(u);
        let outcome = match &shape {
            // A rational generator lies in every field.
            _ if u.to_rational().is_some() => classify(&rationals(), u, 1, u),
            _ if matches!(state, State::Opaque(_)) => {
                let State::Opaque(reason) = &state else { unreachable!() };
                undetermined(format!("current field is {reason}"))
            }
            None => undetermined(
                "the generator is not root(k, c), zeta(n) or a product of roots of rationals and roots of unity, so its exponent cannot be read off",
            ),
            Some((b, c)) => classify(&state, u, *b, c),
        };
        let zeta_available = outcome.zeta_available;
        if let Some(next) = outcome.next {
            state = next;
        }
        steps.push(StepReport {
            generator: u.clone(),
            exponent: shape.as_ref().map(|s| s.0),
            radicand: shape.map(|s| s.1),
            class: outcome.class,
            zeta_available,
            precondition_violated: outcome.precondition_violated,
            field_after: state.label(),
        });
    }
    let mut primes: Vec<u32> = steps.iter().filter_map(|s| s.exponent).filter(|&b| is_prime(b as u64)).collect();
    primes.sort_unstable();
    primes.dedup();
    let roots_of_unity_present = primes
        .into_iter()
        .filter(|&q| steps.iter().filter(|s| s.exponent == Some(q)).all(|s| s.zeta_available == Some(true)))
        .collect();
    TowerReport { base: desc.base, steps, closure: conjugate_closure(desc), roots_of_unity_present }
}

fn classify(state: &State, u: &Expr, b: u32, c: &Expr) -> Outcome {
    if let Expr::Zeta(n) = u {
        return classify_zeta(state, *n);
    }
    if b == 1 {
        return match u.to_rational() {
            Some(r) => Outcome {
                class: StepClass::Trivial { witness: format!("generator is the rational {r}") },
                zeta_available: Some(true),
                precondition_violated: false,
                next: None,
            },
            None => undetermined("exponent 1 with a generator that is not rational"),
        };
    }
    if !is_prime(b as u64) {
        return undetermined(format!("exponent {b} is not prime; split the step into prime-exponent steps"));
    }
    let Some(u_value) = u.eval_c64() else { return undetermined("generator has no numeric value") };
    match state {
        State::Known(k) => classify_known(k, u, u_value, b, c),
        State::LargeCyclo(n) => classify_large_cyclo(*n, u_value, b, c),
        State::Opaque(reason) => undetermined(reason.clone()),
    }
}

fn classify_zeta(state: &State, n: u32) -> Outcome {
    let (inside, next) = match state {
        State::Known(k) => match k.has_zeta(n) {
            Ok(true) => (Some(true), None),
            Ok(false) => {
                let next = match k.cyclo {
                    Some(m) => cyclo_state(m.lcm(&n)),
                    None => State::Opaque(format!("{}(zeta({n})) is not represented", k.label)),
                };
                (Some(false), Some(next))
            }
            Err(e) => return undetermined(e),
        },
        State::LargeCyclo(m) => {
            if m % n == 0 || (m % 2 == 1 && (2 * m) % n == 0) {
                (Some(true), None)
            } else {
                (Some(false), Some(cyclo_state(m.lcm(&n))))
            }
        }
        State::Opaque(reason) => return undetermined(reason.clone()),
    };
    match inside {
        Some(true) => Outcome {
            class: StepClass::Trivial { witness: format!("zeta({n}) is already in the field") },
            zeta_available: Some(true),
            precondition_violated: false,
            next,
        },
        _ => Outcome {
            class: StepClass::Undetermined {
                reason: format!(
                    "adjoins the root of unity zeta({n}); x^{n} - 1 is reducible, so this is not a binomial step (Gauss's construction supplies zeta({n}) by a radical tower, see `resolvent`)"
                ),
            },
            zeta_available: Some(false),
            precondition_violated: false,
            next,
        },
    }
}

fn classify_known(k: &Known, u: &Expr, u_value: Complex64, b: u32, c: &Expr) -> Outcome {
    let radicand = match k.element(c) {
        Ok(r) => r,
        Err(reason) => return undetermined(format!("radicand not in the current field: {reason}")),
    };
    let zeta = match k.has_zeta(b) {
        Ok(z) => z,
        Err(e) => return undetermined(e),
    };
    let roots = match roots_in_field_over(&binomial_over(&k.nf, b, &radicand), &k.nf) {
        Ok(r) => r,
        Err(e) => return undetermined(e.to_string()),
    };
    if roots.is_empty() {
        return Outcome {
            class: StepClass::Radical { b, witness: format!("{c} is not {} in {}", power_phrase(b), k.label) },
            zeta_available: Some(zeta),
            precondition_violated: false,
            next: Some(k.adjoin(u, u_value, b, &radicand)),
        };
    }
    match k.select(&roots, u_value) {
        Ok(Some(el)) => Outcome {
            class: StepClass::Trivial {
                witness: format!("the generator is the field element {} of {}", show_element(&el), k.label),
            },
            zeta_available: Some(zeta),
            precondition_violated: false,
            next: None,
        },
        Ok(None) if !zeta => Outcome {
            class: StepClass::Undetermined {
                reason: format!(
                    "{c} has the {} root {} in {} but the generator is a different root and zeta({b}) is missing",
                    ordinal(b),
                    show_element(&roots[0]),
                    k.label
                ),
            },
            zeta_available: Some(false),
            precondition_violated: true,
            next: Some(State::Opaque("field after a non-binomial step".into())),
        },
        Ok(None) => undetermined("numeric value of the generator matches no exact root"),
        Err(e) => undetermined(e),
    }
}

fn classify_large_cyclo(n: u32, u_value: Complex64, b: u32, c: &Expr) -> Outcome {
    let Some(r) = c.to_rational() else {
        return undetermined(format!(
            "Q(zeta({n})) has degree above {MAX_TRACKED_DEGREE}; only rational radicands are decided there"
        ));
    };
    let zeta = n % b == 0 || b == 2 || (n % 2 == 1 && (2 * n) % b == 0);
    let trivial = |w: String| Outcome {
        class: StepClass::Trivial { witness: w },
        zeta_available: Some(zeta),
        precondition_violated: false,
        next: None,
    };
    let radical = |w: String| Outcome {
        class: StepClass::Radical { b, witness: w },
        zeta_available: Some(zeta),
        precondition_violated: false,
        next: Some(State::Opaque(format!("Q(zeta({n}))({c}) is not represented"))),
    };
    let mut coeffs = vec![BigRational::zero(); b as usize + 1];
    coeffs[0] = -r.clone();
    coeffs[b as usize] = BigRational::one();
    let beta = match rational_roots(&QPoly::new(coeffs)) {
        Ok(v) => v.into_iter().next(),
        Err(e) => return undetermined(e.to_string()),
    };
    if b == 2 && beta.is_none() {
        let Some(d) = squarefree_int(&(r.numer() * r.denom())) else {
            return undetermined("squarefree part of the radicand is out of reach");
        };
        let four = BigInt::from(4);
        let conductor = if (&d % &four + &four) % &four == BigInt::one() { d.abs() } else { &four * d.abs() };
        let m = if n % 2 == 1 { 2 * n } else { n };
        return if (BigInt::from(m) % &conductor).is_zero() {
            trivial(format!("sqrt({d}) lies in Q(zeta({conductor})), a subfield of Q(zeta({n}))"))
        } else {
            radical(format!("the conductor {conductor} of Q(sqrt({d})) does not divide the index of Q(zeta({n}))"))
        };
    }
    match beta {
        None => radical(format!(
            "{r} is not {} in Q, so x^{b} - ({r}) is irreducible and its roots generate non-normal fields, which no cyclotomic field contains",
            power_phrase(b)
        )),
        Some(beta) => {
            let base = Complex64::new(beta.to_f64().unwrap_or(f64::NAN), 0.0);
            let k = (0..b).find(|&k| (base * zeta_c64(b).powu(k) - u_value).norm() < 1e-8 * (1.0 + base.norm()));
            match k {
                Some(0) => trivial(format!("the generator is the rational {beta}")),
                Some(k) if zeta => trivial(format!("the generator is {beta}*zeta({b})^{k}")),
                Some(_) => Outcome {
                    class: StepClass::Undetermined {
                        reason: format!("{r} = ({beta})^{b} but the generator is another root and zeta({b}) is missing"),
                    },
                    zeta_available: Some(false),
                    precondition_violated: true,
                    next: Some(State::Opaque("field after a non-binomial step".into())),
                },
                None => undetermined("numeric value of the generator matches no root"),
            }
        }
    }
}

fn ordinal(b: u32) -> String {
    match b {
        2 => "square".into(),
        3 => "cube".into(),
        _ => format!("{b}th"),
    }
}

fn power_phrase(b: u32) -> String {
    match b {
        2 => "a square".into(),
        3 => "a cube".into(),
        8 | 11 | 18 => format!("an {b}th power"),
        _ => format!("a {b}th power"),
    }
}

/// A field element written as a polynomial in the field generator `y`.
fn show_element(a: &QPoly) -> String {
    let text = a.to_string();
    text.replace('x', "y")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn validate(text: &str) -> TowerReport {
        tower_validate(&TowerDesc::parse(text).unwrap())
    }

    #[test]
    fn square_root_of_two_over_q() {
        let r = validate("base: Q\nroot(2, 2)\n");
        assert!(matches!(r.steps[0].class, StepClass::Radical { b: 2, .. }), "{r}");
        assert_eq!(r.steps[0].field_after, "Q(root(2, 2)) [degree 2]");
    }

    #[test]
    fn i_is_already_in_q_zeta4() {
        let r = validate("base: Q(zeta(4))\nroot(2, -1)\n");
        assert!(matches!(r.steps[0].class, StepClass::Trivial { .. }), "{r}");
    }

    #[test]
    fn cube_root_conjugate_needs_zeta3() {
        let r = validate("base: Q\nroot(3, 2)\nroot(3, 2)*zeta(3)\n");
        assert!(matches!(r.steps[0].class, StepClass::Radical { b: 3, .. }), "{r}");
        assert!(r.steps[1].precondition_violated, "{r}");
        assert_eq!(r.precondition_violations(), vec![2]);
    }

    #[test]
    fn cube_root_found_from_its_square_with_large_denominators() {
        let r = validate("base: Q\nroot(2, 22)\nroot(3, 9/5)^2\nroot(3, 9/5)\n");
        assert!(matches!(r.steps[1].class, StepClass::Radical { b: 3, .. }), "{r}");
        assert!(matches!(r.steps[2].class, StepClass::Trivial { .. }), "{r}");
    }

    #[test]
    fn splitting_field_of_x3_minus_2() {
        let r = validate("base: Q(zeta(3))\nroot(3, 2)\nzeta(3)*root(3, 2)\n");
        assert!(matches!(r.steps[0].class, StepClass::Radical { b: 3, .. }), "{r}");
        assert!(matches!(r.steps[1].class, StepClass::Trivial { .. }), "{r}");
        assert_eq!(r.roots_of_unity_present, vec![3]);
        assert!(r.steps[0].field_after.contains("degree 6"));
    }

    #[test]
    fn nested_radicals_over_a_quadratic_field() {
        let r = validate("base: Q\nroot(2, 2)\nroot(2, 3)\nroot(2, 6)\n");
        assert!(matches!(r.steps[1].class, StepClass::Radical { b: 2, .. }), "{r}");
        assert!(matches!(r.steps[2].class, StepClass::Trivial { .. }), "{r}");
    }

    #[test]
    fn root_of_unity_steps_are_not_flagged() {
        let r = validate("base: Q\nzeta(5)\nzeta(11)*root(11, 2)\n");
        assert!(matches!(r.steps[0].class, StepClass::Undetermined { .. }));
        assert!(!r.steps[0].precondition_violated);
        assert!(matches!(r.steps[1].class, StepClass::Radical { b: 11, .. }), "{r}");
    }

    #[test]
    fn rational_radicands_over_large_cyclotomic_fields() {
        let r = validate("base: Q(zeta(11))\nroot(11, 2)\n");
        assert!(matches!(r.steps[0].class, StepClass::Radical { b: 11, .. }), "{r}");
        let r = validate("base: Q(zeta(11))\nroot(2, -11)\n");
        assert!(matches!(r.steps[0].class, StepClass::Trivial { .. }), "{r}");
        let r = validate("base: Q(zeta(11))\nroot(2, 11)\n");
        assert!(matches!(r.steps[0].class, StepClass::Radical { b: 2, .. }), "{r}");
    }

    #[test]
    fn composite_exponents_are_undetermined() {
        let r = validate("base: Q\nroot(4, 2)\n");
        assert!(matches!(r.steps[0].class, StepClass::Undetermined { .. }));
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_int(&BigInt::from(-12)), Some(BigInt::from(-3)));
        assert_eq!(squarefree_int(&BigInt::from(50)), Some(BigInt::from(2)));
    }
}
