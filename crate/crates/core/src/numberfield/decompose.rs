//! Complete decomposition of a prime-degree polynomial over a normal field
//! of the same prime degree: one root in the field forces all of them.

use num_rational::BigRational;

use super::{roots_in_field, NumberField, NumberFieldError};
use crate::arith::{Field, Poly, QPoly};
use crate::qfactor::{self, modp::is_prime, Irreducibility};
use crate::realroots::numeric::MAX_PRECISION;
use crate::realroots::{numeric_roots, CFix};

/// One named verification step and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionResult {
    /// `y_1 = y, y_2, ..., y_p`: the roots of the modulus inside the field.
    pub conjugates: Vec<QPoly>,
    /// `w_t` with `x_1 = sum_t w_t y^t`.
    pub w: Vec<BigRational>,
    /// `x_j = sum_t w_t y_j^t`, reduced to the power basis of `y`.
    pub roots: Vec<QPoly>,
    /// `x - x_j` as polynomials over the field.
    pub linear_factors: Vec<Poly<QPoly>>,
    /// `R(x) = prod_j (x - b_j)` with `b_j = -x_j`, a rational polynomial.
    pub distinctness_poly: Option<QPoly>,
    pub checks: Vec<DecompositionCheck>,
}

impl DecompositionResult {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `w` table: row `j` holds the power-basis coordinates of `x_j`.
    pub fn table(&self, degree: usize) -> Vec<Vec<BigRational>> {
        self.roots.iter().map(|x| (0..degree).map(|t| x.coeff(t)).collect()).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decomposition {
    /// `f` has no root in the field.
    IrreducibleOverField,
    Split(DecompositionResult),
}

/// Decomposes `f` over `k` when `f` and the modulus share a prime degree `p`
/// and the modulus has all `p` roots in `k`.
pub fn complete_decomposition(f: &QPoly, k: &NumberField) -> Result<Decomposition, NumberFieldError> {
    let p = f.degree().unwrap_or(0);
    if !is_prime(p as u64) {
        return Err(NumberFieldError::Precondition(format!("deg f = {p} is not prime")));
    }
    if k.degree() != p {
        return Err(NumberFieldError::Precondition(format!("field degree {} differs from deg f = {p}", k.degree())));
    }
    if let Irreducibility::Reducible { factor } = qfactor::irreducibility(f)? {
        return Err(NumberFieldError::Precondition(format!("f is reducible over Q (factor {factor})")));
    }
    let g = k.modulus().clone();
    let mut conjugates = roots_in_field(&g, k)?;
    if conjugates.len() != p {
        return Err(NumberFieldError::HypothesisViolated { found: conjugates.len(), expected: p });
    }
    let y = k.generator();
    conjugates.retain(|c| *c != y);
    conjugates.insert(0, y.clone());

    let f = f.monic();
    let in_field = roots_in_field(&f, k)?;
    if in_field.is_empty() {
        return Ok(Decomposition::IrreducibleOverField);
    }
    let x1 = if in_field.contains(&y) { y.clone() } else { in_field[0].clone() };
    let w: Vec<BigRational> = (0..p).map(|t| x1.coeff(t)).collect();
    let roots: Vec<QPoly> = conjugates.iter().map(|yj| k.substitute(&x1, yj)).collect();

    let fk = k.field();
    let linear_factors: Vec<Poly<QPoly>> = roots.iter().map(|x| Poly::new(vec![fk.neg(x), fk.one()])).collect();
    let product = crate::arith::product(fk, linear_factors.iter());
    let lifted = crate::arith::map_coeffs(&f, |c| k.rational(c));

    let mut checks = Vec::new();
    checks.push(DecompositionCheck { name: "modulus splits in the field", passed: true });
    checks.push(DecompositionCheck {
        name: "each x_j is a root of f",
        passed: roots.iter().all(|x| k.eval(&f, x).is_zero()),
    });
    checks.push(DecompositionCheck { name: "product of linear factors equals f", passed: product == lifted });
    let distinct = (0..p).all(|i| (i + 1..p).all(|j| roots[i] != roots[j]));
    checks.push(DecompositionCheck { name: "roots pairwise distinct", passed: distinct });

    // b_j = -x_j is the non-rational coefficient of x - x_j.
    let r_factors: Vec<Poly<QPoly>> = roots.iter().map(|x| Poly::new(vec![x.clone(), fk.one()])).collect();
    let r = crate::arith::product(fk, r_factors.iter());
    let rational = r.coeffs().iter().all(|c| c.degree().is_none_or(|d| d == 0));
    checks.push(DecompositionCheck { name: "R(x) has rational coefficients", passed: rational });
    let distinctness_poly = rational.then(|| QPoly::new(r.coeffs().iter().map(|c| c.coeff(0)).collect()));
    let (squarefree, irreducible) = match &distinctness_poly {
        Some(rq) => (rq.is_squarefree(), matches!(qfactor::irreducibility(rq), Ok(Irreducibility::Irreducible(_)))),
        None => (false, false),
    };
    checks.push(DecompositionCheck { name: "R(x) squarefree", passed: squarefree });
    checks.push(DecompositionCheck { name: "R(x) irreducible over Q", passed: irreducible });
    checks.push(DecompositionCheck {
        name: "numeric images match the roots of f at every embedding",
        passed: numeric_consistency(&f, k, &roots),
    });

    Ok(Decomposition::Split(DecompositionResult { conjugates, w, roots, linear_factors, distinctness_poly, checks }))
}

/// At every embedding of the field the images of the `x_j` are the roots of `f`.
fn numeric_consistency(f: &QPoly, k: &NumberField, roots: &[QPoly]) -> bool {
    let Ok(froots) = numeric_roots(f, 128) else { return false };
    let prec = froots.precision;
    let emb = (prec..=MAX_PRECISION).step_by(prec as usize).find_map(|pr| k.embeddings(pr).ok().flatten());
    let Some(emb) = emb else { return false };
    let target: Vec<CFix> = froots.roots.iter().map(|z| z.with_prec(emb.precision)).collect();
    let tol = -(emb.precision as i64) / 4;
    (0..k.degree()).all(|i| {
        let mut unused = target.clone();
        roots.iter().all(|x| {
            let v = emb.image(x, i);
            match unused.iter().position(|t| (&v - t).abs_below_pow2(tol)) {
                Some(pos) => {
                    unused.remove(pos);
                    true
                }
                None => false,
            }
        })
    })
}
