//! Simple number fields `Q[y]/(g)`: arithmetic, roots of polynomials inside
//! the field, `p`th-power tests, and complete decomposition of prime-degree
//! polynomials over a normal field of the same degree.

pub mod decompose;
pub mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{resultant, Extension, Field, Poly, QPoly, Rationals};
use crate::qfactor::{self, Irreducibility, IrreducibilityWitness, QFactorError};
use crate::realroots::{numeric_roots_at, CFix, RealRootsError};

pub use decompose::{complete_decomposition, Decomposition, DecompositionCheck, DecompositionResult};
pub use roots::{is_pth_power, roots_in_field, roots_in_field_over};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberFieldError {
    #[error("modulus is constant")]
    ConstantModulus,
    #[error("modulus is reducible over Q; factor {factor}")]
    Reducible { factor: QPoly },
    #[error("zero element has no inverse")]
    ZeroElement,
    #[error("undetermined: {reason}")]
    Undetermined { reason: String },
    #[error("hypothesis violated: {found} of {expected} conjugates of the field generator lie in the field")]
    HypothesisViolated { found: usize, expected: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Factor(#[from] QFactorError),
    #[error(transparent)]
    RealRoots(#[from] RealRootsError),
}

/// `Q[y]/(g)` with `g` monic and irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberField {
    ext: Extension<Rationals>,
    witness: IrreducibilityWitness,
}

impl NumberField {
    /// Builds the field after checking `g` is irreducible; `g` is made monic.
    pub fn new(g: &QPoly) -> Result<Self, NumberFieldError> {
        if g.degree().is_none_or(|d| d == 0) {
            return Err(NumberFieldError::ConstantModulus);
        }
        let g = g.monic();
        match qfactor::irreducibility(&g)? {
            Irreducibility::Irreducible(witness) => Ok(Self { ext: Extension::new(Rationals, g), witness }),
            Irreducibility::Reducible { factor } => Err(NumberFieldError::Reducible { factor }),
        }
    }

    pub fn field(&self) -> &Extension<Rationals> {
        &self.ext
    }

    pub fn modulus(&self) -> &QPoly {
        self.ext.modulus()
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    pub fn witness(&self) -> &IrreducibilityWitness {
        &self.witness
    }

    pub fn generator(&self) -> QPoly {
        self.ext.generator()
    }

    pub fn element(&self, rep: &QPoly) -> QPoly {
        self.ext.reduce(rep)
    }

    pub fn rational(&self, q: &BigRational) -> QPoly {
        self.ext.from_rational(q)
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ext.mul(a, b)
    }

    pub fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.ext.add(a, b)
    }

    pub fn pow(&self, a: &QPoly, e: u64) -> QPoly {
        self.ext.pow(a, e)
    }

    pub fn invert(&self, a: &QPoly) -> Result<QPoly, NumberFieldError> {
        self.ext.inv(&self.element(a)).ok_or(NumberFieldError::ZeroElement)
    }

    /// Image of an element under the field map `y -> image`.
    pub fn substitute(&self, a: &QPoly, image: &QPoly) -> QPoly {
        self.ext.eval_base_poly(a, image)
    }

    /// Evaluates a rational polynomial at a field element.
    pub fn eval(&self, f: &QPoly, at: &QPoly) -> QPoly {
        self.ext.eval_base_poly(f, at)
    }

    /// Evaluates a polynomial with field coefficients at a field element.
    pub fn eval_over(&self, f: &Poly<QPoly>, at: &QPoly) -> QPoly {
        crate::arith::eval(&self.ext, f, at)
    }

    /// `|disc(g~)|` for the integral rescaling `g~(x) = s^d g(x/s)`, and `s`.
    pub fn integral_discriminant(&self) -> (BigInt, BigInt) {
        let g = self.modulus();
        let d = self.degree();
        let s = g.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let sq = BigRational::from_integer(s.clone());
        let scaled: Vec<BigRational> =
            g.coeffs().iter().enumerate().map(|(k, c)| c * num_traits::pow(sq.clone(), d - k)).collect();
        let gt = QPoly::new(scaled);
        let disc = resultant(&gt, &gt.derivative());
        let disc = disc.to_integer();
        (if disc < BigInt::zero() { -disc } else { disc }, s)
    }

    /// Numeric embeddings at exactly `prec` bits, or `None` if the root
    /// finder fails its checks at that precision.
    pub fn embeddings(&self, prec: u32) -> Result<Option<Embeddings>, NumberFieldError> {
        let Some(nr) = numeric_roots_at(self.modulus(), prec)? else { return Ok(None) };
        let d = self.degree();
        let mut vand = vec![vec![CFix::zero(prec); d]; d];
        for (i, a) in nr.roots.iter().enumerate() {
            let mut pw = CFix::one(prec);
            for t in 0..d {
                vand[i][t] = pw.clone();
                pw = &pw * a;
            }
        }
        let Some(inverse) = invert_matrix(vand) else { return Ok(None) };
        Ok(Some(Embeddings { precision: prec, points: nr.roots, real_count: nr.real_count, inverse }))
    }
}

/// Numeric images of the generator under every complex embedding.
#[derive(Clone, Debug)]
pub struct Embeddings {
    pub precision: u32,
    /// Real images first, then conjugate pairs `(a, conj a)`.
    pub points: Vec<CFix>,
    pub real_count: usize,
    /// Inverse Vandermonde: coordinate `t` of an element is
    /// `sum_i inverse[t][i] * (image under embedding i)`.
    pub inverse: Vec<Vec<CFix>>,
}

impl Embeddings {
    pub fn image(&self, a: &QPoly, i: usize) -> CFix {
        crate::realroots::eval_rational(a, &self.points[i])
    }

    /// Slots that determine all embeddings: real ones and the upper member of each pair.
    pub fn independent_slots(&self) -> Vec<usize> {
        (0..self.real_count).chain((self.real_count..self.points.len()).step_by(2)).collect()
    }
}

/// Gauss-Jordan inversion with partial pivoting; `None` if singular.
fn invert_matrix(mut a: Vec<Vec<CFix>>) -> Option<Vec<Vec<CFix>>> {
    let n = a.len();
    let prec = a[0][0].prec;
    let mut inv: Vec<Vec<CFix>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { CFix::one(prec) } else { CFix::zero(prec) }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).max_by(|&x, &y| a[x][col].log2_abs().total_cmp(&a[y][col].log2_abs()))?;
        if a[pivot][col].is_zero() {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in (0..n).filter(|&r| r != col) {
            let factor = a[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Some(inv)
}
