//! Real roots: Sturm chains for exact counting, bisection for isolation,
//! and a numeric complex root finder used only as a hint source.

pub mod fixed;
pub mod numeric;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::QPoly;

pub use fixed::CFix;
pub use numeric::{complex_roots, eval_rational, nth_roots, numeric_roots, numeric_roots_at, NumericRoots};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealRootsError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial has no roots to approximate")]
    Constant,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("empty interval: lower end must be below upper end")]
    EmptyInterval,
    #[error("root approximation did not converge up to {max_precision} bits")]
    NoConvergence { max_precision: u32 },
}

/// A point of the extended real line with rational finite values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for Bound {
    fn from(q: BigRational) -> Self {
        Bound::Finite(q)
    }
}

/// Signed-remainder sequence of `f` and `f'`, each member scaled to a
/// leading coefficient of `1` or `-1`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(f: &QPoly) -> Result<Self, RealRootsError> {
        if f.is_zero() {
            return Err(RealRootsError::ZeroPolynomial);
        }
        let normalize = |g: QPoly| {
            let lc = g.lead().expect("nonzero").abs();
            g.scale(&lc.recip())
        };
        let mut polys = vec![normalize(f.clone())];
        if f.degree() == Some(0) {
            return Ok(Self { polys });
        }
        polys.push(normalize(f.derivative()));
        loop {
            let k = polys.len();
            let r = polys[k - 2].rem(&polys[k - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            polys.push(normalize(-&r));
        }
        if polys.last().and_then(QPoly::degree) != Some(0) {
            return Err(RealRootsError::NotSquarefree);
        }
        Ok(Self { polys })
    }

    pub fn polys(&self) -> &[QPoly] {
        &self.polys
    }

    fn sign_at(g: &QPoly, at: &Bound) -> i8 {
        match at {
            Bound::Finite(x) => {
                let v = g.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Bound::PosInf | Bound::NegInf => {
                let s: i8 = if g.lead().expect("nonzero").is_positive() { 1 } else { -1 };
                let odd = g.degree().expect("nonzero") % 2 == 1;
                if matches!(at, Bound::NegInf) && odd {
                    -s
                } else {
                    s
                }
            }
        }
    }

    /// Sign variations of the chain at a point, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for g in &self.polys {
            let s = Self::sign_at(g, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize, RealRootsError> {
        if lo >= hi {
            return Err(RealRootsError::EmptyInterval);
        }
        Ok(self.variations(lo) - self.variations(hi))
    }
}

/// Distinct real roots of a squarefree `f` in `(lo, hi]`.
pub fn sturm_count(f: &QPoly, lo: &Bound, hi: &Bound) -> Result<usize, RealRootsError> {
    SturmChain::new(f)?.count(lo, hi)
}

/// Number of distinct real roots of a squarefree `f`.
pub fn real_root_count(f: &QPoly) -> Result<usize, RealRootsError> {
    sturm_count(f, &Bound::NegInf, &Bound::PosInf)
}

/// An open interval `(lo, hi)` holding exactly one real root; neither end is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Width below which isolation stops refining: `2^-32`.
pub fn isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32u32)
}

/// Integer `B` with every root strictly inside `(-B, B)`.
pub fn cauchy_bound(f: &QPoly) -> BigInt {
    let lc = f.lead().expect("nonzero").abs();
    let n = f.degree().expect("nonzero");
    let m = f.coeffs()[..n].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(BigRational::zero);
    (m + BigRational::one()).floor().to_integer() + BigInt::one()
}

/// A split point inside `(lo, hi)` that is not a root of `f`.
fn split_point(f: &QPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    // At most deg(f) candidates can be roots.
    for k in 2u32.. {
        for num in [1, k - 1] {
            let t = lo + &w * BigRational::new(BigInt::from(num), BigInt::from(k));
            if !f.eval(&t).is_zero() {
                return t;
            }
        }
    }
    unreachable!()
}

/// One isolating interval per real root of a squarefree `f`, increasing,
/// each narrower than `2^-32` with a sign change of `f` across it.
pub fn isolate_real_roots(f: &QPoly) -> Result<Vec<IsolatingInterval>, RealRootsError> {
    isolate_real_roots_to(f, &isolation_width())
}

pub fn isolate_real_roots_to(f: &QPoly, width: &BigRational) -> Result<Vec<IsolatingInterval>, RealRootsError> {
    let chain = SturmChain::new(f)?;
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let b = BigRational::from_integer(cauchy_bound(f));
    let total = chain.count(&Bound::NegInf, &Bound::PosInf)?;
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-b.clone(), b, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 && &(&hi - &lo) < width {
            out.push(IsolatingInterval { lo, hi });
            continue;
        }
        let mid = split_point(f, &lo, &hi);
        let left = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()))?;
        // Upper half first so the stack pops intervals left to right.
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    Ok(out)
}

/// Bisects an isolating interval of `f` until narrower than `width`.
pub fn refine(f: &QPoly, iv: &IsolatingInterval, width: &BigRational) -> IsolatingInterval {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let lo_sign = f.eval(&lo).is_positive();
    while &(&hi - &lo) >= width {
        let mid = split_point(f, &lo, &hi);
        if f.eval(&mid).is_positive() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolatingInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, q};

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    fn whole(f: &QPoly) -> usize {
        real_root_count(f).unwrap()
    }

    #[test]
    fn counts_over_the_line() {
        assert_eq!(whole(&p(&[-2, 0, 1])), 2);
        assert_eq!(whole(&p(&[1, 0, 1])), 0);
        assert_eq!(whole(&p(&[-2, -4, 0, 0, 0, 1])), 3);
        assert_eq!(whole(&p(&[1, 3, -3, -4, 1, 1])), 5);
    }

    #[test]
    fn half_open_counting() {
        let f = p(&[-1, 0, 1]);
        let c = |a: i64, b: i64| sturm_count(&f, &int(a).into(), &int(b).into()).unwrap();
        assert_eq!(c(-1, 1), 1);
        assert_eq!(c(-2, -1), 1);
        assert_eq!(c(1, 2), 0);
        assert_eq!(sturm_count(&f, &int(1).into(), &int(1).into()), Err(RealRootsError::EmptyInterval));
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(SturmChain::new(&p(&[1, -2, 1])).unwrap_err(), RealRootsError::NotSquarefree);
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        let (below, above) = (q(1414213, 1000000), q(1414214, 1000000));
        assert!(ivs[1].lo > below && ivs[1].hi < above);
        assert!(ivs[0].hi < int(0));
        assert_eq!(isolate_real_roots(&p(&[-2, 0, 0, 0, 0, 1])).unwrap().len(), 1);
        let g = p(&[1, 3, -3, -4, 1, 1]);
        let ivs = isolate_real_roots(&g).unwrap();
        assert_eq!(ivs.len(), 5);
        for iv in &ivs {
            assert!(iv.lo > int(-2) && iv.hi < int(2));
            assert!(iv.width() < isolation_width());
            assert!((g.eval(&iv.lo) * g.eval(&iv.hi)).is_negative());
        }
    }

    #[test]
    fn endpoints_avoid_rational_roots() {
        // Roots 0, 1/2 and -1 sit on natural bisection points.
        let f = &(&p(&[0, 1]) * &p(&[-1, 2])) * &p(&[1, 1]);
        for iv in isolate_real_roots(&f).unwrap() {
            assert!((f.eval(&iv.lo) * f.eval(&iv.hi)).is_negative());
        }
    }

    #[test]
    fn refinement_keeps_the_root() {
        let f = p(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f).unwrap();
        let iv = &ivs[1];
        let fine = refine(&f, iv, &q(1, 1 << 40));
        assert!(fine.lo >= iv.lo && fine.hi <= iv.hi);
        assert_eq!(sturm_count(&f, &fine.lo.clone().into(), &fine.hi.clone().into()).unwrap(), 1);
    }
}
