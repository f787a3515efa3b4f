//! Roots of polynomials inside a number field, by numeric hint and exact check.
//!
//! Write a root as `z = sum_t c_t y^t`. Under the `i`th embedding `y -> a_i`,
//! `z` maps to some root of the embedded polynomial, so choosing one root per
//! embedding determines the `c_t` through the inverse Vandermonde matrix of
//! the `a_i`. Each `c_t` has denominator dividing `D = |disc(g~)| * L`, where
//! `g~` is the integral rescaling of the modulus and `L` clears denominators
//! of the coefficients so that `L z` is an algebraic integer. Rounding
//! `D c_t` therefore recovers a candidate exactly, and only candidates that
//! pass an exact substitution are returned.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Embeddings, NumberField, NumberFieldError};
use crate::arith::{Field, Poly, QPoly};
use crate::qfactor::{rational_roots, squarefree_part};
use crate::realroots::numeric::{MAX_PRECISION, START_PRECISION};
use crate::realroots::{complex_roots, numeric_roots_at, CFix};

/// Maximum number of leaves explored by the embedding-assignment search.
pub const SEARCH_LIMIT: u64 = 2_000_000;
/// Largest field degree handled.
pub const MAX_FIELD_DEGREE: usize = 8;

/// One possible image of the root under an embedding.
#[derive(Clone, Debug)]
struct Candidate {
    value: CFix,
    /// Identity of the root of a rational polynomial, and of its conjugate.
    id: usize,
    conj_id: usize,
}

/// Every `z` in the field with `f(z) = 0`, for `f` with rational coefficients.
/// Sorted by representative.
pub fn roots_in_field(f: &QPoly, k: &NumberField) -> Result<Vec<QPoly>, NumberFieldError> {
    if f.is_zero() {
        return Err(NumberFieldError::Precondition("zero polynomial".into()));
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let f = squarefree_part(f);
    if k.degree() == 1 {
        return Ok(rational_roots(&f)?.iter().map(|r| k.rational(r)).collect());
    }
    let lifted = crate::arith::map_coeffs(&f, |c| k.rational(c));
    let n = f.degree().expect("nonconstant");
    search_by_precision(k, &lifted, n, |prec, emb| {
        let Some(nr) = numeric_roots_at(&f, prec)? else { return Ok(None) };
        // Pair partners from the reconciled layout: real roots, then (z, conj z).
        let conj_of = |j: usize| {
            if j < nr.real_count {
                j
            } else if (j - nr.real_count) % 2 == 0 {
                j + 1
            } else {
                j - 1
            }
        };
        let per_slot = emb
            .independent_slots()
            .into_iter()
            .map(|i| {
                nr.roots
                    .iter()
                    .enumerate()
                    // Real embeddings send z to real roots.
                    .filter(|(j, _)| i >= emb.real_count || *j < nr.real_count)
                    .map(|(j, v)| Candidate { value: v.clone(), id: j, conj_id: conj_of(j) })
                    .collect()
            })
            .collect();
        Ok(Some((per_slot, true)))
    })
}

/// Every root in the field of a polynomial whose coefficients lie in the field.
pub fn roots_in_field_over(f: &Poly<QPoly>, k: &NumberField) -> Result<Vec<QPoly>, NumberFieldError> {
    let fk = k.field();
    let n = f.degree().ok_or_else(|| NumberFieldError::Precondition("zero polynomial".into()))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let f = crate::arith::monic(fk, f);
    let squarefree = {
        let g = crate::arith::gcd(fk, &f, &crate::arith::derivative(fk, &f));
        crate::arith::divmod(fk, &f, &g).expect("gcd is nonzero").0
    };
    if k.degree() == 1 {
        let over_q = crate::arith::map_coeffs(&squarefree, |c: &QPoly| c.coeff(0));
        return Ok(rational_roots(&over_q)?.iter().map(|r| k.rational(r)).collect());
    }
    let n = squarefree.degree().expect("nonconstant");
    search_by_precision(k, &squarefree, n, |prec, emb| {
        let tol = -(prec as i64) / 4;
        let mut per_slot = Vec::new();
        for i in emb.independent_slots() {
            let coeffs: Vec<CFix> = squarefree.coeffs().iter().map(|c| emb.image(c, i)).collect();
            let Some(found) = complex_roots(&coeffs) else { return Ok(None) };
            let cands = found
                .into_iter()
                .filter(|v| i >= emb.real_count || v.im_below_pow2(tol))
                .map(|v| if i < emb.real_count { v.real_part() } else { v })
                .map(|value| Candidate { value, id: 0, conj_id: 0 })
                .collect();
            per_slot.push(cands);
        }
        Ok(Some((per_slot, false)))
    })
}

/// Some `b` in the field with `b^p = c`, or `None` if `c` is not a `p`th power.
/// When several exist the largest representative is returned.
pub fn is_pth_power(c: &QPoly, p: u32, k: &NumberField) -> Result<Option<QPoly>, NumberFieldError> {
    let c = k.element(c);
    if c.is_zero() {
        return Ok(Some(c));
    }
    let roots = if c.degree() == Some(0) {
        let mut coeffs = vec![BigRational::zero(); p as usize + 1];
        coeffs[0] = -c.coeff(0);
        coeffs[p as usize] = BigRational::one();
        roots_in_field(&QPoly::new(coeffs), k)?
    } else {
        let mut coeffs = vec![QPoly::zero(); p as usize + 1];
        coeffs[0] = k.field().neg(&c);
        coeffs[p as usize] = k.field().one();
        roots_in_field_over(&Poly::new(coeffs), k)?
    };
    Ok(roots.into_iter().next_back())
}

/// Denominator bound `|disc(g~)| * L` for roots of monic `f` over the field.
fn denominator_bound(k: &NumberField, f: &Poly<QPoly>) -> BigInt {
    let (disc, s) = k.integral_discriminant();
    let mut l = BigInt::one();
    for a in f.coeffs() {
        let mut spow = BigInt::one();
        for t in 0..k.degree() {
            // Coordinate on (s y)^t is a_t / s^t.
            let c = a.coeff(t) / BigRational::from_integer(spow.clone());
            l = l.lcm(c.denom());
            spow *= &s;
        }
    }
    disc * l
}

type SlotCandidates = Option<(Vec<Vec<Candidate>>, bool)>;

fn search_by_precision(
    k: &NumberField,
    f: &Poly<QPoly>,
    n: usize,
    mut slots: impl FnMut(u32, &Embeddings) -> Result<SlotCandidates, NumberFieldError>,
) -> Result<Vec<QPoly>, NumberFieldError> {
    if k.degree() > MAX_FIELD_DEGREE {
        return Err(NumberFieldError::Undetermined {
            reason: format!("field degree {} exceeds {}", k.degree(), MAX_FIELD_DEGREE),
        });
    }
    let f = crate::arith::monic(k.field(), f);
    let dc = denominator_bound(k, &f);
    let mut prec = START_PRECISION;
    let mut best: Vec<QPoly> = Vec::new();
    loop {
        if let Some(emb) = k.embeddings(prec)? {
            if let Some((per_slot, balanced)) = slots(prec, &emb)? {
                let leaves: f64 = per_slot.iter().map(|c| c.len() as f64).product();
                if leaves > SEARCH_LIMIT as f64 {
                    return Err(NumberFieldError::Undetermined {
                        reason: format!("assignment search of {leaves:.0} leaves exceeds {SEARCH_LIMIT}"),
                    });
                }
                let mut s = Search::new(k, &f, &emb, &per_slot, balanced, &dc, n);
                s.run();
                if s.found.len() == n || (s.resolved && !s.ambiguous) {
                    return Ok(sorted(s.found));
                }
                best = s.found;
            }
        }
        if prec >= MAX_PRECISION {
            return Err(NumberFieldError::Undetermined {
                reason: format!(
                    "root reconstruction still ambiguous at {MAX_PRECISION} bits ({} roots verified)",
                    best.len()
                ),
            });
        }
        prec *= 2;
    }
}

fn sorted(mut v: Vec<QPoly>) -> Vec<QPoly> {
    v.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    v.dedup();
    v
}

struct Search<'a> {
    k: &'a NumberField,
    f: &'a Poly<QPoly>,
    /// Contribution of each candidate to every coordinate, per slot.
    contrib: Vec<Vec<Vec<CFix>>>,
    per_slot: &'a [Vec<Candidate>],
    paired: Vec<bool>,
    balanced: bool,
    dc: &'a BigInt,
    d: usize,
    n: usize,
    prec: u32,
    /// Rounding distances at or above `2^accept_bits` are rejected.
    accept_bits: f64,
    found: Vec<QPoly>,
    ambiguous: bool,
    /// The error budget is small enough for rounding to decide every leaf.
    resolved: bool,
}

impl<'a> Search<'a> {
    fn new(
        k: &'a NumberField,
        f: &'a Poly<QPoly>,
        emb: &'a Embeddings,
        per_slot: &'a [Vec<Candidate>],
        balanced: bool,
        dc: &'a BigInt,
        n: usize,
    ) -> Self {
        let d = k.degree();
        let slots = emb.independent_slots();
        let paired: Vec<bool> = slots.iter().map(|&i| i >= emb.real_count).collect();
        let contrib = slots
            .iter()
            .zip(per_slot)
            .map(|(&i, cands)| {
                cands
                    .iter()
                    .map(|c| {
                        (0..d)
                            .map(|t| {
                                let mut v = &emb.inverse[t][i] * &c.value;
                                if i >= emb.real_count {
                                    v = &v + &(&emb.inverse[t][i + 1] * &c.value.conj());
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        // Coordinates inherit the root error (about 2^(-prec/2) after the
        // residual check), amplified by the inverse Vandermonde and by D.
        let inv_bits = emb.inverse.iter().flatten().map(CFix::log2_abs).fold(0.0, f64::max);
        let val_bits = per_slot.iter().flatten().map(|c| c.value.log2_abs()).fold(0.0, f64::max);
        let err_bits = -(emb.precision as f64) / 2.0 + dc.bits() as f64 + inv_bits + val_bits + (d as f64).log2() + 2.0;
        Self {
            k,
            f,
            contrib,
            per_slot,
            paired,
            balanced,
            dc,
            d,
            n,
            prec: emb.precision,
            accept_bits: (err_bits + 4.0).min(-3.0),
            found: Vec::new(),
            ambiguous: false,
            resolved: err_bits + 4.0 <= -3.0,
        }
    }

    fn run(&mut self) {
        let mut acc = vec![CFix::zero(self.prec); self.d];
        let mut choice = Vec::with_capacity(self.per_slot.len());
        self.dfs(0, &mut acc, &mut choice);
    }

    fn done(&self) -> bool {
        self.found.len() >= self.n
    }

    fn dfs(&mut self, slot: usize, acc: &mut Vec<CFix>, choice: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        if slot == self.per_slot.len() {
            self.leaf(acc, choice);
            return;
        }
        for c in 0..self.per_slot[slot].len() {
            let saved = acc.clone();
            for (t, a) in acc.iter_mut().enumerate() {
                *a = &*a + &self.contrib[slot][c][t];
            }
            choice.push(c);
            self.dfs(slot + 1, acc, choice);
            choice.pop();
            *acc = saved;
            if self.done() {
                return;
            }
        }
    }

    fn balanced_ok(&self, choice: &[usize]) -> bool {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (slot, &c) in choice.iter().enumerate() {
            let cand = &self.per_slot[slot][c];
            *counts.entry(cand.id).or_default() += 1;
            if self.paired[slot] {
                *counts.entry(cand.conj_id).or_default() += 1;
            }
        }
        // The images of z are its conjugates, each hit equally often.
        let first = *counts.values().next().expect("nonempty");
        counts.len() * first == self.d && counts.values().all(|&m| m == first)
    }

    fn leaf(&mut self, acc: &[CFix], choice: &[usize]) {
        if self.balanced && !self.balanced_ok(choice) {
            return;
        }
        let mut coords = Vec::with_capacity(self.d);
        for c in acc {
            let (re, im, dist) = c.mul_int(self.dc).round_gaussian();
            if !im.is_zero() || dist >= self.accept_bits {
                return;
            }
            coords.push(BigRational::new(re, self.dc.clone()));
        }
        let z = QPoly::new(coords);
        if self.found.contains(&z) {
            return;
        }
        if self.k.eval_over(self.f, &z).is_zero() {
            self.found.push(z);
        } else {
            // A near-integer coincidence within the error budget: retry with more bits.
            self.ambiguous = true;
        }
    }
}
