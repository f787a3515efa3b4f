//! Symbolic radical expressions: rationals, `+ - * /`, integer powers,
//! principal `k`th roots `root(k, e)`, roots of unity `zeta(n)` and `conj(e)`.
//!
//! Grammar:
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' (uint | '(' '-' uint ')'))?
//! atom  := uint | 'zeta(' uint ')' | 'root(' uint ',' expr ')' | 'conj(' expr ')' | '(' expr ')'
//! ```
//! `root(k, e)` is the principal branch: argument in `(-pi/k, pi/k]`, with
//! negative reals taking argument `pi/k`. `zeta(n)` is `exp(2 pi i / n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Field, QPoly};
use crate::cyclotomic::{euler_phi, CycloField};

/// Largest `k` in `root(k, e)` and `n` in `zeta(n)`.
pub const MAX_INDEX: u32 = 1000;
/// Largest cyclotomic degree used to decide expressions exactly.
pub const MAX_EXACT_CYCLO_DEGREE: u64 = 128;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    /// Nonnegative integer literal.
    Int(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Root(u32, Box<Expr>),
    Zeta(u32),
    Conj(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ExprParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl Expr {
    pub fn int(n: i64) -> Self {
        let e = Expr::Int(BigInt::from(n.unsigned_abs()));
        if n < 0 {
            Expr::Neg(Box::new(e))
        } else {
            e
        }
    }

    pub fn rational(q: &BigRational) -> Self {
        let num = Expr::Int(q.numer().abs());
        let e = if q.denom().is_one() { num } else { Expr::Div(Box::new(num), Box::new(Expr::Int(q.denom().clone()))) };
        if q.is_negative() {
            Expr::Neg(Box::new(e))
        } else {
            e
        }
    }

    pub fn zeta(n: u32) -> Self {
        Expr::Zeta(n)
    }

    pub fn root(k: u32, e: Expr) -> Self {
        Expr::Root(k, Box::new(e))
    }

    pub fn conj_of(e: Expr) -> Self {
        Expr::Conj(Box::new(e))
    }

    pub fn pow(self, e: i64) -> Self {
        Expr::Pow(Box::new(self), e)
    }

    pub fn parse(text: &str) -> Result<Self, ExprParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
        }
        Ok(e)
    }

    /// A polynomial in `zeta(n)` with rational coefficients, lowest power first.
    pub fn from_cyclo_poly(a: &QPoly, n: u32) -> Self {
        let mut terms: Vec<(bool, Expr)> = Vec::new();
        for (k, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let z = match k {
                0 => None,
                1 => Some(Expr::Zeta(n)),
                _ => Some(Expr::Zeta(n).pow(k as i64)),
            };
            let term = match z {
                None => Expr::rational(&mag),
                Some(z) if mag.is_one() => z,
                Some(z) => Expr::Mul(Box::new(Expr::rational(&mag)), Box::new(z)),
            };
            terms.push((c.is_negative(), term));
        }
        let mut iter = terms.into_iter();
        let Some((neg, first)) = iter.next() else { return Expr::int(0) };
        let mut acc = if neg { Expr::Neg(Box::new(first)) } else { first };
        for (neg, t) in iter {
            acc = if neg { Expr::Sub(Box::new(acc), Box::new(t)) } else { Expr::Add(Box::new(acc), Box::new(t)) };
        }
        acc
    }

    /// Numeric value with principal branches; `None` on division by zero.
    pub fn eval_c64(&self) -> Option<Complex64> {
        Some(match self {
            Expr::Int(n) => Complex64::new(n.to_f64()?, 0.0),
            Expr::Neg(a) => -a.eval_c64()?,
            Expr::Add(a, b) => a.eval_c64()? + b.eval_c64()?,
            Expr::Sub(a, b) => a.eval_c64()? - b.eval_c64()?,
            Expr::Mul(a, b) => a.eval_c64()? * b.eval_c64()?,
            Expr::Div(a, b) => {
                let d = b.eval_c64()?;
                if d.norm() == 0.0 {
                    return None;
                }
                a.eval_c64()? / d
            }
            Expr::Pow(a, e) => {
                let v = a.eval_c64()?;
                if *e < 0 && v.norm() == 0.0 {
                    return None;
                }
                v.powi(i32::try_from(*e).ok()?)
            }
            Expr::Root(k, a) => principal_root(a.eval_c64()?, *k),
            Expr::Zeta(n) => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / *n as f64),
            Expr::Conj(a) => a.eval_c64()?.conj(),
        })
    }

    /// Lcm of the `zeta` orders, or `None` if the expression contains a root.
    fn cyclo_order(&self) -> Option<u64> {
        match self {
            Expr::Int(_) => Some(1),
            Expr::Zeta(n) => Some(*n as u64),
            Expr::Root(..) => None,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Conj(a) => a.cyclo_order(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                Some(a.cyclo_order()?.lcm(&b.cyclo_order()?))
            }
        }
    }

    /// The exact value in a cyclotomic field, when the expression is root-free
    /// and the field has degree at most [`MAX_EXACT_CYCLO_DEGREE`].
    pub fn to_cyclo(&self) -> Option<(CycloField, QPoly)> {
        let n = self.cyclo_order()?;
        if n > MAX_INDEX as u64 || euler_phi(n) > MAX_EXACT_CYCLO_DEGREE {
            return None;
        }
        let k = CycloField::new(n as u32).ok()?;
        let v = self.cyclo_value(&k)?;
        Some((k, v))
    }

    fn cyclo_value(&self, k: &CycloField) -> Option<QPoly> {
        Some(match self {
            Expr::Int(n) => k.from_rational(&BigRational::from_integer(n.clone())),
            Expr::Zeta(m) => k.zeta_pow((k.index() / m) as i64),
            Expr::Root(..) => return None,
            Expr::Neg(a) => k.neg(&a.cyclo_value(k)?),
            Expr::Conj(a) => k.conj(&a.cyclo_value(k)?),
            Expr::Add(a, b) => k.add(&a.cyclo_value(k)?, &b.cyclo_value(k)?),
            Expr::Sub(a, b) => k.sub(&a.cyclo_value(k)?, &b.cyclo_value(k)?),
            Expr::Mul(a, b) => k.mul(&a.cyclo_value(k)?, &b.cyclo_value(k)?),
            Expr::Div(a, b) => k.div(&a.cyclo_value(k)?, &b.cyclo_value(k)?)?,
            Expr::Pow(a, e) => {
                let v = a.cyclo_value(k)?;
                let v = if *e < 0 { k.inv(&v)? } else { v };
                k.pow(&v, e.unsigned_abs())
            }
        })
    }

    /// The value as a rational number, when it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if let Some(m) = Monomial::from_expr(self) {
            if m.is_rational() {
                return Some(m.coeff);
            }
        }
        let (k, v) = self.to_cyclo()?;
        k.is_rational(&v).then(|| v.coeff(0))
    }

    /// Structurally a positive real number: built from positive integers by
    /// `+ * /`, powers and real roots.
    pub fn is_structurally_positive(&self) -> bool {
        match self {
            Expr::Int(n) => n.is_positive(),
            Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.is_structurally_positive() && b.is_structurally_positive()
            }
            Expr::Pow(a, _) | Expr::Root(_, a) | Expr::Conj(a) => a.is_structurally_positive(),
            _ => false,
        }
    }

    /// Whether the value is real, decided structurally or exactly.
    /// `None` when neither route decides it.
    pub fn is_real(&self) -> Option<bool> {
        if self.is_structurally_positive() {
            return Some(true);
        }
        if let Some((k, v)) = self.to_cyclo() {
            return Some(k.is_real(&v));
        }
        if let Some(m) = Monomial::from_expr(self) {
            return Some(m.is_real());
        }
        match self {
            Expr::Int(_) => Some(true),
            Expr::Zeta(n) => Some(*n <= 2),
            Expr::Neg(a) | Expr::Conj(a) => a.is_real(),
            Expr::Pow(a, _) => a.is_real().filter(|&r| r),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                (a.is_real()? && b.is_real()?).then_some(true)
            }
            Expr::Root(k, a) if k % 2 == 1 => a.is_real().filter(|&r| r),
            Expr::Root(..) => None,
        }
    }

    /// Complex conjugate as an expression. Radicands that are not known to
    /// be positive reals are handled only when they are exactly cyclotomic.
    pub fn conj(&self) -> Result<Expr, ConjError> {
        Ok(match self {
            Expr::Int(_) => self.clone(),
            Expr::Zeta(1) | Expr::Zeta(2) => self.clone(),
            Expr::Zeta(n) => Expr::Zeta(*n).pow(-1),
            Expr::Pow(a, e) if matches!(**a, Expr::Zeta(_)) => {
                let Expr::Zeta(n) = **a else { unreachable!() };
                if n <= 2 {
                    self.clone()
                } else if *e == -1 {
                    Expr::Zeta(n)
                } else {
                    Expr::Zeta(n).pow(-e)
                }
            }
            Expr::Conj(a) => (**a).clone(),
            Expr::Neg(a) => Expr::Neg(Box::new(a.conj()?)),
            Expr::Add(a, b) => Expr::Add(Box::new(a.conj()?), Box::new(b.conj()?)),
            Expr::Sub(a, b) => Expr::Sub(Box::new(a.conj()?), Box::new(b.conj()?)),
            Expr::Mul(a, b) => Expr::Mul(Box::new(a.conj()?), Box::new(b.conj()?)),
            Expr::Div(a, b) => Expr::Div(Box::new(a.conj()?), Box::new(b.conj()?)),
            Expr::Pow(a, e) => Expr::Pow(Box::new(a.conj()?), *e),
            Expr::Root(k, a) => {
                if a.is_structurally_positive() {
                    return Ok(self.clone());
                }
                let Some((field, v)) = a.to_cyclo() else {
                    return Err(ConjError(format!(
                        "conj({self}) needs a branch choice: the radicand is not known to be a positive real"
                    )));
                };
                if v.is_zero() {
                    return Ok(self.clone());
                }
                if field.is_real(&v) {
                    let x = field.to_c64(&v).re;
                    if x.abs() < 1e-9 {
                        return Err(ConjError(format!("sign of the real radicand {a} is not resolved")));
                    }
                    if x > 0.0 {
                        self.clone()
                    } else {
                        Expr::Mul(Box::new(self.clone()), Box::new(Expr::Zeta(*k).pow(-1)))
                    }
                } else {
                    Expr::Root(*k, Box::new(a.conj()?))
                }
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { '*' } else { '/' })?;
                b.write_at(f, 3)
            }
            Expr::Pow(a, e) => {
                a.write_at(f, 5)?;
                if *e < 0 {
                    write!(f, "^({e})")
                } else {
                    write!(f, "^{e}")
                }
            }
            Expr::Root(k, a) => write!(f, "root({k}, {a})"),
            Expr::Zeta(n) => write!(f, "zeta({n})"),
            Expr::Conj(a) => write!(f, "conj({a})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl std::str::FromStr for Expr {
    type Err = ExprParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Expr::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("undetermined: {0}")]
pub struct ConjError(pub String);

/// Principal `k`th root; values within rounding of the negative real axis
/// take the branch of argument `pi / k`.
pub fn principal_root(v: Complex64, k: u32) -> Complex64 {
    let r = v.norm();
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let arg = if v.re < 0.0 && v.im.abs() <= 1e-13 * r { std::f64::consts::PI } else { v.arg() };
    Complex64::from_polar(r.powf(1.0 / k as f64), arg / k as f64)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ExprParseError {
        ExprParseError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.error(format!("expected '{}', found '{}'", c as char, found as char))),
                None => Err(self.error(format!("expected '{}', found end of input", c as char))),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprParseError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = if self.eat(b'(') {
            let neg = self.eat(b'-');
            let n = self.small_uint()? as i64;
            self.expect(b')')?;
            if neg {
                -n
            } else {
                n
            }
        } else {
            self.small_uint()? as i64
        };
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn uint(&mut self) -> Result<BigInt, ExprParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small_uint(&mut self) -> Result<u32, ExprParseError> {
        let start = self.pos;
        let n = self.uint()?;
        n.to_u32()
            .filter(|&v| v <= 1_000_000)
            .ok_or_else(|| ExprParseError { position: start, message: format!("integer {n} is too large here") })
    }

    fn index(&mut self, what: &str) -> Result<u32, ExprParseError> {
        self.skip_ws();
        let start = self.pos;
        let n = self.small_uint()?;
        if n == 0 || n > MAX_INDEX {
            return Err(ExprParseError {
                position: start,
                message: format!("{what} must be between 1 and {MAX_INDEX}"),
            });
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<Expr, ExprParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.uint()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match name {
                    "zeta" => {
                        self.expect(b'(')?;
                        let n = self.index("zeta order")?;
                        self.expect(b')')?;
                        Ok(Expr::Zeta(n))
                    }
                    "root" => {
                        self.expect(b'(')?;
                        let k = self.index("root index")?;
                        self.expect(b',')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Root(k, Box::new(e)))
                    }
                    "conj" => {
                        self.expect(b'(')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Conj(Box::new(e)))
                    }
                    _ => Err(ExprParseError { position: start, message: format!("unknown name '{name}'") }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Normal form `c * zeta_L^e * prod root(k, a)^n` with `c` rational, each `a`
/// a positive rational and `0 < n < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigRational,
    pub zeta_order: u32,
    pub zeta_exp: u32,
    pub radicals: BTreeMap<(u32, BigRational), u32>,
}

impl Monomial {
    pub fn rational(c: BigRational) -> Self {
        Self { coeff: c, zeta_order: 1, zeta_exp: 0, radicals: BTreeMap::new() }.normalized()
    }

    fn zeta(order: u32, exp: i64) -> Self {
        let e = exp.rem_euclid(order as i64) as u32;
        Self { coeff: BigRational::one(), zeta_order: order, zeta_exp: e, radicals: BTreeMap::new() }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() {
            return Self { coeff: BigRational::zero(), zeta_order: 1, zeta_exp: 0, radicals: BTreeMap::new() };
        }
        let g = (self.zeta_order as u64).gcd(&(self.zeta_exp as u64)) as u32;
        if self.zeta_exp == 0 {
            self.zeta_order = 1;
        } else {
            self.zeta_order /= g;
            self.zeta_exp /= g;
        }
        if self.zeta_order == 2 {
            self.coeff = -self.coeff;
            self.zeta_order = 1;
            self.zeta_exp = 0;
        }
        let mut radicals = BTreeMap::new();
        for ((k, a), n) in std::mem::take(&mut self.radicals) {
            if k == 1 || a.is_one() {
                self.coeff *= num_traits::pow(a, n as usize);
                continue;
            }
            let whole = n / k;
            if whole > 0 {
                self.coeff *= num_traits::pow(a.clone(), whole as usize);
            }
            if n % k != 0 {
                radicals.insert((k, a), n % k);
            }
        }
        self.radicals = radicals;
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = (self.zeta_order as u64).lcm(&(other.zeta_order as u64)) as u32;
        let e = (self.zeta_exp as u64 * (l / self.zeta_order) as u64
            + other.zeta_exp as u64 * (l / other.zeta_order) as u64)
            % l as u64;
        let mut radicals = self.radicals.clone();
        for (key, n) in &other.radicals {
            *radicals.entry(key.clone()).or_insert(0) += n;
        }
        Self { coeff: &self.coeff * &other.coeff, zeta_order: l, zeta_exp: e as u32, radicals }.normalized()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.coeff.is_zero() {
            return None;
        }
        let mut coeff = self.coeff.recip();
        let mut radicals = BTreeMap::new();
        for ((k, a), n) in &self.radicals {
            // root(k, a)^(-n) = root(k, a)^(k - n) / a
            coeff /= a;
            radicals.insert((*k, a.clone()), k - n);
        }
        let zeta_exp = (self.zeta_order - self.zeta_exp) % self.zeta_order;
        Some(Self { coeff, zeta_order: self.zeta_order, zeta_exp, radicals }.normalized())
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        if e.unsigned_abs() > 10_000 {
            return None;
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Monomial::rational(BigRational::one());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    pub fn conj(&self) -> Self {
        let zeta_exp = (self.zeta_order - self.zeta_exp) % self.zeta_order;
        Self { zeta_exp, ..self.clone() }.normalized()
    }

    pub fn is_rational(&self) -> bool {
        self.zeta_order == 1 && self.radicals.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.coeff.is_zero() || self.zeta_order == 1
    }

    /// Smallest `b` with `m^b` rational.
    pub fn order(&self) -> u32 {
        self.radicals
            .iter()
            .map(|((k, _), n)| k / (*k as u64).gcd(&(*n as u64)) as u32)
            .fold(self.zeta_order_mod_sign(), |acc, d| (acc as u64).lcm(&(d as u64)) as u32)
    }

    /// Smallest `b` with `zeta^b = +-1`.
    fn zeta_order_mod_sign(&self) -> u32 {
        if self.zeta_order % 2 == 0 {
            self.zeta_order / 2
        } else {
            self.zeta_order
        }
    }

    /// `m^b` as a rational; requires `order() | b`.
    pub fn rational_power(&self, b: u32) -> Option<BigRational> {
        if self.coeff.is_zero() {
            return Some(BigRational::zero());
        }
        if b == 0 || b % self.order() != 0 {
            return None;
        }
        let mut acc = num_traits::pow(self.coeff.clone(), b as usize);
        if self.zeta_order % 2 == 0 {
            // zeta_n^(e b) with n/2 | b is (-1)^(e b / (n/2)).
            let half = (self.zeta_order / 2) as u64;
            if (self.zeta_exp as u64 * b as u64 / half) % 2 == 1 {
                acc = -acc;
            }
        }
        for ((k, a), n) in &self.radicals {
            acc *= num_traits::pow(a.clone(), (*n as usize * b as usize) / *k as usize);
        }
        Some(acc)
    }

    pub fn from_expr(e: &Expr) -> Option<Self> {
        Some(match e {
            Expr::Int(n) => Monomial::rational(BigRational::from_integer(n.clone())),
            Expr::Neg(a) => {
                let mut m = Monomial::from_expr(a)?;
                m.coeff = -m.coeff;
                m
            }
            Expr::Mul(a, b) => Monomial::from_expr(a)?.mul(&Monomial::from_expr(b)?),
            Expr::Div(a, b) => Monomial::from_expr(a)?.mul(&Monomial::from_expr(b)?.inv()?),
            Expr::Pow(a, k) => Monomial::from_expr(a)?.pow(*k)?,
            Expr::Zeta(n) => Monomial::zeta(*n, 1),
            Expr::Conj(a) => Monomial::from_expr(a)?.conj(),
            Expr::Root(k, a) => {
                let inner = Monomial::from_expr(a)?;
                if !inner.is_rational() {
                    return None;
                }
                let c = inner.coeff;
                if c.is_zero() {
                    return Some(Monomial::rational(c));
                }
                let mut radicals = BTreeMap::new();
                radicals.insert((*k, c.abs()), 1);
                let m = Self { coeff: BigRational::one(), zeta_order: 1, zeta_exp: 0, radicals }.normalized();
                if c.is_negative() {
                    // root(k, -a) = root(k, a) * exp(i pi / k)
                    m.mul(&Monomial::zeta(2 * k, 1))
                } else {
                    m
                }
            }
            Expr::Add(..) | Expr::Sub(..) => return None,
        })
    }

    pub fn to_expr(&self) -> Expr {
        let mut factors: Vec<Expr> = Vec::new();
        let mag = self.coeff.abs();
        if !mag.is_one() || (self.zeta_order == 1 && self.radicals.is_empty()) {
            factors.push(Expr::rational(&mag));
        }
        if self.zeta_order > 1 {
            let z = Expr::Zeta(self.zeta_order);
            factors.push(if self.zeta_exp == 1 { z } else { z.pow(self.zeta_exp as i64) });
        }
        for ((k, a), n) in &self.radicals {
            let r = Expr::root(*k, Expr::rational(a));
            factors.push(if *n == 1 { r } else { r.pow(*n as i64) });
        }
        let mut iter = factors.into_iter();
        let first = iter.next().expect("at least one factor");
        let prod = iter.fold(first, |acc, f| Expr::Mul(Box::new(acc), Box::new(f)));
        if self.coeff.is_negative() {
            Expr::Neg(Box::new(prod))
        } else {
            prod
        }
    }
}

/// Exponent `b` and radicand `c = u^b` of a generator `u`, read from its shape:
/// `root(k, c)` gives `(k, c)`, `zeta(n)` gives `(n, 1)`, and a monomial gives
/// its order and rational power.
pub fn step_shape(u: &Expr) -> Option<(u32, Expr)> {
    match u {
        Expr::Root(k, c) => Some((*k, (**c).clone())),
        Expr::Zeta(n) => Some((*n, Expr::int(1))),
        _ => {
            let m = Monomial::from_expr(u)?;
            let b = m.order();
            Some((b, Expr::rational(&m.rational_power(b)?)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, q};

    fn e(s: &str) -> Expr {
        Expr::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in [
            "root(2, 2)",
            "zeta(11)*root(11, 2)",
            "conj(zeta(11)*root(11, 2))",
            "zeta(5)^(-1)",
            "-1",
            "1/2 - zeta(3)^2",
            "root(3, 1 + root(2, 5))",
            "(1 + 2)*3",
            "-(2*3)",
            "2 - -3",
            "(-2)^3",
        ] {
            assert_eq!(e(s).to_string(), s, "{s}");
        }
        assert_eq!(e("1+(2+3)").to_string(), "1 + (2 + 3)");
        assert_eq!(e("  zeta( 4 )^ 2 ").to_string(), "zeta(4)^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Expr::parse("root(2, 2").unwrap_err();
        assert_eq!(err.position, 9);
        assert_eq!(Expr::parse("2 $ 3").unwrap_err().position, 2);
        assert!(Expr::parse("zeta(0)").is_err());
        assert!(Expr::parse("sqrt(2)").is_err());
        assert!(Expr::parse("2^").is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(e("zeta(5)").conj().unwrap(), e("zeta(5)^(-1)"));
        assert_eq!(e("zeta(5)^(-1)").conj().unwrap(), e("zeta(5)"));
        assert_eq!(e("root(3, 2)").conj().unwrap(), e("root(3, 2)"));
        assert_eq!(e("conj(root(2, 1 - zeta(3)))").conj().unwrap(), e("root(2, 1 - zeta(3))"));
        assert_eq!(e("root(2, -3)").conj().unwrap(), e("root(2, -3)*zeta(2)^(-1)"));
        assert_eq!(e("root(2, zeta(3))").conj().unwrap(), e("root(2, zeta(3)^(-1))"));
        assert!(e("root(2, 1 - root(2, 2))").conj().is_err());
        for s in ["root(2, -3)", "root(2, zeta(3))", "zeta(7)^3 + 1/2"] {
            let a = e(s);
            let diff = a.conj().unwrap().eval_c64().unwrap() - a.eval_c64().unwrap().conj();
            assert!(diff.norm() < 1e-12, "{s}");
        }
    }

    #[test]
    fn monomial_products() {
        let c = e("zeta(11)*root(11, 2)");
        let m = Monomial::from_expr(&Expr::Mul(Box::new(c.clone()), Box::new(Expr::conj_of(c)))).unwrap();
        assert_eq!(m.to_expr().to_string(), "root(11, 2)^2");
        let s = Monomial::from_expr(&e("root(2, 2)*root(2, 2)")).unwrap();
        assert_eq!(s.to_expr(), Expr::int(2));
        let neg = Monomial::from_expr(&e("root(3, -8)")).unwrap();
        assert_eq!(neg.rational_power(3), Some(int(-8)));
        assert_eq!(Monomial::from_expr(&e("1/root(2, 2)")).unwrap().to_expr().to_string(), "1/2*root(2, 2)");
        assert_eq!(Monomial::from_expr(&e("zeta(6)^3")).unwrap().coeff, int(-1));
        assert_eq!(Monomial::from_expr(&e("zeta(6)^3")).unwrap().rational_power(1), Some(int(-1)));
        assert_eq!(Monomial::from_expr(&e("zeta(2)")).unwrap().rational_power(1), Some(int(-1)));
        assert_eq!(Monomial::rational(q(3, 4)).to_expr().to_string(), "3/4");
    }

    #[test]
    fn shapes() {
        assert_eq!(step_shape(&e("root(2, 2)")), Some((2, e("2"))));
        assert_eq!(step_shape(&e("zeta(5)")), Some((5, e("1"))));
        assert_eq!(step_shape(&e("zeta(3)*root(3, 2)")), Some((3, e("2"))));
        assert_eq!(step_shape(&e("root(11, 2)^2")), Some((11, e("4"))));
        assert_eq!(step_shape(&e("-1")), Some((1, e("-1"))));
        assert_eq!(step_shape(&e("1 + root(2, 2)")), None);
    }

    #[test]
    fn exact_cyclotomic_values() {
        let (k, v) = e("zeta(3) + zeta(3)^2").to_cyclo().unwrap();
        assert_eq!(v, k.from_int(-1));
        assert_eq!(e("zeta(4)^2").to_rational(), Some(int(-1)));
        assert_eq!(e("(zeta(5) + conj(zeta(5)))").is_real(), Some(true));
        assert_eq!(e("zeta(5)").is_real(), Some(false));
        assert_eq!(e("root(3, 2)").is_real(), Some(true));
    }
}
