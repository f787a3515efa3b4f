//! Radical tower descriptions: parsing and printing, per-step classification,
//! the conjugate-closed doubling `c c-bar, c`, a structural conjugate-closure
//! test, and the conjugation pattern of the roots of `x^p - c`.

pub mod expr;
pub mod pattern;
pub mod validate;

use std::fmt;

use num_traits::Signed;

pub use expr::{step_shape, ConjError, Expr, ExprParseError, Monomial};
pub use pattern::{conjugation_pattern_check, ConjugationPatternReport, PatternCase, PatternError, PATTERN_PRIMES};
pub use validate::{tower_validate, StepClass, StepReport, TowerReport};

/// The field a tower starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Cyclotomic(u32),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Cyclotomic(n) => write!(f, "Q(zeta({n}))"),
        }
    }
}

/// A base field and the generators adjoined one at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerDesc {
    pub base: BaseField,
    pub steps: Vec<Expr>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct TowerParseError {
    pub line: usize,
    pub message: String,
}

impl TowerDesc {
    pub fn new(base: BaseField, steps: Vec<Expr>) -> Self {
        Self { base, steps }
    }

    /// Parses the text format: a `base: Q` or `base: Q(zeta(n))` line, then one
    /// generator per line. Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, TowerParseError> {
        let mut base = None;
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| TowerParseError { line: i + 1, message };
            if base.is_none() {
                let rest = line
                    .strip_prefix("base:")
                    .ok_or_else(|| err("expected 'base: Q' or 'base: Q(zeta(n))'".into()))?
                    .trim();
                base = Some(parse_base(rest).ok_or_else(|| err(format!("unknown base field '{rest}'")))?);
                continue;
            }
            steps.push(Expr::parse(line).map_err(|e| err(e.to_string()))?);
        }
        let base = base.ok_or(TowerParseError { line: 0, message: "missing base line".into() })?;
        Ok(Self { base, steps })
    }
}

fn parse_base(s: &str) -> Option<BaseField> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" {
        return Some(BaseField::Rationals);
    }
    let n: u32 = compact.strip_prefix("Q(zeta(")?.strip_suffix("))")?.parse().ok()?;
    (1..=expr::MAX_INDEX).contains(&n).then_some(BaseField::Cyclotomic(n))
}

impl fmt::Display for TowerDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base)?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Outcome of the structural conjugate-closure test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// One entry per step: `Ok(reason)` or `Err(reason)`.
    pub steps: Vec<Result<String, String>>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.steps.iter().all(|s| s.is_ok())
    }

    /// 1-based indices of the steps that fail.
    pub fn failing_steps(&self) -> Vec<usize> {
        self.steps.iter().enumerate().filter(|(_, s)| s.is_err()).map(|(i, _)| i + 1).collect()
    }
}

fn same_value(a: &Expr, b: &Expr) -> bool {
    if a == b {
        return true;
    }
    match (Monomial::from_expr(a), Monomial::from_expr(b)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}

/// A root of unity `zeta_m^e` (in lowest terms) equal to the expression, as `m`.
fn root_of_unity_order(e: &Expr) -> Option<u32> {
    let m = Monomial::from_expr(e)?;
    (m.radicals.is_empty() && m.coeff.abs() == num_traits::One::one()).then(|| {
        if m.coeff.is_negative() {
            // -zeta_L^e lies in Q(zeta_lcm(L, 2)).
            num_integer::Integer::lcm(&m.zeta_order, &2)
        } else {
            m.zeta_order
        }
    })
}

/// Whether `zeta_m` lies in the field generated by the base and `earlier`,
/// judged structurally from the cyclotomic generators present.
fn zeta_available(m: u32, base: BaseField, earlier: &[Expr]) -> bool {
    let contains = |n: u32| n % m == 0 || (n % 2 == 1 && (2 * n) % m == 0);
    if m <= 2 {
        return true;
    }
    let mut orders: Vec<u32> = earlier.iter().filter_map(root_of_unity_order).collect();
    if let BaseField::Cyclotomic(n) = base {
        orders.push(n);
    }
    let l = orders.iter().fold(1u64, |acc, &n| num_integer::Integer::lcm(&acc, &(n as u64)));
    l <= u32::MAX as u64 && contains(l as u32)
}

/// Structural test that every field of the tower is closed under complex
/// conjugation. A step `c` passes when `c` is real, a root of unity, has its
/// conjugate among the generators up to its own position, when `c * conj(c)`
/// is rational or an earlier generator (then `conj(c) = (c conj(c)) / c`), or
/// when `conj(c) / c` is a root of unity already available.
pub fn conjugate_closure(desc: &TowerDesc) -> ClosureReport {
    let mut steps = Vec::new();
    for (i, c) in desc.steps.iter().enumerate() {
        steps.push(closure_step(desc, i, c));
    }
    ClosureReport { steps }
}

fn closure_step(desc: &TowerDesc, i: usize, c: &Expr) -> Result<String, String> {
    let earlier = &desc.steps[..i];
    if c.is_real() == Some(true) {
        return Ok("real generator".into());
    }
    if root_of_unity_order(c).is_some() {
        return Ok("root of unity: its conjugate is its inverse".into());
    }
    if let Ok(cc) = c.conj() {
        if let Some(j) = desc.steps[..=i].iter().position(|d| same_value(d, &cc)) {
            return Ok(format!("conjugate is step {}", j + 1));
        }
    }
    let norm = Expr::Mul(Box::new(c.clone()), Box::new(Expr::conj_of(c.clone())));
    if let Some(m) = Monomial::from_expr(&norm) {
        if m.is_rational() {
            return Ok("c * conj(c) is rational".into());
        }
        let target = m.to_expr();
        if let Some(j) = earlier.iter().position(|d| same_value(d, &target) || *d == norm) {
            return Ok(format!("c * conj(c) is step {}", j + 1));
        }
    } else if let Some(j) = earlier.iter().position(|d| *d == norm) {
        return Ok(format!("c * conj(c) is step {}", j + 1));
    }
    let ratio = Expr::Div(Box::new(Expr::conj_of(c.clone())), Box::new(c.clone()));
    if let Some(m) = root_of_unity_order(&ratio) {
        if zeta_available(m, desc.base, earlier) {
            return Ok(format!("conj(c) / c is a power of zeta({m}), already available"));
        }
    }
    Err(format!("conj({c}) is not shown to lie in the field"))
}

/// The doubled tower with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledTower {
    pub tower: TowerDesc,
    /// Per original step: the inserted generator `c * conj(c)` is rational,
    /// so that step is trivially `(1,1)`.
    pub trivial_first_halves: Vec<bool>,
    pub closure: ClosureReport,
}

impl DoubledTower {
    pub fn conjugate_closed(&self) -> bool {
        self.closure.closed()
    }
}

/// `c * conj(c)` simplified when the generator is a monomial.
pub fn norm_generator(c: &Expr) -> Expr {
    let formal = Expr::Mul(Box::new(c.clone()), Box::new(Expr::conj_of(c.clone())));
    if let Some(m) = Monomial::from_expr(&formal) {
        return m.to_expr();
    }
    match c.conj() {
        Ok(cc) => Expr::Mul(Box::new(c.clone()), Box::new(cc)),
        Err(_) => formal,
    }
}

/// Replaces each generator `c` by the pair `c * conj(c)`, `c`.
pub fn tower_double(desc: &TowerDesc) -> DoubledTower {
    let mut steps = Vec::with_capacity(2 * desc.steps.len());
    let mut trivial = Vec::with_capacity(desc.steps.len());
    for c in &desc.steps {
        let n = norm_generator(c);
        trivial.push(n.to_rational().is_some());
        steps.push(n);
        steps.push(c.clone());
    }
    let tower = TowerDesc { base: desc.base, steps };
    let closure = conjugate_closure(&tower);
    DoubledTower { tower, trivial_first_halves: trivial, closure }
}

impl fmt::Display for DoubledTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tower)?;
        for (i, t) in self.trivial_first_halves.iter().enumerate() {
            if *t {
                writeln!(f, "# step {} is rational: trivially (1,1)", 2 * i + 1)?;
            }
        }
        writeln!(f, "# conjugate-closed: {}", if self.conjugate_closed() { "yes" } else { "no" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(text: &str) -> TowerDesc {
        TowerDesc::parse(text).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let text = "base: Q(zeta(5))\nzeta(11)*root(11, 2)\nroot(2, 3)\n";
        let t = tower(text);
        assert_eq!(t.base, BaseField::Cyclotomic(5));
        assert_eq!(t.to_string(), text);
        let with_comments = "# a comment\n\nbase:Q\n  root(3, 2)  \n";
        assert_eq!(tower(with_comments).to_string(), "base: Q\nroot(3, 2)\n");
        assert_eq!(TowerDesc::parse("base: R\n").unwrap_err().line, 1);
        assert_eq!(TowerDesc::parse("base: Q\nroot(2, \n").unwrap_err().line, 2);
    }

    #[test]
    fn doubling_examples() {
        let d = tower_double(&tower("base: Q\nzeta(11)*root(11, 2)\n"));
        assert_eq!(d.tower.steps.len(), 2);
        assert_eq!(d.tower.steps[0].to_string(), "root(11, 2)^2");
        assert!(d.conjugate_closed());

        let d = tower_double(&tower("base: Q\nroot(2, 2)\n"));
        assert_eq!(d.tower.steps[0], Expr::int(2));
        assert_eq!(d.trivial_first_halves, vec![true]);

        let d = tower_double(&tower("base: Q\nroot(2, 2)\nzeta(3)\n"));
        let shown: Vec<String> = d.tower.steps.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["2", "root(2, 2)", "1", "zeta(3)"]);
    }

    #[test]
    fn naive_conjugate_adjunction_is_not_closed() {
        let naive = tower("base: Q\nzeta(5)\nzeta(11)*root(11, 2)\nconj(zeta(11)*root(11, 2))\n");
        let report = conjugate_closure(&naive);
        assert_eq!(report.failing_steps(), vec![2]);
        let doubled = tower_double(&tower("base: Q\nzeta(5)\nzeta(11)*root(11, 2)\n"));
        assert!(doubled.conjugate_closed(), "{:?}", doubled.closure);
    }

    #[test]
    fn closure_via_available_roots_of_unity() {
        let t = tower("base: Q(zeta(11))\nzeta(11)*root(11, 2)\n");
        assert!(conjugate_closure(&t).closed());
        let t = tower("base: Q\nroot(2, -1)\n");
        assert!(conjugate_closure(&t).closed());
    }
}
