//! A radical tower over `Q` reaching `zeta_p`, following Gauss: first the
//! roots of unity of every smaller prime order and of order `p - 1`, then one
//! `(p-1)`th root per Lagrange resolvent, from which `zeta_p` is the mean.

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;

use super::resolvent::{lagrange_resolvents, ResolventSet, SUPPORTED_PRIMES};
use super::CyclotomicError;
use crate::arith::Field;
use crate::qfactor::modp::is_prime;
use crate::report::Report;
use crate::tower::{BaseField, Expr, TowerDesc};

#[derive(Clone, Debug)]
pub struct GaussTrace {
    pub p: u32,
    pub tower: TowerDesc,
    /// What each step of `tower` adjoins.
    pub purposes: Vec<String>,
    /// `(q, j, s)`: for prime `q`, `rho(omega^[0], eps_j) = zeta(q-1)^s * u` with `u` the step generator.
    pub rotations: Vec<(u32, u32, u32)>,
    /// `zeta_p` written in the generators of the tower.
    pub recovery: Expr,
    pub report: Report,
}

/// Prime factors with multiplicity, ascending.
fn factor_with_multiplicity(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while n > 1 {
        while n % d == 0 {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    out
}

/// Tracks the roots of unity in the field built so far as `Q(zeta_l)`.
struct Available {
    l: u32,
}

impl Available {
    fn contains(&self, n: u32) -> bool {
        self.l % n == 0 || (self.l % 2 == 1 && (2 * self.l) % n == 0)
    }

    fn add(&mut self, n: u32) {
        self.l = self.l.lcm(&n);
    }
}

fn zeta_expr(m: u32) -> Expr {
    match m {
        1 => Expr::int(1),
        2 => Expr::int(-1),
        _ => Expr::zeta(m),
    }
}

fn c64_close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-8 * (1.0 + a.norm())
}

struct Builder {
    steps: Vec<Expr>,
    purposes: Vec<String>,
    rotations: Vec<(u32, u32, u32)>,
    available: Available,
    report: Report,
}

impl Builder {
    fn push(&mut self, u: Expr, purpose: String) {
        self.steps.push(u);
        self.purposes.push(purpose);
    }

    /// Steps giving `zeta_n` from the roots of unity of prime order below it.
    fn roots_of_unity(&mut self, n: u32) {
        let mut m = 1;
        for q in factor_with_multiplicity(n) {
            if !self.available.contains(q * m) {
                self.push(
                    Expr::root(q, zeta_expr(m)),
                    format!("zeta({}) as a {} root of zeta({m})", q * m, ordinal(q)),
                );
                self.available.add(q * m);
            }
            m *= q;
        }
    }

    /// The resolvent steps for one prime `q`; returns the expression for `zeta_q`.
    fn resolvents(&mut self, rs: &ResolventSet) -> Expr {
        let q = rs.p;
        let n = q - 1;
        let chain = factor_with_multiplicity(n);
        let mut terms = Vec::new();
        for j in 1..q {
            if j == n && q > 3 {
                self.push(Expr::int(-1), format!("rho(omega^[0], eps_{j}) = -1 for p = {q} (already rational)"));
                self.rotations.push((q, j, 0));
                terms.push(Expr::int(-1));
                continue;
            }
            if j == n {
                terms.push(Expr::int(-1));
                continue;
            }
            let power = rs.resolvent_power(j);
            let Some(down) = rs.descend(&power) else {
                self.report.push(format!("p = {q}: rho_{j}^{n} lies in Q(zeta({n}))"), false);
                continue;
            };
            let radicand = Expr::from_cyclo_poly(&down, n);
            let u = chain.iter().fold(radicand.clone(), |acc, &b| Expr::root(b, acc));
            let rho = rs.field.to_c64(rs.resolvent(j));
            let eps = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64);
            let s = u.eval_c64().and_then(|v| (0..n).find(|&s| c64_close(rho, eps.powu(s) * v)));
            self.report.push_detail(
                format!("p = {q}: the radicand of step rho_{j} equals rho_{j}^{n}"),
                radicand.eval_c64().is_some_and(|r| c64_close(r, rho.powu(n))),
                format!("{radicand}"),
            );
            self.report.push(format!("p = {q}: rho_{j} is a zeta({n})-multiple of its step generator"), s.is_some());
            let s = s.unwrap_or(0);
            self.rotations.push((q, j, s));
            terms.push(match s {
                0 => u.clone(),
                1 => Expr::Mul(Box::new(zeta_expr(n)), Box::new(u.clone())),
                _ => Expr::Mul(Box::new(zeta_expr(n).pow(s as i64)), Box::new(u.clone())),
            });
            self.push(u, format!("rho(omega^[0], eps_{j}) for p = {q}, a root of exponent {n}"));
        }
        let sum = terms
            .into_iter()
            .reduce(|a, b| match b {
                Expr::Neg(b) => Expr::Sub(Box::new(a), b),
                b => Expr::Add(Box::new(a), Box::new(b)),
            })
            .unwrap_or(Expr::int(0));
        let zeta_q = Expr::Div(Box::new(sum), Box::new(Expr::int(n as i64)));
        let omega = rs.field.to_c64(&rs.omega());
        let k = &rs.field;
        let total = (1..q).fold(k.zero(), |acc, j| k.add(&acc, rs.resolvent(j)));
        let mean = total.scale(&BigRational::new(1.into(), (n as i64).into()));
        self.report.push(format!("p = {q}: omega = (1/{n}) sum_j rho_j exactly"), mean == rs.omega());
        self.report.push(
            format!("p = {q}: the recovery expression evaluates to exp(2 pi i/{q})"),
            zeta_q.eval_c64().is_some_and(|v| c64_close(v, omega)),
        );
        self.available.add(q);
        zeta_q
    }
}

fn ordinal(b: u32) -> String {
    match b {
        2 => "square".into(),
        3 => "cube".into(),
        _ => format!("{b}th"),
    }
}

/// The Gauss tower for `p` in {3, 5, 7, 11}, with exact checks of the
/// resolvent identities that make `zeta_p` lie in its top field.
pub fn gauss_tower_trace(p: u32) -> Result<GaussTrace, CyclotomicError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(CyclotomicError::UnsupportedPrime(p as u64));
    }
    let mut b = Builder {
        steps: Vec::new(),
        purposes: Vec::new(),
        rotations: Vec::new(),
        available: Available { l: 2 },
        report: Report::new(format!("Gauss tower for zeta({p}) over Q")),
    };
    let mut recovery = Expr::int(1);
    for q in (3..=p).filter(|&q| is_prime(q as u64)) {
        b.roots_of_unity(q - 1);
        let rs = lagrange_resolvents(q)?;
        recovery = b.resolvents(&rs);
    }
    b.report.push(format!("zeta({p}) lies in the top field"), b.available.contains(p));
    Ok(GaussTrace {
        p,
        tower: TowerDesc::new(BaseField::Rationals, b.steps),
        purposes: b.purposes,
        rotations: b.rotations,
        recovery,
        report: b.report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_is_one_square_root() {
        let t = gauss_tower_trace(3).unwrap();
        assert_eq!(t.tower.steps, vec![Expr::parse("root(2, -3)").unwrap()]);
        assert!(t.report.all_passed(), "{}", t.report);
    }

    #[test]
    fn p5_has_four_resolvent_steps() {
        let t = gauss_tower_trace(5).unwrap();
        assert!(t.report.all_passed(), "{}", t.report);
        let five: Vec<&String> = t.purposes.iter().filter(|s| s.contains("for p = 5")).collect();
        assert_eq!(five.len(), 4);
        // zeta(3) from p = 3, then zeta(4) = root(2, -1).
        assert_eq!(t.tower.steps[0].to_string(), "root(2, -3)");
        assert_eq!(t.tower.steps[1].to_string(), "root(2, -1)");
    }

    #[test]
    fn p11_reaches_zeta11() {
        let t = gauss_tower_trace(11).unwrap();
        assert!(t.report.all_passed(), "{}", t.report);
        let v = t.recovery.eval_c64().unwrap();
        assert!((v - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 11.0)).norm() < 1e-8);
    }

    #[test]
    fn unsupported() {
        assert!(gauss_tower_trace(13).is_err());
        assert!(gauss_tower_trace(9).is_err());
    }
}
