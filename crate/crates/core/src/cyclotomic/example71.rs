//! The quintic `x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1 = prod_j (x - theta^j - theta^-j)`,
//! `theta = zeta_11`, and the tower that splits it once conjugates are added naively.

use crate::arith::{map_coeffs, product, Extension, Field, Poly, QPoly};
use crate::qfactor::factor_over_q;
use crate::report::Report;
use crate::tower::{conjugate_closure, tower_double, tower_validate, BaseField, Expr, TowerDesc};

use super::CycloField;

/// Coefficients of the quintic, constant term first.
pub const QUINTIC: [i64; 6] = [1, 3, -3, -4, 1, 1];

/// `Q, zeta_5, u = zeta_11 2^(1/11)`, then `conj(u)` appended after `u`.
pub fn naive_tower() -> TowerDesc {
    let u = Expr::parse("zeta(11)*root(11, 2)").expect("valid expression");
    TowerDesc::new(BaseField::Rationals, vec![Expr::zeta(5), u.clone(), Expr::conj_of(u)])
}

/// The same tower before any conjugate is added.
pub fn undoubled_tower() -> TowerDesc {
    let u = Expr::parse("zeta(11)*root(11, 2)").expect("valid expression");
    TowerDesc::new(BaseField::Rationals, vec![Expr::zeta(5), u])
}

/// Exact checks of the `zeta_11` example.
pub fn example71_verify() -> Report {
    let mut report = Report::new("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1 and zeta(11)");
    let k = CycloField::new(11).expect("11 is in range");
    let f = QPoly::from_i64s(&QUINTIC);

    // c_j = theta^j + theta^-j
    let c: Vec<QPoly> = (0..=5).map(|j| k.add(&k.zeta_pow(j), &k.zeta_pow(-j))).collect();
    let linear: Vec<Poly<QPoly>> = (1..=5).map(|j| Poly::new(vec![k.neg(&c[j]), k.one()])).collect();
    let expanded = product(&k, linear.iter());
    let rational = expanded.coeffs().iter().all(|a| k.is_rational(a));
    let over_q = map_coeffs(&expanded, |a: &QPoly| a.coeff(0));
    report.push_detail(
        "prod_(j=1..5) (x - theta^j - theta^(-j)) has rational coefficients equal to the quintic",
        rational && over_q == f,
        over_q.to_string(),
    );

    match factor_over_q(&f) {
        Ok(fac) => report.push("the quintic is irreducible over Q", fac.is_irreducible()),
        Err(e) => report.push_detail("the quintic is irreducible over Q", false, e.to_string()),
    }

    // In Q(theta)(alpha), alpha^11 = 2: t = theta alpha and its partner theta^-1 alpha.
    let mut m = vec![QPoly::zero(); 12];
    m[0] = k.from_int(-2);
    m[11] = k.one();
    let ext = Extension::new(k.clone(), Poly::new(m));
    let alpha = ext.generator();
    let t = ext.mul(&ext.embed(&k.zeta()), &alpha);
    let partner = ext.mul(&ext.embed(&k.zeta_pow(-1)), &alpha);
    let r = ext.div(&t, &partner);
    let theta2 = ext.embed(&k.zeta_pow(2));
    report.push("(theta*alpha)/(theta^(-1)*alpha) = theta^2", r.as_ref() == Some(&theta2));
    let r6 = r.map(|r| ext.pow(&r, 6));
    report.push("r^6 = theta^12 = theta for r = theta^2", r6 == Some(ext.embed(&k.zeta())));

    let double_angle = k.sub(&k.mul(&c[1], &c[1]), &k.from_int(2));
    let recurrence = (2..5).all(|j| c[j + 1] == k.sub(&k.mul(&c[1], &c[j]), &c[j - 1]));
    let roots = (1..=5).all(|j| {
        let lifted = map_coeffs(&f, |a| k.from_rational(a));
        crate::arith::eval(&k, &lifted, &c[j]).is_zero()
    });
    let distinct = (1..=5).all(|a| (a + 1..=5).all(|b| c[a] != c[b]));
    report.push(
        "theta + theta^(-1) generates the roots: c_2 = c_1^2 - 2, c_(j+1) = c_1 c_j - c_(j-1), f(c_j) = 0, all distinct",
        double_angle == c[2] && recurrence && roots && distinct,
    );

    let undoubled = tower_validate(&undoubled_tower());
    let step = &undoubled.steps[1];
    report.push_detail(
        "zeta(11) is not in Q(zeta(5)) before the step zeta(11)*root(11, 2)",
        step.zeta_available == Some(false),
        step.class.to_string(),
    );
    let naive = conjugate_closure(&naive_tower());
    report.push_detail(
        "the naive tower with the conjugate appended is not conjugate-closed",
        !naive.closed(),
        format!("failing steps {:?}", naive.failing_steps()),
    );
    let doubled = tower_double(&undoubled_tower());
    report.push_detail(
        "the doubled tower is conjugate-closed",
        doubled.conjugate_closed(),
        doubled.tower.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let r = example71_verify();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn naive_tower_fails_at_its_second_step() {
        assert_eq!(conjugate_closure(&naive_tower()).failing_steps(), vec![2]);
    }
}
