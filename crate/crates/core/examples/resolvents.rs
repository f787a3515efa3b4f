//! Lagrange resolvents for p = 7 and the radical tower reaching zeta(7).

use kronecker::cyclotomic::{gauss_tower_trace, lagrange_resolvents, resolvent_identities_check};

fn main() {
    let rs = lagrange_resolvents(7).unwrap();
    println!("p = 7, tau = {}, ambient degree {}", rs.tau, rs.field.degree());
    for j in 1..=6 {
        println!("rho_{j}^6 = {}", rs.descend(&rs.resolvent_power(j)).map_or("?".into(), |a| a.to_string()));
    }
    println!("{}", resolvent_identities_check(&rs));
    let trace = gauss_tower_trace(7).unwrap();
    for (step, purpose) in trace.tower.steps.iter().zip(&trace.purposes) {
        println!("{step}    # {purpose}");
    }
    println!("zeta(7) = {}", trace.recovery);
    println!("{}", trace.report);
}
