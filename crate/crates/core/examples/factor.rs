//! Factor over Q with an irreducibility witness for every factor.

use kronecker::certify::parse_poly;
use kronecker::qfactor::{factor_over_q, irreducibility, Irreducibility};

fn main() {
    for input in ["x^6 - 1", "x^4 + 4", "(x^2 - 2)*(x^3 - 3*x - 1)", "x^5 - 4*x - 2"] {
        let f = parse_poly(input).unwrap();
        let fac = factor_over_q(&f).unwrap();
        println!("{f} = {}", fac.unit);
        for (g, w) in &fac.factors {
            println!("  * ({g})  [{}, re-checked: {}]", w.method_name(), w.verify(g));
        }
        assert_eq!(fac.reconstruct(), f);
    }
    let f = parse_poly("x^4 + x^2 + 1").unwrap();
    if let Irreducibility::Reducible { factor } = irreducibility(&f).unwrap() {
        println!("{f} is divisible by {factor}");
    }
}
