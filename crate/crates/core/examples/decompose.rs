//! The cyclic quintic splits in its own stem field along y -> y^2 - 2.

use kronecker::certify::parse_poly;
use kronecker::numberfield::{complete_decomposition, Decomposition, NumberField};

fn main() {
    let f = parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1").unwrap();
    let k = NumberField::new(&f).unwrap();
    match complete_decomposition(&f, &k).unwrap() {
        Decomposition::Split(d) => {
            for (j, x) in d.roots.iter().enumerate() {
                println!("x_{} = {x}", j + 1);
            }
            println!("R(x) = {}", d.distinctness_poly.as_ref().unwrap());
            println!("all checks passed: {}", d.all_passed());
        }
        Decomposition::IrreducibleOverField => println!("no root in the field"),
    }
    for cubic in ["x^3 - 3*x - 1", "x^3 - 2"] {
        let f = parse_poly(cubic).unwrap();
        let k = NumberField::new(&f).unwrap();
        match complete_decomposition(&f, &k) {
            Ok(Decomposition::Split(_)) => println!("{f} splits in its stem field"),
            Ok(Decomposition::IrreducibleOverField) => println!("{f} has no root in its stem field"),
            Err(e) => println!("{f} in its stem field: {e}"),
        }
    }
}
