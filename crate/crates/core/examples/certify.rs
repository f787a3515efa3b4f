//! Certify the three flagship quintics and re-verify each certificate.

use kronecker::certify::{emit_json, emit_text, kronecker_certify, parse_poly, verify};

fn main() {
    for input in ["x^5 - 4*x - 2", "x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1", "x^5 - 2"] {
        let f = parse_poly(input).expect("valid polynomial");
        let cert = kronecker_certify(&f).expect("certifiable");
        print!("{}", emit_text(&cert));
        println!("re-verified: {}\n", verify(&cert).is_ok());
    }
    let cert = kronecker_certify(&parse_poly("x^5 - 4*x - 2").unwrap()).unwrap();
    println!("{}", emit_json(&cert));
}
