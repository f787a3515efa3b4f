//! Members of the family x^5 - a*x - b that are not solvable by radicals.

use kronecker::certify::{dorrie_generate, dorrie_validate, verify};

fn main() {
    let m = dorrie_validate(&6.into(), &3.into(), 3);
    println!("{m}\n");
    for m in dorrie_generate(10, 0).unwrap() {
        let cert = m.certificate.as_ref().unwrap();
        println!("a = {:>3}, b = {:>3}, p = {}: {} (verified: {})", m.a, m.b, m.p, cert.verdict, verify(cert).is_ok());
    }
}
