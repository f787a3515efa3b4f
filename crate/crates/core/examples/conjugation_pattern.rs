//! Roots of x^p - c as alpha * zeta_p^j: exactly one is real, and
//! conjugation acts on indices by j -> g + l - j.

use kronecker::arith::q;
use kronecker::tower::{conjugation_pattern_check, PatternCase};

fn main() {
    for (p, c) in [(3, q(2, 1)), (5, q(3, 2)), (7, q(10, 1))] {
        println!("{}", conjugation_pattern_check(p, &c, PatternCase::RealAlpha).unwrap());
    }
    println!("{}", conjugation_pattern_check(5, &q(2, 1), PatternCase::NonRealAlpha).unwrap());
}
