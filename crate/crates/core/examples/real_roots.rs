//! Sturm counts, exact isolating intervals and numeric roots.

use kronecker::arith::q;
use kronecker::certify::parse_poly;
use kronecker::realroots::{isolate_real_roots, numeric_roots, refine, sturm_count, Bound};

fn main() {
    let f = parse_poly("x^5 - 4*x - 2").unwrap();
    let all = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).unwrap();
    let positive = sturm_count(&f, &Bound::Finite(q(0, 1)), &Bound::PosInf).unwrap();
    println!("{f}: {all} real roots, {positive} positive");
    for iv in isolate_real_roots(&f).unwrap() {
        let narrow = refine(&f, &iv, &q(1, 1 << 50));
        println!("  ({}, {})  refined to ({}, {})", iv.lo, iv.hi, narrow.lo, narrow.hi);
    }
    let nr = numeric_roots(&f, 128).unwrap();
    for z in &nr.roots {
        println!("  {:.12}", z.to_c64());
    }
}
