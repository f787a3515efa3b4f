mod common;

use common::{factorization_composites, poly, rng};
use kronecker::arith::QPoly;
use kronecker::qfactor::{eisenstein_witness, factor_over_q, modp_irreducible_witness, Irreducibility};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn two_hundred_composites_factor_correctly() {
    factorization_composites(200, 11).unwrap();
}

#[test]
fn witnesses_agree_with_complete_factorization() {
    let mut rng = rng(5);
    let mut eisenstein = 0;
    let mut modp = 0;
    for _ in 0..300 {
        let d = rng.gen_range(2..=6);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-12..=12)).collect();
        c[d] = rng.gen_range(1..=3);
        let f = poly(&c);
        let irreducible = factor_over_q(&f).unwrap().is_irreducible();
        if eisenstein_witness(&f).unwrap().is_some() {
            eisenstein += 1;
            assert!(irreducible, "{f}");
        }
        if modp_irreducible_witness(&f, 100).is_some() {
            modp += 1;
            assert!(irreducible, "{f}");
        }
    }
    assert!(eisenstein > 0 && modp > 0);
}

#[test]
fn irreducibility_answers_carry_checkable_evidence() {
    let mut rng = rng(6);
    for _ in 0..200 {
        let d = rng.gen_range(1..=7);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-9..=9)).collect();
        c[d] = rng.gen_range(1..=9);
        let f = poly(&c);
        match kronecker::qfactor::irreducibility(&f).unwrap() {
            Irreducibility::Irreducible(w) => assert!(w.verify(&f), "{f}: {w:?}"),
            Irreducibility::Reducible { factor } => {
                assert!(factor.degree().unwrap() >= 1 && factor.degree() < f.degree());
                assert!(f.rem(&factor).unwrap().is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_of_factors_reconstructs(c in prop::collection::vec(-9i64..=9, 2..=8)) {
        let f = QPoly::from_i64s(&c);
        prop_assume!(f.degree().is_some_and(|d| d >= 1));
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.reconstruct(), f);
        for (g, w) in &fac.factors {
            prop_assert!(w.verify(g));
        }
    }
}
