mod common;

use common::{cyclotomic_products, phi_oracle};
use kronecker::arith::{Field, QPoly};
use kronecker::cyclotomic::{
    cyclotomic_poly, example71_verify, lagrange_resolvents, resolvent_identities_check, CycloField,
};
use kronecker::qfactor::factor_over_q_with;
use proptest::prelude::*;

#[test]
fn divisor_product_is_x_n_minus_one_up_to_100() {
    cyclotomic_products(100).unwrap();
}

#[test]
fn cyclotomic_polynomials_are_irreducible_up_to_20() {
    for n in 1..=20 {
        let phi = cyclotomic_poly(n).unwrap();
        assert!(factor_over_q_with(&phi, 20).unwrap().is_irreducible(), "Phi_{n}");
    }
}

#[test]
fn degree_is_euler_phi() {
    for n in 1..=100u32 {
        assert_eq!(cyclotomic_poly(n).unwrap().degree(), Some(phi_oracle(n as u64) as usize), "n = {n}");
    }
}

#[test]
fn resolvent_identities_hold_for_small_primes() {
    for p in [3, 5, 7] {
        let rs = lagrange_resolvents(p).unwrap();
        let report = resolvent_identities_check(&rs);
        assert!(report.all_passed(), "{report}");
    }
}

#[test]
fn example71_checks_pass() {
    let report = example71_verify();
    assert!(report.all_passed(), "{report}");
}

fn element(n: u32) -> impl Strategy<Value = (u32, QPoly)> {
    let d = kronecker::cyclotomic::euler_phi(n as u64) as usize;
    prop::collection::vec(-6i64..=6, d).prop_map(move |c| (n, QPoly::from_i64s(&c)))
}

fn field_and_pair() -> impl Strategy<Value = (u32, QPoly, QPoly)> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 12, 15, 20])
        .prop_flat_map(|n| (element(n), element(n)).prop_map(|((n, a), (_, b))| (n, a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn conjugation_is_a_field_automorphism((n, a, b) in field_and_pair()) {
        let k = CycloField::new(n).unwrap();
        let ext = k.extension();
        let (a, b) = (k.element(&a), k.element(&b));
        prop_assert_eq!(k.conj(&ext.mul(&a, &b)), ext.mul(&k.conj(&a), &k.conj(&b)));
        prop_assert_eq!(k.conj(&ext.add(&a, &b)), ext.add(&k.conj(&a), &k.conj(&b)));
        prop_assert_eq!(k.conj(&k.conj(&a)), a.clone());
        let z = k.to_c64(&a).conj();
        let w = k.to_c64(&k.conj(&a));
        prop_assert!((z - w).norm() < 1e-6 * (1.0 + z.norm()));
    }
}
