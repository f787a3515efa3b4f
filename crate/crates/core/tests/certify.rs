mod common;

use common::{companion_real_root_count, poly, rng, single_field_mutations};
use kronecker::arith::{q, QPoly};
use kronecker::certify::{
    dorrie_generate, emit_json, kronecker_certify, parse_json, verify, Verdict, RULE, SCHEMA_VERSION,
};
use kronecker::qfactor::factor_over_q;
use kronecker::qfactor::IrreducibilityWitness;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn verdicts_partition_by_real_root_count() {
    let mut rng = rng(31);
    let mut seen = [0usize; 3];
    for _ in 0..150 {
        let p = [3usize, 5, 7][rng.gen_range(0..3)];
        let mut c: Vec<i64> = (0..=p).map(|_| rng.gen_range(-9..=9)).collect();
        c[p] = rng.gen_range(1..=4);
        let f = poly(&c);
        let cert = kronecker_certify(&f).unwrap();
        verify(&cert).unwrap_or_else(|e| panic!("{f}: {e}"));
        let irreducible = factor_over_q(&f).unwrap().is_irreducible();
        if !irreducible {
            assert_eq!(cert.verdict, Verdict::NotApplicable, "{f}");
            continue;
        }
        let r = cert.real_root_count.unwrap();
        assert_eq!(r, companion_real_root_count(&f), "{f}");
        assert_eq!(r % 2, 1);
        assert_eq!(cert.intervals.len(), r);
        assert_eq!(cert.verdict == Verdict::Unsolvable, (3..=p - 2).contains(&r), "{f}");
        seen[match cert.verdict {
            Verdict::Unsolvable => 0,
            Verdict::InconclusiveOneReal => 1,
            _ => 2,
        }] += 1;
    }
    assert!(seen.iter().all(|&n| n > 0), "{seen:?}");
}

#[test]
fn hundred_dorrie_certificates_verify_and_resist_mutation() {
    let members = dorrie_generate(100, 0).unwrap();
    assert_eq!(members.len(), 100);
    for m in &members {
        assert!(m.all_passed(), "{m}");
        let cert = m.certificate.as_ref().unwrap();
        assert_eq!(cert.verdict, Verdict::Unsolvable);
        assert_eq!(cert.real_root_count, Some(3));
        verify(cert).unwrap();
        let reparsed = parse_json(&emit_json(cert)).unwrap();
        verify(&reparsed).unwrap();
        let mutations = single_field_mutations(cert);
        for kind in ["verdict", "witness prime", "interval list"] {
            assert!(mutations.iter().any(|(f, _)| *f == kind), "no {kind} mutation for {}", cert.input);
        }
        for (field, bad) in mutations {
            assert!(verify(&bad).is_err(), "mutated {field} accepted for {}", cert.input);
        }
    }
}

#[test]
fn flagship_certificates() {
    let c = kronecker_certify(&poly(&[-2, -4, 0, 0, 0, 1])).unwrap();
    assert_eq!(c.schema, SCHEMA_VERSION);
    assert_eq!(c.rule, RULE);
    assert_eq!(c.verdict, Verdict::Unsolvable);
    assert_eq!(c.irreducible, Some(IrreducibilityWitness::Eisenstein { prime: 2, shift: 0 }));
    let c = kronecker_certify(&poly(&common::QUINTIC)).unwrap();
    assert_eq!((c.verdict, c.real_root_count), (Verdict::InconclusiveAllReal, Some(5)));
    let c = kronecker_certify(&poly(&[-2, 0, 0, 0, 0, 1])).unwrap();
    assert_eq!((c.verdict, c.real_root_count), (Verdict::InconclusiveOneReal, Some(1)));
}

#[test]
fn output_is_deterministic() {
    let f = poly(&[-2, -4, 0, 0, 0, 1]);
    assert_eq!(emit_json(&kronecker_certify(&f).unwrap()), emit_json(&kronecker_certify(&f).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn certificates_are_invariant_under_scaling(c in prop::collection::vec(-9i64..=9, 6), n in -20i64..=20, d in 1i64..=20) {
        prop_assume!(n != 0 && c[5] != 0);
        let f = QPoly::from_i64s(&c);
        prop_assert_eq!(kronecker_certify(&f).unwrap(), kronecker_certify(&f.scale(&q(n, d))).unwrap());
    }
}
