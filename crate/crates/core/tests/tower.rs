mod common;

use common::rng;
use kronecker::arith::q;
use kronecker::cyclotomic::{naive_tower, undoubled_tower};
use kronecker::tower::{
    conjugate_closure, conjugation_pattern_check, norm_generator, tower_double, tower_validate, BaseField, Expr,
    PatternCase, StepClass, TowerDesc, PATTERN_PRIMES,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_radicand(rng: &mut ChaCha8Rng, positive: bool) -> Expr {
    let n: i64 = rng.gen_range(2..=30);
    let d: i64 = rng.gen_range(1..=5);
    let sign = if positive || rng.gen_bool(0.5) { 1 } else { -1 };
    Expr::rational(&q(sign * n, d))
}

fn random_step(rng: &mut ChaCha8Rng, real: bool) -> Expr {
    let k = [2u32, 3, 5][rng.gen_range(0..3)];
    match rng.gen_range(0..4) {
        0 if !real => Expr::zeta([3u32, 4, 5, 7, 8][rng.gen_range(0..5)]),
        1 if !real => {
            Expr::Mul(Box::new(Expr::zeta(rng.gen_range(3..=12))), Box::new(Expr::root(k, random_radicand(rng, true))))
        }
        2 => Expr::root(
            2,
            Expr::Add(Box::new(random_radicand(rng, true)), Box::new(Expr::root(2, random_radicand(rng, true)))),
        ),
        _ => Expr::root(k, random_radicand(rng, real)),
    }
}

fn random_tower(rng: &mut ChaCha8Rng, real: bool) -> TowerDesc {
    let len = rng.gen_range(1..=4);
    TowerDesc::new(BaseField::Rationals, (0..len).map(|_| random_step(rng, real)).collect())
}

#[test]
fn doubling_doubles_length_and_closes() {
    let mut rng = rng(21);
    for _ in 0..200 {
        let t = random_tower(&mut rng, false);
        let d = tower_double(&t);
        assert_eq!(d.tower.steps.len(), 2 * t.steps.len());
        for (j, c) in t.steps.iter().enumerate() {
            assert_eq!(d.tower.steps[2 * j], norm_generator(c));
            assert_eq!(&d.tower.steps[2 * j + 1], c);
        }
        assert!(d.conjugate_closed(), "{t}\n{:?}", d.closure);
        assert!(conjugate_closure(&d.tower).closed());
    }
}

#[test]
fn doubled_text_round_trips() {
    let mut rng = rng(22);
    for _ in 0..100 {
        let t = random_tower(&mut rng, false);
        let d = tower_double(&t).tower;
        assert_eq!(TowerDesc::parse(&d.to_string()).unwrap(), d);
        assert_eq!(TowerDesc::parse(&t.to_string()).unwrap(), t);
    }
}

// For a real generator c of exponent q the inserted step is c * conj(c) = c^2.
// With q = 2 that is the rational radicand; with q odd it generates the same
// field as c, so the pair collapses onto one radical step.
fn tracked_degree(field: &str) -> Option<usize> {
    let rest = field.split("[degree ").nth(1)?;
    rest.trim_end_matches(']').parse().ok()
}

#[test]
fn doubling_an_all_real_tower() {
    let mut rng = rng(23);
    let (mut even, mut odd) = (0, 0);
    for _ in 0..60 {
        let t = random_tower(&mut rng, true);
        let d = tower_double(&t);
        let report = tower_validate(&d.tower);
        for (j, c) in t.steps.iter().enumerate() {
            let (first, second) = (&report.steps[2 * j].class, &report.steps[2 * j + 1].class);
            let before = if j == 0 { Some(1) } else { tracked_degree(&report.steps[2 * j - 1].field_after) };
            match c {
                Expr::Root(2, r) if r.to_rational().is_some() => {
                    even += 1;
                    assert!(d.trivial_first_halves[j], "{c}");
                    assert!(matches!(first, StepClass::Trivial { .. }), "{c}: {first}");
                }
                // Decided only while the field stays within the tracked degree.
                Expr::Root(k, r)
                    if *k > 2 && r.to_rational().is_some() && before.is_some_and(|n| n * *k as usize <= 8) =>
                {
                    odd += 1;
                    assert!(!matches!(first, StepClass::Undetermined { .. }), "{c}: {first}");
                    assert!(matches!(second, StepClass::Trivial { .. }), "{c}: {second}");
                }
                _ => {}
            }
        }
        assert!(report.closure.closed());
    }
    assert!(even > 10 && odd > 10, "{even} {odd}");
}

#[test]
fn pattern_has_exactly_one_real_root() {
    let mut rng = rng(24);
    let mut accepted = 0;
    for _ in 0..30 {
        let p = PATTERN_PRIMES[rng.gen_range(0..PATTERN_PRIMES.len())];
        let c = q(rng.gen_range(2..=40), rng.gen_range(1..=4));
        match conjugation_pattern_check(p, &c, PatternCase::RealAlpha) {
            Ok(r) => {
                accepted += 1;
                assert_eq!(r.real_count(), 1, "{r}");
                assert!(r.all_passed(), "{r}");
            }
            Err(kronecker::tower::PatternError::Reducible { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(accepted > 20);
}

#[test]
fn naive_tower_is_flagged_and_doubling_repairs_it() {
    let naive = naive_tower();
    let closure = conjugate_closure(&naive);
    assert!(!closure.closed());
    assert_eq!(closure.failing_steps(), vec![2]);
    let doubled = tower_double(&undoubled_tower());
    assert!(doubled.conjugate_closed());
    assert_eq!(doubled.tower.steps.len(), 4);
}
