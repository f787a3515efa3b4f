//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use kronecker::arith::{q, BigInt, BigRational, QPoly};
use kronecker::certify::{SolvabilityCertificate, Verdict};
use kronecker::numberfield::{is_pth_power, roots_in_field, NumberField};
use kronecker::qfactor::factor_over_q;
use kronecker::realroots::{numeric_roots, sturm_count, Bound};
use nalgebra::DMatrix;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const QUINTIC: [i64; 6] = [1, 3, -3, -4, 1, 1];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(c: &[i64]) -> QPoly {
    QPoly::from_i64s(c)
}

pub fn x_pow(n: usize) -> QPoly {
    let mut c = vec![0; n + 1];
    c[n] = 1;
    poly(&c)
}

fn random_coeffs(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Vec<i64> {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[degree] == 0 {
        c[degree] = rng.gen_range(-bound..=bound);
    }
    c
}

/// Random squarefree integer polynomial of degree `1..=max_degree`, coefficients in [-9, 9].
pub fn random_squarefree(rng: &mut ChaCha8Rng, max_degree: usize) -> QPoly {
    loop {
        let d = rng.gen_range(1..=max_degree);
        let f = poly(&random_coeffs(rng, d, 9));
        if f.is_squarefree() {
            return f;
        }
    }
}

/// Real roots counted from the eigenvalues of the companion matrix.
pub fn companion_real_root_count(f: &QPoly) -> usize {
    let n = f.degree().expect("nonzero");
    let c: Vec<f64> = f.coeffs().iter().map(|a| rational_f64(a)).collect();
    let lead = c[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    m.complex_eigenvalues().iter().filter(|z| z.im.abs() < 1e-7 * (1.0 + z.norm())).count()
}

pub fn rational_f64(a: &BigRational) -> f64 {
    let n: f64 = a.numer().to_string().parse().unwrap();
    let d: f64 = a.denom().to_string().parse().unwrap();
    n / d
}

/// Sturm count over the reals against the library's numeric roots and the
/// companion-matrix oracle, on `count` random squarefree polynomials.
pub fn sturm_vs_numeric(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    for _ in 0..count {
        let f = random_squarefree(&mut rng, 6);
        let n = f.degree().unwrap();
        let sturm = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).map_err(|e| e.to_string())?;
        let numeric = numeric_roots(&f, 128).map_err(|e| format!("{f}: {e}"))?;
        let oracle = companion_real_root_count(&f);
        if sturm != numeric.real_count || sturm != oracle || sturm + 2 * numeric.pair_count() != n {
            return Err(format!("{f}: sturm {sturm}, numeric {}, companion {oracle}", numeric.real_count));
        }
    }
    Ok(())
}

/// Rational roots by the rational root theorem.
pub fn has_rational_root(c: &[i64]) -> bool {
    let f = poly(c);
    if c[0] == 0 {
        return true;
    }
    let divisors = |n: i64| (1..=n.abs()).filter(move |d| n % d == 0);
    for num in divisors(c[0]) {
        for den in divisors(*c.last().unwrap()) {
            for s in [1, -1] {
                if f.eval(&q(s * num, den)).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn is_square(n: i64) -> bool {
    n >= 0 && n.sqrt() * n.sqrt() == n
}

/// Random irreducible quadratic or cubic with coefficients in [-9, 9].
pub fn random_irreducible_low(rng: &mut ChaCha8Rng) -> QPoly {
    loop {
        let d = rng.gen_range(2..=3);
        let c = random_coeffs(rng, d, 9);
        let irreducible = match d {
            2 => !is_square(c[1] * c[1] - 4 * c[0] * c[2]),
            _ => !has_rational_root(&c),
        };
        if irreducible {
            return poly(&c);
        }
    }
}

/// Factors `count` random products of two irreducible quadratics or cubics
/// and compares against the known factor multiset.
pub fn factorization_composites(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    for _ in 0..count {
        let a = random_irreducible_low(&mut rng);
        let b = random_irreducible_low(&mut rng);
        let f = &a * &b;
        let fac = factor_over_q(&f).map_err(|e| format!("{f}: {e}"))?;
        if fac.reconstruct() != f {
            return Err(format!("{f}: product of factors differs"));
        }
        let mut got: Vec<QPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
        for want in [a.monic(), b.monic()] {
            match got.iter().position(|g| *g == want) {
                Some(i) => {
                    got.remove(i);
                }
                None => return Err(format!("{f}: factor {want} missing")),
            }
        }
        if !got.is_empty() {
            return Err(format!("{f}: extra factors"));
        }
    }
    Ok(())
}

/// Euler's phi by counting residues coprime to `n`.
pub fn phi_oracle(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Checks `prod_{d | n} Phi_d = x^n - 1` for `n = 1..=max`.
pub fn cyclotomic_products(max: u32) -> Result<(), String> {
    for n in 1..=max {
        let mut prod = QPoly::constant(BigRational::one());
        for d in (1..=n).filter(|d| n % d == 0) {
            prod = &prod * &kronecker::cyclotomic::cyclotomic_poly(d).map_err(|e| e.to_string())?;
        }
        if prod != &x_pow(n as usize) - &poly(&[1]) {
            return Err(format!("product identity fails at n = {n}"));
        }
    }
    Ok(())
}

pub const PTH_POWER_MODULI: [&[i64]; 6] =
    [&[-2, 0, 1], &[1, 0, 1], &[-2, 0, 0, 1], &[-1, -1, 0, 1], &[1, 0, 0, 0, 1], &[1, 0, -10, 0, 1]];

/// `is_pth_power(beta^p)` returns a `p`th root of `beta^p`, for random `beta`
/// of height at most 5.
pub fn pth_power_round_trip(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let fields: Vec<NumberField> = PTH_POWER_MODULI.iter().map(|g| NumberField::new(&poly(g)).unwrap()).collect();
    for _ in 0..count {
        let k = &fields[rng.gen_range(0..fields.len())];
        let p = [2u32, 3, 5][rng.gen_range(0..3)];
        let beta = loop {
            let c: Vec<i64> = (0..k.degree()).map(|_| rng.gen_range(-5..=5)).collect();
            let b = poly(&c);
            if !b.is_zero() {
                break b;
            }
        };
        let c = k.pow(&beta, p as u64);
        match is_pth_power(&c, p, k).map_err(|e| e.to_string())? {
            Some(r) if k.pow(&r, p as u64) == c => {}
            other => return Err(format!("beta = {beta} in Q[y]/({}), p = {p}: got {other:?}", k.modulus())),
        }
    }
    Ok(())
}

pub const PRIME_DEGREE_F: [&[i64]; 7] = [
    &[-2, 0, 0, 1],
    &[-1, -3, 0, 1],
    &[-2, -4, 0, 0, 0, 1],
    &[-2, 0, 0, 0, 0, 1],
    &QUINTIC,
    &[-2, 0, 0, 0, 0, 0, 0, 1],
    &[7, -14, 0, 0, 0, 0, 0, 1],
];

pub const FIELD_MODULI: [&[i64]; 9] = [
    &[-2, 0, 1],
    &[1, 0, 1],
    &[1, 1, 1],
    &[11, 0, 1],
    &[-2, 0, 0, 1],
    &[1, 0, 0, 0, 1],
    &[1, 0, -10, 0, 1],
    &[-2, 0, 0, 0, 1],
    &[1, 0, 0, 1, 0, 0, 1],
];

/// Irreducible `f` of prime degree `p` has no root in `Q[y]/(g)` when `p` does
/// not divide `deg g`. Returns the number of pairs checked.
pub fn coprime_degree_corpus() -> Result<usize, String> {
    let mut checked = 0;
    for f in PRIME_DEGREE_F {
        let f = poly(f);
        let p = f.degree().unwrap();
        if !factor_over_q(&f).unwrap().is_irreducible() {
            return Err(format!("{f} is not irreducible"));
        }
        for g in FIELD_MODULI {
            let g = poly(g);
            if g.degree().unwrap() % p == 0 {
                continue;
            }
            let k = NumberField::new(&g).map_err(|e| e.to_string())?;
            let roots = roots_in_field(&f, &k).map_err(|e| format!("{f} over {g}: {e}"))?;
            if !roots.is_empty() {
                return Err(format!("{f} has roots in Q[y]/({g})"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// The orbit `y, T(y), T(T(y)), ...` of `T(y) = y^2 - 2` modulo `g`.
pub fn double_angle_orbit(g: &QPoly, len: usize) -> Vec<QPoly> {
    let t = poly(&[-2, 0, 1]);
    let mut out = vec![poly(&[0, 1])];
    while out.len() < len {
        let next = t.compose(out.last().unwrap()).rem(g).unwrap();
        out.push(next);
    }
    out
}

/// Certificates each differing from `cert` in exactly one field.
pub fn single_field_mutations(cert: &SolvabilityCertificate) -> Vec<(&'static str, SolvabilityCertificate)> {
    let mut out = Vec::new();
    for v in [Verdict::Unsolvable, Verdict::InconclusiveOneReal, Verdict::InconclusiveAllReal, Verdict::NotApplicable] {
        if v != cert.verdict {
            let mut m = cert.clone();
            m.verdict = v;
            out.push(("verdict", m));
        }
    }
    if let Some(w) = &cert.irreducible {
        let json = serde_json::to_value(w).unwrap();
        if let Some(p) = json["witness"].get("prime").and_then(|p| p.as_u64()) {
            let shift = json["witness"].get("shift").and_then(|s| s.as_i64());
            let input = kronecker::certify::parse_poly(&cert.input).unwrap();
            // A prime at which the criterion also holds gives another valid certificate.
            let candidates = [p + 1, next_prime(p), next_prime(next_prime(p))];
            for other in candidates.into_iter().filter(|&o| shift != Some(0) || !eisenstein_oracle(&input, o)) {
                let mut j = json.clone();
                j["witness"]["prime"] = other.into();
                let mut m = cert.clone();
                m.irreducible = Some(serde_json::from_value(j).unwrap());
                out.push(("witness prime", m));
            }
        }
    }
    if !cert.intervals.is_empty() {
        let mut m = cert.clone();
        m.intervals.pop();
        out.push(("interval list", m));
    }
    if let Some(r) = cert.real_root_count {
        let mut m = cert.clone();
        m.real_root_count = Some(r + 2);
        out.push(("real root count", m));
    }
    let mut m = cert.clone();
    m.degree += 1;
    out.push(("degree", m));
    out
}

/// Eisenstein at `p` for an integral polynomial, checked on its coefficients.
pub fn eisenstein_oracle(f: &QPoly, p: u64) -> bool {
    let p = BigInt::from(p);
    let c: Vec<BigInt> = f.coeffs().iter().map(|a| a.to_integer()).collect();
    let n = c.len() - 1;
    !(&c[n] % &p).is_zero() && c[..n].iter().all(|a| (a % &p).is_zero()) && !(&c[0] % (&p * &p)).is_zero()
}

fn next_prime(p: u64) -> u64 {
    (p + 1..).find(|&n| kronecker::qfactor::modp::is_prime(n)).unwrap()
}
