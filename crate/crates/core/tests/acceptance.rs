//! Acceptance checks. Each criterion prints one PASS or FAIL line; the
//! process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use critdisc::exactnum::{factorize, padic_valuation, rat, rat_int, rat_pow, BigInt, Rat};
use critdisc::family::{center, conjugate, epsilon, is_member, AffineAut, StandardPair};
use critdisc::lattes::{
    build_lattes, double_point, reduction_type_at, szpiro_local_check, verify_identities,
    weierstrass_invariants, Cubic, EllipticPoint, ReductionType,
};
use critdisc::reduction::{
    is_v_integral, local_minimize, minimal_critical_discriminant, quadratic_remark_model,
    reduce_map,
};
use critdisc::{Poly, Valuation};

// ---------------------------------------------------------------------------
// Oracles over Q: dense ascending coefficient vectors.

type V = Vec<Rat>;

fn trim(mut v: V) -> V {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn v_mul(a: &V, b: &V) -> V {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn v_sub(a: &V, b: &V) -> V {
    let n = a.len().max(b.len());
    let z = Rat::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn v_deriv(a: &V) -> V {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect(),
    )
}

fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let pv = m[col][col].clone();
        acc *= &pv;
        let (top, bottom) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            let f = &row[col] / &pv;
            if f.is_zero() {
                continue;
            }
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * y;
            }
        }
    }
    acc
}

/// Determinant of the Sylvester matrix.
fn sylvester(p: &V, q: &V) -> Rat {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in p.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in q.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

fn oracle_disc(p: &V) -> Rat {
    let n = p.len() - 1;
    let r = sylvester(p, &v_deriv(p)) / p.last().unwrap();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn oracle_wronskian(pair: &StandardPair) -> V {
    let a = pair.a().coeffs().to_vec();
    let b = pair.b().coeffs().to_vec();
    v_sub(&v_mul(&b, &v_deriv(&a)), &v_mul(&a, &v_deriv(&b)))
}

// ---------------------------------------------------------------------------
// Oracle over F_p with small p: i64 coefficients in [0, p).

fn fp_inv(a: i64, p: i64) -> i64 {
    let (mut r, mut e, mut b) = (1i64, p - 2, a.rem_euclid(p));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn fp_trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_of(c: &Rat, p: i64) -> i64 {
    let pb = BigInt::from(p);
    let n: i64 = c.numer().mod_floor(&pb).try_into().unwrap();
    let d: i64 = c.denom().mod_floor(&pb).try_into().unwrap();
    n * fp_inv(d, p) % p
}

fn fp_poly(v: &[Rat], p: i64) -> Vec<i64> {
    fp_trim(v.iter().map(|c| fp_of(c, p)).collect())
}

fn fp_rem(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    let mut r = a.to_vec();
    let inv = fp_inv(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() * inv % p;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] - q * c).rem_euclid(p);
        }
        r = fp_trim(r);
    }
    r
}

fn fp_gcd_degree(a: &[i64], b: &[i64], p: i64) -> usize {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x.len() - 1
}

fn fp_mul(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_sub(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    let n = a.len().max(b.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    fp_trim(
        (0..n)
            .map(|i| (at(a, i) - at(b, i)).rem_euclid(p))
            .collect(),
    )
}

fn fp_deriv(a: &[i64], p: i64) -> Vec<i64> {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as i64 % p)
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Random data.

fn rand_rat(rng: &mut ChaCha8Rng, bound: i64, dens: &[i64]) -> Rat {
    rat(
        rng.gen_range(-bound..=bound),
        dens[rng.gen_range(0..dens.len())],
    )
}

fn rand_nonzero(rng: &mut ChaCha8Rng, bound: i64, dens: &[i64]) -> Rat {
    loop {
        let q = rand_rat(rng, bound, dens);
        if !q.is_zero() {
            return q;
        }
    }
}

/// A pair satisfying the linear condition on `a_{d-1}`.
fn rand_f3_pair(
    rng: &mut ChaCha8Rng,
    d: usize,
    lambda: Rat,
    bound: i64,
    dens: &[i64],
) -> StandardPair {
    let eps = epsilon(d, &lambda).unwrap();
    let b: Vec<Rat> = (0..d - 1).map(|_| rand_rat(rng, bound, dens)).collect();
    let mut a: Vec<Rat> = (0..d - 1).map(|_| rand_rat(rng, bound, dens)).collect();
    a.push(&eps * &b[d - 2]);
    StandardPair::from_lower_coeffs(lambda, &a, &b).unwrap()
}

fn rand_aut(rng: &mut ChaCha8Rng) -> AffineAut {
    AffineAut::new(
        rand_nonzero(rng, 6, &[1, 2, 3, 5]),
        rand_rat(rng, 6, &[1, 2, 3]),
    )
    .unwrap()
}

fn ord(q: &Rat, p: i64) -> i64 {
    match padic_valuation(q, &BigInt::from(p)).unwrap() {
        Valuation::Finite(v) => v,
        Valuation::Infinity => panic!("valuation of zero"),
    }
}

// ---------------------------------------------------------------------------
// Criteria.

type Check = Result<String, String>;

/// Number, check and time limit in seconds.
type Criterion = (u32, fn() -> Check, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1() -> Check {
    let pair = build_lattes(&Cubic::from_ints(0, 1, 0).unwrap());
    ensure!(
        pair.a().to_string() == "x^4-2x^2+1" && pair.b().to_string() == "4x^3+4x",
        "pair {pair}"
    );
    let w = pair.wronskian();
    ensure!(
        w.coeffs() == oracle_wronskian(&pair).as_slice(),
        "Wronskian differs from expansion"
    );
    let expected: Poly = "4x^6+20x^4-20x^2-4".parse().unwrap();
    ensure!(w == expected, "W = {w}");
    let two48 = Rat::from_integer(BigInt::one() << 48);
    let delta = pair.critical_discriminant();
    ensure!(delta == two48, "Delta = {delta}");
    ensure!(
        oracle_disc(&w.coeffs().to_vec()) == two48,
        "Sylvester oracle disagrees"
    );
    let printed: Poly = "4x^6-20x^4-20x^2-4".parse().unwrap();
    let printed_disc = printed.disc().unwrap();
    Ok(format!(
        "W = {w}, Delta = 2^48; the variant with -20x^4 has disc {printed_disc} and cannot be the Wronskian"
    ))
}

fn naive_cubic_disc(a: &Rat, b: &Rat, c: &Rat) -> Rat {
    a * a * b * b + rat_int(18) * a * b * c
        - rat_int(4) * a * a * a * c
        - rat_int(4) * b * b * b
        - rat_int(27) * c * c
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut n = 0;
    let two38 = Rat::from_integer(BigInt::one() << 38);
    let two18 = Rat::from_integer(BigInt::one() << 18);
    while n < 100 {
        let (a, b, c) = (
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
        );
        let Ok(f) = Cubic::from_ints(a, b, c) else {
            continue;
        };
        let disc = naive_cubic_disc(f.a(), f.b(), f.c());
        ensure!(disc == f.disc(), "disc mismatch for {f}");
        let delta = build_lattes(&f).critical_discriminant();
        let delta_e = rat_int(16) * &disc;
        ensure!(
            delta == -(&two38 * rat_pow(&disc, 5)),
            "-2^38 disc^5 fails for {f}"
        );
        ensure!(
            delta == -(&two18 * rat_pow(&delta_e, 5)),
            "-2^18 Delta_E^5 fails for {f}"
        );
        ensure!(
            verify_identities(&f).is_ok(),
            "library identity check fails for {f}"
        );
        if n % 10 == 0 {
            let w = oracle_wronskian(&build_lattes(&f));
            ensure!(
                oracle_disc(&w) == delta,
                "Sylvester oracle disagrees for {f}"
            );
        }
        n += 1;
    }
    Ok("100 cubics, both identities exact".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..200 {
        let n = 2 + i % 5;
        let mut p: V = (0..n).map(|_| rand_rat(&mut rng, 9, &[1, 2, 3])).collect();
        p.push(rand_nonzero(&mut rng, 9, &[1, 2]));
        let poly = Poly::from_coeffs(p.clone());
        let lambda = rand_nonzero(&mut rng, 7, &[1, 2, 5]);
        let dp = poly.disc().unwrap();
        if i % 20 == 0 {
            ensure!(dp == oracle_disc(&p), "disc oracle mismatch for {poly}");
        }
        let scaled = poly.scale(&lambda).disc().unwrap();
        ensure!(
            scaled == rat_pow(&lambda, 2 * n as i64 - 2) * &dp,
            "scaling law fails for {poly}"
        );
        let alpha = rand_nonzero(&mut rng, 5, &[1, 2, 3]);
        let beta = rand_rat(&mut rng, 5, &[1, 4]);
        let moved = poly.affine_substitute(&alpha, &beta).disc().unwrap();
        ensure!(
            moved == rat_pow(&alpha, (n * (n - 1)) as i64) * &dp,
            "affine law fails for {poly}"
        );
    }
    for i in 0..200 {
        let d = 2 + i % 3;
        let lambda = rand_nonzero(&mut rng, 6, &[1, 2, 3]);
        let pair = rand_f3_pair(&mut rng, d, lambda, 8, &[1, 2, 3]);
        let s = rand_aut(&mut rng);
        let q = conjugate(&pair, &s);
        let e = ((2 * d - 2) * (2 * d - 3)) as i64;
        ensure!(
            q.critical_discriminant() == rat_pow(s.alpha(), e) * pair.critical_discriminant(),
            "conjugation law fails for {pair}"
        );
    }
    Ok("200 instances of each law exact".into())
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let (a, b, c) = (
            rand_rat(&mut rng, 30, &[1, 2, 3, 7]),
            rand_rat(&mut rng, 30, &[1, 2, 5]),
            rand_rat(&mut rng, 30, &[1, 3, 4]),
        );
        let l = rand_nonzero(&mut rng, 30, &[1, 2, 9]);
        let pair = StandardPair::from_lower_coeffs(
            l.clone(),
            &[b.clone(), a.clone()],
            std::slice::from_ref(&c),
        )
        .unwrap();
        let closed = rat_int(4) * &c * &c - rat_int(4) * &l * (&a * &c - &l * &b);
        ensure!(
            pair.critical_discriminant() == closed,
            "quadratic formula fails for {pair}"
        );
    }
    Ok("200 quadratic pairs".into())
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut good = 0;
    for i in 0..500 {
        let p = [3i64, 5, 7][i % 3];
        let d = 2 + (i / 3) % 3;
        // p-integral: denominators prime to p; lambda a p-unit
        let dens: Vec<i64> = [1i64, 2, 4, 11]
            .into_iter()
            .filter(|q| q % p != 0)
            .collect();
        let lambda = loop {
            let l = rand_nonzero(&mut rng, 12, &dens);
            if !l.numer().is_multiple_of(&BigInt::from(p)) {
                break l;
            }
        };
        let f3 = rand_f3_pair(&mut rng, d, lambda.clone(), 12, &dens);
        let pair = if i % 2 == 0 && is_v_integral(&f3, &BigInt::from(p)).unwrap() {
            f3
        } else {
            let a: Vec<Rat> = (0..d).map(|_| rand_rat(&mut rng, 12, &dens)).collect();
            let b: Vec<Rat> = (0..d - 1).map(|_| rand_rat(&mut rng, 12, &dens)).collect();
            StandardPair::from_lower_coeffs(lambda, &a, &b).unwrap()
        };
        let pb = BigInt::from(p);
        ensure!(is_v_integral(&pair, &pb).unwrap(), "pair not {p}-integral");
        let delta = pair.critical_discriminant();
        let lhs = !delta.numer().is_multiple_of(&pb);

        let a = fp_poly(pair.a().coeffs(), p);
        let b = fp_poly(pair.b().coeffs(), p);
        let w = fp_sub(
            &fp_mul(&b, &fp_deriv(&a, p), p),
            &fp_mul(&a, &fp_deriv(&b, p), p),
            p,
        );
        let coprime = fp_gcd_degree(&a, &b, p) == 0;
        let deg_a = a.len() == d + 1;
        let w_ok = w.len() == 2 * d - 1 && fp_gcd_degree(&w, &fp_deriv(&w, p), p) == 0;
        let rhs = coprime && deg_a && w_ok;
        ensure!(
            lhs == rhs,
            "{pair} at {p}: Delta mod p nonzero = {lhs}, reduction test = {rhs}"
        );
        let (_, _, report) = reduce_map(&pair, &pb).unwrap();
        ensure!(
            report.model_good == lhs,
            "library report disagrees for {pair} at {p}"
        );
        good += lhs as usize;
    }
    Ok(format!("500 pairs, {good} with good reduction"))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut built = 0;
    let mut checked = 0;
    while built < 50 {
        // over F_2 the Wronskian is the derivative of AB, hence a square, so
        // good reduction needs an odd prime
        let p = [3i64, 5, 7][built % 3];
        let pb = BigInt::from(p);
        let d = 2 + rng.gen_range(0..3);
        let lambda = rat_int([1i64, -1, 3, 5, 7][rng.gen_range(0..5)]);
        let pair = rand_f3_pair(&mut rng, d, lambda, 9, &[1]);
        if !is_v_integral(&pair, &pb).unwrap() {
            continue;
        }
        let delta = pair.critical_discriminant();
        if delta.is_zero() || delta.numer().is_multiple_of(&pb) {
            continue;
        }
        let n = ((2 * d - 2) * (2 * d - 3)) as i64;
        let beta = rat_int(rng.gen_range(-3..=3));
        let moved = conjugate(&pair, &AffineAut::new(rat_int(p), beta).unwrap());
        for model in [&pair, &moved] {
            let r = local_minimize(model, &pb, 2).map_err(|e| e.to_string())?;
            let v = ord(&model.critical_discriminant(), p);
            ensure!(
                (v - r.delta as i64).rem_euclid(n) == 0,
                "congruence fails for {model}"
            );
            ensure!(
                r.delta == 0 && r.certified,
                "{model} at {p}: delta {}",
                r.delta
            );
            let w = conjugate(model, &r.witness);
            ensure!(w == r.minimal_model, "witness does not reproduce the model");
            ensure!(
                is_v_integral(&w, &pb).unwrap(),
                "witness model not integral"
            );
            ensure!(
                ord(&w.critical_discriminant(), p) == 0,
                "witness ord nonzero"
            );
            let (_, _, rep) = reduce_map(&w, &pb).unwrap();
            ensure!(rep.model_good, "witness model is not good mod {p}");
            checked += 1;
        }
        // further congruence checks on scaled and non-integral copies
        for (q, k) in [(p, -2i64), (p, 3), (2, 1), (2, -1)] {
            let s = AffineAut::new(rat_pow(&rat_int(q), k), rat(1, q)).unwrap();
            let m = conjugate(&pair, &s);
            let r = local_minimize(&m, &BigInt::from(q), 2).map_err(|e| e.to_string())?;
            let v = ord(&m.critical_discriminant(), q);
            ensure!(
                (v - r.delta as i64).rem_euclid(n) == 0,
                "congruence fails for {m} at {q}"
            );
            checked += 1;
        }
        built += 1;
    }
    Ok(format!("50 constructed cases, {checked} minimizations"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    while n < 50 {
        let lambda = rand_nonzero(&mut rng, 12, &[1, 7, 11]);
        let pair = rand_f3_pair(&mut rng, 2, lambda.clone(), 40, &[1, 2, 3, 4, 5, 9, 25]);
        if !is_member(&pair).member {
            continue;
        }
        for p in [2i64, 3, 5] {
            let pb = BigInt::from(p);
            let r = local_minimize(&pair, &pb, 2).map_err(|e| e.to_string())?;
            let bound = ord(&(rat_int(4) * &lambda * &lambda), p) + 1;
            ensure!(
                r.delta as i64 <= bound,
                "{pair} at {p}: delta {} > {bound}",
                r.delta
            );
            let q = quadratic_remark_model(&pair, &pb, 2).map_err(|e| e.to_string())?;
            ensure!(q.ord_delta <= bound, "explicit model exceeds bound");
        }
        n += 1;
    }
    Ok("50 members at p = 2, 3, 5 within ord(4 lambda^2) + 1".into())
}

/// Independent check that `q = 2P`: the tangent at `P` meets the curve again
/// at `-q`, with `P` a double intersection.
fn is_double(f: &Cubic, p: (&Rat, &Rat), q: (&Rat, &Rat)) -> bool {
    let (x0, y0) = p;
    let (x3, y3) = q;
    let s = (rat_int(3) * x0 * x0 + rat_int(2) * f.a() * x0 + f.b()) / (rat_int(2) * y0);
    let line = |x: &Rat| &s * (x - x0) + y0;
    // f(x) - line(x)^2 = (x - x0)^2 (x - x3)
    let g = |x: &Rat| f.eval(x) - line(x) * line(x);
    let probe = [rat_int(0), rat_int(1), rat_int(-1), rat(1, 3)];
    let cubic_ok = probe.iter().all(|t| g(t) == (t - x0) * (t - x0) * (t - x3));
    cubic_ok && line(x3) == -y3 && y3 * y3 == f.eval(x3)
}

fn criterion_8() -> Check {
    let f = Cubic::from_ints(0, -1, 1).unwrap();
    let p = EllipticPoint::affine(Rat::zero(), Rat::one());
    let q = double_point(&p, &f).map_err(|e| e.to_string())?;
    ensure!(q.x() == Some(&rat(1, 4)), "x(2P) = {:?}", q.x());
    let phi = build_lattes(&f);
    ensure!(
        phi.a().eval(&Rat::zero()) / phi.b().eval(&Rat::zero()) == rat(1, 4),
        "phi(0) != 1/4"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut n = 0;
    while n < 50 {
        let x0 = rand_rat(&mut rng, 9, &[1, 2, 3]);
        let y0 = rand_nonzero(&mut rng, 9, &[1, 2, 5]);
        let a = rand_rat(&mut rng, 9, &[1, 4]);
        let b = rand_rat(&mut rng, 9, &[1, 3]);
        let c = &y0 * &y0 - &x0 * &x0 * &x0 - &a * &x0 * &x0 - &b * &x0;
        let Ok(f) = Cubic::new(a, b, c) else { continue };
        let p = EllipticPoint::affine(x0.clone(), y0.clone());
        let q = double_point(&p, &f).map_err(|e| e.to_string())?;
        let EllipticPoint::Affine { x: x3, y: y3 } = &q else {
            return Err("unexpected point at infinity".into());
        };
        ensure!(
            is_double(&f, (&x0, &y0), (x3, y3)),
            "tangent oracle rejects 2P on {f}"
        );
        let phi = build_lattes(&f);
        ensure!(
            &(phi.a().eval(&x0) / phi.b().eval(&x0)) == x3,
            "phi(x(P)) != x(2P) on {f}"
        );
        n += 1;
    }
    Ok("(0,1) on x^3-x+1 doubles to x = 1/4; 50 manufactured points commute".into())
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut cubics = vec![Cubic::from_ints(0, -1, 1).unwrap()];
    let mut checked = 0;
    let mut certified = 0;
    let mut attempts = 0;
    while cubics.len() < 20 {
        attempts += 1;
        ensure!(attempts < 10_000, "could not find 20 test cubics");
        let (a, b, c) = (
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
        );
        if let Ok(f) = Cubic::from_ints(a, b, c) {
            cubics.push(f);
        }
    }
    for (i, f) in cubics.iter().enumerate() {
        let w = weierstrass_invariants(f);
        let num = w.delta_e.numer().abs();
        for p in factorize(&num).unwrap().primes() {
            if *p == BigInt::from(2) {
                continue;
            }
            let rt = reduction_type_at(f, p).unwrap();
            if rt.kind != ReductionType::MultiplicativeMinimal {
                continue;
            }
            let s = szpiro_local_check(f, p, 2).map_err(|e| e.to_string())?;
            checked += 1;
            if s.certified {
                certified += 1;
                ensure!(s.holds, "{f} at {p}: 5*{} > {}", s.ord_delta_e, s.delta_phi);
            }
            if i == 0 {
                ensure!(
                    s.lhs == 5 && s.delta_phi == 5,
                    "x^3-x+1 at 23 gives {} vs {}",
                    s.lhs,
                    s.delta_phi
                );
            }
        }
    }
    ensure!(certified > 0, "no certified multiplicative primes found");
    Ok(format!(
        "{checked} multiplicative primes across 20 cubics, {certified} certified, all hold"
    ))
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut n = 0;
    while n < 20 {
        let d = 2 + n % 3;
        let pair = rand_f3_pair(&mut rng, d, rat_int([1i64, 2, 3][n % 3]), 9, &[1, 2]);
        if !is_member(&pair).member {
            continue;
        }
        let (c, _) = center(&pair);
        let g = minimal_critical_discriminant(&c, 2).map_err(|e| e.to_string())?;
        let mut support = pair.critical_discriminant().numer().abs();
        for coef in pair.coefficients() {
            support *= coef.denom();
        }
        for e in &g.entries {
            ensure!(
                support.is_multiple_of(&e.p),
                "prime {} outside the discriminant",
                e.p
            );
        }
        // a prime dividing nothing in sight has good reduction
        let q = BigInt::from(1_000_003);
        if !support.is_multiple_of(&q) {
            let r = local_minimize(&pair, &q, 2).map_err(|e| e.to_string())?;
            ensure!(r.delta == 0, "unexpected bad reduction at {q}");
        }
        n += 1;
    }
    Ok("finiteness results are not computations; covered by criteria 5-7, finite support on 20 members, and CLI scan determinism tests".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, criterion_1, 1),
        (2, criterion_2, 30),
        (3, criterion_3, 60),
        (4, criterion_4, 5),
        (5, criterion_5, 60),
        (6, criterion_6, 60),
        (7, criterion_7, 30),
        (8, criterion_8, 10),
        (9, criterion_9, 120),
        (10, criterion_10, 60),
    ];
    let mut failed = 0;
    for (id, run, limit) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{msg}; took {elapsed:.2?}, limit {limit} s"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id:>2}: PASS ({elapsed:.2?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL ({elapsed:.2?}) {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
