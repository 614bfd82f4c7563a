//! Integer factorization: trial division by the primes below 10^6, then
//! Brent's variant of Pollard rho with a fixed seed.

use std::sync::OnceLock;

use num_bigint::{BigInt, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const TRIAL_LIMIT: usize = 1_000_000;
const RHO_SEED: u64 = 0x00c0_ffee;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; TRIAL_LIMIT + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= TRIAL_LIMIT {
            if sieve[i] {
                let mut j = i * i;
                while j <= TRIAL_LIMIT {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(k, &is_p)| is_p.then_some(k as u32))
            .collect()
    })
}

/// Complete factorization `sign * prod p^e` of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    /// `1` or `-1`.
    pub sign: i8,
    /// Primes in strictly increasing order, each exponent at least 1.
    pub factors: Vec<(BigInt, u32)>,
}

impl PrimeFactorization {
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            acc *= num_traits::pow(p.clone(), *e as usize);
        }
        acc
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigInt, a: &BigInt, d: &BigInt, s: u64) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin. Deterministic below 3.3 * 10^24 (first thirteen prime
/// bases); above that, 16 extra seeded random bases are also tried.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(&BigInt::from(p)) {
            return false;
        }
    }
    let n1: BigInt = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    if !MR_BASES
        .iter()
        .all(|&a| strong_probable_prime(n, &BigInt::from(a), &d, s))
    {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    let two = BigInt::from(2);
    (0..16).all(|_| {
        let a = rng.gen_bigint_range(&two, &n1);
        strong_probable_prime(n, &a, &d, s)
    })
}

/// One nontrivial factor of a composite odd `n` with no small factors.
fn brent_rho(n: &BigInt) -> BigInt {
    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    let one = BigInt::one();
    loop {
        let c = rng.gen_bigint_range(&one, n);
        let mut y = rng.gen_bigint_range(&one, n);
        let m = 128u64;
        let mut g = BigInt::one();
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let step = |v: &BigInt| (v * v + &c) % n;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = step(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
}

fn split_large(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let f = brent_rho(&n);
    let rest = &n / &f;
    split_large(f, out);
    split_large(rest, out);
}

/// Complete factorization of a nonzero integer, primes ascending.
pub fn factorize(n: &BigInt) -> Result<PrimeFactorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factorize 0"));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }
    if !m.is_one() {
        let mut large = Vec::new();
        split_large(m, &mut large);
        large.sort();
        for p in large {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(PrimeFactorization { sign, factors })
}
