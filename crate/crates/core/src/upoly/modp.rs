//! Polynomials over the prime field F_p, for `p < 2^63`.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{is_prime, BigInt, Rat};

pub(crate) fn prime_to_u64(p: &BigInt) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    match p.to_u64() {
        Some(v) if v < (1 << 63) => Ok(v),
        _ => Err(Error::domain(format!(
            "prime {p} too large for residue arithmetic"
        ))),
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Residue of a `p`-integral rational.
pub(crate) fn rat_mod(c: &Rat, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let n = c.numer().mod_floor(&pb).to_u64().unwrap();
    let d = c.denom().mod_floor(&pb).to_u64().unwrap();
    mul_mod(n, inv_mod(d, p), p)
}

/// Polynomial over F_p with coefficients in `[0, p)`, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    /// Reduces the given coefficients into `[0, p)`. `p` is trusted to be prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn from_ints(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i128;
        PolyModP::new(
            p,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(pi) as u64)
                .collect(),
        )
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> super::Degree {
        match self.coeffs.len() {
            0 => super::Degree::NegInfinity,
            n => super::Degree::Finite(n - 1),
        }
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &PolyModP) -> PolyModP {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyModP::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + o.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &PolyModP) -> PolyModP {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyModP::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &PolyModP) -> PolyModP {
        if self.is_zero() || o.is_zero() {
            return PolyModP::new(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        PolyModP::new(self.p, out)
    }

    pub fn derivative(&self) -> PolyModP {
        PolyModP::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    fn monic(&self) -> PolyModP {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                PolyModP::new(
                    self.p,
                    self.coeffs
                        .iter()
                        .map(|&c| mul_mod(c, inv, self.p))
                        .collect(),
                )
            }
        }
    }

    fn rem(&self, d: &PolyModP) -> PolyModP {
        let dd = d.coeffs.len() - 1;
        let inv = inv_mod(*d.coeffs.last().unwrap(), self.p);
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = mul_mod(*r.last().unwrap(), inv, self.p);
            for (j, &c) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - mul_mod(q, c, self.p)) % self.p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        PolyModP::new(self.p, r)
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd(&self, o: &PolyModP) -> Result<PolyModP> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::domain("gcd of two zero polynomials"));
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.monic())
    }

    /// `gcd(P, P')` is constant. Degree checks are left to the caller.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::domain("squarefree test of the zero polynomial"));
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.coeffs.len() == 1)
    }
}

impl PolyModP {
    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    fn quot(&self, d: &PolyModP) -> PolyModP {
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return PolyModP::new(self.p, Vec::new());
        }
        let inv = inv_mod(*d.coeffs.last().unwrap(), self.p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, self.p);
            q[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - mul_mod(c, dc, self.p)) % self.p;
            }
        }
        PolyModP::new(self.p, q)
    }

    /// `base^e mod self`.
    fn pow_rem(&self, base: &PolyModP, mut e: u64) -> PolyModP {
        let mut acc = PolyModP::new(self.p, vec![1]).rem(self);
        let mut b = base.rem(self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(self);
            }
            b = b.mul(&b).rem(self);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `[0, p)`, ascending. Errors on the zero polynomial.
    pub fn roots(&self) -> Result<Vec<u64>> {
        if self.is_zero() {
            return Err(Error::domain("roots of the zero polynomial"));
        }
        let p = self.p;
        if p <= 64 {
            return Ok((0..p).filter(|&x| self.eval(x) == 0).collect());
        }
        let f = self.monic();
        if f.coeffs.len() == 1 {
            return Ok(Vec::new());
        }
        let x = PolyModP::new(p, vec![0, 1]);
        let g = f.gcd(&f.pow_rem(&x, p).sub(&x))?;
        let mut out = Vec::new();
        let mut rng = 0x9e37_79b9_7f4a_7c15u64;
        split_roots(&g, &mut rng, &mut out);
        out.sort_unstable();
        Ok(out)
    }
}

/// Splits a monic squarefree product of linear factors (odd `p`).
fn split_roots(g: &PolyModP, state: &mut u64, out: &mut Vec<u64>) {
    let p = g.p;
    match g.coeffs.len() {
        0 | 1 => return,
        2 => {
            out.push((p - g.coeffs[0]) % p);
            return;
        }
        _ => {}
    }
    loop {
        // splitmix64 step for the shift
        *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        let delta = (z ^ (z >> 31)) % p;
        let t = g
            .pow_rem(&PolyModP::new(p, vec![delta, 1]), (p - 1) / 2)
            .sub(&PolyModP::new(p, vec![1]));
        let h = match g.gcd(&t) {
            Ok(h) => h,
            Err(_) => continue,
        };
        if h.coeffs.len() > 1 && h.coeffs.len() < g.coeffs.len() {
            let rest = g.quot(&h).monic();
            split_roots(&h, state, out);
            split_roots(&rest, state, out);
            return;
        }
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_rat = super::Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        );
        write!(f, "{as_rat} (mod {})", self.p)
    }
}
