//! Univariate polynomials over Q and over prime fields.
//!
//! The resultant and discriminant use the subresultant PRS over Z after
//! clearing denominators. Orientation: `resultant(x - a, x - b) = b - a`,
//! and `disc(P) = (-1)^(N(N-1)/2) * resultant(P, P') / lc(P)`.

mod modp;
mod resultant;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rat, integral_unchecked, BigInt, Rat};

pub use modp::PolyModP;
pub use resultant::{subresultant_resultant, IntPoly};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(n) => Some(n),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::NegInfinity => f.write_str("-inf"),
        }
    }
}

/// Polynomial with rational coefficients, ascending powers, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Coefficients in ascending order of power; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    /// `c * x^n`.
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `P(alpha x + beta)` by Horner's rule in `Q[x]`.
    pub fn affine_substitute(&self, alpha: &Rat, beta: &Rat) -> Self {
        let lin = Poly::from_coeffs(vec![beta.clone(), alpha.clone()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * &lin) + &Poly::constant(c.clone())
        })
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lc().recip())
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let inv = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &inv;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::domain("gcd of two zero polynomials"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.monic())
    }

    /// Least common multiple of the coefficient denominators, and the
    /// integer polynomial `lcm * self`.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        (l, IntPoly::new(ints))
    }

    /// Resultant oriented so that `resultant(x - a, x - b) = b - a`, i.e.
    /// `lc(Q)^deg P * prod P(s)` over the roots `s` of `Q`.
    pub fn resultant(&self, other: &Poly) -> Result<Rat> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::domain("resultant with the zero polynomial"));
        }
        let m = self.coeffs.len() - 1;
        let n = other.coeffs.len() - 1;
        let (lp, ip) = self.clear_denominators();
        let (lq, iq) = other.clear_denominators();
        // standard Res(P, Q) = lc(P)^n prod Q(r); scaling P by c scales it by c^n
        let std_int = subresultant_resultant(&ip, &iq);
        let scale = num_traits::pow(lp, n) * num_traits::pow(lq, m);
        let mut res = Rat::new(std_int, scale);
        if (m * n) % 2 == 1 {
            res = -res;
        }
        Ok(res)
    }

    /// `a^(2N-2) prod_{m<n} (r_m - r_n)^2`. Requires degree at least 1.
    pub fn disc(&self) -> Result<Rat> {
        let n = match self.degree() {
            Degree::Finite(n) if n >= 1 => n,
            d => {
                return Err(Error::domain(format!(
                    "discriminant needs degree >= 1, got {d}"
                )))
            }
        };
        let r = self.resultant(&self.derivative())?;
        let mut d = r / self.lc();
        if (n * (n - 1) / 2) % 2 == 1 {
            d = -d;
        }
        Ok(d)
    }

    /// Coefficientwise reduction modulo the prime `p` (which must fit in 63
    /// bits). Fails on the first coefficient that is not `p`-integral.
    pub fn reduce_mod_p(&self, p: &BigInt) -> Result<PolyModP> {
        let pu = modp::prime_to_u64(p)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !integral_unchecked(c, p) {
                return Err(Error::NotIntegral {
                    index: i,
                    coefficient: format_rat(c),
                    p: p.to_string(),
                });
            }
            out.push(modp::rat_mod(c, pu));
        }
        Ok(PolyModP::new(pu, out))
    }

    /// Every coefficient is `p`-integral.
    pub fn is_p_integral(&self, p: &BigInt) -> bool {
        self.coeffs.iter().all(|c| integral_unchecked(c, p))
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Bit size of the largest numerator or denominator.
    pub fn height_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().abs().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}
