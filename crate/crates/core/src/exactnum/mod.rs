//! Arbitrary-precision integers, exact rationals and p-adic valuations.
//!
//! `BigInt` and `Rat` are the `num` types; `Rat` always holds a reduced
//! fraction with positive denominator. Text form is `"num/den"`, with the
//! denominator omitted when it is 1.

mod factor;
mod log;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{factorize, is_prime, PrimeFactorization};
pub use log::{format_ratio_6, ln_fixed};

pub use num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// `ord_p` of a rational: a finite integer, or `Infinity` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinity => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_from_bigint(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Exponent of `p` in a nonzero integer. `p` must be at least 2.
pub(crate) fn int_ord(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Valuation without the primality check, for inner loops where `p` is
/// already known to be prime.
pub(crate) fn ord_unchecked(q: &Rat, p: &BigInt) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinity;
    }
    let num = int_ord(q.numer(), p) as i64;
    let den = int_ord(q.denom(), p) as i64;
    Valuation::Finite(num - den)
}

/// Denominator coprime to `p`. Assumes `p` prime.
pub(crate) fn integral_unchecked(q: &Rat, p: &BigInt) -> bool {
    !q.denom().is_multiple_of(p)
}

fn check_prime(p: &BigInt) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

/// `ord_p(q)`: exponent of `p` in the numerator minus that in the
/// denominator; `Infinity` for `q = 0`.
pub fn padic_valuation(q: &Rat, p: &BigInt) -> Result<Valuation> {
    check_prime(p)?;
    Ok(ord_unchecked(q, p))
}

pub fn is_p_integral(q: &Rat, p: &BigInt) -> Result<bool> {
    check_prime(p)?;
    Ok(integral_unchecked(q, p))
}

/// Parses `"-3/8"`, `"17"` or `"+5"`. A zero denominator is rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(n, true) {
        return Err(bad());
    }
    let num = BigInt::from_str(n.strip_prefix('+').unwrap_or(n)).map_err(|_| bad())?;
    let den = match d {
        Some(d) if valid_int(d, false) => BigInt::from_str(d).map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

pub fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid integer {s:?}")));
    }
    BigInt::from_str(t.strip_prefix('+').unwrap_or(t))
        .map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
}

/// Text form of a rational; `Ratio`'s `Display` already omits a unit
/// denominator.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

/// `base^exp` for a signed exponent. `base` must be nonzero when `exp < 0`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    let mut acc = Rat::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// Serde adapter storing a `Rat` as its text form.
pub mod rat_string {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter storing a `BigInt` as a decimal string.
pub mod bigint_string {
    use super::{parse_bigint, BigInt};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        parse_bigint(&s).map_err(de::Error::custom)
    }
}

/// Serde adapter for a list of `BigInt`s as decimal strings.
pub mod bigint_vec_string {
    use super::{parse_bigint, BigInt};
    use serde::{de, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for n in v {
            seq.serialize_element(&n.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_bigint(s).map_err(de::Error::custom))
            .collect()
    }
}
