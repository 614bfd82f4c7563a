//! Fixed-point natural logarithms of integers, used to print log-quotients
//! to six correctly rounded decimals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `2^bits * atanh(num/den)` truncated, for `0 <= num/den <= 1/3`.
fn atanh_fixed(num: &BigInt, den: &BigInt, bits: u64) -> BigInt {
    let mut power = (num << bits) / den;
    let num2 = num * num;
    let den2 = den * den;
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !power.is_zero() {
        sum += &power / k;
        power = power * &num2 / &den2;
        k += 2;
    }
    sum
}

/// `2^bits * ln(n)` for `n >= 1`, with absolute error below `2^-(bits - 16)`
/// for any `n` of practical size.
pub fn ln_fixed(n: &BigInt, bits: u64) -> BigInt {
    assert!(n.is_positive(), "logarithm of a non-positive integer");
    let work = bits + 32;
    // n = 2^k * m with 1 <= m < 2
    let k = n.bits() - 1;
    let pow = BigInt::one() << k;
    let ln2 = atanh_fixed(&BigInt::one(), &BigInt::from(3), work) * 2;
    let rest = atanh_fixed(&(n - &pow), &(n + &pow), work) * 2;
    (ln2 * k + rest) >> 32u32
}

/// `sum e_i ln p_i / sum ln p_i`, rounded half-up to six decimals.
///
/// Returns `None` for an empty input (quotient undefined). When every
/// exponent is equal the quotient is that exponent exactly; otherwise it is
/// irrational and never sits on a rounding boundary, so the precision is
/// raised until the seventh digit is unambiguous.
pub fn format_ratio_6(entries: &[(BigInt, u64)]) -> Option<String> {
    let first = entries.first()?;
    if entries.iter().all(|(_, e)| *e == first.1) {
        return Some(format!("{}.000000", first.1));
    }
    let mut bits = 160u64;
    loop {
        let logs: Vec<BigInt> = entries.iter().map(|(p, _)| ln_fixed(p, bits)).collect();
        let den: BigInt = logs.iter().sum();
        let num: BigInt = logs.iter().zip(entries).map(|(l, (_, e))| l * *e).sum();
        // 20 guard digits beyond the six printed ones
        let guard = num_traits::pow(BigInt::from(10), 20);
        let scaled = num * num_traits::pow(BigInt::from(10), 6) * &guard / &den;
        let (whole, frac) = scaled.div_rem(&guard);
        let half = &guard / 2;
        let margin = BigInt::from(1_000_000);
        let diff: BigInt = &frac - &half;
        if diff.abs() > margin {
            let micro = if frac >= half { whole + 1 } else { whole };
            let (int_part, dec) = micro.div_rem(&BigInt::from(1_000_000));
            return Some(format!("{int_part}.{dec:0>6}"));
        }
        bits *= 2;
    }
}
