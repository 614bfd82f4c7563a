//! Text form of polynomials: `"4x^3-1/2*x+7"`.
//!
//! Parsing accepts `coeff "*"? "x" ("^" nat)?`, bare coefficients and bare
//! `x` terms joined by `+`/`-`, whitespace anywhere. Printing uses
//! descending powers, skips zero terms and writes `0` for the zero
//! polynomial; fractional coefficients get an explicit `*`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::Error;
use crate::exactnum::{BigInt, Rat};

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "{mag}*")?;
                }
            }
            match k {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in polynomial", self.pos))
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(Rat, usize), Error> {
    let coeff = match cur.digits() {
        Some(n) => {
            let n = BigInt::from_str(&n).unwrap();
            if cur.eat(b'/') {
                let d = cur
                    .digits()
                    .ok_or_else(|| cur.err("expected denominator"))?;
                let d = BigInt::from_str(&d).unwrap();
                if d.is_zero() {
                    return Err(cur.err("zero denominator"));
                }
                Some(Rat::new(n, d))
            } else {
                Some(Rat::from_integer(n))
            }
        }
        None => None,
    };
    let starred = coeff.is_some() && cur.eat(b'*');
    if cur.eat(b'x') {
        let power = if cur.eat(b'^') {
            let e = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
            e.parse::<usize>()
                .map_err(|_| cur.err("exponent too large"))?
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(Rat::one), power))
    } else if starred {
        Err(cur.err("expected x after *"))
    } else {
        coeff
            .map(|c| (c, 0))
            .ok_or_else(|| cur.err("expected term"))
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut cur = Cursor {
            s: &compact,
            pos: 0,
        };
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut negative = if cur.eat(b'-') {
            true
        } else {
            cur.eat(b'+');
            false
        };
        loop {
            let (c, k) = parse_term(&mut cur)?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            if negative {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
            match cur.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(cur.err("unexpected character")),
            }
            cur.pos += 1;
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}
