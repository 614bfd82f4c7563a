//! Fraction-free resultants over Z via the subresultant PRS.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactnum::BigInt;

/// Integer polynomial, ascending powers, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; panics on the zero polynomial.
    fn deg(&self) -> usize {
        self.0.len() - 1
    }

    fn lc(&self) -> &BigInt {
        self.0
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Exact division; the quotient is integral by the PRS theory.
    fn div_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(
            self.0
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "subresultant step left a denominator");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        let lcb = b.lc().clone();
        let mut r = self.0.clone();
        let mut e = self.deg() - db + 1;
        while r.len() > db {
            let k = r.len() - 1 - db;
            let lead = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lcb;
            }
            for (j, bc) in b.0.iter().enumerate() {
                r[k + j] -= &lead * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            e -= 1;
        }
        IntPoly::new(r).scale(&num_traits::pow(lcb, e))
    }
}

/// Standard resultant `lc(a)^deg(b) * prod b(r)` over the roots `r` of `a`,
/// computed without ever leaving Z. Both inputs must be nonzero.
pub fn subresultant_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    assert!(!a.is_zero() && !b.is_zero(), "resultant of zero polynomial");
    let (mut a, mut b, mut s) = if a.deg() < b.deg() {
        let s = if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            -1
        } else {
            1
        };
        (b.clone(), a.clone(), s)
    } else {
        (a.clone(), b.clone(), 1)
    };
    if b.deg() == 0 {
        return BigInt::from(s) * num_traits::pow(b.lc().clone(), a.deg());
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_exact(&ca);
    b = b.div_exact(&cb);
    let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        b = r.div_exact(&(&g * num_traits::pow(h.clone(), delta)));
        g = a.lc().clone();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1);
        }
        if b.deg() == 0 {
            let da = a.deg();
            let hn = num_traits::pow(b.lc().clone(), da) / num_traits::pow(h, da - 1);
            return BigInt::from(s) * t * hn;
        }
    }
}
