//! Standard-form pairs `(A, B)`, their Wronskian and critical discriminant,
//! conjugation by `x -> alpha x + beta`, and membership in `F_{d,lambda}`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat_from_bigint, rat_pow, rat_string, BigInt, Rat};
use crate::upoly::{Degree, Poly};

/// A pair `A = x^d + a_{d-1} x^{d-1} + ... + a_0`,
/// `B = lambda x^{d-1} + b_{d-2} x^{d-2} + ... + b_0`, representing the map
/// `A/B`, which fixes infinity with multiplier `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PairJson", into = "PairJson")]
pub struct StandardPair {
    d: usize,
    lambda: Rat,
    a: Poly,
    b: Poly,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    d: usize,
    #[serde(with = "rat_string")]
    lambda: Rat,
    #[serde(rename = "A")]
    a: Poly,
    #[serde(rename = "B")]
    b: Poly,
}

impl TryFrom<PairJson> for StandardPair {
    type Error = Error;
    fn try_from(j: PairJson) -> Result<Self> {
        StandardPair::new(j.d, j.lambda, j.a, j.b)
    }
}

impl From<StandardPair> for PairJson {
    fn from(p: StandardPair) -> Self {
        PairJson {
            d: p.d,
            lambda: p.lambda,
            a: p.a,
            b: p.b,
        }
    }
}

impl StandardPair {
    /// Checks `d >= 2`, `lambda != 0`, `A` monic of degree `d` and `B` of
    /// degree `d - 1` with leading coefficient `lambda`.
    pub fn new(d: usize, lambda: Rat, a: Poly, b: Poly) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain(format!("degree d = {d} must be at least 2")));
        }
        if lambda.is_zero() {
            return Err(Error::domain("multiplier lambda must be nonzero"));
        }
        if a.degree() != Degree::Finite(d) || !a.lc().is_one() {
            return Err(Error::domain(format!("A = {a} is not monic of degree {d}")));
        }
        if b.degree() != Degree::Finite(d - 1) || b.lc() != lambda {
            return Err(Error::domain(format!(
                "B = {b} must have degree {} and leading coefficient {lambda}",
                d - 1
            )));
        }
        Ok(StandardPair { d, lambda, a, b })
    }

    /// Builds the pair from the lower coefficients `a_0..a_{d-1}` and
    /// `b_0..b_{d-2}`.
    pub fn from_lower_coeffs(lambda: Rat, a_low: &[Rat], b_low: &[Rat]) -> Result<Self> {
        let d = a_low.len();
        if b_low.len() + 1 != d {
            return Err(Error::domain("need d coefficients for A and d - 1 for B"));
        }
        let mut a = a_low.to_vec();
        a.push(Rat::one());
        let mut b = b_low.to_vec();
        b.push(lambda.clone());
        StandardPair::new(d, lambda, Poly::from_coeffs(a), Poly::from_coeffs(b))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    /// `a_j`, the coefficient of `x^j` in `A`.
    pub fn a_coeff(&self, j: usize) -> Rat {
        self.a.coeff(j)
    }

    /// `b_j`, the coefficient of `x^j` in `B`.
    pub fn b_coeff(&self, j: usize) -> Rat {
        self.b.coeff(j)
    }

    /// All coefficients that must be integral for the model to be
    /// integral: the `a_j`, the `b_j` and `lambda`.
    pub fn coefficients(&self) -> impl Iterator<Item = &Rat> {
        self.a.coeffs().iter().chain(self.b.coeffs().iter())
    }

    /// `(2d-2)(2d-3)`: the exponent of `alpha` in the change of the critical
    /// discriminant under conjugation.
    pub fn delta_exponent(&self) -> u64 {
        delta_exponent(self.d)
    }

    pub fn wronskian(&self) -> Poly {
        wronskian(self)
    }

    pub fn critical_discriminant(&self) -> Rat {
        critical_discriminant(self)
    }
}

impl std::fmt::Display for StandardPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.a, self.b)
    }
}

pub fn delta_exponent(d: usize) -> u64 {
    let d = d as u64;
    (2 * d - 2) * (2 * d - 3)
}

/// The automorphism `x -> alpha x + beta` of the affine line, `alpha != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineAut {
    #[serde(with = "rat_string")]
    alpha: Rat,
    #[serde(with = "rat_string")]
    beta: Rat,
}

impl AffineAut {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::domain("automorphism needs alpha != 0"));
        }
        Ok(AffineAut { alpha, beta })
    }

    pub fn identity() -> Self {
        AffineAut {
            alpha: Rat::one(),
            beta: Rat::zero(),
        }
    }

    pub fn scaling(alpha: Rat) -> Result<Self> {
        AffineAut::new(alpha, Rat::zero())
    }

    pub fn translation(beta: Rat) -> Self {
        AffineAut {
            alpha: Rat::one(),
            beta,
        }
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    pub fn apply(&self, x: &Rat) -> Rat {
        &self.alpha * x + &self.beta
    }

    /// `self o inner`, i.e. `x -> self(inner(x))`.
    pub fn compose(&self, inner: &AffineAut) -> AffineAut {
        AffineAut {
            alpha: &self.alpha * &inner.alpha,
            beta: &self.alpha * &inner.beta + &self.beta,
        }
    }

    pub fn inverse(&self) -> AffineAut {
        let inv = self.alpha.recip();
        AffineAut {
            beta: -(&self.beta * &inv),
            alpha: inv,
        }
    }
}

/// `W = B A' - A B'`, of degree exactly `2d - 2` with leading coefficient
/// `lambda`.
pub fn wronskian(pair: &StandardPair) -> Poly {
    let w = raw_wronskian(&pair.a, &pair.b);
    debug_assert_eq!(w.degree(), Degree::Finite(2 * pair.d - 2));
    debug_assert_eq!(&w.lc(), pair.lambda());
    w
}

/// `B A' - A B'` for arbitrary polynomials.
pub fn raw_wronskian(a: &Poly, b: &Poly) -> Poly {
    &(b * &a.derivative()) - &(a * &b.derivative())
}

/// `disc(W)`.
pub fn critical_discriminant(pair: &StandardPair) -> Rat {
    wronskian(pair)
        .disc()
        .expect("Wronskian of a standard pair has degree >= 2")
}

/// `(d - lambda) / ((d - 1) lambda)`.
pub fn epsilon(d: usize, lambda: &Rat) -> Result<Rat> {
    if lambda.is_zero() {
        return Err(Error::domain("epsilon needs lambda != 0"));
    }
    if d < 2 {
        return Err(Error::domain("epsilon needs d >= 2"));
    }
    let dr = Rat::from_integer(BigInt::from(d));
    let dm1 = Rat::from_integer(BigInt::from(d - 1));
    Ok((&dr - lambda) / (dm1 * lambda))
}

/// Flags for the four defining conditions of `F_{d,lambda}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    /// `A` and `B` have no common root (`res(A, B) != 0`).
    pub degree_ok: bool,
    /// Infinity is fixed with multiplier `lambda`; holds by construction.
    pub multiplier_ok: bool,
    /// `a_{d-1} = epsilon * b_{d-2}`.
    pub f3_ok: bool,
    /// The critical discriminant is nonzero.
    pub separable_ok: bool,
    #[serde(with = "rat_string")]
    pub epsilon: Rat,
    #[serde(with = "rat_string")]
    pub delta: Rat,
    pub member: bool,
}

pub fn is_member(pair: &StandardPair) -> MembershipReport {
    let d = pair.d;
    let eps = epsilon(d, &pair.lambda).expect("valid pair has lambda != 0");
    let degree_ok = !pair
        .a
        .resultant(&pair.b)
        .expect("A and B are nonzero")
        .is_zero();
    let f3_ok = pair.a_coeff(d - 1) == &eps * pair.b_coeff(d - 2);
    let delta = critical_discriminant(pair);
    let separable_ok = !delta.is_zero();
    debug_assert!(!separable_ok || degree_ok);
    MembershipReport {
        degree_ok,
        multiplier_ok: true,
        f3_ok,
        separable_ok,
        member: degree_ok && f3_ok && separable_ok,
        epsilon: eps,
        delta,
    }
}

/// The pair of `sigma o phi o sigma^{-1}`:
/// `A^s = alpha^d A(u) + alpha^{d-1} beta B(u)`, `B^s = alpha^{d-1} B(u)` with
/// `u = (x - beta)/alpha`.
///
/// Debug builds confirm that the critical discriminant picks up exactly the
/// factor `alpha^((2d-2)(2d-3))`.
pub fn conjugate(pair: &StandardPair, sigma: &AffineAut) -> StandardPair {
    let out = conjugate_unchecked(pair, sigma);
    #[cfg(debug_assertions)]
    check_delta_change(pair, &out, sigma);
    out
}

pub(crate) fn conjugate_unchecked(pair: &StandardPair, sigma: &AffineAut) -> StandardPair {
    if sigma.is_identity() {
        return pair.clone();
    }
    let d = pair.d as i64;
    let inv = sigma.inverse();
    let a_sub = pair.a.affine_substitute(inv.alpha(), inv.beta());
    let b_sub = pair.b.affine_substitute(inv.alpha(), inv.beta());
    let ad = rat_pow(&sigma.alpha, d);
    let ad1 = rat_pow(&sigma.alpha, d - 1);
    let a_new = &a_sub.scale(&ad) + &b_sub.scale(&(&ad1 * &sigma.beta));
    let b_new = b_sub.scale(&ad1);
    StandardPair {
        d: pair.d,
        lambda: pair.lambda.clone(),
        a: a_new,
        b: b_new,
    }
}

#[cfg(debug_assertions)]
fn check_delta_change(before: &StandardPair, after: &StandardPair, sigma: &AffineAut) {
    use crate::exactnum::{factorize, ord_unchecked};

    // above about 10^4 decimal digits only valuations are compared
    const EXACT_CHECK_BITS: u64 = 33_220;
    let exp = before.delta_exponent() as i64;
    let d0 = before.critical_discriminant();
    let d1 = after.critical_discriminant();
    let big = d0.numer().bits().max(d0.denom().bits()) > EXACT_CHECK_BITS;
    if !big {
        assert_eq!(
            d1,
            rat_pow(&sigma.alpha, exp) * &d0,
            "critical discriminant law violated"
        );
        return;
    }
    assert_eq!(d0.is_zero(), d1.is_zero());
    if d0.is_zero() {
        return;
    }
    for part in [sigma.alpha.numer(), sigma.alpha.denom()] {
        let f = factorize(part).expect("alpha is nonzero");
        for p in f.primes() {
            let va = ord_unchecked(&sigma.alpha, p).finite().unwrap();
            let v0 = ord_unchecked(&d0, p).finite().unwrap();
            let v1 = ord_unchecked(&d1, p).finite().unwrap();
            assert_eq!(
                v1,
                v0 + exp * va,
                "critical discriminant law violated at {p}"
            );
        }
    }
}

/// Translates so that `b_{d-2} = 0`. Returns the centered pair and the
/// translation `x -> x + b_{d-2} / ((d-1) lambda)` that produced it.
pub fn center(pair: &StandardPair) -> (StandardPair, AffineAut) {
    let d = pair.d;
    let dm1 = rat_from_bigint(BigInt::from(d - 1));
    let beta = pair.b_coeff(d - 2) / (dm1 * &pair.lambda);
    let sigma = AffineAut::translation(beta);
    let out = conjugate(pair, &sigma);
    debug_assert!(out.b_coeff(d - 2).is_zero());
    (out, sigma)
}
