//! Lattès maps of elliptic curves `y^2 = x^3 + a x^2 + b x + c`: the
//! degree 4 map sending `x(P)` to `x(2P)`, its discriminant identities, and
//! local reduction data of the curve at odd primes.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{
    bigint_string, is_prime, ord_unchecked, rat_int, rat_pow, rat_string, BigInt, Rat,
};
use crate::family::{conjugate, AffineAut, StandardPair};
use crate::reduction::local_minimize;
use crate::upoly::Poly;

/// Monic cubic `x^3 + a x^2 + b x + c` with distinct roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CubicJson", into = "CubicJson")]
pub struct Cubic {
    a: Rat,
    b: Rat,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct CubicJson {
    #[serde(with = "rat_string")]
    a: Rat,
    #[serde(with = "rat_string")]
    b: Rat,
    #[serde(with = "rat_string")]
    c: Rat,
}

impl TryFrom<CubicJson> for Cubic {
    type Error = Error;
    fn try_from(j: CubicJson) -> Result<Self> {
        Cubic::new(j.a, j.b, j.c)
    }
}

impl From<Cubic> for CubicJson {
    fn from(f: Cubic) -> Self {
        CubicJson {
            a: f.a,
            b: f.b,
            c: f.c,
        }
    }
}

fn cubic_poly(a: &Rat, b: &Rat, c: &Rat) -> Poly {
    Poly::from_coeffs(vec![c.clone(), b.clone(), a.clone(), Rat::one()])
}

impl Cubic {
    /// Errors when the cubic has a repeated root.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        let disc = cubic_poly(&a, &b, &c).disc()?;
        if disc.is_zero() {
            return Err(Error::domain(format!(
                "x^3 + ({a})x^2 + ({b})x + ({c}) has a repeated root"
            )));
        }
        Ok(Cubic { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Cubic::new(rat_int(a), rat_int(b), rat_int(c))
    }

    /// Reads a monic cubic polynomial.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        if f.degree() != crate::upoly::Degree::Finite(3) || !f.lc().is_one() {
            return Err(Error::domain(format!("{f} is not a monic cubic")));
        }
        Cubic::new(f.coeff(2), f.coeff(1), f.coeff(0))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn poly(&self) -> Poly {
        cubic_poly(&self.a, &self.b, &self.c)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.poly().eval(x)
    }

    pub fn disc(&self) -> Rat {
        self.poly().disc().expect("degree 3")
    }
}

impl std::fmt::Display for Cubic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// `A = x^4 - 2b x^2 - 8c x + b^2 - 4ac` over `B = 4 f(x)`.
pub fn build_lattes(cubic: &Cubic) -> StandardPair {
    let Cubic { a, b, c } = cubic;
    let two = rat_int(2);
    let four = rat_int(4);
    let a_poly = Poly::from_coeffs(vec![
        b * b - &four * a * c,
        -(rat_int(8) * c),
        -(&two * b),
        Rat::zero(),
        Rat::one(),
    ]);
    let b_poly = cubic.poly().scale(&four);
    StandardPair::new(4, four, a_poly, b_poly).expect("Lattes pair is in standard form")
}

/// Invariants of `y^2 = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassInvariants {
    #[serde(with = "rat_string")]
    pub disc_f: Rat,
    /// `16 disc(f)`.
    #[serde(with = "rat_string")]
    pub delta_e: Rat,
    /// `16 a^2 - 48 b`.
    #[serde(with = "rat_string")]
    pub c4: Rat,
    /// `c4^3 / delta_e`.
    #[serde(with = "rat_string")]
    pub j: Rat,
}

pub fn weierstrass_invariants(cubic: &Cubic) -> WeierstrassInvariants {
    let disc_f = cubic.disc();
    let delta_e = rat_int(16) * &disc_f;
    let c4 = rat_int(16) * &cubic.a * &cubic.a - rat_int(48) * &cubic.b;
    let j = &c4 * &c4 * &c4 / &delta_e;
    WeierstrassInvariants {
        disc_f,
        delta_e,
        c4,
        j,
    }
}

/// Both sides of the Lattès discriminant identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    #[serde(with = "rat_string")]
    pub delta_ab: Rat,
    /// `-2^38 disc(f)^5`.
    #[serde(with = "rat_string")]
    pub from_disc_f: Rat,
    /// `-2^18 delta_e^5`.
    #[serde(with = "rat_string")]
    pub from_delta_e: Rat,
    /// `A = f'^2 - (8x + 4a) f`.
    pub numerator_identity: bool,
    pub ok: bool,
}

/// Checks `Delta_{A,B} = -2^38 disc(f)^5 = -2^18 Delta_E^5` and the
/// numerator identity exactly. Any mismatch is a consistency error.
pub fn verify_identities(cubic: &Cubic) -> Result<IdentityReport> {
    let pair = build_lattes(cubic);
    let inv = weierstrass_invariants(cubic);
    let delta_ab = pair.critical_discriminant();
    let pow2 = |e: u32| Rat::from_integer(BigInt::one() << e);
    let from_disc_f = -(pow2(38) * rat_pow(&inv.disc_f, 5));
    let from_delta_e = -(pow2(18) * rat_pow(&inv.delta_e, 5));
    let f = cubic.poly();
    let fp = f.derivative();
    let lin = Poly::from_coeffs(vec![rat_int(4) * &cubic.a, rat_int(8)]);
    let numerator_identity = pair.a() == &(&(&fp * &fp) - &(&lin * &f));
    let ok = delta_ab == from_disc_f && delta_ab == from_delta_e && numerator_identity;
    if !ok {
        return Err(Error::Consistency(format!(
            "Lattes identities fail for {cubic}: Delta = {delta_ab}, -2^38 disc^5 = {from_disc_f}, \
             -2^18 Delta_E^5 = {from_delta_e}, numerator identity {numerator_identity}"
        )));
    }
    Ok(IdentityReport {
        delta_ab,
        from_disc_f,
        from_delta_e,
        numerator_identity,
        ok,
    })
}

/// A point of `y^2 = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EllipticPoint {
    Infinity,
    Affine {
        #[serde(with = "rat_string")]
        x: Rat,
        #[serde(with = "rat_string")]
        y: Rat,
    },
}

impl EllipticPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        EllipticPoint::Affine { x, y }
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            EllipticPoint::Infinity => None,
            EllipticPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn is_on(&self, cubic: &Cubic) -> bool {
        match self {
            EllipticPoint::Infinity => true,
            EllipticPoint::Affine { x, y } => y * y == cubic.eval(x),
        }
    }
}

/// `2P` by the tangent construction.
pub fn double_point(point: &EllipticPoint, cubic: &Cubic) -> Result<EllipticPoint> {
    if !point.is_on(cubic) {
        return Err(Error::domain("point is not on the curve"));
    }
    let (x, y) = match point {
        EllipticPoint::Infinity => return Ok(EllipticPoint::Infinity),
        EllipticPoint::Affine { x, y } => (x, y),
    };
    if y.is_zero() {
        return Ok(EllipticPoint::Infinity);
    }
    let slope = cubic.poly().derivative().eval(x) / (rat_int(2) * y);
    let x3 = &slope * &slope - &cubic.a - rat_int(2) * x;
    let y3 = -(&slope * (&x3 - x) + y);
    Ok(EllipticPoint::affine(x3, y3))
}

/// The cubic `alpha^3 f((x - beta)/alpha)`.
pub fn transformed_cubic(cubic: &Cubic, sigma: &AffineAut) -> Cubic {
    let inv = sigma.inverse();
    let f = cubic
        .poly()
        .affine_substitute(inv.alpha(), inv.beta())
        .scale(&rat_pow(sigma.alpha(), 3));
    Cubic::from_poly(&f).expect("affine change keeps a separable monic cubic")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationReport {
    pub f_star: Cubic,
    pub pair: StandardPair,
}

/// Checks that conjugating the Lattès map of `f` by `sigma` gives the Lattès
/// map of `alpha^3 f((x - beta)/alpha)`.
pub fn lattes_conjugation_check(cubic: &Cubic, sigma: &AffineAut) -> Result<ConjugationReport> {
    let f_star = transformed_cubic(cubic, sigma);
    let lhs = conjugate(&build_lattes(cubic), sigma);
    let rhs = build_lattes(&f_star);
    if lhs != rhs {
        return Err(Error::Consistency(format!(
            "conjugated Lattes map {lhs} differs from {rhs}"
        )));
    }
    Ok(ConjugationReport { f_star, pair: lhs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionType {
    Good,
    MultiplicativeMinimal,
    AdditiveOrNonminimal,
}

impl std::fmt::Display for ReductionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReductionType::Good => "good",
            ReductionType::MultiplicativeMinimal => "multiplicative-minimal",
            ReductionType::AdditiveOrNonminimal => "additive-or-nonminimal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTypeReport {
    #[serde(with = "bigint_string")]
    pub p: BigInt,
    pub kind: ReductionType,
    /// `k` in the integralizing change `x -> u^2 x` with `u = p^k`.
    pub scaling_k: i64,
    /// The integral model that was classified.
    pub model: Cubic,
    pub ord_delta_e: i64,
    pub ord_c4: Option<i64>,
}

fn require_odd_prime(p: &BigInt) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if *p == BigInt::from(2) {
        return Err(Error::domain("reduction type is not analyzed at p = 2"));
    }
    Ok(())
}

/// Classifies `y^2 = f(x)` at an odd prime, after scaling
/// `(a, b, c) -> (u^2 a, u^4 b, u^6 c)` with the least `u = p^k` that makes
/// the model integral.
pub fn reduction_type_at(cubic: &Cubic, p: &BigInt) -> Result<ReductionTypeReport> {
    require_odd_prime(p)?;
    let mut k = 0i64;
    for (coef, w) in [(&cubic.a, 2i64), (&cubic.b, 4), (&cubic.c, 6)] {
        if let Some(v) = ord_unchecked(coef, p).finite() {
            if v < 0 {
                k = k.max(Integer::div_ceil(&-v, &w));
            }
        }
    }
    let u = rat_pow(&Rat::from_integer(p.clone()), k);
    let model = Cubic::new(
        rat_pow(&u, 2) * &cubic.a,
        rat_pow(&u, 4) * &cubic.b,
        rat_pow(&u, 6) * &cubic.c,
    )?;
    let inv = weierstrass_invariants(&model);
    let ord_delta_e = ord_unchecked(&inv.delta_e, p).finite().unwrap();
    let ord_c4 = ord_unchecked(&inv.c4, p).finite();
    let kind = if ord_delta_e == 0 {
        ReductionType::Good
    } else if ord_c4 == Some(0) {
        ReductionType::MultiplicativeMinimal
    } else {
        ReductionType::AdditiveOrNonminimal
    };
    Ok(ReductionTypeReport {
        p: p.clone(),
        kind,
        scaling_k: k,
        model,
        ord_delta_e,
        ord_c4,
    })
}

/// Both sides of `5 ord_p(Delta_E,min) <= delta_p(phi)` at an odd prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzpiroLocalCheck {
    #[serde(with = "bigint_string")]
    pub p: BigInt,
    pub kind: ReductionType,
    pub ord_delta_e: i64,
    pub lhs: i64,
    pub delta_phi: u64,
    pub certified: bool,
    pub holds: bool,
}

/// Compares five times the minimal discriminant valuation of the curve with
/// the descent result for its Lattès map. Only good and multiplicative
/// primes are supported.
pub fn szpiro_local_check(cubic: &Cubic, p: &BigInt, m_max: i64) -> Result<SzpiroLocalCheck> {
    let rt = reduction_type_at(cubic, p)?;
    if rt.kind == ReductionType::AdditiveOrNonminimal {
        return Err(Error::domain(format!(
            "unsupported case: {cubic} is {} at {p}",
            rt.kind
        )));
    }
    let r = local_minimize(&build_lattes(cubic), p, m_max)?;
    let lhs = 5 * rt.ord_delta_e;
    Ok(SzpiroLocalCheck {
        p: p.clone(),
        kind: rt.kind,
        ord_delta_e: rt.ord_delta_e,
        lhs,
        delta_phi: r.delta,
        certified: r.certified,
        holds: lhs <= r.delta as i64,
    })
}
