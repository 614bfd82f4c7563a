//! Local theory at a prime: integral models, reduction of maps, the descent
//! that searches for a model of smallest critical discriminant, and the
//! global minimal critical discriminant with its Szpiro-style ratio.
//!
//! Over the rationals the norm of the ideal `prod p^e` is the integer
//! `prod p^e` itself, so every ideal-valued quantity here is a positive
//! integer.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{
    bigint_string, bigint_vec_string, factorize, format_ratio_6, integral_unchecked, is_prime,
    ord_unchecked, rat_from_bigint, rat_pow, BigInt, Rat,
};
use crate::family::{
    center, conjugate, conjugate_unchecked, delta_exponent, is_member, AffineAut, StandardPair,
};
use crate::upoly::{Degree, PolyModP};

/// Default depth of multi-level jumps in [`local_minimize`].
pub const DEFAULT_M_MAX: i64 = 2;

/// Residue-search budget per descent level.
pub const SEARCH_CAP: u64 = 10_000_000;

fn require_prime(p: &BigInt) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

/// Primes at which `lambda` fails to be integral, ascending.
pub fn s_lambda(lambda: &Rat) -> Result<Vec<BigInt>> {
    if lambda.is_zero() {
        return Err(Error::domain("S_lambda needs lambda != 0"));
    }
    if lambda.denom().is_one() {
        return Ok(Vec::new());
    }
    Ok(factorize(lambda.denom())?.primes().cloned().collect())
}

/// All `a_j`, `b_j` and `lambda` are `p`-integral.
pub fn is_v_integral(pair: &StandardPair, p: &BigInt) -> Result<bool> {
    require_prime(p)?;
    Ok(pair.coefficients().all(|c| integral_unchecked(c, p)))
}

/// What survives of the map modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    /// The reduction of `A` still has degree `d`.
    pub reduced_degree_ok: bool,
    /// The reductions of `A` and `B` have no common factor.
    pub coprime: bool,
    /// Degree of the reduced Wronskian, `None` when it vanishes.
    pub wronskian_degree: Option<usize>,
    /// The reduced Wronskian is squarefree of degree `2d - 2`, or of degree
    /// `2d - 3` when `p` divides `lambda` (infinity is then the remaining
    /// simple critical point).
    pub critically_separable: bool,
    pub model_good: bool,
}

/// Reduces an integral model modulo `p`. The report is computed over `F_p`
/// only, without reference to the critical discriminant.
pub fn reduce_map(
    pair: &StandardPair,
    p: &BigInt,
) -> Result<(PolyModP, PolyModP, ReductionReport)> {
    let a = pair.a().reduce_mod_p(p)?;
    let b = pair.b().reduce_mod_p(p)?;
    let d = pair.d();
    let reduced_degree_ok = a.degree() == Degree::Finite(d);
    let coprime = !b.is_zero() && a.gcd(&b)?.coeffs().len() == 1;
    let w = b.mul(&a.derivative()).sub(&a.mul(&b.derivative()));
    let wronskian_degree = w.degree().finite();
    let critically_separable = match wronskian_degree {
        Some(k) if k + 3 >= 2 * d => w.is_squarefree()?,
        _ => false,
    };
    let model_good = reduced_degree_ok && coprime && critically_separable;
    Ok((
        a,
        b,
        ReductionReport {
            reduced_degree_ok,
            coprime,
            wronskian_degree,
            critically_separable,
            model_good,
        },
    ))
}

/// Outcome of the descent at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalMinimizationResult {
    #[serde(with = "bigint_string")]
    pub p: BigInt,
    /// `ord_p` of the critical discriminant of `minimal_model`.
    pub delta: u64,
    /// `delta < (2d-2)(2d-3)`, so no integral model can do better.
    pub certified: bool,
    /// `ord_p` of the critical discriminant after the first integralizing
    /// scaling, before any descent.
    pub initial_ord: u64,
    pub witness: AffineAut,
    pub minimal_model: StandardPair,
}

fn p_power(p: &BigInt, m: i64) -> Rat {
    rat_pow(&rat_from_bigint(p.clone()), m)
}

/// Least `m >= 0` such that scaling by `p^m` makes every coefficient
/// `p`-integral (`lambda` is assumed `p`-integral).
fn integralizing_exponent(pair: &StandardPair, p: &BigInt) -> i64 {
    let d = pair.d();
    let mut m = 0i64;
    let mut need = |c: &Rat, weight: usize| {
        if let Some(v) = ord_unchecked(c, p).finite() {
            if v < 0 {
                m = m.max(Integer::div_ceil(&-v, &(weight as i64)));
            }
        }
    };
    for j in 0..d {
        need(&pair.a_coeff(j), d - j);
    }
    for j in 0..d - 1 {
        need(&pair.b_coeff(j), d - 1 - j);
    }
    m
}

fn is_integral_model(pair: &StandardPair, p: &BigInt) -> bool {
    pair.coefficients().all(|c| integral_unchecked(c, p))
}

enum Level {
    Found(Box<(StandardPair, AffineAut)>),
    Exhausted,
    Capped,
}

/// Looks for `sigma = (p^-m, gamma / p^m)` with an integral conjugate.
///
/// Integer translations preserve integrality, so `gamma` only matters mod
/// `p^m`. The constant term of `B^sigma` forces `-gamma mod p` to be a root of
/// `B mod p`, which prunes the search to lifts of those roots.
fn search_level(model: &StandardPair, p: &BigInt, m: u32) -> Level {
    let b_bar = match model.b().reduce_mod_p(p) {
        Ok(b) => b,
        Err(_) => return Level::Capped,
    };
    let lift = num_traits::pow(p.clone(), m as usize - 1);
    let residues: Vec<BigInt> = if b_bar.is_zero() {
        vec![BigInt::zero()]
    } else {
        let pu = b_bar.modulus();
        b_bar
            .roots()
            .expect("nonzero polynomial")
            .into_iter()
            .map(|r| BigInt::from((pu - r) % pu))
            .collect()
    };
    let (step, count) = if b_bar.is_zero() {
        (BigInt::one(), &lift * p)
    } else {
        (p.clone(), &lift * BigInt::from(residues.len()))
    };
    if count > BigInt::from(SEARCH_CAP) {
        return Level::Capped;
    }
    let per_residue = if b_bar.is_zero() { &lift * p } else { lift };
    let per_residue = per_residue.to_u64().expect("bounded by the cap");
    let alpha = p_power(p, -(m as i64));
    for r in &residues {
        let mut gamma = r.clone();
        for _ in 0..per_residue {
            let beta = Rat::from_integer(gamma.clone()) * &alpha;
            let sigma = AffineAut::new(alpha.clone(), beta).expect("alpha != 0");
            let q = conjugate_unchecked(model, &sigma);
            if is_integral_model(&q, p) {
                return Level::Found(Box::new((q, sigma)));
            }
            gamma += &step;
        }
    }
    Level::Exhausted
}

struct Descent {
    model: StandardPair,
    sigma: AffineAut,
    ord: u64,
}

fn descend(mut st: Descent, p: &BigInt, m_max: i64) -> Descent {
    let n = delta_exponent(st.model.d());
    loop {
        if st.ord < n {
            return st;
        }
        let mut moved = false;
        for m in 1..=m_max.max(1) as u32 {
            if st.ord < n * m as u64 {
                break;
            }
            if let Level::Found(found) = search_level(&st.model, p, m) {
                let (q, s) = *found;
                st.model = q;
                st.sigma = s.compose(&st.sigma);
                st.ord -= n * m as u64;
                moved = true;
                break;
            }
        }
        if !moved {
            return st;
        }
    }
}

/// Searches for a `p`-integral model with the least `ord_p` of the critical
/// discriminant.
///
/// A non-integral input is first scaled by `p^m` with the least such `m`.
/// Then single-level steps `x -> x/p + gamma/p` are taken while one yields an
/// integral model, each lowering `ord_p` by `(2d-2)(2d-3)`. When that stalls
/// above the certificate threshold, jumps `x -> x/p^m + gamma/p^m` for
/// `2 <= m <= m_max` are tried, after which single steps resume. The search
/// is run from the input and from its centered form; the better outcome is
/// kept.
pub fn local_minimize(
    pair: &StandardPair,
    p: &BigInt,
    m_max: i64,
) -> Result<LocalMinimizationResult> {
    require_prime(p)?;
    if m_max < 0 {
        return Err(Error::domain(format!(
            "m_max = {m_max} must be nonnegative"
        )));
    }
    if !integral_unchecked(pair.lambda(), p) {
        return Err(Error::domain(format!(
            "{p} divides the denominator of lambda; delta is not defined there"
        )));
    }
    let delta_in = pair.critical_discriminant();
    if delta_in.is_zero() {
        return Err(Error::domain("critical discriminant vanishes"));
    }
    let v_in = ord_unchecked(&delta_in, p).finite().unwrap();
    let n = delta_exponent(pair.d()) as i64;

    let start = |tau: AffineAut| {
        let moved = conjugate_unchecked(pair, &tau);
        let m = integralizing_exponent(&moved, p);
        let scale = AffineAut::scaling(p_power(p, m)).expect("nonzero");
        let sigma = scale.compose(&tau);
        let model = conjugate_unchecked(&moved, &scale);
        let v_alpha = ord_unchecked(sigma.alpha(), p).finite().unwrap();
        let ord = v_in + n * v_alpha;
        debug_assert!(ord >= 0);
        Descent {
            model,
            sigma,
            ord: ord as u64,
        }
    };

    let first = start(AffineAut::identity());
    let initial_ord = first.ord;
    let mut best = descend(first, p, m_max);
    let (_, tau) = center(pair);
    if !tau.is_identity() && best.ord >= n as u64 {
        let other = descend(start(tau), p, m_max);
        if other.ord < best.ord {
            best = other;
        }
    }

    let model = conjugate(pair, &best.sigma);
    if model != best.model || !is_integral_model(&model, p) {
        return Err(Error::Consistency(
            "descent witness does not reproduce the model".into(),
        ));
    }
    let v_out = ord_unchecked(&model.critical_discriminant(), p)
        .finite()
        .unwrap();
    if v_out != best.ord as i64 {
        return Err(Error::Consistency(format!(
            "tracked ord {} differs from recomputed ord {v_out}",
            best.ord
        )));
    }
    Ok(LocalMinimizationResult {
        p: p.clone(),
        delta: best.ord,
        certified: best.ord < n as u64,
        initial_ord,
        witness: best.sigma,
        minimal_model: model,
    })
}

/// One prime of the minimal critical discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalEntry {
    #[serde(with = "bigint_string")]
    pub p: BigInt,
    pub delta: u64,
    pub certified: bool,
}

/// `prod p^delta_p` over primes outside `S_lambda`, as its nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalDiscriminant {
    #[serde(with = "bigint_vec_string")]
    pub excluded_primes: Vec<BigInt>,
    pub entries: Vec<GlobalEntry>,
}

impl GlobalDiscriminant {
    pub fn norm(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| num_traits::pow(e.p.clone(), e.delta as usize))
            .product()
    }

    pub fn radical(&self) -> BigInt {
        self.entries.iter().map(|e| e.p.clone()).product()
    }

    pub fn all_certified(&self) -> bool {
        self.entries.iter().all(|e| e.certified)
    }
}

/// Scales by the least positive integer that makes the pair integral at
/// every prime outside `S_lambda`, then minimizes at each prime dividing the
/// resulting critical discriminant.
pub fn minimal_critical_discriminant(
    pair: &StandardPair,
    m_max: i64,
) -> Result<GlobalDiscriminant> {
    let report = is_member(pair);
    if !report.member {
        return Err(Error::NotMember(format!(
            "{pair} fails the membership conditions"
        )));
    }
    let excluded = s_lambda(pair.lambda())?;
    let mut denominators = BigInt::one();
    for c in pair.coefficients() {
        denominators = denominators.lcm(c.denom());
    }
    let mut scale = BigInt::one();
    if !denominators.is_one() {
        for q in factorize(&denominators)?.primes() {
            if !excluded.contains(q) {
                let m = integralizing_exponent(pair, q);
                scale *= num_traits::pow(q.clone(), m as usize);
            }
        }
    }
    let model = conjugate(pair, &AffineAut::scaling(rat_from_bigint(scale))?);
    let delta = model.critical_discriminant();
    let mut entries = Vec::new();
    let num = delta.numer().abs();
    if !num.is_one() {
        for p in factorize(&num)?.primes() {
            if excluded.contains(p) {
                continue;
            }
            let r = local_minimize(&model, p, m_max)?;
            if r.delta > 0 {
                entries.push(GlobalEntry {
                    p: p.clone(),
                    delta: r.delta,
                    certified: r.certified,
                });
            }
        }
    }
    Ok(GlobalDiscriminant {
        excluded_primes: excluded,
        entries,
    })
}

/// Norms of the minimal critical discriminant and its radical, with the
/// logarithmic ratio that the conjectured bound `(2d-2)(2d-3) + eps`
/// concerns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzpiroReport {
    #[serde(with = "bigint_string")]
    pub norm_delta: BigInt,
    #[serde(with = "bigint_string")]
    pub norm_radical: BigInt,
    pub exponent_bound: u64,
    /// `log norm_delta / log norm_radical` to six decimals; `None` when the
    /// radical is 1.
    pub ratio: Option<String>,
    pub all_certified: bool,
}

pub fn szpiro_report(gd: &GlobalDiscriminant, d: usize) -> SzpiroReport {
    let pairs: Vec<(BigInt, u64)> = gd.entries.iter().map(|e| (e.p.clone(), e.delta)).collect();
    SzpiroReport {
        norm_delta: gd.norm(),
        norm_radical: gd.radical(),
        exponent_bound: delta_exponent(d),
        ratio: format_ratio_6(&pairs),
        all_certified: gd.all_certified(),
    }
}

/// The explicit low-discriminant model available in degree 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticRemark {
    /// `x^2 + p^(2m) a` over `lambda x`.
    pub model: StandardPair,
    /// Conjugation taking the input to `model`.
    pub sigma: AffineAut,
    pub m: i64,
    pub ord_delta: i64,
    /// `ord_p(4 lambda^2) + 1`.
    pub bound: i64,
    /// `delta` returned by [`local_minimize`] on the input.
    pub minimized_delta: u64,
}

/// Centers a degree 2 member to `x^2 + a` over `lambda x`, scales by `p^m`
/// with `0 <= ord_p(p^(2m) a) <= 1`, and checks that both this model and the
/// descent stay within `ord_p(4 lambda^2) + 1`.
pub fn quadratic_remark_model(
    pair: &StandardPair,
    p: &BigInt,
    m_max: i64,
) -> Result<QuadraticRemark> {
    require_prime(p)?;
    if pair.d() != 2 {
        return Err(Error::domain("quadratic model needs d = 2"));
    }
    let report = is_member(pair);
    if !report.member {
        return Err(Error::domain(format!("{pair} is not a family member")));
    }
    if !integral_unchecked(pair.lambda(), p) {
        return Err(Error::domain(format!(
            "{p} divides the denominator of lambda"
        )));
    }
    let (centered, tau) = center(pair);
    debug_assert!(centered.a_coeff(1).is_zero());
    let a = centered.a_coeff(0);
    let v = ord_unchecked(&a, p).finite().expect("a != 0 for a member");
    let m = -Integer::div_floor(&v, &2);
    let scale = AffineAut::scaling(p_power(p, m))?;
    let sigma = scale.compose(&tau);
    let model = conjugate(&centered, &scale);
    let lambda = pair.lambda();
    let delta = model.critical_discriminant();
    let expect = Rat::from_integer(BigInt::from(4)) * lambda * lambda * p_power(p, 2 * m) * &a;
    if delta != expect {
        return Err(Error::Consistency(
            "degree 2 discriminant formula failed".into(),
        ));
    }
    let ord_delta = ord_unchecked(&delta, p).finite().unwrap();
    let four_l2 = Rat::from_integer(BigInt::from(4)) * lambda * lambda;
    let bound = ord_unchecked(&four_l2, p).finite().unwrap() + 1;
    let minimized = local_minimize(pair, p, m_max)?;
    if ord_delta > bound || minimized.delta as i64 > bound {
        return Err(Error::Consistency(format!(
            "degree 2 bound {bound} exceeded: model {ord_delta}, descent {}",
            minimized.delta
        )));
    }
    Ok(QuadraticRemark {
        model,
        sigma,
        m,
        ord_delta,
        bound,
        minimized_delta: minimized.delta,
    })
}
