//! Exact critical discriminants of rational maps over the rationals.
//!
//! A degree `d` map fixing infinity with multiplier `lambda` is written as
//! `A(x)/B(x)` with `A` monic of degree `d` and `B` of degree `d - 1` with
//! leading coefficient `lambda`. The crate computes the Wronskian
//! `W = B A' - A B'` and its discriminant (the critical discriminant),
//! decides good reduction at primes, searches for minimal models prime by
//! prime, and checks the Lattès family identities against elliptic curve
//! data.
//!
//! All arithmetic is exact; nothing here uses floating point.

pub mod error;
pub mod exactnum;
pub mod family;
pub mod lattes;
pub mod reduction;
pub mod upoly;

pub use error::{Error, Result};
pub use exactnum::{BigInt, PrimeFactorization, Rat, Valuation};
pub use family::{AffineAut, MembershipReport, StandardPair};
pub use lattes::{
    ConjugationReport, Cubic, EllipticPoint, IdentityReport, ReductionType, ReductionTypeReport,
    SzpiroLocalCheck, WeierstrassInvariants,
};
pub use reduction::{
    GlobalDiscriminant, GlobalEntry, LocalMinimizationResult, QuadraticRemark, ReductionReport,
    SzpiroReport,
};
pub use upoly::{Degree, Poly, PolyModP};
