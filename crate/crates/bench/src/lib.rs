//! Fixed inputs shared by the benchmarks.

use critdisc::exactnum::rat_int;
use critdisc::family::{conjugate, AffineAut, StandardPair};
use critdisc::lattes::{build_lattes, Cubic};
use critdisc::Poly;

/// Lattès pairs of a few integral cubics with distinct roots.
pub fn lattes_pairs() -> Vec<StandardPair> {
    [(0, 1, 0), (0, -1, 1), (3, -7, 11), (-17, 5, 19)]
        .into_iter()
        .map(|(a, b, c)| build_lattes(&Cubic::from_ints(a, b, c).unwrap()))
        .collect()
}

/// Dense integer polynomials of degree `n` with a simple deterministic
/// coefficient pattern.
pub fn dense_pair(n: usize) -> (Poly, Poly) {
    let f: Vec<i64> = (0..=n as i64)
        .map(|i| (i * 7 + 3) % 19 - 9)
        .chain([1])
        .collect();
    let g: Vec<i64> = (0..n as i64)
        .map(|i| (i * 11 + 5) % 23 - 11)
        .chain([2])
        .collect();
    (Poly::from_ints(&f), Poly::from_ints(&g))
}

/// The Lattès map of `x^3 - x + 1` scaled by `p^k`, so the descent has work
/// to undo.
pub fn scaled_lattes(p: i64, k: i64) -> StandardPair {
    let pair = build_lattes(&Cubic::from_ints(0, -1, 1).unwrap());
    let alpha = critdisc::exactnum::rat_pow(&rat_int(p), k);
    conjugate(&pair, &AffineAut::new(alpha, rat_int(1)).unwrap())
}
