//! Benchmark inputs shared by the criterion targets.

use splitjac::algebra::{int, vars, MPoly};
use splitjac::invariants::Sextic;

/// Dense bivariate polynomial in `x, y` of total degree `d` with
/// deterministic small coefficients.
pub fn dense_xy(d: u32, seed: i64) -> MPoly {
    let ring = vars(&["x", "y"]);
    let terms = (0..=d)
        .flat_map(|i| (0..=d - i).map(move |j| (i, j)))
        .map(|(i, j)| {
            let c = (seed + 7 * i as i64 + 13 * j as i64) % 11 - 5;
            (vec![i, j], int(c))
        });
    MPoly::from_terms(&ring, terms)
}

/// A pair sharing the common factor `x + y + 1`.
pub fn gcd_pair(d: u32) -> (MPoly, MPoly) {
    let f = MPoly::parse("x + y + 1", &vars(&["x", "y"])).unwrap();
    (dense_xy(d, 1).mul(&f), dense_xy(d, 4).mul(&f))
}

/// Sextics with growing coefficient heights.
pub fn sextics() -> Vec<Sextic> {
    [
        "1,0,0,0,0,1,1",
        "4,5,7,8,4,3,1",
        "17,-3/5,29,-11,7/2,101,-13",
    ]
    .iter()
    .map(|s| Sextic::parse(s).unwrap())
    .collect()
}
