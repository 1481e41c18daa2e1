//! Both degree-3 subcovers degenerate: the relation `729j1j2 = (j2 − 432)³`.

use num_traits::Zero;

use crate::algebra::mpoly::{vars, MPoly, Vars};
use crate::algebra::rational::{int, Rational};
use crate::algebra::resultant::resultant_at;
use crate::algebra::{QuadraticAlg, UPoly};

fn j_ring() -> Vars {
    vars(&["j1", "j2"])
}

/// `729·j1·j2 − (j2 − 432)³ = 0`.
pub fn degenerate_relation(j1: &Rational, j2: &Rational) -> bool {
    let t = j2 - int(432);
    (int(729) * j1 * j2 - &t * &t * &t).is_zero()
}

/// Solutions of the degenerate system, grouped by branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateSolutions {
    /// `j³ − 2025j² + 559872j − 80621568`, the restriction to `j1 = j2`.
    pub diagonal_cubic: UPoly,
    /// The rational diagonal root.
    pub diagonal_rational: Rational,
    /// The remaining diagonal quadratic.
    pub diagonal_quadratic: QuadraticAlg,
    /// Monic squarefree polynomial in `j1` whose roots are the off-diagonal
    /// solutions; each root determines `j2 = (j1 − 432)³/(729j1)`.
    pub mixed_minpoly: UPoly,
    pub mixed_count: usize,
    pub total_count: usize,
}

fn squarefree(p: &UPoly) -> UPoly {
    let g = p.gcd(&p.derivative());
    p.divrem(&g).0.monic()
}

/// Solves `729j1j2 = (j1 − 432)³`, `j1² + j2² − 1296(j1 + j2) + j1j2 + 559872 = 0`
/// over `ℚ̄`, together with the diagonal `j1 = j2` of the symmetric system.
pub fn degenerate_solutions() -> DegenerateSolutions {
    let ring = j_ring();
    let p = |s: &str| MPoly::parse(s, &ring).expect("static polynomial");
    let first = p("729j1j2 - (j1 - 432)^3");
    let second = p("j1^2 + j2^2 - 1296(j1 + j2) + j1j2 + 559872");

    let diag_images = [MPoly::var_at(&ring, 0), MPoly::var_at(&ring, 0)];
    let diag = first.compose(&diag_images).neg();
    let diagonal_cubic = UPoly::from_mpoly(&diag, 0).expect("univariate").monic();
    let linear = UPoly::linear_root(&int(1728));
    let (quot, rem) = diagonal_cubic.divrem(&linear);
    assert!(rem.is_zero(), "1728 is a diagonal root");
    let c = quot.coeffs();
    let diagonal_quadratic = QuadraticAlg::new(-c[1].clone(), c[0].clone());

    let res = resultant_at(&first, &second, 1);
    let mut mixed = squarefree(&UPoly::from_mpoly(&res, 0).expect("univariate in j1"));
    for root in [int(0)] {
        let l = UPoly::linear_root(&root);
        while mixed.divrem(&l).1.is_zero() {
            mixed = mixed.divrem(&l).0;
        }
    }
    let shared = mixed.gcd(&diagonal_cubic);
    if shared.degree().unwrap_or(0) > 0 {
        mixed = mixed.divrem(&shared).0.monic();
    }
    let mixed_count = mixed.degree().unwrap_or(0);
    let diagonal_count = squarefree(&diagonal_cubic).degree().unwrap_or(0);
    DegenerateSolutions {
        diagonal_cubic,
        diagonal_rational: int(1728),
        diagonal_quadratic,
        mixed_minpoly: mixed,
        mixed_count,
        total_count: diagonal_count + mixed_count,
    }
}
