//! Recovering `(u, v)` from absolute invariants on the degree-3 locus.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{ab_ring, ab_to_uv, cubic_pair_symbolic, theta_critical, uv_ring, L3Point};
use crate::algebra::mpoly::MPoly;
use crate::algebra::rational::{int, Rational};
use crate::algebra::resultant::resultant_at;
use crate::algebra::roots::{rational_roots, upoly_rational_roots};
use crate::algebra::{RatFunc, UPoly};
use crate::invariants::{igusa_forms, AbsoluteInvariants};

/// `[J2, J4, J6, J10]` of `F·G` as rational functions of `u, v`.
pub fn l3_igusa_forms() -> &'static [RatFunc; 4] {
    static FORMS: OnceLock<[RatFunc; 4]> = OnceLock::new();
    FORMS.get_or_init(|| {
        let (f, g) = cubic_pair_symbolic();
        let fg = f.mul(&g);
        let ab = ab_ring();
        let images = [
            MPoly::zero(&ab),
            MPoly::var_at(&ab, 0),
            MPoly::var_at(&ab, 1),
        ];
        let by_power: Vec<MPoly> = fg.coeffs_in(0).iter().map(|c| c.compose(&images)).collect();
        let coeffs: [MPoly; 7] = std::array::from_fn(|k| by_power[6 - k].clone());
        igusa_forms(&coeffs).map(|j| ab_to_uv(&j).expect("Igusa invariants depend on (u, v) only"))
    })
}

/// `[i1, i2, i3]` of `F·G` as rational functions of `u, v`.
pub fn l3_absolute_forms() -> &'static [RatFunc; 3] {
    static FORMS: OnceLock<[RatFunc; 3]> = OnceLock::new();
    FORMS.get_or_init(|| {
        let [j2, j4, j6, j10] = l3_igusa_forms();
        let c = |k: i64| RatFunc::constant(&uv_ring(), int(k));
        let i1 = j4.mul(&c(144)).div(&j2.pow(2)).expect("J2 ≢ 0");
        let i2 = j2
            .mul(j4)
            .sub(&j6.mul(&c(3)))
            .mul(&c(-1728))
            .div(&j2.pow(3))
            .expect("J2 ≢ 0");
        let i3 = j10.mul(&c(486)).div(&j2.pow(5)).expect("J2 ≢ 0");
        [i1, i2, i3]
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L3Membership {
    /// Rational `(u, v)` whose invariants equal the input, ascending.
    pub points: Vec<L3Point>,
}

/// All rational `(u, v)` with `(i1, i2, i3)(u, v) = inv`.
///
/// With `p_k = num(i_k) − i_k·den(i_k)`, a nonzero resultant `Res_u(p_k, p_l)`
/// gives the candidate `v`; for each, the gcd of the specialized `p_k`
/// gives the candidate `u`, and every candidate is checked exactly.
pub fn l3_membership(inv: &AbsoluteInvariants) -> L3Membership {
    let forms = l3_absolute_forms();
    let targets = [&inv.i1, &inv.i2, &inv.i3];
    let ring = uv_ring();
    let eqs: Vec<MPoly> = forms
        .iter()
        .zip(targets)
        .map(|(f, t)| {
            f.num()
                .sub(&f.den().mul(&MPoly::constant(&ring, t.clone())))
        })
        .collect();
    let mut vs: BTreeSet<Rational> = BTreeSet::new();
    for (k, l) in [(0, 1), (0, 2), (1, 2)] {
        let r = resultant_at(&eqs[k], &eqs[l], 0);
        if !r.is_zero() {
            vs.extend(rational_roots(&r).unwrap_or_default());
            break;
        }
    }
    let mut points = BTreeSet::new();
    for v in vs {
        let mut g: Option<UPoly> = None;
        for e in &eqs {
            let s = UPoly::from_mpoly(&e.specialize(1, &v), 0).expect("univariate in u");
            if s.is_zero() {
                continue;
            }
            g = Some(match g {
                None => s,
                Some(h) => h.gcd(&s),
            });
        }
        let Some(g) = g else { continue };
        for u in upoly_rational_roots(&g) {
            let Ok(p) = L3Point::new(u, v.clone()) else {
                continue;
            };
            let pt = p.coords();
            let matches = forms
                .iter()
                .zip(targets)
                .all(|(f, t)| f.eval(&pt).is_ok_and(|x| &x == t));
            if matches {
                points.insert(p);
            }
        }
    }
    L3Membership {
        points: points.into_iter().collect(),
    }
}

/// Heuristic number of degree-3 elliptic subfield classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum E3Estimate {
    Zero,
    One,
    Two,
    /// Three or more rational witnesses: one of the exceptional curves.
    Four,
}

impl E3Estimate {
    pub fn count(self) -> u32 {
        match self {
            E3Estimate::Zero => 0,
            E3Estimate::One => 1,
            E3Estimate::Two => 2,
            E3Estimate::Four => 4,
        }
    }
}

/// `e3` read off the solver output: no witness gives 0, a witness on the
/// critical locus gives 1, a generic `ν`-pair gives 2, three or more
/// distinct witnesses flag one of the curves with 4.
pub fn e3_estimate(m: &L3Membership) -> E3Estimate {
    match m.points.len() {
        0 => E3Estimate::Zero,
        n if n >= 3 => E3Estimate::Four,
        _ if m.points.iter().any(theta_critical) => E3Estimate::One,
        _ => E3Estimate::Two,
    }
}
