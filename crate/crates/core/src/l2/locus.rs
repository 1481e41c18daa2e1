//! Implicit equation of `L2` in the absolute invariants `i1, i2, i3`.

use std::sync::OnceLock;

use num_traits::Zero;

use super::absolute_uv_parts;
use crate::algebra::gcd::gcd;
use crate::algebra::mpoly::{vars, MPoly, Monomial, Vars};
use crate::algebra::ratfunc::hom_substitute;
use crate::algebra::rational::{int, Rational};
use crate::algebra::resultant::resultant_at;
use crate::invariants::AbsoluteInvariants;

fn i_ring() -> Vars {
    vars(&["i1", "i2", "i3"])
}

/// The equation as it is usually displayed, used for cross-checking.
pub fn displayed_l2_locus() -> MPoly {
    MPoly::parse(
        concat!(
            "-27i1^6+9i1^7+161243136i3i1^3-12441600i3i2^3+2i2^5+107495424i3i1^2i2",
            "+54i1^3i2^2-52254720i3i1i2^2-47278080i3i1^3i2-8294400i3i1^2i2^2",
            "-9459597312000i3^2i1^2-18i1^4i2^2-240734712102912i3^2+111451255603200i3^2i1",
            "+20639121408000i3^2i2-55240704i3i1^4+2i1^6i2-4i1^3i2^3+331776i3i1^5-27i2^4",
            "-2866544640000i3^2i1i2+161243136i3i2^2+9i1i2^4-264180754022400000i3^3",
        ),
        &i_ring(),
    )
    .expect("static polynomial")
}

/// Eliminates `u, v` from `i_k·den_k(u, v) = num_k(u, v)`, `k = 1, 2, 3`.
///
/// The first relation is linear in `v` with a constant coefficient; after
/// solving it, a resultant in `u` of the other two leaves a polynomial in
/// `i1, i2, i3`. Factors shared with the eliminant of a degenerate
/// specialization (those coming from `J2 = 0`) are divided out, and the
/// result is made primitive with positive leading coefficient.
pub fn derive_l2_locus() -> &'static MPoly {
    static LOCUS: OnceLock<MPoly> = OnceLock::new();
    LOCUS.get_or_init(compute_locus)
}

fn compute_locus() -> MPoly {
    let ring = vars(&["u", "v", "i1", "i2", "i3"]);
    let lift = |p: &MPoly| p.embed(&ring).expect("u, v embed");
    let parts = absolute_uv_parts();
    let eqs: Vec<MPoly> = parts
        .iter()
        .enumerate()
        .map(|(k, (n, d))| lift(n).sub(&lift(d).mul(&MPoly::var_at(&ring, 2 + k))))
        .collect();
    let coeffs = eqs[0].coeffs_in(1);
    let lead = coeffs[1].constant_value().expect("constant v-coefficient");
    let v_sol = coeffs[0].scale(&(-lead.recip()));
    let q2 = eqs[1].substitute(1, &v_sol);
    let q3 = eqs[2].substitute(1, &v_sol);
    let r = resultant_at(&q2, &q3, 0);
    let target = i_ring();
    let mut images = vec![MPoly::zero(&target), MPoly::zero(&target)];
    images.extend((0..3).map(|k| MPoly::var_at(&target, k)));
    let mut res = r.compose(&images);
    for f in extraneous_factors() {
        while let Some(q) = res.div_exact(&f) {
            res = q;
        }
    }
    let g = gcd(&res, &res.derivative(2));
    if !g.is_constant() {
        res = res.div_exact(&g).expect("gcd divides");
    }
    res.primitive_part()
}

/// Factors in `i1, i2, i3` that appear in the eliminant only because
/// `J2 = 0` is a common zero of the cleared denominators.
fn extraneous_factors() -> Vec<MPoly> {
    let r = i_ring();
    vec![
        MPoly::var_at(&r, 0),
        MPoly::var_at(&r, 1),
        MPoly::var_at(&r, 2),
    ]
}

/// Evaluates the derived equation at a point.
pub fn l2_locus_value(inv: &AbsoluteInvariants) -> Rational {
    derive_l2_locus().eval(&[inv.i1.clone(), inv.i2.clone(), inv.i3.clone()])
}

/// Whether the derived equation vanishes identically after substituting
/// `i1(u, v), i2(u, v), i3(u, v)`.
pub fn verify_l2_locus(locus: &MPoly) -> bool {
    let ring = vars(&["i1", "i2", "i3", "u", "v"]);
    let lifted = locus.embed(&ring).expect("i-variables embed");
    let subs: Vec<(usize, MPoly, MPoly)> = absolute_uv_parts()
        .iter()
        .enumerate()
        .map(|(k, (n, d))| {
            (
                k,
                n.embed(&ring).expect("embed"),
                d.embed(&ring).expect("embed"),
            )
        })
        .collect();
    let (num, _) = hom_substitute(&lifted, &subs);
    num.is_zero()
}

/// One displayed coefficient compared with the derived equation, after
/// scaling the derived equation so its `i2⁵` coefficient is 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub monomial: &'static str,
    pub exps: [u32; 3],
    pub displayed: Rational,
    pub derived: Rational,
}

impl SpotCheck {
    pub fn matches(&self) -> bool {
        self.displayed == self.derived
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    pub terms: usize,
    /// The equation vanishes identically on `(i1, i2, i3)(u, v)`.
    pub vanishes: bool,
    pub spot_checks: Vec<SpotCheck>,
    /// Equal to the displayed equation up to a constant.
    pub matches_displayed: bool,
}

impl LocusReport {
    pub fn passed(&self) -> bool {
        self.vanishes && self.matches_displayed && self.spot_checks.iter().all(SpotCheck::matches)
    }
}

/// Checks a candidate `L2` equation against the parametrization and the
/// displayed coefficients of `i2⁵`, `i1⁶` and `i3³`.
pub fn l2_locus_report(locus: &MPoly) -> LocusReport {
    let c = |e: [u32; 3]| locus.coefficient(&Monomial::from_exps(e.to_vec()));
    let lead = c([0, 5, 0]);
    let scale = if lead.is_zero() {
        int(1)
    } else {
        lead / int(2)
    };
    let spot_checks = [
        ("i2^5", [0, 5, 0], 2i64),
        ("i1^6", [6, 0, 0], -27),
        ("i3^3", [0, 0, 3], -264180754022400000),
    ]
    .into_iter()
    .map(|(monomial, exps, displayed)| SpotCheck {
        monomial,
        exps,
        displayed: int(displayed),
        derived: c(exps) / &scale,
    })
    .collect();
    LocusReport {
        terms: locus.num_terms(),
        vanishes: verify_l2_locus(locus),
        spot_checks,
        matches_displayed: locus.scale(&scale.recip()) == displayed_l2_locus(),
    }
}
