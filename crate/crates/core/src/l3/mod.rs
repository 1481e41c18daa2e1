//! Genus-2 curves with a degree-3 elliptic subcover.
//!
//! Such a curve has a model `Y² = F(X)·G(X)` with `F = X³ + aX² + bX + 1`,
//! `G = 4X³ + b²X² + 2bX + 1`; the invariants `u = ab`, `v = b³` determine
//! the pair (curve, subcover). The involution `ν` of `k(u, v)` fixing the
//! two-cubic invariants `r1, r2` swaps the two degree-3 subcovers.

mod degenerate;
mod membership;
mod subcover;

pub use degenerate::{degenerate_relation, degenerate_solutions, DegenerateSolutions};
pub use membership::{
    e3_estimate, l3_absolute_forms, l3_igusa_forms, l3_membership, E3Estimate, L3Membership,
};
pub use subcover::{
    cubic_j_invariant, l3_subcover1, l3_subcover2, subcover2_branch, subcover2_st,
    symbolic_subcovers, SubcoverBranch, SubcoverMap,
};

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::algebra::mpoly::{vars, MPoly, Vars};
use crate::algebra::rational::{int, Rational};
use crate::algebra::{QuadraticAlg, RatFunc};
use crate::error::{Error, Result};
use crate::invariants::Sextic;

pub(crate) fn ab_ring() -> Vars {
    vars(&["a", "b"])
}

/// The ring `ℚ[u, v]`.
pub fn uv_ring() -> Vars {
    vars(&["u", "v"])
}

/// The ring `ℚ[r1, r2]`.
pub fn r_ring() -> Vars {
    vars(&["r1", "r2"])
}

fn uv_poly(s: &str) -> MPoly {
    MPoly::parse(s, &uv_ring()).expect("static polynomial")
}

fn uv_ratfunc(num: &str, den: &str) -> RatFunc {
    RatFunc::new(uv_poly(num), uv_poly(den)).expect("nonzero denominator")
}

/// `W = 4u³ + 27v − 18uv − u²v + 4v² = b³·R`.
pub fn w_form() -> MPoly {
    uv_poly("4u^3 + 27v - 18uv - u^2v + 4v^2")
}

/// Parameters `(a, b)` of `Y² = F·G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L3Params {
    pub a: Rational,
    pub b: Rational,
}

impl L3Params {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let r = resultant_value(&a, &b);
        if r.is_zero() {
            return Err(Error::Singular(format!(
                "R = 4a³ + 27 − 18ab − a²b² + 4b³ vanishes at (a, b) = ({a}, {b})"
            )));
        }
        if (&b * &b * &b - int(27)).is_zero() {
            return Err(Error::Singular(format!("b³ − 27 vanishes at b = {b}")));
        }
        Ok(L3Params { a, b })
    }

    pub fn resultant(&self) -> Rational {
        resultant_value(&self.a, &self.b)
    }
}

fn resultant_value(a: &Rational, b: &Rational) -> Rational {
    int(4) * a * a * a + int(27) - int(18) * a * b - a * a * b * b + int(4) * b * b * b
}

/// A point `(u, v)` with `v ≠ 27` and `W(u, v) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct L3Point {
    pub u: Rational,
    pub v: Rational,
}

impl L3Point {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if v == int(27) {
            return Err(Error::Singular("v = 27 makes the curve singular".into()));
        }
        if w_form().eval(&[u.clone(), v.clone()]).is_zero() {
            return Err(Error::Singular(format!(
                "4u³ + 27v − 18uv − u²v + 4v² vanishes at (u, v) = ({u}, {v})"
            )));
        }
        Ok(L3Point { u, v })
    }

    pub fn from_params(p: &L3Params) -> L3Point {
        L3Point {
            u: &p.a * &p.b,
            v: &p.b * &p.b * &p.b,
        }
    }

    pub(crate) fn coords(&self) -> [Rational; 2] {
        [self.u.clone(), self.v.clone()]
    }
}

impl fmt::Display for L3Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// `F = X³ + aX² + bX + 1` and `G = 4X³ + b²X² + 2bX + 1` over `ℚ[X, a, b]`.
pub fn cubic_pair_symbolic() -> (MPoly, MPoly) {
    let r = vars(&["X", "a", "b"]);
    (
        MPoly::parse("X^3 + aX^2 + bX + 1", &r).expect("static"),
        MPoly::parse("4X^3 + b^2X^2 + 2bX + 1", &r).expect("static"),
    )
}

/// The sextic `F·G`.
pub fn l3_curve(p: &L3Params) -> Sextic {
    let (a, b) = (&p.a, &p.b);
    let f = [int(1), a.clone(), b.clone(), int(1)];
    let g = [int(4), b * b, int(2) * b, int(1)];
    let mut c: [Rational; 7] = Default::default();
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    Sextic::new(c).expect("nonzero sextic")
}

/// `H(F, G) = a3b0 − a2b1/3 + a1b2/3 − a0b3` for cubics given highest
/// coefficient first.
pub fn two_cubic_h(f: &[Rational; 4], g: &[Rational; 4]) -> Rational {
    let third = Rational::new(1.into(), 3.into());
    &f[0] * &g[3] - &third * &f[1] * &g[2] + &third * &f[2] * &g[1] - &f[3] * &g[0]
}

/// Converts a polynomial in `a, b` that is invariant under
/// `(a, b) ↦ (ζa, ζ²b)`, `ζ³ = 1`, into a rational function of `u = ab`,
/// `v = b³` with a pure power of `v` as denominator.
pub fn ab_to_uv(p: &MPoly) -> Result<RatFunc> {
    let uv = uv_ring();
    let mut terms: Vec<(u32, i64, Rational)> = Vec::new();
    let mut kmin = 0i64;
    for (m, c) in p.terms() {
        let (i, j) = (m.exps()[0], m.exps()[1]);
        let d = j as i64 - i as i64;
        if d.rem_euclid(3) != 0 {
            return Err(Error::Precondition(format!(
                "a^{i} b^{j} is not a monomial in u = ab, v = b³"
            )));
        }
        kmin = kmin.min(d / 3);
        terms.push((i, d / 3, c.clone()));
    }
    let num = MPoly::from_terms(
        &uv,
        terms
            .into_iter()
            .map(|(i, k, c)| (vec![i, (k - kmin) as u32], c)),
    );
    let den = MPoly::var_at(&uv, 1).pow((-kmin) as u32);
    RatFunc::new(num, den)
}

/// `ab_to_uv` for a rational function whose numerator and denominator are
/// both invariant.
pub fn ab_ratfunc_to_uv(f: &RatFunc) -> Result<RatFunc> {
    ab_to_uv(f.num())?.div(&ab_to_uv(f.den())?)
}

/// `(j1, j2)` as rational functions of `u, v`:
/// `j1 = 16v(vu² + 216u² − 126vu − 972u + 12v² + 405v)³/((v − 27)³W²)`,
/// `j2 = −256(u² − 3v)³/(vW)`.
pub fn j_forms() -> (RatFunc, RatFunc) {
    (
        uv_ratfunc(
            "16v(vu^2 + 216u^2 - 126vu - 972u + 12v^2 + 405v)^3",
            "(v - 27)^3 (4v^2 + 27v + 4u^3 - 18vu - vu^2)^2",
        ),
        uv_ratfunc("-256(u^2 - 3v)^3", "v(4v^2 + 27v + 4u^3 - 18vu - vu^2)"),
    )
}

/// The j-invariants of the two degree-3 elliptic subcovers.
pub fn l3_j_pair(p: &L3Point) -> Result<(Rational, Rational)> {
    if p.v.is_zero() {
        return Err(Error::Precondition(
            "v=0: the (u, v) formulas are undefined; use the subcover maps of the (a, b) model"
                .into(),
        ));
    }
    let (j1, j2) = j_forms();
    let pt = p.coords();
    Ok((j1.eval(&pt)?, j2.eval(&pt)?))
}

/// `(ν(u), ν(v))`.
pub fn nu_forms() -> (RatFunc, RatFunc) {
    (
        uv_ratfunc(
            "(v - 3u)(324u^2 + 15u^2v - 378uv - 4uv^2 + 243v + 72v^2)",
            "(v - 27)(4u^3 + 27v - 18uv - u^2v + 4v^2)",
        ),
        uv_ratfunc("-4(v - 3u)^3", "4u^3 + 27v - 18uv - u^2v + 4v^2"),
    )
}

/// The involution swapping the two subcovers.
pub fn nu(p: &L3Point) -> Result<L3Point> {
    let (nu_u, nu_v) = nu_forms();
    let pt = p.coords();
    L3Point::new(nu_u.eval(&pt)?, nu_v.eval(&pt)?)
}

/// Results of the symbolic checks on `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuReport {
    /// `ν∘ν = id`.
    pub involution: bool,
    /// `r1∘ν = r1` and `r2∘ν = r2`.
    pub fixes_r: bool,
    /// `j1∘ν = j2` and `j2∘ν = j1`.
    pub swaps_j: bool,
}

impl NuReport {
    pub fn passed(&self) -> bool {
        self.involution && self.fixes_r && self.swaps_j
    }
}

/// Checks that `ν` is an involution fixing `r1, r2` and swapping `j1, j2`.
pub fn verify_nu() -> NuReport {
    let (nu_u, nu_v) = nu_forms();
    let subs = [(0, nu_u.clone()), (1, nu_v.clone())];
    let ring = uv_ring();
    let pulled = |f: &RatFunc| f.substitute(&subs).ok();
    let is = |f: &RatFunc, g: &RatFunc| pulled(f).is_some_and(|h| h.same_as(g));
    let var = |k| RatFunc::from_poly(MPoly::var_at(&ring, k));
    let (r1, r2) = r_forms();
    let (j1, j2) = j_forms();
    NuReport {
        involution: is(&nu_u, &var(0)) && is(&nu_v, &var(1)),
        fixes_r: is(&r1, &r1) && is(&r2, &r2),
        swaps_j: is(&j1, &j2) && is(&j2, &j1),
    }
}

/// Two-cubic invariants `r1 = H³/R`, `r2 = H⁴/(D(F)D(G))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RInvariants {
    pub r1: Rational,
    pub r2: Rational,
}

/// Ratio between the frequently displayed scaling of `(r1, r2)` and the
/// definitional one: `(729, 1296²)`.
pub fn displayed_r_scale() -> (Rational, Rational) {
    (int(729), int(1_679_616))
}

impl RInvariants {
    /// `(729·r1, 1296²·r2)`.
    pub fn displayed(&self) -> (Rational, Rational) {
        let (s1, s2) = displayed_r_scale();
        (&self.r1 * s1, &self.r2 * s2)
    }
}

/// `r1 = v(v − 2u − 9)³/(27W)`, `r2 = −v(v − 2u − 9)⁴/(1296W(v − 27))`.
pub fn r_forms() -> (RatFunc, RatFunc) {
    (
        uv_ratfunc("v(v - 2u - 9)^3", "27(4u^3 + 27v - 18uv - u^2v + 4v^2)"),
        uv_ratfunc(
            "-v(v - 2u - 9)^4",
            "1296(v - 27)(4u^3 + 27v - 18uv - u^2v + 4v^2)",
        ),
    )
}

pub fn l3_r_invariants(p: &L3Point) -> Result<RInvariants> {
    let (r1, r2) = r_forms();
    let pt = p.coords();
    Ok(RInvariants {
        r1: r1.eval(&pt)?,
        r2: r2.eval(&pt)?,
    })
}

fn r_poly(s: &str) -> MPoly {
    MPoly::parse(s, &r_ring()).expect("static polynomial")
}

/// `(T, N)` with `j1 + j2 = T(r1, r2)`, `j1·j2 = N(r1, r2)`.
pub fn tn_forms() -> &'static (RatFunc, RatFunc) {
    static TN: OnceLock<(RatFunc, RatFunc)> = OnceLock::new();
    TN.get_or_init(|| {
        let t_num = r_poly(concat!(
            "-(r1^12 + 480r1^11r2 + 101376r1^10r2^2 + 12386304r1^9r2^3",
            " + 966131712r1^8r2^4 - 258048r1^8r2^3 + 49941577728r1^7r2^5",
            " - 38928384r1^7r2^4 + 1712282664960r1^6r2^6 + 1528823808r1^6r2^5",
            " + 37572373905408r1^5r2^7 + 619683250176r1^5r2^6",
            " + 479047767293952r1^4r2^8 + 45595641249792r1^4r2^7",
            " + 7247757312r1^4r2^6 + 2705210921189376r1^3r2^9",
            " + 1408964021452800r1^3r2^8 + 7827577896960r1^3r2^7",
            " + 16231265527136256r1^2r2^9 + 901736973729792r1^2r2^8",
            " + 32462531054272512r1r2^9 + 21641687369515008r2^9)",
        ));
        let t_den = r_poly("16777216r1^4r2^6");
        (
            RatFunc::new(t_num, t_den).expect("nonzero"),
            n_cube_root().pow(3),
        )
    })
}

/// `M = Q(r1, r2)/(2¹² r1 r2³)` with `N = M³`.
pub fn n_cube_root() -> RatFunc {
    let q = r_poly(concat!(
        "r1^5 + 192r1^4r2 + 13824r1^3r2^2 + 442368r1^2r2^3 + 5308416r1r2^4",
        " - 1179648r1r2^3 - 84934656r2^4",
    ));
    RatFunc::new(q, r_poly("4096r1r2^3")).expect("nonzero")
}

/// Results of the symbolic checks `T∘r = j1 + j2` and `N∘r = j1·j2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnReport {
    pub sum_identity: bool,
    pub product_identity: bool,
}

impl TnReport {
    pub fn passed(&self) -> bool {
        self.sum_identity && self.product_identity
    }
}

/// Checks `T` and `N` against the j-pair after substituting `r1(u, v)`,
/// `r2(u, v)`. `j1·j2 = (−16·p·(u² − 3v)/((v − 27)W))³` with `p` the cubed
/// factor of `j1`, and `ℚ(u, v)` has no nontrivial cube roots of unity, so
/// the product identity reduces to `M∘r` equal to that cube root.
pub fn verify_tn() -> TnReport {
    let (t, _) = tn_forms();
    let (j1, j2) = j_forms();
    let (r1, r2) = r_forms();
    let r = [r1, r2];
    let (tn, td) = t.compose_unreduced(&r).expect("nonzero denominator");
    let sum_identity = j1.add(&j2).equals_fraction(&tn, &td);
    let root = uv_ratfunc(
        "-16(vu^2 + 216u^2 - 126vu - 972u + 12v^2 + 405v)(u^2 - 3v)",
        "(v - 27)(4u^3 + 27v - 18uv - u^2v + 4v^2)",
    );
    let product_identity = root.pow(3).same_as(&j1.mul(&j2))
        && n_cube_root().compose(&r).is_ok_and(|m| m.same_as(&root));
    TnReport {
        sum_identity,
        product_identity,
    }
}

/// The quadratic `j² − T j + N` over `ℚ(r1, r2)`.
pub fn l3_tn(r: &RInvariants) -> Result<QuadraticAlg> {
    if r.r1.is_zero() || r.r2.is_zero() {
        return Err(Error::Precondition("T and N need r1 ≠ 0 and r2 ≠ 0".into()));
    }
    let (t, n) = tn_forms();
    let pt = [r.r1.clone(), r.r2.clone()];
    Ok(QuadraticAlg::new(t.eval(&pt)?, n.eval(&pt)?))
}

/// Quadratics satisfied by `u` (resp. `v`) over `ℚ(r1, r2)`; the variable
/// order is `[u or v, r1, r2]`.
pub fn uv_quadratics() -> (MPoly, MPoly) {
    let ru = vars(&["u", "r1", "r2"]);
    let rv = vars(&["v", "r1", "r2"]);
    let eq_u = MPoly::parse(
        concat!(
            "65536r1r2^3u^2 + (42467328r2^4 + 21233664r2^4r1 + 480r2r1^4 + 2r1^5",
            " + 41472r2^2r1^3 + 1548288r2^3r1^2 - 294912r2^3r1)u - 382205952r2^4",
            " + 238878720r2^4r1 - 2654208r2^3r1 + 13934592r2^3r1^2 + 285696r2^2r1^3",
            " + 2400r2r1^4 + 7r1^5",
        ),
        &ru,
    )
    .expect("static");
    let eq_v = MPoly::parse(
        concat!(
            "16384v^2r2^3 + (221184r2^3r1 + r1^4 + 11520r2^2r1^2 - 442368r2^3",
            " + 192r2r1^3)v - 5971968r2^3r1 - 864r2r1^3 - 124416r2^2r1^2 - 2r1^4",
        ),
        &rv,
    )
    .expect("static");
    (eq_u, eq_v)
}

/// Results of the symbolic identities tying `u, v, ν, r1, r2` together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvQuadraticsReport {
    pub eq_u_vanishes: bool,
    pub eq_v_vanishes: bool,
    pub eq_u_conjugate_is_nu: bool,
    pub eq_v_conjugate_is_nu: bool,
}

impl UvQuadraticsReport {
    pub fn passed(&self) -> bool {
        self.eq_u_vanishes
            && self.eq_v_vanishes
            && self.eq_u_conjugate_is_nu
            && self.eq_v_conjugate_is_nu
    }
}

/// Substitutes `r_i(u, v)` into a polynomial over `ℚ[r1, r2]`.
pub fn compose_r(p: &MPoly) -> RatFunc {
    let (r1, r2) = r_forms();
    RatFunc::from_poly(p.clone())
        .compose(&[r1, r2])
        .expect("nonzero denominator")
}

/// Checks that `eq_u(u; r(u, v))` and `eq_v(v; r(u, v))` vanish and that
/// their second roots are `ν(u)` and `ν(v)`.
pub fn verify_uv_quadratics() -> UvQuadraticsReport {
    let (eq_u, eq_v) = uv_quadratics();
    let (nu_u, nu_v) = nu_forms();
    let uv = uv_ring();
    let (r1, r2) = r_forms();
    let check = |eq: &MPoly, var: usize, nu_x: &RatFunc| -> (bool, bool) {
        let x = RatFunc::from_poly(MPoly::var_at(&uv, var));
        let images = [x.clone(), r1.clone(), r2.clone()];
        let at = |p: &MPoly| {
            RatFunc::from_poly(p.clone())
                .compose(&images)
                .expect("nonzero")
        };
        let (value, _) = RatFunc::from_poly(eq.clone())
            .compose_unreduced(&images)
            .expect("nonzero");
        let coeffs = eq.coeffs_in(0);
        let root_sum = at(&coeffs[1])
            .neg()
            .div(&at(&coeffs[2]))
            .expect("leading coefficient is nonzero");
        (value.is_zero(), root_sum.same_as(&x.add(nu_x)))
    };
    let (a, b) = check(&eq_u, 0, &nu_u);
    let (c, d) = check(&eq_v, 1, &nu_v);
    UvQuadraticsReport {
        eq_u_vanishes: a,
        eq_v_vanishes: c,
        eq_u_conjugate_is_nu: b,
        eq_v_conjugate_is_nu: d,
    }
}

/// Jacobian-criticality locus
/// `8v³ + 27v² − 54uv² − u²v² + 108u²v + 4u³v − 108u³`.
pub fn theta_critical_form() -> MPoly {
    uv_poly("8v^3 + 27v^2 - 54uv^2 - u^2v^2 + 108u^2v + 4u^3v - 108u^3")
}

/// Second branch of `j1 = j2`.
pub fn iso2_form() -> MPoly {
    uv_poly(concat!(
        "324v^4u^2 - 5832v^4u + 37908v^4 - 314928v^3u - 81v^3u^4 + 255879v^3",
        " + 30618v^3u^2 - 864v^3u^3 - 6377292uv^2 + 8503056v^2 - 324u^5v^2",
        " + 2125764u^2v^2 - 215784u^3v^2 + 14580u^4v^2 + 16u^6v^2 + 78732u^3v",
        " + 8748u^5v - 864u^6v - 157464u^4v + 11664u^6",
    ))
}

/// Whether the curve lies on the locus where the map `(u, v) ↦ (i1, i2, i3)`
/// is critical (and the two subcovers are isomorphic).
pub fn theta_critical(p: &L3Point) -> bool {
    theta_critical_form().eval(&p.coords()).is_zero()
}

/// Whether the two degree-3 elliptic subcovers are isomorphic.
pub fn isomorphic_subfields_locus(p: &L3Point) -> bool {
    theta_critical(p) || iso2_form().eval(&p.coords()).is_zero()
}

#[cfg(test)]
mod tests;
