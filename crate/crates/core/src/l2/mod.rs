//! The locus `L2` of genus-2 curves with a degree-2 elliptic subcover.
//!
//! Such a curve has a model `Y² = X⁶ − s1X⁴ + s2X² − 1`; the dihedral
//! invariants `u = s1s2`, `v = s1³ + s2³` parametrize the locus birationally.

mod isogeny;
mod locus;

pub use isogeny::{
    d4_isogeny_forms, d4_isogeny_pair, isogeny_polys, l2_isogeny, modular_polynomial,
    verify_isogeny_loci, DivisibilityCheck, IsogenyFactor, IsogenyLociReport, IsogenyOutcome,
    IsogenyPolys,
};
pub use locus::{
    derive_l2_locus, displayed_l2_locus, l2_locus_report, l2_locus_value, verify_l2_locus,
    LocusReport, SpotCheck,
};

use std::fmt;

use num_traits::Zero;

use crate::algebra::mpoly::{vars, MPoly, Vars};
use crate::algebra::rational::{int, Rational};
use crate::algebra::roots::upoly_rational_roots;
use crate::algebra::{QuadraticAlg, RatFunc, UPoly};
use crate::error::{Error, Result};
use crate::invariants::{AbsoluteInvariants, Sextic};

/// The ring `ℚ[u, v]`.
pub fn uv_ring() -> Vars {
    vars(&["u", "v"])
}

fn uv_poly(s: &str) -> MPoly {
    MPoly::parse(s, &uv_ring()).expect("static polynomial")
}

/// `27 − 18u − u² + 4v`; its square is `J10/64`.
pub fn nondegeneracy_form() -> MPoly {
    uv_poly("27 - 18u - u^2 + 4v")
}

/// Normal form `Y² = X⁶ − s1X⁴ + s2X² − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2NormalForm {
    pub s1: Rational,
    pub s2: Rational,
}

impl L2NormalForm {
    pub fn new(s1: Rational, s2: Rational) -> Result<Self> {
        let d = int(27) - int(18) * &s1 * &s2 - &s1 * &s1 * &s2 * &s2
            + int(4) * &s1 * &s1 * &s1
            + int(4) * &s2 * &s2 * &s2;
        if d.is_zero() {
            return Err(Error::Singular(format!(
                "27 − 18s1s2 − s1²s2² + 4s1³ + 4s2³ = 0 at (s1, s2) = ({s1}, {s2})"
            )));
        }
        Ok(L2NormalForm { s1, s2 })
    }
}

/// A point `(u, v)` of `L2` with `J10 ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct L2Point {
    pub u: Rational,
    pub v: Rational,
}

impl L2Point {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if nondegeneracy_form().eval(&[u.clone(), v.clone()]).is_zero() {
            return Err(Error::Singular(format!(
                "singular curve: 27 − 18u − u² + 4v = 0 at (u, v) = ({u}, {v})"
            )));
        }
        Ok(L2Point { u, v })
    }

    fn coords(&self) -> [Rational; 2] {
        [self.u.clone(), self.v.clone()]
    }
}

impl fmt::Display for L2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Automorphism groups of genus-2 curves with an elliptic involution, plus
/// the two groups without one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    V4,
    D8,
    D12,
    Z3xD8,
    GL2_3,
    Z10,
    Z2,
}

impl GroupLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupLabel::V4 => "V4",
            GroupLabel::D8 => "D8",
            GroupLabel::D12 => "D12",
            GroupLabel::Z3xD8 => "Z3⋊D8",
            GroupLabel::GL2_3 => "GL2(3)",
            GroupLabel::Z10 => "Z10",
            GroupLabel::Z2 => "Z2",
        }
    }

    /// Group order.
    pub fn order(self) -> u32 {
        match self {
            GroupLabel::V4 => 4,
            GroupLabel::D8 => 8,
            GroupLabel::D12 => 12,
            GroupLabel::Z3xD8 => 24,
            GroupLabel::GL2_3 => 48,
            GroupLabel::Z10 => 10,
            GroupLabel::Z2 => 2,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The sextic `X⁶ − s1X⁴ + s2X² − 1`.
pub fn l2_curve(nf: &L2NormalForm) -> Sextic {
    Sextic::new([
        int(1),
        int(0),
        -nf.s1.clone(),
        int(0),
        nf.s2.clone(),
        int(0),
        int(-1),
    ])
    .expect("nonzero sextic")
}

/// `(s1s2, s1³ + s2³)`.
pub fn l2_uv(nf: &L2NormalForm) -> L2Point {
    let (s1, s2) = (&nf.s1, &nf.s2);
    L2Point {
        u: s1 * s2,
        v: s1 * s1 * s1 + s2 * s2 * s2,
    }
}

/// `[J2, J4, J6, J10]` of the normal form as polynomials in `u, v`.
pub fn igusa_uv_forms() -> [MPoly; 4] {
    [
        uv_poly("240 + 16u"),
        uv_poly("48v + 4u^2 + 1620 - 504u"),
        uv_poly("-20664u + 96v - 424u^2 + 24u^3 + 160uv + 119880"),
        uv_poly("64(27 - 18u - u^2 + 4v)^2"),
    ]
}

/// Numerators and denominators of `i1, i2, i3` over `ℚ[u, v]`:
/// `(144J4, J2²)`, `(−1728(J2J4 − 3J6), J2³)`, `(486J10, J2⁵)`.
pub fn absolute_uv_parts() -> [(MPoly, MPoly); 3] {
    let [j2, j4, j6, j10] = igusa_uv_forms();
    [
        (j4.scale_int(144), j2.pow(2)),
        (
            j2.mul(&j4).sub(&j6.scale_int(3)).scale_int(-1728),
            j2.pow(3),
        ),
        (j10.scale_int(486), j2.pow(5)),
    ]
}

/// `i1, i2, i3` as rational functions of `u, v`.
pub fn absolute_uv_forms() -> [RatFunc; 3] {
    absolute_uv_parts().map(|(n, d)| RatFunc::new(n, d).expect("J2 is not identically zero"))
}

/// Outcome class of [`l2_membership`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipStatus {
    /// At least one rational `(u, v)` reproduces the invariants.
    RationalPoints,
    /// The invariants lie on `L2` but every witness `(u, v)` is irrational.
    IrrationalParameters,
    /// No `(u, v)`, rational or not, reproduces the invariants.
    OffLocus,
}

impl MembershipStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MembershipStatus::RationalPoints => "rational_points",
            MembershipStatus::IrrationalParameters => "irrational_parameters",
            MembershipStatus::OffLocus => "off_locus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Membership {
    pub points: Vec<L2Point>,
    pub status: MembershipStatus,
}

/// All rational `(u, v)` whose absolute invariants equal `inv`.
///
/// `144J4 − i1J2²` is linear in `v` with constant coefficient, so `v` is a
/// polynomial in `u`; the other two equations become univariate in `u` and
/// their gcd carries every common solution.
pub fn l2_membership(inv: &AbsoluteInvariants) -> L2Membership {
    let ring = uv_ring();
    let [(n1, d1), (n2, d2), (n3, d3)] = absolute_uv_parts();
    let c = |q: &Rational| MPoly::constant(&ring, q.clone());
    let p1 = n1.sub(&d1.mul(&c(&inv.i1)));
    let p2 = n2.sub(&d2.mul(&c(&inv.i2)));
    let p3 = n3.sub(&d3.mul(&c(&inv.i3)));
    let coeffs = p1.coeffs_in(1);
    debug_assert_eq!(coeffs.len(), 2);
    let lead = coeffs[1].constant_value().expect("constant v-coefficient");
    let v_of_u = coeffs[0].scale(&(-lead.recip()));
    let r2 = UPoly::from_mpoly(&p2.substitute(1, &v_of_u), 0).expect("univariate in u");
    let r3 = UPoly::from_mpoly(&p3.substitute(1, &v_of_u), 0).expect("univariate in u");
    let g = match (r2.is_zero(), r3.is_zero()) {
        (true, true) => UPoly::zero(),
        (true, false) => r3,
        (false, true) => r2,
        (false, false) => r2.gcd(&r3),
    };
    let j2 = &igusa_uv_forms()[0];
    let mut points: Vec<L2Point> = Vec::new();
    if !g.is_zero() {
        let mut roots = upoly_rational_roots(&g);
        roots.dedup();
        for u in roots {
            let v = v_of_u.eval(&[u.clone(), int(0)]);
            if j2.eval(&[u.clone(), v.clone()]).is_zero() {
                continue;
            }
            if let Ok(p) = L2Point::new(u, v) {
                points.push(p);
            }
        }
    }
    let status = if !points.is_empty() {
        MembershipStatus::RationalPoints
    } else if g.degree().unwrap_or(0) > 0 {
        MembershipStatus::IrrationalParameters
    } else {
        MembershipStatus::OffLocus
    };
    L2Membership { points, status }
}

/// Group classification, checked in the order `Z3⋊D8`, `GL2(3)`, `D12`, `D8`.
pub fn l2_group(p: &L2Point) -> GroupLabel {
    let (u, v) = (&p.u, &p.v);
    let is = |a: i64, b: i64| *u == int(a) && *v == int(b);
    if is(0, 0) || is(225, 6750) {
        return GroupLabel::Z3xD8;
    }
    if is(25, -250) {
        return GroupLabel::GL2_3;
    }
    let excluded = |list: &[i64]| list.iter().any(|&k| *u == int(k));
    let d6 = d6_form().eval(&p.coords());
    if d6.is_zero() && !excluded(&[9, 25]) {
        return GroupLabel::D12;
    }
    if (v * v - int(4) * u * u * u).is_zero() && !excluded(&[0, 1, 9, 25, 225]) {
        return GroupLabel::D8;
    }
    GroupLabel::V4
}

/// `4v − u² + 110u − 1125`, whose zero set is the `D12` stratum.
pub fn d6_form() -> MPoly {
    uv_poly("4v - u^2 + 110u - 1125")
}

/// `(sum, product)` of the subcover j-invariants as rational functions:
/// `sum = −256(2u³ − 54u² + 9uv − v² + 27v)/(u² + 18u − 4v − 27)`,
/// `product = 65536(u² + 9u − 3v)³/(u² + 18u − 4v − 27)²`.
pub fn j_pair_forms() -> (RatFunc, RatFunc) {
    let d = uv_poly("u^2 + 18u - 4v - 27");
    let sum = RatFunc::new(uv_poly("-256(2u^3 - 54u^2 + 9uv - v^2 + 27v)"), d.clone());
    let prod = RatFunc::new(uv_poly("65536(u^2 + 9u - 3v)^3"), d.pow(2));
    (sum.expect("nonzero"), prod.expect("nonzero"))
}

/// The quadratic whose roots are the j-invariants of the two degree-2
/// elliptic subcovers.
pub fn l2_j_pair(p: &L2Point) -> QuadraticAlg {
    let (sum, prod) = j_pair_forms();
    let pt = p.coords();
    QuadraticAlg::new(
        sum.eval(&pt).expect("valid point"),
        prod.eval(&pt).expect("valid point"),
    )
}

/// `(v² − 4u³)(v − 9u + 27)`.
pub fn isomorphic_form() -> MPoly {
    uv_poly("(v^2 - 4u^3)(v - 9u + 27)")
}

/// Whether the two degree-2 elliptic subcovers are isomorphic.
pub fn l2_isomorphic(p: &L2Point) -> bool {
    isomorphic_form().eval(&p.coords()).is_zero()
}

/// Outcome of [`verify_diagonal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalReport {
    /// `v = 9(u − 3)` gives `j1 = j2 = 256(9 − u)` identically.
    pub line_forces_equal_j: bool,
    /// `(v² − 4u³)(v − 9u + 27)` divides the discriminant numerator.
    pub discriminant_divisible: bool,
    /// The cofactor is a constant times a product of factors of that
    /// form, so the discriminant vanishes nowhere else.
    pub cofactor_supported: bool,
}

impl DiagonalReport {
    pub fn passed(&self) -> bool {
        self.line_forces_equal_j && self.discriminant_divisible && self.cofactor_supported
    }
}

/// Symbolic checks of the equal-j locus of the degree-2 subcovers.
pub fn verify_diagonal() -> DiagonalReport {
    let (sum, prod) = j_pair_forms();
    let line = RatFunc::from_poly(uv_poly("9u - 27"));
    let j = RatFunc::from_poly(uv_poly("256(9 - u)"));
    let on_line = |f: &RatFunc| f.substitute(&[(1, line.clone())]).ok();
    let line_forces_equal_j =
        on_line(&sum) == Some(j.scale(&int(2))) && on_line(&prod) == Some(j.mul(&j));
    let disc = sum.mul(&sum).sub(&prod.scale(&int(4)));
    let cof = disc.num().div_exact(&isomorphic_form());
    let discriminant_divisible = cof.is_some();
    let cofactor_supported = cof.is_some_and(|mut c| {
        for f in [uv_poly("v^2 - 4u^3"), uv_poly("v - 9u + 27")] {
            while let Some(q) = c.div_exact(&f) {
                c = q;
            }
        }
        c.is_constant()
    });
    DiagonalReport {
        line_forces_equal_j,
        discriminant_divisible,
        cofactor_supported,
    }
}
