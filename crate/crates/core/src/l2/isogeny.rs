//! 2- and 3-isogenies between the two degree-2 elliptic subcovers.

use std::fmt;

use num_traits::Zero;

use super::{d6_form, j_pair_forms, uv_poly, L2Point};
use crate::algebra::mpoly::{vars, MPoly};
use crate::algebra::ratfunc::hom_substitute;
use crate::algebra::rational::{int, Rational};
use crate::algebra::symmetric::symmetric_reduce;
use crate::algebra::RatFunc;
use crate::error::{Error, Result};

const F1: &str = concat!(
    "-16v^3-81216v^2-892296v-2460375+3312uv^2+707616vu+3805380u+18360vu^2",
    "-1296162u^2-1744u^3v-140076u^3+801u^4+256u^5",
);

const F2: &str = concat!(
    "4096u^7+256016u^6-45824u^5v+4736016u^5-2126736vu^4+23158143u^4-25451712u^3v",
    "-119745540u^3+5291136v^2u^2-48166488vu^2-2390500350u^2-179712uv^3+35831808uv^2",
    "+1113270480vu+9300217500u-4036608v^3-1791153000v-8303765625-1024v^4",
    "+163840u^3v^2-122250384v^2+256u^2v^3",
);

const G1: &str = concat!(
    "-27008u^6+256u^7-2432u^5v+v^4+7296u^3v^2-6692v^3u-1755067500u+2419308v^3",
    "-34553439u^4+127753092vu^2+16274844vu^3-1720730u^2v^2-1941120u^5+381631500v",
    "+1018668150u^2-116158860u^3+52621974v^2+387712u^4v-483963660vu-33416676v^2u",
    "+922640625",
);

const G2: &str = concat!(
    "291350448u^6-v^4u^2-998848u^6v-3456u^7v+4749840u^4v^2+17032u^5v^2+4v^5",
    "+80368u^8+256u^9+6848224u^7-10535040v^3u^2-35872v^3u^3+26478v^4u-77908736u^5v",
    "+9516699v^4+307234984u^3v^2-419583744v^3u-826436736v^3+27502903296u^4",
    "+28808773632vu^2-23429955456vu^3+5455334016u^2v^2-41278242816v+82556485632u^2",
    "-108737593344u^3-12123095040v^2+41278242816vu+3503554560v^2u+5341019904u^5",
    "-2454612480u^4v",
);

const PHI2: &str = concat!(
    "x^3 + y^3 - x^2y^2 + 1488(x^2y + xy^2) - 162000(x^2 + y^2) + 40773375xy",
    " + 8748000000(x + y) - 157464000000000",
);

const PHI3: &str = concat!(
    "x^4 + y^4 - x^3y^3 + 2232(x^3y^2 + x^2y^3) - 1069956(x^3y + xy^3)",
    " + 36864000(x^3 + y^3) + 2587918086x^2y^2 + 8900222976000(x^2y + xy^2)",
    " + 452984832000000(x^2 + y^2) - 770845966336000000xy",
    " + 1855425871872000000000(x + y)",
);

/// The classical modular polynomial `Φn(x, y)` for `n ∈ {2, 3}`.
pub fn modular_polynomial(level: u32) -> Result<MPoly> {
    let src = match level {
        2 => PHI2,
        3 => PHI3,
        _ => {
            return Err(Error::Precondition(format!(
                "modular polynomials are available for levels 2 and 3, not {level}"
            )))
        }
    };
    Ok(MPoly::parse(src, &vars(&["x", "y"])).expect("static polynomial"))
}

/// Irreducible pieces of the isogeny loci in the `(u, v)` plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsogenyFactor {
    F1,
    F2,
    D6Factor,
    G1,
    G2,
}

impl IsogenyFactor {
    pub fn as_str(self) -> &'static str {
        match self {
            IsogenyFactor::F1 => "f1",
            IsogenyFactor::F2 => "f2",
            IsogenyFactor::D6Factor => "d6_factor",
            IsogenyFactor::G1 => "g1",
            IsogenyFactor::G2 => "g2",
        }
    }

    pub fn poly(self) -> MPoly {
        match self {
            IsogenyFactor::F1 => uv_poly(F1),
            IsogenyFactor::F2 => uv_poly(F2),
            IsogenyFactor::D6Factor => d6_form(),
            IsogenyFactor::G1 => uv_poly(G1),
            IsogenyFactor::G2 => uv_poly(G2),
        }
    }

    /// Factors of the degree-`n` isogeny locus.
    pub fn for_degree(n: u32) -> Result<&'static [IsogenyFactor]> {
        match n {
            2 => Ok(&[IsogenyFactor::F1, IsogenyFactor::F2]),
            3 => Ok(&[
                IsogenyFactor::D6Factor,
                IsogenyFactor::G1,
                IsogenyFactor::G2,
            ]),
            _ => Err(Error::Precondition(format!(
                "isogeny degree must be 2 or 3, not {n}"
            ))),
        }
    }
}

impl fmt::Display for IsogenyFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The locus polynomials `f1, f2` (degree 2) and `d6_factor, g1, g2`
/// (degree 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyPolys {
    pub f1: MPoly,
    pub f2: MPoly,
    pub g1: MPoly,
    pub g2: MPoly,
    pub d6_factor: MPoly,
}

pub fn isogeny_polys() -> IsogenyPolys {
    IsogenyPolys {
        f1: IsogenyFactor::F1.poly(),
        f2: IsogenyFactor::F2.poly(),
        g1: IsogenyFactor::G1.poly(),
        g2: IsogenyFactor::G2.poly(),
        d6_factor: IsogenyFactor::D6Factor.poly(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyOutcome {
    pub degree: u32,
    pub isogenous: bool,
    pub vanishing: Vec<IsogenyFactor>,
}

/// Whether the two degree-2 subcovers at `p` are `degree`-isogenous.
pub fn l2_isogeny(p: &L2Point, degree: u32) -> Result<IsogenyOutcome> {
    let pt = [p.u.clone(), p.v.clone()];
    let vanishing: Vec<IsogenyFactor> = IsogenyFactor::for_degree(degree)?
        .iter()
        .copied()
        .filter(|f| f.poly().eval(&pt).is_zero())
        .collect();
    Ok(IsogenyOutcome {
        degree,
        isogenous: !vanishing.is_empty(),
        vanishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityCheck {
    pub factor: IsogenyFactor,
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyLociReport {
    pub level: u32,
    pub numerator_terms: usize,
    pub checks: Vec<DivisibilityCheck>,
    /// The cofactor is a constant times a power of `u² + 18u − 4v − 27`.
    pub cofactor_degenerate: bool,
}

impl IsogenyLociReport {
    pub fn passed(&self) -> bool {
        self.cofactor_degenerate && self.checks.iter().all(|c| c.divides)
    }

    pub fn failing(&self) -> Vec<IsogenyFactor> {
        self.checks
            .iter()
            .filter(|c| !c.divides)
            .map(|c| c.factor)
            .collect()
    }
}

/// Numerator of `Φn(j1, j2)` as a polynomial in `u, v`, obtained from the
/// symmetric reduction of `Φn` and the sum and product of the j-pair.
pub fn isogeny_numerator(level: u32) -> Result<MPoly> {
    let phi = modular_polynomial(level)?;
    let reduced = symmetric_reduce(&phi)?;
    let ring = vars(&["e1", "e2", "u", "v"]);
    let q = reduced.embed(&ring).expect("e1, e2 embed");
    let (sum, prod) = j_pair_forms();
    let lift = |p: &MPoly| p.embed(&ring).expect("u, v embed");
    let (num, _) = hom_substitute(
        &q,
        &[
            (0, lift(sum.num()), lift(sum.den())),
            (1, lift(prod.num()), lift(prod.den())),
        ],
    );
    let uv = super::uv_ring();
    let mut images = vec![MPoly::zero(&uv), MPoly::zero(&uv)];
    images.extend((0..2).map(|k| MPoly::var_at(&uv, k)));
    Ok(num.compose(&images))
}

/// Checks that the elimination numerator for level `n` is divisible by every
/// displayed locus factor and that nothing but the degenerate locus remains.
pub fn verify_isogeny_loci(level: u32) -> Result<IsogenyLociReport> {
    let factors = IsogenyFactor::for_degree(level)?;
    let num = isogeny_numerator(level)?;
    let numerator_terms = num.num_terms();
    let mut rest = Some(num);
    let mut checks = Vec::new();
    for &f in factors {
        let q = rest.as_ref().and_then(|r| r.div_exact(&f.poly()));
        checks.push(DivisibilityCheck {
            factor: f,
            divides: q.is_some(),
        });
        if q.is_some() {
            rest = q;
        }
    }
    let degenerate = uv_poly("u^2 + 18u - 4v - 27");
    let mut cof = rest.expect("numerator");
    while let Some(q) = cof.div_exact(&degenerate) {
        cof = q;
    }
    Ok(IsogenyLociReport {
        level,
        numerator_terms,
        checks,
        cofactor_degenerate: cof.is_constant(),
    })
}

/// `(j, j′)` on the `D8` stratum `u = s², v = 2s³`: `j = 256s³/(s + 1)` is
/// the double root of the j-pair quadratic, and `j′ = −16(s − 15)³/(s + 1)²`
/// is the j-invariant of the other degree-2 subcover.
pub fn d4_isogeny_forms() -> (RatFunc, RatFunc) {
    let r = vars(&["s"]);
    let p = |t: &str| MPoly::parse(t, &r).expect("static polynomial");
    (
        RatFunc::new(p("256s^3"), p("s + 1")).expect("nonzero"),
        RatFunc::new(p("-16(s - 15)^3"), p("(s + 1)^2")).expect("nonzero"),
    )
}

/// The j-invariants of the two non-conjugate degree-2 subcovers of the curve
/// with `s1 = s2 = s`; they are 2-isogenous.
pub fn d4_isogeny_pair(s: &Rational) -> Result<(Rational, Rational)> {
    if *s == int(-1) {
        return Err(Error::Precondition(
            "s = −1 is a pole of the D8 parametrization".into(),
        ));
    }
    let (j, jp) = d4_isogeny_forms();
    let pt = [s.clone()];
    Ok((j.eval(&pt)?, jp.eval(&pt)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn pt(u: i64, v: i64) -> L2Point {
        L2Point::new(int(u), int(v)).unwrap()
    }

    #[test]
    fn modular_polynomials_are_symmetric_and_vanish_on_known_pairs() {
        let p2 = modular_polynomial(2).unwrap();
        let p3 = modular_polynomial(3).unwrap();
        assert_eq!(p2.swap_vars(0, 1), p2);
        assert_eq!(p3.swap_vars(0, 1), p3);
        assert!(p2.eval(&[int(0), int(54000)]).is_zero());
        assert!(p2.eval(&[int(1728), int(1728)]).is_zero());
        assert!(p2.eval(&[int(8000), int(8000)]).is_zero());
        assert!(p3.eval(&[int(0), int(-12288000)]).is_zero());
        assert!(p3.eval(&[int(0), int(0)]).is_zero());
        assert!(modular_polynomial(5).is_err());
    }

    #[test]
    fn displayed_constant_terms() {
        let z = [int(0), int(0)];
        assert_eq!(uv_poly(F1).eval(&z), int(-2460375));
        assert_eq!(uv_poly(F2).eval(&z), int(-8303765625));
    }

    #[test]
    fn pointwise_isogeny() {
        let o = l2_isogeny(&pt(5, 150), 3).unwrap();
        assert!(o.isogenous);
        assert_eq!(o.vanishing, vec![IsogenyFactor::D6Factor]);
        assert!(!l2_isogeny(&pt(1, 2), 3).unwrap().isogenous);
        assert!(!l2_isogeny(&pt(0, 0), 2).unwrap().isogenous);
        assert!(l2_isogeny(&pt(0, 0), 4).is_err());
    }

    #[test]
    fn isogeny_against_modular_polynomial() {
        // where the j-pair is rational, vanishing of Φn(j1, j2) must agree
        for (u, v) in [(5, 150), (1, 2), (4, 16), (137, 1206), (2, 7), (10, 3)] {
            let Ok(p) = L2Point::new(int(u), int(v)) else {
                continue;
            };
            let Some((a, b)) = super::super::l2_j_pair(&p).rational_roots() else {
                continue;
            };
            for n in [2, 3] {
                let phi = modular_polynomial(n).unwrap().eval(&[a.clone(), b.clone()]);
                let o = l2_isogeny(&p, n).unwrap();
                assert_eq!(phi.is_zero(), o.isogenous, "({u}, {v}) level {n}");
            }
        }
    }

    #[test]
    fn level_two_loci() {
        let r = verify_isogeny_loci(2).unwrap();
        assert!(r.numerator_terms > 50);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn d4_pair() {
        let (j, jp) = d4_isogeny_pair(&int(3)).unwrap();
        assert_eq!(j, int(1728));
        assert_eq!(jp, int(1728));
        assert!(d4_isogeny_pair(&int(-1)).is_err());
        let (j, jp) = d4_isogeny_pair(&rat(1, 2)).unwrap();
        let phi = modular_polynomial(2).unwrap();
        assert!(phi.eval(&[j, jp]).is_zero());
    }

    #[test]
    fn d4_pair_is_two_isogenous_identically() {
        let (j, jp) = d4_isogeny_forms();
        let phi = modular_polynomial(2).unwrap();
        let ring = vars(&["x", "y", "s"]);
        let lift = |p: &MPoly| p.embed(&ring).unwrap();
        let (num, _) = hom_substitute(
            &phi.embed(&ring).unwrap(),
            &[
                (0, lift(j.num()), lift(j.den())),
                (1, lift(jp.num()), lift(jp.den())),
            ],
        );
        assert!(num.is_zero());
    }

    #[test]
    fn d4_j_is_double_root() {
        let rr = vars(&["u", "v", "s"]);
        let lift = |f: &RatFunc| {
            RatFunc::new(f.num().embed(&rr).unwrap(), f.den().embed(&rr).unwrap()).unwrap()
        };
        let t = |x: &str| RatFunc::from_poly(MPoly::parse(x, &rr).unwrap());
        let on_d8 = |f: &RatFunc| {
            lift(f)
                .substitute(&[(0, t("s^2")), (1, t("2s^3"))])
                .unwrap()
        };
        let (sum, prod) = j_pair_forms();
        let j = lift(&d4_isogeny_forms().0);
        assert_eq!(on_d8(&sum), j.scale(&int(2)));
        assert_eq!(on_d8(&prod), j.mul(&j));
    }
}
