use super::*;
use crate::algebra::rational::rat;
use crate::algebra::resultant::{discriminant_at, resultant_at};
use crate::invariants::{absolute, igusa, AbsoluteInvariants};

fn params(a: Rational, b: Rational) -> L3Params {
    L3Params::new(a, b).unwrap()
}

fn pt(u: Rational, v: Rational) -> L3Point {
    L3Point::new(u, v).unwrap()
}

/// Pulls a function of `(u, v)` back to `ℚ(X, a, b)` along `u = ab`, `v = b³`.
fn pull_back(f: &RatFunc) -> RatFunc {
    let xab = vars(&["X", "a", "b"]);
    let images = [
        MPoly::parse("ab", &xab).unwrap(),
        MPoly::parse("b^3", &xab).unwrap(),
    ];
    RatFunc::new(f.num().compose(&images), f.den().compose(&images)).unwrap()
}

fn invariants_of(p: &L3Params) -> AbsoluteInvariants {
    absolute(&igusa(&l3_curve(p))).unwrap()
}

fn invariants_at(p: &L3Point) -> AbsoluteInvariants {
    let c = p.coords();
    let [i1, i2, i3] = l3_absolute_forms().clone().map(|f| f.eval(&c).unwrap());
    AbsoluteInvariants { i1, i2, i3 }
}

#[test]
fn curve_examples() {
    let c = l3_curve(&params(int(1), int(1)));
    assert_eq!(
        c.to_string(),
        "Y^2 = 4*X^6 + 5*X^5 + 7*X^4 + 8*X^3 + 4*X^2 + 3*X + 1"
    );
    let c = l3_curve(&params(int(0), int(0)));
    assert_eq!(c.to_string(), "Y^2 = 4*X^6 + 5*X^3 + 1");
    let e = L3Params::new(int(1), int(3)).unwrap_err();
    assert!(e.to_string().contains("b³ − 27"), "{e}");
    let e = L3Params::new(int(-1), int(-1)).unwrap_err();
    assert!(e.to_string().contains("R = "), "{e}");
    assert!(L3Params::new(rat(17, 4), int(5)).is_err());
}

#[test]
fn resultant_and_discriminants_of_the_cubic_pair() {
    let (f, g) = cubic_pair_symbolic();
    let ring = f.vars().clone();
    let r = MPoly::parse("4a^3 + 27 - 18ab - a^2b^2 + 4b^3", &ring).unwrap();
    let res = resultant_at(&f, &g, 0);
    assert!(res == r || res == r.neg());
    let dfg = discriminant_at(&f.mul(&g), 0).unwrap();
    let df = discriminant_at(&f, 0).unwrap();
    let dg = discriminant_at(&g, 0).unwrap();
    assert_eq!(dfg, df.mul(&dg).mul(&r.pow(2)));
}

#[test]
fn j_pair_examples() {
    let (j1, j2) = l3_j_pair(&pt(int(1), int(1))).unwrap();
    assert_eq!((j1.clone(), j2.clone()), (rat(780448, 2197), int(128)));
    assert_eq!(l3_j_pair(&pt(rat(17, 13), int(2))).unwrap(), (j2, j1));
    let e = l3_j_pair(&pt(int(1), int(0))).unwrap_err();
    assert!(e.to_string().contains("v=0"), "{e}");
}

#[test]
fn point_invariants() {
    assert!(L3Point::new(int(9), int(27)).is_err());
    assert!(L3Point::new(int(0), int(0)).is_err());
    let p = L3Point::from_params(&params(int(2), int(3) / int(2)));
    assert_eq!(p, pt(int(3), rat(27, 8)));
}

#[test]
fn nu_examples() {
    let p = pt(int(1), int(1));
    let q = nu(&p).unwrap();
    assert_eq!(q, pt(rat(17, 13), int(2)));
    assert_eq!(nu(&q).unwrap(), p);
}

#[test]
fn nu_is_an_involution_fixing_r_and_swapping_j() {
    let report = verify_nu();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn r_invariants_at_one_one() {
    let r = l3_r_invariants(&pt(int(1), int(1))).unwrap();
    assert_eq!(r.r1, rat(-125, 54));
    assert_eq!(r.displayed(), (rat(-3375, 2), rat(405000, 13)));
    assert_eq!(l3_r_invariants(&pt(rat(17, 13), int(2))).unwrap(), r);
}

#[test]
fn r_invariants_match_their_definition() {
    for (a, b) in [
        (int(1), int(1)),
        (int(2), rat(-1, 3)),
        (rat(-5, 2), int(4)),
        (int(0), int(2)),
    ] {
        let p = params(a.clone(), b.clone());
        let f = [int(1), a.clone(), b.clone(), int(1)];
        let g = [int(4), &b * &b, int(2) * &b, int(1)];
        let h = two_cubic_h(&f, &g);
        let cubic_disc = |c: &[Rational; 4]| {
            let (a3, a2, a1, a0) = (&c[0], &c[1], &c[2], &c[3]);
            a2 * a2 * a1 * a1
                - int(4) * a3 * a1 * a1 * a1
                - int(4) * a2 * a2 * a2 * a0
                - int(27) * a3 * a3 * a0 * a0
                + int(18) * a3 * a2 * a1 * a0
        };
        let expected = RInvariants {
            r1: h.clone() * &h * &h / p.resultant(),
            r2: h.clone() * &h * &h * &h / (cubic_disc(&f) * cubic_disc(&g)),
        };
        assert_eq!(
            l3_r_invariants(&L3Point::from_params(&p)).unwrap(),
            expected
        );
    }
}

#[test]
fn t_and_n_are_sum_and_product_of_the_j_pair() {
    let report = verify_tn();
    assert!(report.passed(), "{report:?}");
    let q = l3_tn(&l3_r_invariants(&pt(int(1), int(1))).unwrap()).unwrap();
    assert_eq!(
        q,
        QuadraticAlg::new(rat(1061664, 2197), rat(99897344, 2197))
    );
    let zero = RInvariants {
        r1: int(0),
        r2: int(1),
    };
    assert!(l3_tn(&zero).is_err());
}

#[test]
fn displayed_t_and_n_are_the_reciprocal_forms() {
    let rr = r_ring();
    let p = |s: &str| MPoly::parse(s, &rr).unwrap();
    let shown_t = RatFunc::new(
        p(concat!(
            "1712282664960r2^3r1^6 + 1528823808r2^4r1^6 + 49941577728r2^4r1^5",
            " - 38928384r2^5r1^5 - 258048r2^6r1^4 + 12386304r2^6r1^3 + 901736973729792r2r1^10",
            " + 966131712r2^5r1^4 + 16231265527136256r1^10 + 480r2^8r1 + 101376r2^7r1^2",
            " + 479047767293952r2r1^8 + 7247757312r2^3r1^8 + 7827577896960r2^2r1^9",
            " + 2705210921189376r1^9 + 619683250176r2^3r1^7 + 21641687369515008r1^12",
            " + 32462531054272512r1^11 + r2^9 + 37572373905408r2^2r1^7",
            " + 1408964021452800r2r1^9 + 45595641249792r2^2r1^8",
        )),
        p("16777216r2^3r1^8"),
    )
    .unwrap();
    let shown_n = RatFunc::new(
        p(concat!(
            "-(84934656r1^5 + 1179648r1^4r2 - 5308416r1^4 - 442368r1^3r2",
            " - 13824r1^2r2^2 - 192r1r2^3 - r2^4)^3",
        )),
        p("68719476736r1^12r2^3"),
    )
    .unwrap();
    let one = MPoly::one(&rr);
    let recip = vec![
        (0, RatFunc::new(one.clone(), MPoly::var_at(&rr, 0)).unwrap()),
        (1, RatFunc::new(one, MPoly::var_at(&rr, 1)).unwrap()),
    ];
    let (t, n) = tn_forms();
    assert!(t.substitute(&recip).unwrap().neg().same_as(&shown_t));
    assert!(n.substitute(&recip).unwrap().same_as(&shown_n));
}

#[test]
fn uv_quadratics_hold() {
    let report = verify_uv_quadratics();
    assert!(report.passed(), "{report:?}");
    let (eq_u, _) = uv_quadratics();
    let r = l3_r_invariants(&pt(int(1), int(1))).unwrap();
    let at = |x: Rational| eq_u.eval(&[x, r.r1.clone(), r.r2.clone()]);
    assert!(at(int(1)).is_zero());
    assert!(at(rat(17, 13)).is_zero());
}

#[test]
fn igusa_forms_match_direct_computation() {
    let forms = l3_igusa_forms();
    for (a, b) in [(int(1), int(1)), (int(2), rat(-1, 3)), (rat(-5, 2), int(4))] {
        let p = params(a, b);
        let direct = igusa(&l3_curve(&p));
        let c = L3Point::from_params(&p).coords();
        let ev: Vec<Rational> = forms.iter().map(|f| f.eval(&c).unwrap()).collect();
        assert_eq!(ev, vec![direct.j2, direct.j4, direct.j6, direct.j10]);
    }
}

#[test]
fn subcover_j_invariants_match_the_j_pair() {
    let maps = symbolic_subcovers().unwrap();
    let (j1, j2) = j_forms();
    assert!(maps[0].j_invariant().unwrap().same_as(&pull_back(&j1)));
    assert!(maps[1].j_invariant().unwrap().same_as(&pull_back(&j2)));
}

#[test]
fn subcover_examples() {
    let p = params(int(1), int(1));
    assert_eq!(subcover2_st(&p), Some((int(-3), rat(1, 3))));
    let m = l3_subcover1(&p).unwrap();
    assert_eq!(
        m.target_values().unwrap(),
        [rat(1, 2), rat(11, 16), rat(-1, 4)]
    );
    assert_eq!(
        subcover2_branch(&params(int(1), int(0))),
        SubcoverBranch::BZero
    );
    assert_eq!(
        subcover2_branch(&params(rat(5, 2), int(1))),
        SubcoverBranch::Third
    );
}

#[test]
fn membership_of_a_generic_point_is_its_nu_orbit() {
    let m = l3_membership(&invariants_of(&params(int(1), int(1))));
    assert_eq!(m.points, vec![pt(int(1), int(1)), pt(rat(17, 13), int(2))]);
    assert_eq!(e3_estimate(&m), E3Estimate::Two);
}

#[test]
fn membership_of_the_corrected_table_row() {
    let inv = AbsoluteInvariants {
        i1: rat(-8019, 20),
        i2: rat(-1240029, 200),
        i3: rat(-531441, 100000),
    };
    let p = pt(rat(25, 2), rat(250, 9));
    assert_eq!(invariants_at(&p), inv);
    assert_eq!(nu(&p).unwrap(), pt(rat(-775, 8), rat(125, 36)));
    let m = l3_membership(&inv);
    assert_eq!(m.points, vec![pt(rat(-775, 8), rat(125, 36)), p]);
}

#[test]
fn membership_of_a_generic_curve_is_empty() {
    let s = crate::invariants::Sextic::parse("1,0,0,0,0,1,1").unwrap();
    let m = l3_membership(&absolute(&igusa(&s)).unwrap());
    assert!(m.points.is_empty());
    assert_eq!(e3_estimate(&m), E3Estimate::Zero);
}

#[test]
fn theta_critical_examples() {
    assert!(!theta_critical(&pt(int(1), int(1))));
    let p = pt(rat(1, 5), rat(-1, 2));
    assert!(theta_critical(&p));
    let (j1, j2) = l3_j_pair(&p).unwrap();
    assert_eq!(j1, j2);
    let m = l3_membership(&invariants_at(&p));
    assert!(m.points.contains(&p));
    assert_eq!(e3_estimate(&m), E3Estimate::One);
    // (9, 27) lies on the v = 3u branch of the locus but is not a valid point
    assert!(theta_critical_form().eval(&[int(9), int(27)]).is_zero());
    assert!(L3Point::new(int(9), int(27)).is_err());
}

#[test]
fn isomorphic_subfields_examples() {
    assert!(!isomorphic_subfields_locus(&pt(int(1), int(1))));
    let p = pt(rat(36, 5), rat(432, 25));
    assert!(isomorphic_subfields_locus(&p));
    assert!(iso2_form().eval(&p.coords()).is_zero());
    let (j1, j2) = l3_j_pair(&p).unwrap();
    assert_eq!(j1, j2);
}

#[test]
fn both_branches_divide_the_j_difference() {
    let (j1, j2) = j_forms();
    let diff = j1.sub(&j2);
    assert!(diff.num().divisible_by(&theta_critical_form()));
    assert!(diff.num().divisible_by(&iso2_form()));
}

#[test]
fn ab_to_uv_examples() {
    let ab = ab_ring();
    assert!(ab_to_uv(&MPoly::parse("a", &ab).unwrap()).is_err());
    // a³ = u³/v
    let g = ab_to_uv(&MPoly::parse("a^3 + b^3", &ab).unwrap()).unwrap();
    assert!(g.same_as(&RatFunc::parse("(u^3 + v^2) / (v)", &uv_ring()).unwrap()));
}

#[test]
fn pull_back_agrees_with_evaluation() {
    let (j1, _) = j_forms();
    let (a, b) = (int(2), rat(1, 3));
    let direct = j1.eval(&[&a * &b, &b * &b * &b]).unwrap();
    assert_eq!(pull_back(&j1).eval(&[int(0), a, b]).unwrap(), direct);
}

mod fibers {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(25))]
        #[test]
        fn membership_fibers_are_nu_orbits(an in -9i64..10, ad in 1i64..4, bn in -9i64..10, bd in 1i64..4) {
            let (a, b) = (rat(an, ad), rat(bn, bd));
            prop_assume!(!b.is_zero());
            let Ok(p) = L3Params::new(a, b) else { return Ok(()) };
            let q = L3Point::from_params(&p);
            let Ok(inv) = absolute(&igusa(&l3_curve(&p))) else { return Ok(()) };
            let Ok(nq) = nu(&q) else { return Ok(()) };
            let m = l3_membership(&inv);
            let mut expected = vec![q.clone(), nq];
            expected.sort();
            expected.dedup();
            prop_assert_eq!(m.points, expected);
        }
    }
}
