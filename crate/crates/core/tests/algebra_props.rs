//! Properties of the exact-algebra layer on random inputs.

use proptest::prelude::*;
use splitjac::algebra::{
    discriminant, from_canonical_text, gcd, int, rat, resultant, symmetric_reduce,
    to_canonical_text, vars, MPoly, RatFunc, Rational,
};

fn xy() -> splitjac::algebra::Vars {
    vars(&["x", "y"])
}

/// Sparse polynomial in `x, y` with small integer coefficients.
fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -9i64..=9), 1..=max_terms).prop_map(|terms| {
        MPoly::from_terms(
            &xy(),
            terms.into_iter().map(|(i, j, c)| (vec![i, j], int(c))),
        )
    })
}

fn nonzero_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    poly(max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly(4, 6), q in poly(4, 6), r in poly(3, 4)) {
        prop_assert_eq!(p.add(&q).mul(&r), p.mul(&r).add(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn display_parses_back(p in poly(5, 8)) {
        let text = p.to_string().replace('*', "");
        prop_assert_eq!(MPoly::parse(&text, &xy()).unwrap(), p);
    }

    #[test]
    fn canonical_text_round_trips(p in nonzero_poly(5, 8)) {
        let back = from_canonical_text(&to_canonical_text(&p)).unwrap();
        prop_assert_eq!(back, p.primitive_part());
    }

    #[test]
    fn exact_division_recovers_factor(p in nonzero_poly(3, 5), q in nonzero_poly(3, 5)) {
        prop_assert_eq!(p.mul(&q).div_exact(&q), Some(p));
    }

    #[test]
    fn gcd_divides_both_and_finds_common_factor(
        f in nonzero_poly(2, 3),
        a in nonzero_poly(2, 3),
        b in nonzero_poly(2, 3),
    ) {
        let (p, q) = (f.mul(&a), f.mul(&b));
        let g = gcd(&p, &q);
        prop_assert!(p.divisible_by(&g) && q.divisible_by(&g));
        prop_assert!(g.divisible_by(&f.primitive_part()));
    }

    /// `Res_x(p, q)` at `y = y0` vanishes iff `p(x, y0)` and `q(x, y0)`
    /// share a root, whenever the leading coefficients in `x` survive.
    #[test]
    fn resultant_vanishes_iff_common_factor(
        p in nonzero_poly(3, 5),
        q in nonzero_poly(3, 5),
        shared in prop::option::of(nonzero_poly(1, 3)),
        y0 in -6i64..=6,
    ) {
        let (p, q) = match &shared {
            Some(s) => (p.mul(s), q.mul(s)),
            None => (p, q),
        };
        prop_assume!(p.degree_in(0).unwrap_or(0) > 0 && q.degree_in(0).unwrap_or(0) > 0);
        let lead = |f: &MPoly| f.coeffs_in(0).last().unwrap().specialize(1, &int(y0));
        prop_assume!(!lead(&p).is_zero() && !lead(&q).is_zero());
        let r = resultant(&p, &q, "x").unwrap().specialize(1, &int(y0));
        let g = gcd(&p.specialize(1, &int(y0)), &q.specialize(1, &int(y0)));
        prop_assert_eq!(r.is_zero(), !g.is_constant());
    }

    /// `D(F·G) = D(F)·D(G)·Res(F, G)²` for the cubics of the two-cubic model.
    #[test]
    fn discriminant_of_product(an in -20i64..=20, ad in 1i64..=9, bn in -20i64..=20, bd in 1i64..=9) {
        let (a, b) = (rat(an, ad), rat(bn, bd));
        let ring = vars(&["X"]);
        let cubic = |c: [Rational; 4]| {
            MPoly::from_terms(&ring, c.into_iter().enumerate().map(|(k, c)| (vec![k as u32], c)))
        };
        let f = cubic([int(1), b.clone(), a.clone(), int(1)]);
        let g = cubic([int(1), int(2) * &b, &b * &b, int(4)]);
        let res = resultant(&f, &g, "X").unwrap();
        prop_assume!(!res.is_zero());
        let lhs = discriminant(&f.mul(&g), "X").unwrap();
        let rhs = discriminant(&f, "X").unwrap()
            .mul(&discriminant(&g, "X").unwrap())
            .mul(&res.pow(2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratfunc_normal_form_is_canonical(p in nonzero_poly(3, 4), q in nonzero_poly(3, 4), r in nonzero_poly(2, 3)) {
        let direct = RatFunc::new(p.clone(), q.clone()).unwrap();
        let padded = RatFunc::new(p.mul(&r), q.mul(&r)).unwrap();
        prop_assert_eq!(direct.num(), padded.num());
        prop_assert_eq!(direct.den(), padded.den());
        let c = rat(-3, 7);
        let scaled = RatFunc::new(p.scale(&c), q.scale(&c)).unwrap();
        prop_assert_eq!(scaled, direct);
    }

    #[test]
    fn symmetric_reduction_round_trips(p in poly(4, 6)) {
        let sym = p.add(&p.swap_vars(0, 1));
        let q = symmetric_reduce(&sym).unwrap();
        let ring = xy();
        let e1 = MPoly::parse("x + y", &ring).unwrap();
        let e2 = MPoly::parse("xy", &ring).unwrap();
        prop_assert_eq!(q.compose(&[e1, e2]), sym);
    }
}
