//! The two degree-3 elliptic subcovers `(X, Y) ↦ (U, V)` of `Y² = F·G`.
//!
//! Each map is `U = N(X)/D(X)`, `V = Y·A(X)/B(X)`. The target curve is
//! `V² = U³ + pU² + qU + r` up to a quadratic twist: the roots of the cubic
//! are the values of `U` at the roots of the other cubic factor, and the
//! identity `target(U) = c·F·G·(A/B)²` holds with `c` free of `X`.

use num_traits::Zero;

use super::{cubic_pair_symbolic, L3Params};
use crate::algebra::mpoly::{vars, MPoly, Vars};
use crate::algebra::ratfunc::hom_substitute;
use crate::algebra::rational::{int, Rational};
use crate::algebra::resultant::resultant_at;
use crate::algebra::RatFunc;
use crate::error::{Error, Result};

fn xab_ring() -> Vars {
    vars(&["X", "a", "b"])
}

fn xuab_ring() -> Vars {
    vars(&["X", "U", "a", "b"])
}

fn xab(s: &str) -> MPoly {
    MPoly::parse(s, &xab_ring()).expect("static polynomial")
}

/// Which formula produced a subcover map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubcoverBranch {
    /// `U1 = X²/F`.
    First,
    /// `b(b³ − 4ab + 9) ≠ 0`.
    Generic,
    /// `b = 0`.
    BZero,
    /// `b³ − 4ab + 9 = 0`.
    Third,
}

impl SubcoverBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            SubcoverBranch::First => "first",
            SubcoverBranch::Generic => "generic",
            SubcoverBranch::BZero => "b_zero",
            SubcoverBranch::Third => "third",
        }
    }
}

/// A subcover with its target cubic, over `ℚ[X, a, b]` (numeric maps have
/// `a, b` specialized away).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcoverMap {
    pub branch: SubcoverBranch,
    /// `U` as a function of `X`.
    pub u_map: RatFunc,
    /// `V = Y·v_factor`.
    pub v_factor: RatFunc,
    /// `[p, q, r]` with target `V² = U³ + pU² + qU + r` (up to twist).
    pub target: [RatFunc; 3],
    /// The constant `c` with `target(U) = c·F·G·v_factor²`.
    pub twist: RatFunc,
    /// Whether `c` is free of `X`, i.e. the map really lands on the target.
    pub identity_holds: bool,
}

impl SubcoverMap {
    /// j-invariant of the target cubic.
    pub fn j_invariant(&self) -> Result<RatFunc> {
        cubic_j_invariant(&self.target[0], &self.target[1], &self.target[2])
    }

    /// Target coefficients as rationals, for fully numeric maps.
    pub fn target_values(&self) -> Option<[Rational; 3]> {
        let v = |f: &RatFunc| Some(f.num().constant_value()? / f.den().constant_value()?);
        Some([
            v(&self.target[0])?,
            v(&self.target[1])?,
            v(&self.target[2])?,
        ])
    }

    pub fn twist_value(&self) -> Option<Rational> {
        Some(self.twist.num().constant_value()? / self.twist.den().constant_value()?)
    }
}

/// `j(U³ + pU² + qU + r) = 256(p² − 3q)³/disc`.
pub fn cubic_j_invariant(p: &RatFunc, q: &RatFunc, r: &RatFunc) -> Result<RatFunc> {
    let c = |k: i64| RatFunc::constant(p.vars(), int(k));
    let d0 = p.mul(p).sub(&q.scale(&int(3)));
    let disc = p
        .pow(2)
        .mul(&q.pow(2))
        .sub(&q.pow(3).mul(&c(4)))
        .sub(&p.pow(3).mul(r).mul(&c(4)))
        .add(&p.mul(q).mul(r).mul(&c(18)))
        .sub(&r.pow(2).mul(&c(27)));
    if disc.is_zero() {
        return Err(Error::Singular("target cubic has a repeated root".into()));
    }
    d0.pow(3).scale(&int(256)).div(&disc)
}

/// Polynomial data of a map before specialization.
struct RawMap {
    branch: SubcoverBranch,
    n: MPoly,
    d: MPoly,
    a: MPoly,
    b: MPoly,
    /// The cubic whose roots map to the branch points of the target.
    c: MPoly,
}

fn raw_first() -> RawMap {
    let (f, g) = cubic_pair_symbolic();
    RawMap {
        branch: SubcoverBranch::First,
        n: xab("X^2"),
        d: f.clone(),
        a: xab("X^3 - bX - 2"),
        b: f.pow(2),
        c: g,
    }
}

fn raw_second(branch: SubcoverBranch) -> RawMap {
    let (f, g) = cubic_pair_symbolic();
    let (n, d, a) = match branch {
        SubcoverBranch::Generic => (
            xab("(bX + 3)^2 ((b^3 - 4ab + 9)X - 3a + b^2)"),
            xab("b^2(b^3 - 4ab + 9)").mul(&g),
            xab("(4ab - b^3 - 8)X^3 + (4a - b^2)X^2 + bX + 1"),
        ),
        SubcoverBranch::BZero => (xab("3X - a"), xab("3(4X^3 + 1)"), xab("8X^3 - 4aX^2 - 1")),
        SubcoverBranch::Third => (
            xab("(bX + 3)^2"),
            xab("b^2").mul(&g),
            xab("bX^3 + 9X^2 + b^2X + b"),
        ),
        SubcoverBranch::First => unreachable!("first subcover is built by raw_first"),
    };
    RawMap {
        branch,
        n,
        d,
        a,
        b: g.pow(2),
        c: f,
    }
}

/// A substitution `x_i ↦ num/den` on `ℚ[X, a, b]` (indices 1 = a, 2 = b).
type Subs = Vec<(usize, MPoly, MPoly)>;

fn specialize(p: &MPoly, subs: &Subs) -> (MPoly, MPoly) {
    hom_substitute(p, subs)
}

fn ratfunc(pair: (MPoly, MPoly)) -> RatFunc {
    RatFunc::new(pair.0, pair.1).expect("nonzero denominator")
}

fn build(raw: RawMap, subs: &Subs) -> Result<SubcoverMap> {
    let xab = xab_ring();
    let xuab = xuab_ring();
    let lift = |p: &MPoly| p.embed(&xuab).expect("embed");
    let u = MPoly::var_at(&xuab, 1);
    // Res_X(C, N − U·D) ∈ ℚ[U, a, b]
    let res = resultant_at(&lift(&raw.c), &lift(&raw.n).sub(&u.mul(&lift(&raw.d))), 0);
    let coeffs = res.coeffs_in(1);
    if coeffs.len() != 4 {
        return Err(Error::Singular("target is not a cubic".into()));
    }
    let down = |p: &MPoly| {
        let images = [
            MPoly::zero(&xab),
            MPoly::zero(&xab),
            MPoly::var_at(&xab, 1),
            MPoly::var_at(&xab, 2),
        ];
        p.compose(&images)
    };
    let res_xab: Vec<MPoly> = coeffs.iter().map(down).collect();
    let sp: Vec<(MPoly, MPoly)> = res_xab.iter().map(|c| specialize(c, subs)).collect();
    let lead = &sp[3];
    if lead.0.is_zero() {
        return Err(Error::Singular(
            "target degenerates at these parameters".into(),
        ));
    }
    let coef = |k: usize| ratfunc((sp[k].0.mul(&lead.1), sp[k].1.mul(&lead.0)));
    let target = [coef(2), coef(1), coef(0)];

    let (f, g) = cubic_pair_symbolic();
    let (n, dn) = specialize(&raw.n, subs);
    let (d, dd) = specialize(&raw.d, subs);
    let (a, da) = specialize(&raw.a, subs);
    let (b, db) = specialize(&raw.b, subs);
    let (fs, df) = specialize(&f, subs);
    let (gs, dg) = specialize(&g, subs);
    let u_map = ratfunc((n.mul(&dd), d.mul(&dn)));
    let v_factor = ratfunc((a.mul(&db), b.mul(&da)));

    // Σ res_k U^k at U = N/D, as P / D³ (with X-free specialization factors)
    let ring_x = xab;
    let mut p_num = MPoly::zero(&ring_x);
    let (nn, dd_x) = (n.mul(&dd), d.mul(&dn));
    for (k, (ck, _)) in sp.iter().enumerate() {
        // ck/dk · nn^k · dd_x^(3−k), over the common X-free denominator Π dk
        let mut t = ck.mul(&nn.pow(k as u32)).mul(&dd_x.pow(3 - k as u32));
        for (j, (_, dj)) in sp.iter().enumerate() {
            if j != k {
                t = t.mul(dj);
            }
        }
        p_num = p_num.add(&t);
    }
    let dk_all = sp
        .iter()
        .fold(MPoly::one(&ring_x), |acc, (_, d)| acc.mul(d));
    // c = target(U) / (F·G·(A/B)²) with target(U) = res(U)/lead
    let lhs_num = p_num
        .mul(&lead.1)
        .mul(&b.pow(2))
        .mul(&da.pow(2))
        .mul(&df)
        .mul(&dg);
    let rhs_den = dk_all
        .mul(&lead.0)
        .mul(&dd_x.pow(3))
        .mul(&fs)
        .mul(&gs)
        .mul(&a.pow(2))
        .mul(&db.pow(2));
    // the ratio is free of X iff its X-derivative vanishes
    let identity_holds = lhs_num
        .mul(&rhs_den.derivative(0))
        .sub(&rhs_den.mul(&lhs_num.derivative(0)))
        .is_zero();
    let twist = x_free_ratio(&lhs_num, &rhs_den)?;
    Ok(SubcoverMap {
        branch: raw.branch,
        u_map,
        v_factor,
        target,
        twist,
        identity_holds,
    })
}

/// `p/q` for polynomials whose ratio does not depend on `X`, read off at
/// the first integer `X` where `q` does not vanish.
fn x_free_ratio(p: &MPoly, q: &MPoly) -> Result<RatFunc> {
    for x in 0i64.. {
        let qx = q.specialize(0, &int(x));
        if !qx.is_zero() {
            return RatFunc::new(p.specialize(0, &int(x)), qx);
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

fn numeric_subs(p: &L3Params) -> Subs {
    let r = xab_ring();
    let c = |q: &Rational| {
        (
            MPoly::constant(&r, Rational::from_integer(q.numer().clone())),
            MPoly::constant(&r, Rational::from_integer(q.denom().clone())),
        )
    };
    let (an, ad) = c(&p.a);
    let (bn, bd) = c(&p.b);
    vec![(1, an, ad), (2, bn, bd)]
}

/// The first subcover `U1 = X²/F`, `V1 = Y(X³ − bX − 2)/F²`.
pub fn l3_subcover1(p: &L3Params) -> Result<SubcoverMap> {
    build(raw_first(), &numeric_subs(p))
}

/// Branch of the second subcover used for `(a, b)`.
pub fn subcover2_branch(p: &L3Params) -> SubcoverBranch {
    if p.b.is_zero() {
        SubcoverBranch::BZero
    } else if (&p.b * &p.b * &p.b - int(4) * &p.a * &p.b + int(9)).is_zero() {
        SubcoverBranch::Third
    } else {
        SubcoverBranch::Generic
    }
}

/// The second subcover, for the branch selected by `b(b³ − 4ab + 9)`.
pub fn l3_subcover2(p: &L3Params) -> Result<SubcoverMap> {
    build(raw_second(subcover2_branch(p)), &numeric_subs(p))
}

/// `s = −3/b`, `t = (3a − b²)/(b³ − 4ab + 9)` of the generic branch.
pub fn subcover2_st(p: &L3Params) -> Option<(Rational, Rational)> {
    if subcover2_branch(p) != SubcoverBranch::Generic {
        return None;
    }
    let (a, b) = (&p.a, &p.b);
    Some((
        int(-3) / b,
        (int(3) * a - b * b) / (b * b * b - int(4) * a * b + int(9)),
    ))
}

/// Symbolic maps: the first subcover and the generic second branch over
/// `ℚ(a, b)`, the `b = 0` branch over `ℚ(a)`, and the third branch with
/// `a = (b³ + 9)/(4b)`.
pub fn symbolic_subcovers() -> Result<[SubcoverMap; 4]> {
    let r = xab_ring();
    let none: Subs = Vec::new();
    let b_zero: Subs = vec![(2, MPoly::zero(&r), MPoly::one(&r))];
    let third: Subs = vec![(1, xab("b^3 + 9"), xab("4b"))];
    Ok([
        build(raw_first(), &none)?,
        build(raw_second(SubcoverBranch::Generic), &none)?,
        build(raw_second(SubcoverBranch::BZero), &b_zero)?,
        build(raw_second(SubcoverBranch::Third), &third)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn params(a: Rational, b: Rational) -> L3Params {
        L3Params::new(a, b).unwrap()
    }

    #[test]
    fn first_subcover_at_one_one() {
        let m = l3_subcover1(&params(int(1), int(1))).unwrap();
        assert!(m.identity_holds);
        assert_eq!(
            m.target_values().unwrap(),
            [rat(1, 2), rat(11, 16), rat(-1, 4)]
        );
        assert_eq!(m.twist_value().unwrap(), rat(-1, 16));
        let j = m.j_invariant().unwrap();
        assert_eq!(
            j.num().constant_value().unwrap() / j.den().constant_value().unwrap(),
            rat(780448, 2197)
        );
    }

    #[test]
    fn second_subcover_branches() {
        let p = params(int(1), int(1));
        assert_eq!(subcover2_st(&p), Some((int(-3), rat(1, 3))));
        let m = l3_subcover2(&p).unwrap();
        assert_eq!(m.branch, SubcoverBranch::Generic);
        assert!(m.identity_holds);
        let j = m.j_invariant().unwrap();
        assert_eq!(
            j.num().constant_value().unwrap() / j.den().constant_value().unwrap(),
            int(128)
        );

        let p = params(int(1), int(0));
        let m = l3_subcover2(&p).unwrap();
        assert_eq!(m.branch, SubcoverBranch::BZero);
        assert!(m.identity_holds);
        assert_eq!(
            m.u_map,
            RatFunc::parse("3X - 1 / 12X^3 + 3", &xab_ring()).unwrap()
        );
        assert_eq!(m.twist_value().unwrap(), rat(-1, 27));

        let p = params(rat(5, 2), int(1));
        let m = l3_subcover2(&p).unwrap();
        assert_eq!(m.branch, SubcoverBranch::Third);
        assert!(m.identity_holds);
        assert_eq!(
            m.u_map,
            RatFunc::parse("(X + 3)^2 / 4X^3 + X^2 + 2X + 1", &xab_ring()).unwrap()
        );
        assert_eq!(m.twist_value().unwrap(), int(64));
    }

    #[test]
    fn symbolic_identities() {
        let maps = symbolic_subcovers().unwrap();
        for m in &maps {
            assert!(m.identity_holds, "{:?}", m.branch);
        }
        let ab = xab_ring();
        let rf = |n: &str, d: &str| RatFunc::new(xab(n), xab(d)).unwrap();
        assert_eq!(maps[0].twist, rf("-1", "4a^3 + 27 - 18ab - a^2b^2 + 4b^3"));
        assert_eq!(
            maps[0].target,
            [
                rf("2(ab^2 - 6a^2 + 9b)", "4a^3 + 27 - 18ab - a^2b^2 + 4b^3"),
                rf("12a - b^2", "4a^3 + 27 - 18ab - a^2b^2 + 4b^3"),
                rf("-4", "4a^3 + 27 - 18ab - a^2b^2 + 4b^3"),
            ]
        );
        assert_eq!(maps[1].twist, rf("(27 - b^3)^3", "b^6 (4ab - b^3 - 9)^3"));
        assert_eq!(maps[2].twist, RatFunc::constant(&ab, rat(-1, 27)));
        assert_eq!(maps[3].twist, rf("64", "b^5"));
    }
}
