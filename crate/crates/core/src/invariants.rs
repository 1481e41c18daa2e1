//! Binary sextics and their Igusa invariants.
//!
//! The invariants are built from Clebsch transvectants
//! `(f, g)_k = (m−k)!(n−k)!/(m!n!) Σ_i (−1)^i C(k,i) ∂^k f/∂X^(k−i)∂Z^i · ∂^k g/∂X^i∂Z^(k−i)`
//! with `i = (f,f)_4`, `Δ = (i,i)_2`, `A = (f,f)_6`, `B = (i,i)_4`,
//! `C = (i,Δ)_4`, and
//!
//! ```text
//! J2  = −120 A
//! J4  = −720 A² + 6750 B
//! J6  = 8640 A³ − 108000 A B + 202500 C
//! J10 = discriminant of f (as a binary form)
//! ```
//!
//! This normalization gives `J2 = 240 + 16u`, `J4 = 48v + 4u² + 1620 − 504u`,
//! `J6 = −20664u + 96v − 424u² + 24u³ + 160uv + 119880`,
//! `J10 = 64(27 − 18u − u² + 4v)²` for `Y² = X⁶ − s1X⁴ + s2X² − 1` with
//! `u = s1s2`, `v = s1³ + s2³`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::mpoly::{vars, MPoly, Vars};
use crate::algebra::rational::{int, parse_rational, Rational};
use crate::algebra::resultant::discriminant;
use crate::error::{Error, Result};

/// A binary form `Σ c[j] X^j Z^(d−j)` with coefficients in a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<MPoly>,
}

impl BinaryForm {
    /// `coeffs[j]` multiplies `X^j Z^(d−j)`; `d = coeffs.len() − 1`.
    pub fn new(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    fn ring(&self) -> &Vars {
        self.coeffs[0].vars()
    }

    fn dx(&self) -> BinaryForm {
        if self.degree() == 0 {
            return BinaryForm::new(vec![MPoly::zero(self.ring())]);
        }
        BinaryForm::new(
            (1..self.coeffs.len())
                .map(|j| self.coeffs[j].scale_int(j as i64))
                .collect(),
        )
    }

    fn dz(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::new(vec![MPoly::zero(self.ring())]);
        }
        BinaryForm::new(
            (0..d)
                .map(|j| self.coeffs[j].scale_int((d - j) as i64))
                .collect(),
        )
    }

    fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut c = vec![MPoly::zero(self.ring()); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        BinaryForm::new(c)
    }

    fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), o.degree());
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    fn partial(&self, nx: usize, nz: usize) -> BinaryForm {
        let mut f = self.clone();
        for _ in 0..nx {
            f = f.dx();
        }
        for _ in 0..nz {
            f = f.dz();
        }
        f
    }

    /// The `k`-th transvectant `(self, g)_k`.
    pub fn transvectant(&self, g: &BinaryForm, k: usize) -> BinaryForm {
        let (m, n) = (self.degree(), g.degree());
        assert!(k <= m && k <= n, "transvectant order exceeds degree");
        let norm = Rational::new(
            factorial(m - k) * factorial(n - k),
            factorial(m) * factorial(n),
        );
        let mut acc: Option<BinaryForm> = None;
        for i in 0..=k {
            let term = self.partial(k - i, i).mul(&g.partial(i, k - i));
            let c = binomial(k, i) * if i % 2 == 1 { -1 } else { 1 };
            let term = term.scale(&Rational::from_integer(BigInt::from(c)));
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap().scale(&norm)
    }

    fn as_constant(&self) -> MPoly {
        assert_eq!(self.degree(), 0, "expected an invariant");
        self.coeffs[0].clone()
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Discriminant of `a6X⁶ + … + a0` as a polynomial in `a0, …, a6`.
fn generic_sextic_discriminant() -> &'static MPoly {
    static DISC: OnceLock<MPoly> = OnceLock::new();
    DISC.get_or_init(|| {
        let names = ["X", "a0", "a1", "a2", "a3", "a4", "a5", "a6"];
        let ring = vars(&names);
        let f = MPoly::parse("a6X^6 + a5X^5 + a4X^4 + a3X^3 + a2X^2 + a1X + a0", &ring)
            .expect("static sextic");
        let d = discriminant(&f, "X").expect("degree 6");
        let target = vars(&names[1..]);
        let mut images = vec![MPoly::zero(&target)];
        images.extend((0..7).map(|k| MPoly::var_at(&target, k)));
        d.compose(&images)
    })
}

/// Igusa invariants `[J2, J4, J6, J10]` of the sextic with coefficients
/// `coeffs = [a6, a5, …, a0]` in any polynomial ring.
pub fn igusa_forms(coeffs: &[MPoly; 7]) -> [MPoly; 4] {
    let f = BinaryForm::new(coeffs.iter().rev().cloned().collect());
    let i = f.transvectant(&f, 4);
    let delta = i.transvectant(&i, 2);
    let a = f.transvectant(&f, 6).as_constant();
    let b = i.transvectant(&i, 4).as_constant();
    let c = i.transvectant(&delta, 4).as_constant();
    let j2 = a.scale_int(-120);
    let a2 = a.mul(&a);
    let j4 = a2.scale_int(-720).add(&b.scale_int(6750));
    let j6 = a2
        .mul(&a)
        .scale_int(8640)
        .sub(&a.mul(&b).scale_int(108000))
        .add(&c.scale_int(202500));
    let ascending: Vec<MPoly> = coeffs.iter().rev().cloned().collect();
    let j10 = generic_sextic_discriminant().compose(&ascending);
    [j2, j4, j6, j10]
}

/// The binary sextic `a6X⁶ + a5X⁵Z + … + a0Z⁶` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sextic {
    coeffs: [Rational; 7],
}

impl Sextic {
    /// Coefficients in degree-descending order `[a6, a5, …, a0]`.
    pub fn new(coeffs: [Rational; 7]) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("the zero sextic is not a curve".into()));
        }
        Ok(Sextic { coeffs })
    }

    /// Parses `"a6,a5,a4,a3,a2,a1,a0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 7 {
            return Err(Error::Parse(format!(
                "a curve needs seven coefficients a6,...,a0; got {}",
                parts.len()
            )));
        }
        let v: Vec<Rational> = parts
            .iter()
            .map(|p| parse_rational(p))
            .collect::<Result<_>>()?;
        Sextic::new(v.try_into().expect("seven coefficients"))
    }

    /// From a univariate polynomial of degree at most 6 in variable `i`.
    pub fn from_poly(p: &MPoly, i: usize) -> Result<Self> {
        let up = crate::algebra::UPoly::from_mpoly(p, i)
            .ok_or_else(|| Error::Precondition("sextic must be univariate".into()))?;
        if up.degree().unwrap_or(0) > 6 {
            return Err(Error::Precondition("degree exceeds 6".into()));
        }
        let mut c: [Rational; 7] = Default::default();
        for (k, a) in up.coeffs().iter().enumerate() {
            c[6 - k] = a.clone();
        }
        Sextic::new(c)
    }

    /// `[a6, …, a0]`.
    pub fn coeffs(&self) -> &[Rational; 7] {
        &self.coeffs
    }

    /// The affine polynomial `f(X, 1)` over the single variable `name`.
    pub fn to_poly(&self, name: &str) -> MPoly {
        let v = vars(&[name]);
        MPoly::from_terms(
            &v,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![(6 - k) as u32], c.clone())),
        )
    }

    fn constant_coeffs(&self) -> [MPoly; 7] {
        let empty = vars(&[]);
        self.coeffs.clone().map(|c| MPoly::constant(&empty, c))
    }

    /// Comma-separated coefficients, degree descending.
    pub fn to_curve_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Sextic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = {}", self.to_poly("X"))
    }
}

/// Igusa invariants `J2, J4, J6, J10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaInvariants {
    pub j2: Rational,
    pub j4: Rational,
    pub j6: Rational,
    pub j10: Rational,
}

impl IgusaInvariants {
    /// Six distinct roots on the projective line.
    pub fn genus2_valid(&self) -> bool {
        !self.j10.is_zero()
    }

    /// `(t²J2, t⁴J4, t⁶J6, t¹⁰J10)`.
    pub fn weighted_scale(&self, t: &Rational) -> Self {
        let p = |e: usize| num_traits::pow(t.clone(), e);
        IgusaInvariants {
            j2: &self.j2 * p(2),
            j4: &self.j4 * p(4),
            j6: &self.j6 * p(6),
            j10: &self.j10 * p(10),
        }
    }
}

/// Absolute invariants `i1 = 144J4/J2²`, `i2 = −1728(J2J4 − 3J6)/J2³`,
/// `i3 = 486J10/J2⁵`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteInvariants {
    pub i1: Rational,
    pub i2: Rational,
    pub i3: Rational,
}

/// Igusa invariants of a sextic.
pub fn igusa(s: &Sextic) -> IgusaInvariants {
    let [j2, j4, j6, j10] = igusa_forms(&s.constant_coeffs());
    let v = |p: MPoly| p.constant_value().expect("numeric invariant");
    IgusaInvariants {
        j2: v(j2),
        j4: v(j4),
        j6: v(j6),
        j10: v(j10),
    }
}

/// Absolute invariants; undefined when `J2 = 0`.
pub fn absolute(j: &IgusaInvariants) -> Result<AbsoluteInvariants> {
    if j.j2.is_zero() {
        return Err(Error::J2Vanishes);
    }
    let j2 = &j.j2;
    let j2_2 = j2 * j2;
    let j2_3 = &j2_2 * j2;
    let j2_5 = &j2_3 * &j2_2;
    Ok(AbsoluteInvariants {
        i1: int(144) * &j.j4 / &j2_2,
        i2: int(-1728) * (j2 * &j.j4 - int(3) * &j.j6) / &j2_3,
        i3: int(486) * &j.j10 / &j2_5,
    })
}

/// The sextic `f(aX + bZ, cX + dZ)` for `m = [[a, b], [c, d]]`.
pub fn moebius_transform(s: &Sextic, m: &[[Rational; 2]; 2]) -> Result<Sextic> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Err(Error::Precondition("singular transformation matrix".into()));
    }
    let empty = vars(&[]);
    let k = |q: &Rational| MPoly::constant(&empty, q.clone());
    // linear forms in ascending X-power order: b Z + a X, d Z + c X
    let l1 = BinaryForm::new(vec![k(&m[0][1]), k(&m[0][0])]);
    let l2 = BinaryForm::new(vec![k(&m[1][1]), k(&m[1][0])]);
    let mut total = BinaryForm::new(vec![MPoly::zero(&empty); 7]);
    for (idx, c) in s.coeffs.iter().enumerate() {
        let j = 6 - idx;
        if c.is_zero() {
            continue;
        }
        let mut t = BinaryForm::new(vec![k(c)]);
        for _ in 0..j {
            t = t.mul(&l1);
        }
        for _ in 0..(6 - j) {
            t = t.mul(&l2);
        }
        total = total.add(&t);
    }
    let mut out: [Rational; 7] = Default::default();
    for (j, c) in total.coeffs.iter().enumerate() {
        out[6 - j] = c.constant_value().expect("numeric");
    }
    Sextic::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn curve(s: &str) -> Sextic {
        Sextic::parse(s).unwrap()
    }

    #[test]
    fn anchor_values() {
        let j = igusa(&curve("1,0,0,0,0,0,-1"));
        assert_eq!(
            (j.j2, j.j4, j.j6, j.j10),
            (int(240), int(1620), int(119880), int(46656))
        );
        let j = igusa(&curve("1,0,-1,0,1,0,-1"));
        assert_eq!(
            (j.j2, j.j4, j.j6, j.j10),
            (int(256), int(1216), int(99328), int(16384))
        );
    }

    #[test]
    fn repeated_root_has_zero_discriminant() {
        // (X − 1)² (X⁴ + X + 1)
        let j = igusa(&curve("1,-2,1,1,-1,-1,1"));
        assert!(!j.genus2_valid());
    }

    #[test]
    fn absolute_of_anchor() {
        let a = absolute(&igusa(&curve("1,0,0,0,0,0,-1"))).unwrap();
        assert_eq!(
            (a.i1, a.i2, a.i3),
            (rat(81, 20), rat(-729, 200), rat(729, 25600000))
        );
        let j = igusa(&curve("1,0,0,0,0,0,-1"));
        assert_eq!(
            absolute(&j.weighted_scale(&int(7))).unwrap(),
            absolute(&j).unwrap()
        );
        let zero = IgusaInvariants { j2: int(0), ..j };
        assert_eq!(absolute(&zero), Err(Error::J2Vanishes));
    }

    #[test]
    fn quintic_model_is_accepted() {
        let j = igusa(&curve("0,1,0,0,0,-1,0"));
        assert!(j.genus2_valid());
        assert!(!j.j2.is_zero());
    }

    #[test]
    fn moebius_identity_and_swap() {
        let s = curve("1,0,0,0,0,0,-1");
        let id = [[int(1), int(0)], [int(0), int(1)]];
        assert_eq!(moebius_transform(&s, &id).unwrap(), s);
        let swap = [[int(0), int(1)], [int(1), int(0)]];
        assert_eq!(
            moebius_transform(&s, &swap).unwrap(),
            curve("-1,0,0,0,0,0,1")
        );
        let sing = [[int(1), int(2)], [int(2), int(4)]];
        assert!(moebius_transform(&s, &sing).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Sextic::parse("1,2,3"), Err(Error::Parse(_))));
        assert!(Sextic::parse("0,0,0,0,0,0,0").is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]
        #[test]
        fn invariants_scale_by_determinant(
            c in proptest::collection::vec(-6i64..6, 7),
            m in proptest::collection::vec(-3i64..4, 4),
        ) {
            let det = m[0] * m[3] - m[1] * m[2];
            proptest::prop_assume!(det != 0);
            let cs: Vec<Rational> = c.iter().map(|&x| int(x)).collect();
            proptest::prop_assume!(cs.iter().any(|x| !x.is_zero()));
            let s = Sextic::new(cs.try_into().unwrap()).unwrap();
            let mat = [[int(m[0]), int(m[1])], [int(m[2]), int(m[3])]];
            let t = moebius_transform(&s, &mat).unwrap();
            let (a, b) = (igusa(&s), igusa(&t));
            let d = int(det);
            let p = |e: usize| num_traits::pow(d.clone(), e);
            proptest::prop_assert_eq!(b.j2, a.j2 * p(6));
            proptest::prop_assert_eq!(b.j4, a.j4 * p(12));
            proptest::prop_assert_eq!(b.j6, a.j6 * p(18));
            proptest::prop_assert_eq!(b.j10, a.j10 * p(30));
        }
    }
}
