//! Rational functions in canonical form.

use std::fmt;

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::mpoly::{MPoly, Vars};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` integral, of content 1 and
/// with positive grevlex-leading coefficient. Two equal functions therefore
/// have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                den: MPoly::one(num.vars()),
                num,
            });
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let (c, den) = den.primitive();
        Ok(RatFunc {
            num: num.scale(&c.recip()),
            den,
        })
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::one(p.vars());
        RatFunc { num: p, den }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    /// Parses `"numerator"` or `"(numerator)/(denominator)"` style input: the
    /// text is split at a top-level `" / "`.
    pub fn parse(s: &str, vars: &Vars) -> Result<Self> {
        match s.split_once(" / ") {
            Some((n, d)) => Self::new(MPoly::parse(n, vars)?, MPoly::parse(d, vars)?),
            None => Ok(Self::from_poly(MPoly::parse(s, vars)?)),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero den")
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::from_poly(MPoly::zero(self.vars()));
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::from_poly(MPoly::one(self.vars())).div(self)
    }

    /// Value at a full point; errors when the denominator vanishes there.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Simultaneous substitution `x_i ↦ f_i`, other variables fixed.
    pub fn substitute(&self, subs: &[(usize, RatFunc)]) -> Result<RatFunc> {
        let mut images: Vec<RatFunc> = (0..self.vars().len())
            .map(|i| RatFunc::from_poly(MPoly::var_at(self.vars(), i)))
            .collect();
        for (i, f) in subs {
            images[*i] = f.clone();
        }
        self.compose(&images)
    }

    /// `self(f_0, …, f_{n−1})` with the `f_i` in a common (possibly different)
    /// ring.
    pub fn compose(&self, images: &[RatFunc]) -> Result<RatFunc> {
        let (n, d) = self.compose_unreduced(images)?;
        RatFunc::new(n, d)
    }

    /// `compose` as an unreduced pair `(P, Q)`, without any gcd work.
    pub fn compose_unreduced(&self, images: &[RatFunc]) -> Result<(MPoly, MPoly)> {
        let raw: Vec<(MPoly, MPoly)> = images
            .iter()
            .map(|f| (f.num.clone(), f.den.clone()))
            .collect();
        let (nn, nd) = hom_compose(&self.num, &raw);
        let (dn, dd) = hom_compose(&self.den, &raw);
        if dn.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok((nn.mul(&dd), dn.mul(&nd)))
    }

    /// Whether `self = num / den`, by cross multiplication.
    pub fn equals_fraction(&self, num: &MPoly, den: &MPoly) -> bool {
        self.num.mul(den) == num.mul(&self.den)
    }

    /// Same function as `o`, decided by cross multiplication.
    pub fn same_as(&self, o: &RatFunc) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Substitutes `x_i ↦ n_i / d_i` into `p` without any gcd work and returns
/// `(P, Q)` with `p(…) = P / Q`, where `Q = Π d_i^(deg_i p)`.
///
/// The `n_i`, `d_i` must not involve any of the substituted variables.
pub fn hom_substitute(p: &MPoly, subs: &[(usize, MPoly, MPoly)]) -> (MPoly, MPoly) {
    let mut cur = p.clone();
    let mut den = MPoly::one(p.vars());
    for (i, n, d) in subs {
        let coeffs = cur.coeffs_in(*i);
        if coeffs.len() <= 1 {
            continue;
        }
        let deg = coeffs.len() - 1;
        let mut dpow = vec![MPoly::one(p.vars())];
        for k in 1..=deg {
            let next = dpow[k - 1].mul(d);
            dpow.push(next);
        }
        let mut acc = coeffs[deg].clone();
        for k in (0..deg).rev() {
            acc = acc.mul(n);
            if !coeffs[k].is_zero() {
                acc = acc.add(&coeffs[k].mul(&dpow[deg - k]));
            }
        }
        cur = acc;
        den = den.mul(&dpow[deg]);
    }
    (cur, den)
}

/// `p(n_0/d_0, …, n_{k−1}/d_{k−1})` as `(P, Q)` with `Q = Π d_i^(deg_i p)`,
/// where the images share a target ring. No gcd work is done.
pub fn hom_compose(p: &MPoly, images: &[(MPoly, MPoly)]) -> (MPoly, MPoly) {
    assert_eq!(images.len(), p.vars().len(), "one image per variable");
    let target = images
        .first()
        .map(|(n, _)| n.vars().clone())
        .unwrap_or_else(|| p.vars().clone());
    let degs: Vec<usize> = (0..images.len())
        .map(|i| p.degree_in(i).unwrap_or(0) as usize)
        .collect();
    let dpows: Vec<Vec<MPoly>> = images
        .iter()
        .zip(&degs)
        .map(|((_, d), &k)| {
            let mut v = vec![MPoly::one(&target)];
            for j in 1..=k {
                let next = v[j - 1].mul(d);
                v.push(next);
            }
            v
        })
        .collect();
    let num = compose_from(p, 0, images, &degs, &dpows, &target);
    let den = dpows
        .iter()
        .zip(&degs)
        .fold(MPoly::one(&target), |acc, (v, &k)| acc.mul(&v[k]));
    (num, den)
}

fn compose_from(
    p: &MPoly,
    i: usize,
    images: &[(MPoly, MPoly)],
    degs: &[usize],
    dpows: &[Vec<MPoly>],
    target: &crate::algebra::mpoly::Vars,
) -> MPoly {
    if p.is_zero() {
        return MPoly::zero(target);
    }
    if i == images.len() {
        return MPoly::constant(
            target,
            p.constant_value().expect("all variables substituted"),
        );
    }
    let coeffs = p.coeffs_in(i);
    let top = coeffs.len() - 1;
    let n = &images[i].0;
    let d = &dpows[i];
    let mut acc = compose_from(&coeffs[top], i + 1, images, degs, dpows, target);
    for k in (0..top).rev() {
        acc = acc.mul(n);
        if !coeffs[k].is_zero() {
            let c = compose_from(&coeffs[k], i + 1, images, degs, dpows, target);
            acc = acc.add(&c.mul(&d[top - k]));
        }
    }
    acc.mul(&d[degs[i] - top])
}
