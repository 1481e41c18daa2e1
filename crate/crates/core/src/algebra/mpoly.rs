//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under the
//! graded reverse lexicographic order, so iteration is ascending and the
//! leading term is the last entry. All polynomials taking part in one
//! computation share a variable list (`Vars`); binary operations panic on a
//! mismatch, which is always a programming error.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{denominator_lcm, Rational};
use crate::error::{Error, Result};

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

/// Builds a variable list from names.
pub fn vars(names: &[&str]) -> Vars {
    names
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .into()
}

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
            && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::VariableNotPresent(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial(e), Rational::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity mismatch");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "monomial arity mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "variable lists differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.check_vars(other);
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.vars);
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let (m0, c0) = single.terms.iter().next().unwrap();
            return MPoly {
                vars: self.vars.clone(),
                terms: many
                    .terms
                    .iter()
                    .map(|(m, c)| (m.mul(m0), c * c0))
                    .collect(),
            };
        }
        let integral = self.is_integral() && other.is_integral();
        if integral {
            if let Some(p) = self.mul_packed(other) {
                return p;
            }
            let mut acc: HashMap<Monomial, BigInt> =
                HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let p = ca.numer() * cb.numer();
                    match acc.entry(ma.mul(mb)) {
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(p);
                        }
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += p;
                        }
                    }
                }
            }
            return MPoly {
                vars: self.vars.clone(),
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, Rational::from_integer(c)))
                    .collect(),
            };
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Integral product with exponent vectors packed into 16-bit fields of a
    /// `u128`; `None` when the variables or degrees do not fit.
    fn mul_packed(&self, other: &MPoly) -> Option<MPoly> {
        const BITS: usize = 16;
        let n = self.vars.len();
        if n * BITS > 128 {
            return None;
        }
        let max_exp = |p: &MPoly| {
            p.terms
                .keys()
                .flat_map(|m| m.0.iter().copied())
                .max()
                .unwrap_or(0)
        };
        if max_exp(self) as u64 + max_exp(other) as u64 >= 1 << BITS {
            return None;
        }
        let pack = |m: &Monomial| m.0.iter().fold(0u128, |acc, &e| (acc << BITS) | e as u128);
        let a: Vec<(u128, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (pack(m), c.numer()))
            .collect();
        let b: Vec<(u128, &BigInt)> = other
            .terms
            .iter()
            .map(|(m, c)| (pack(m), c.numer()))
            .collect();
        let mut acc: HashMap<u128, BigInt> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                let p = *ca * *cb;
                match acc.entry(ka + kb) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += p;
                    }
                }
            }
        }
        let mask = (1u128 << BITS) - 1;
        let unpack = |mut k: u128| {
            let mut e = vec![0u32; n];
            for slot in e.iter_mut().rev() {
                *slot = (k & mask) as u32;
                k >>= BITS;
            }
            Monomial(e)
        };
        Some(MPoly {
            vars: self.vars.clone(),
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (unpack(k), Rational::from_integer(c)))
                .collect(),
        })
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Evaluates at a full point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut cache: Vec<Vec<Rational>> = vec![vec![Rational::one()]; point.len()];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pows = &mut cache[i];
                while pows.len() <= e as usize {
                    let next = pows.last().unwrap() * &point[i];
                    pows.push(next);
                }
                t *= &pows[e as usize];
            }
            total += t;
        }
        total
    }

    /// Substitutes the rational `value` for variable `i`; the variable list is kept.
    pub fn specialize(&self, i: usize, value: &Rational) -> MPoly {
        let mut pows = vec![Rational::one()];
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while pows.len() <= e {
                let next = pows.last().unwrap() * value;
                pows.push(next);
            }
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out.add_term(m2, c * &pows[e]);
        }
        out
    }

    /// Specializes several variables at once, given as `(index, value)`.
    pub fn specialize_many(&self, assignments: &[(usize, Rational)]) -> MPoly {
        assignments
            .iter()
            .fold(self.clone(), |p, (i, v)| p.specialize(*i, v))
    }

    /// Substitutes the polynomial `q` for variable `i`.
    pub fn substitute(&self, i: usize, q: &MPoly) -> MPoly {
        self.check_vars(q);
        let coeffs = self.coeffs_in(i);
        // Horner in q
        let mut acc = MPoly::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = acc.mul(q).add(c);
        }
        acc
    }

    /// Replaces every variable `x_k` by `images[k]`, which all live in one
    /// (possibly different) ring.
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut cache: Vec<Vec<MPoly>> = vec![vec![MPoly::one(&target)]; images.len()];
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pows = &mut cache[k];
                while pows.len() <= e as usize {
                    let next = pows.last().unwrap().mul(&images[k]);
                    pows.push(next);
                }
                t = t.mul(&pows[e as usize]);
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, c2);
            }
        }
        out
    }

    /// Coefficient list in variable `i` (index = power); each coefficient is
    /// free of variable `i`. Empty for the zero polynomial.
    pub fn coeffs_in(&self, i: usize) -> Vec<MPoly> {
        let deg = match self.degree_in(i) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![MPoly::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out[e].terms.insert(m2, c.clone());
        }
        out
    }

    /// Inverse of [`MPoly::coeffs_in`].
    pub fn from_coeffs(vars: &Vars, i: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = m.clone();
                m2.0[i] += e as u32;
                out.add_term(m2, a.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        self.check_vars(d);
        let (dm, dc) = d.leading()?;
        if d.terms.len() == 1 {
            let mut q = MPoly::zero(&self.vars);
            for (m, c) in &self.terms {
                q.terms.insert(m.checked_div(dm)?, c / dc);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut q = MPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            let qm = m.checked_div(dm)?;
            let qc = c / dc;
            for (m2, c2) in &d.terms {
                rem.add_term(m2.mul(&qm), -(c2 * &qc));
            }
            q.terms.insert(qm, qc);
        }
        Some(q)
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &MPoly) -> bool {
        self.div_exact(d).is_some()
    }

    /// Writes `self = c * p` with `p` integral, of content 1 and positive
    /// leading coefficient. The zero polynomial gives `(0, 0)`.
    pub fn primitive(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let l = denominator_lcm(self.terms.values());
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = (c * Rational::from_integer(l.clone())).to_integer();
            g = g.gcd(&n);
        }
        let mut scale = BigRational::new(l, g);
        if self.leading_coefficient().is_negative() {
            scale = -scale;
        }
        (scale.recip(), self.scale(&scale))
    }

    /// Integral primitive representative with positive leading coefficient.
    pub fn primitive_part(&self) -> MPoly {
        self.primitive().1
    }

    /// Rewrites the polynomial over a larger (or reordered) variable list.
    pub fn embed(&self, target: &Vars) -> Result<MPoly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| Error::VariableNotPresent(v.clone()))
            })
            .collect::<Result<_>>()?;
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]] = x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.0.swap(i, j);
            out.terms.insert(m2, c.clone());
        }
        out
    }

    /// Parses an expression such as `3u^2v - 5/2*(u+1)^3`.
    ///
    /// Supports `+ - * ^`, parentheses, integer literals, division by an
    /// integer literal and implicit multiplication. Identifiers are split
    /// greedily into the longest matching variable names.
    pub fn parse(s: &str, vars: &Vars) -> Result<MPoly> {
        let mut p = Parser {
            toks: tokenize(s, vars)?,
            pos: 0,
            vars,
        };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(e)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            if !a.is_one() || m.is_one() {
                parts.push(a.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[i].clone()),
                    _ => parts.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl std::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        MPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        MPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        MPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, vars: &Vars) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() || c == '\\' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' | '{' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' | '}' => {
                out.push(Tok::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                out.push(Tok::Num(lit.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let rest: String = chars[i..].iter().collect();
                let best = vars
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| rest.starts_with(v.as_str()))
                    .max_by_key(|(_, v)| v.len());
                match best {
                    Some((k, v)) => {
                        out.push(Tok::Var(k));
                        i += v.chars().count();
                    }
                    None => {
                        return Err(Error::Parse(format!(
                            "unknown identifier at {:?} (variables {:?})",
                            rest, vars
                        )))
                    }
                }
            }
            c => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero(self.vars);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(n)) if !n.is_zero() => {
                            acc = acc.scale(&BigRational::new(BigInt::one(), n));
                        }
                        _ => {
                            return Err(Error::Parse(
                                "division only by a nonzero integer literal".into(),
                            ))
                        }
                    }
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.power()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(MPoly::constant(self.vars, Rational::from_integer(n))),
            Some(Tok::Var(i)) => Ok(MPoly::var_at(self.vars, i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("unbalanced parenthesis".into())),
                }
            }
            Some(Tok::Minus) => Ok(self.power()?.neg()),
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}
