//! Dense univariate polynomials over ℚ, used for root finding and gcds of
//! univariate specializations.

use num_traits::{One, Zero};

use super::mpoly::{MPoly, Vars};
use super::rational::Rational;

/// Coefficients in ascending degree; never has a zero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Reads a polynomial involving at most variable `i`; `None` if another
    /// variable occurs.
    pub fn from_mpoly(p: &MPoly, i: usize) -> Option<Self> {
        let mut c = vec![Rational::zero(); p.degree_in(i).map_or(0, |d| d as usize + 1)];
        for (m, a) in p.terms() {
            if m.exps().iter().enumerate().any(|(k, &e)| k != i && e > 0) {
                return None;
            }
            c[m.exps()[i] as usize] = a.clone();
        }
        Some(UPoly::new(c))
    }

    pub fn to_mpoly(&self, vars: &Vars, i: usize) -> MPoly {
        let cs: Vec<MPoly> = self
            .0
            .iter()
            .map(|c| MPoly::constant(vars, c.clone()))
            .collect();
        MPoly::from_coeffs(vars, i, &cs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    /// Euclidean division. Panics on division by zero.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        UPoly::new(self.0.iter().map(|c| c / &lc).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The linear polynomial `x - r`.
    pub fn linear_root(r: &Rational) -> UPoly {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }
}
