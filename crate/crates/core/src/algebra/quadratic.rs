//! Monic quadratics `x² − sum·x + product` with rational coefficients.

use std::fmt;

use num_traits::Zero;

use super::rational::{int, rational_sqrt, Rational};

/// The monic quadratic `x² − sum·x + product`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlg {
    pub sum: Rational,
    pub product: Rational,
}

impl QuadraticAlg {
    pub fn new(sum: Rational, product: Rational) -> Self {
        QuadraticAlg { sum, product }
    }

    /// The quadratic with roots `a` and `b`.
    pub fn from_roots(a: &Rational, b: &Rational) -> Self {
        QuadraticAlg {
            sum: a + b,
            product: a * b,
        }
    }

    /// `sum² − 4·product`.
    pub fn discriminant(&self) -> Rational {
        &self.sum * &self.sum - int(4) * &self.product
    }

    pub fn has_double_root(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// Both roots in ascending order when the discriminant is a rational square.
    pub fn rational_roots(&self) -> Option<(Rational, Rational)> {
        let s = rational_sqrt(&self.discriminant())?;
        let two = int(2);
        Some(((&self.sum - &s) / &two, (&self.sum + &s) / &two))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        x * x - &self.sum * x + &self.product
    }
}

impl fmt::Display for QuadraticAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 - ({})x + ({})", self.sum, self.product)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn roots_and_discriminant() {
        let q = QuadraticAlg::from_roots(&rat(1, 2), &int(-3));
        assert_eq!(q.rational_roots(), Some((int(-3), rat(1, 2))));
        assert!(!q.has_double_root());
        let d = QuadraticAlg::new(int(256), int(16384));
        assert!(d.has_double_root());
        assert_eq!(d.rational_roots(), Some((int(128), int(128))));
        assert_eq!(QuadraticAlg::new(int(0), int(1)).rational_roots(), None);
    }
}
