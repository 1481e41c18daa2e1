//! Exact arithmetic substrate: rationals, sparse polynomials, rational
//! functions, resultants, rational roots and symmetric reduction.

pub mod gcd;
mod heugcd;
pub mod mpoly;
pub mod quadratic;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod symmetric;
pub mod textfmt;
pub mod upoly;

pub use gcd::gcd;
pub use mpoly::{vars, MPoly, Monomial, Vars};
pub use quadratic::QuadraticAlg;
pub use ratfunc::{hom_compose, hom_substitute, RatFunc};
pub use rational::{int, parse_rational, rat, Rational};
pub use resultant::{discriminant, resultant};
pub use roots::rational_roots;
pub use symmetric::symmetric_reduce;
pub use textfmt::{from_canonical_text, to_canonical_text};
pub use upoly::UPoly;
