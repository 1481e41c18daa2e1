//! Exact computations on genus-2 curves whose Jacobians split into products
//! of elliptic curves: Igusa invariants, the loci of curves with degree 2 and
//! degree 3 elliptic subcovers, their subcover j-invariants and isogenies,
//! admissible ramification types of the induced covers, and Hurwitz braid
//! orbits of the corresponding branch-cycle tuples.

pub mod algebra;
pub mod analysis;
pub mod cover_types;
pub mod error;
pub mod hurwitz;
pub mod invariants;
pub mod l2;
pub mod l3;

pub use algebra::{MPoly, QuadraticAlg, RatFunc, Rational};
pub use error::{Error, Result};
