//! One-shot report on a genus-2 curve: invariants, degree-2 and degree-3
//! elliptic subcover verdicts.

use num_traits::Zero;

use crate::algebra::rational::int;
use crate::algebra::QuadraticAlg;
use crate::error::{Error, Result};
use crate::invariants::{absolute, igusa, AbsoluteInvariants, IgusaInvariants, Sextic};
use crate::l2::{
    l2_group, l2_isogeny, l2_isomorphic, l2_j_pair, l2_membership, GroupLabel, L2Point,
    MembershipStatus,
};
use crate::l3::{e3_estimate, l3_j_pair, l3_membership, theta_critical, E3Estimate, L3Point};
use crate::Rational;

/// Verdict at one rational `(u, v)` of `L2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2PointReport {
    pub point: L2Point,
    pub group: GroupLabel,
    /// Monic quadratic whose roots are the subcover j-invariants.
    pub j_pair: QuadraticAlg,
    pub isomorphic: bool,
    pub isogenous_2: bool,
    pub isogenous_3: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Verdict {
    pub status: MembershipStatus,
    pub points: Vec<L2PointReport>,
}

impl L2Verdict {
    pub fn member(&self) -> bool {
        self.status != MembershipStatus::OffLocus
    }
}

/// Verdict at one rational `(u, v)` of `L3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L3PointReport {
    pub point: L3Point,
    /// `None` at `v = 0`, where the `(u, v)` formulas are undefined.
    pub j_pair: Option<(Rational, Rational)>,
    pub theta_critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L3Verdict {
    pub points: Vec<L3PointReport>,
    pub e3: E3Estimate,
}

impl L3Verdict {
    pub fn member(&self) -> bool {
        !self.points.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub curve: Sextic,
    pub igusa: IgusaInvariants,
    pub absolute: AbsoluteInvariants,
    pub l2: L2Verdict,
    pub l3: L3Verdict,
    pub warnings: Vec<String>,
}

const ORDER_NOTE: &str = "(225, 6750) also satisfies the D12 and D8 equations; the label follows the checking order Z3⋊D8, GL2(3), D12, D8";
const E3_NOTE: &str = "e3 is read off the rational witnesses found by the solver and is a lower-bound style heuristic";
const IRRATIONAL_NOTE: &str = "the invariants lie on L2 but every (u, v) witness is irrational";

/// Analyzes `Y² = f(X)`. Fails on singular curves and when `J2 = 0`.
pub fn analyze(curve: &Sextic) -> Result<AnalysisReport> {
    let ig = igusa(curve);
    if ig.j10.is_zero() {
        return Err(Error::Singular(
            "J10 = 0: the sextic has a repeated root".into(),
        ));
    }
    let abs = absolute(&ig)?;
    let mut warnings = Vec::new();

    let m2 = l2_membership(&abs);
    let mut l2_points = Vec::new();
    for p in m2.points {
        if p.u == int(225) && p.v == int(6750) {
            warnings.push(ORDER_NOTE.to_string());
        }
        l2_points.push(L2PointReport {
            group: l2_group(&p),
            j_pair: l2_j_pair(&p),
            isomorphic: l2_isomorphic(&p),
            isogenous_2: l2_isogeny(&p, 2)?.isogenous,
            isogenous_3: l2_isogeny(&p, 3)?.isogenous,
            point: p,
        });
    }
    if m2.status == MembershipStatus::IrrationalParameters {
        warnings.push(IRRATIONAL_NOTE.to_string());
    }

    let m3 = l3_membership(&abs);
    let e3 = e3_estimate(&m3);
    if e3 != E3Estimate::Zero {
        warnings.push(E3_NOTE.to_string());
    }
    let l3_points = m3
        .points
        .iter()
        .map(|p| L3PointReport {
            point: p.clone(),
            j_pair: l3_j_pair(p).ok(),
            theta_critical: theta_critical(p),
        })
        .collect();

    Ok(AnalysisReport {
        curve: curve.clone(),
        igusa: ig,
        absolute: abs,
        l2: L2Verdict {
            status: m2.status,
            points: l2_points,
        },
        l3: L3Verdict {
            points: l3_points,
            e3,
        },
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::l3::{l3_curve, L3Params};

    fn run(s: &str) -> AnalysisReport {
        analyze(&Sextic::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn unit_normal_form() {
        let r = run("1,0,-1,0,1,0,-1");
        assert!(r.l2.member());
        assert!(r
            .l2
            .points
            .iter()
            .any(|p| p.point == L2Point::new(int(1), int(2)).unwrap()));
    }

    #[test]
    fn x5_minus_x() {
        let r = run("0,1,0,0,0,-1,0");
        let p = &r.l2.points[0];
        assert_eq!((p.point.u.clone(), p.point.v.clone()), (int(25), int(-250)));
        assert_eq!(p.group, GroupLabel::GL2_3);
    }

    #[test]
    fn two_cubic_curve() {
        let c = l3_curve(&L3Params::new(int(1), int(1)).unwrap());
        let r = analyze(&c).unwrap();
        let first = &r.l3.points[0];
        assert_eq!(first.point, L3Point::new(int(1), int(1)).unwrap());
        assert_eq!(first.j_pair, Some((rat(780448, 2197), int(128))));
        assert_eq!(r.l3.e3, E3Estimate::Two);
    }

    #[test]
    fn singular_and_j2_failures() {
        assert!(matches!(
            analyze(&Sextic::parse("1,0,-2,0,1,0,0").unwrap()),
            Err(Error::Singular(_))
        ));
    }
}
