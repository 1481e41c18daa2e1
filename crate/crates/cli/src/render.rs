//! JSON views of library values. Rationals are exact strings.

use serde_json::{json, Value};
use splitjac::analysis::AnalysisReport;
use splitjac::cover_types::{Omission, OmissionReason};
use splitjac::hurwitz::{Discrepancy, RowAudit};
use splitjac::invariants::{AbsoluteInvariants, IgusaInvariants, Sextic};
use splitjac::l2::L2Point;
use splitjac::l3::{L3Point, SubcoverMap};
use splitjac::{QuadraticAlg, RatFunc, Rational};

pub fn rat(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn ratfunc(f: &RatFunc) -> Value {
    Value::String(f.to_string())
}

/// `{sum, product, rational_roots}`; roots ascending, with multiplicity.
pub fn quadratic(q: &QuadraticAlg) -> Value {
    let roots: Vec<Value> = match q.rational_roots() {
        Some((a, b)) => {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            vec![rat(&lo), rat(&hi)]
        }
        None => vec![],
    };
    json!({
        "sum": rat(&q.sum),
        "product": rat(&q.product),
        "rational_roots": roots,
    })
}

pub fn curve(s: &Sextic) -> Value {
    json!({
        "coefficients": s.to_curve_string(),
        "equation": s.to_string(),
    })
}

pub fn invariants(ig: &IgusaInvariants, abs: Option<&AbsoluteInvariants>) -> Value {
    let i = |f: fn(&AbsoluteInvariants) -> &Rational| abs.map_or(Value::Null, |a| rat(f(a)));
    json!({
        "J2": rat(&ig.j2),
        "J4": rat(&ig.j4),
        "J6": rat(&ig.j6),
        "J10": rat(&ig.j10),
        "i1": i(|a| &a.i1),
        "i2": i(|a| &a.i2),
        "i3": i(|a| &a.i3),
        "genus2_valid": ig.genus2_valid(),
    })
}

pub fn l2_point(p: &L2Point) -> Value {
    json!({ "u": rat(&p.u), "v": rat(&p.v) })
}

pub fn l3_point(p: &L3Point) -> Value {
    json!({ "u": rat(&p.u), "v": rat(&p.v) })
}

pub fn pair(p: &(Rational, Rational)) -> Value {
    json!([rat(&p.0), rat(&p.1)])
}

pub fn analysis(r: &AnalysisReport) -> Value {
    let l2: Vec<Value> =
        r.l2.points
            .iter()
            .map(|p| {
                json!({
                    "u": rat(&p.point.u),
                    "v": rat(&p.point.v),
                    "group": p.group.as_str(),
                    "group_order": p.group.order(),
                    "j_pair": quadratic(&p.j_pair),
                    "isomorphic": p.isomorphic,
                    "isogenous_2": p.isogenous_2,
                    "isogenous_3": p.isogenous_3,
                })
            })
            .collect();
    let l3: Vec<Value> =
        r.l3.points
            .iter()
            .map(|p| {
                json!({
                    "u": rat(&p.point.u),
                    "v": rat(&p.point.v),
                    "j_pair": p.j_pair.as_ref().map_or(Value::Null, pair),
                    "theta_critical": p.theta_critical,
                })
            })
            .collect();
    json!({
        "curve": curve(&r.curve),
        "invariants": invariants(&r.igusa, Some(&r.absolute)),
        "l2": {
            "member": r.l2.member(),
            "status": r.l2.status.as_str(),
            "points": l2,
        },
        "l3": {
            "member": r.l3.member(),
            "e3": r.l3.e3.count(),
            "points": l3,
        },
        "warnings": r.warnings,
    })
}

pub fn subcover(m: &SubcoverMap) -> Value {
    let j = m
        .j_invariant()
        .ok()
        .and_then(|f| Some(f.num().constant_value()? / f.den().constant_value()?));
    json!({
        "branch": m.branch.as_str(),
        "u_map": ratfunc(&m.u_map),
        "v_factor": ratfunc(&m.v_factor),
        "target": {
            "p": ratfunc(&m.target[0]),
            "q": ratfunc(&m.target[1]),
            "r": ratfunc(&m.target[2]),
        },
        "twist": ratfunc(&m.twist),
        "identity_holds": m.identity_holds,
        "j": j.as_ref().map_or(Value::Null, rat),
    })
}

pub fn omission(o: &Omission) -> Value {
    let (reason, detail) = match &o.reason {
        OmissionReason::NegativeExponent { offset } => {
            ("negative_exponent", json!({ "offset": offset }))
        }
        OmissionReason::FiberTooLarge => ("fiber_too_large", Value::Null),
        OmissionReason::RiemannHurwitz { sum, expected } => (
            "riemann_hurwitz",
            json!({ "sum": sum, "expected": expected }),
        ),
    };
    json!({
        "case": o.case.label(),
        "reason": reason,
        "detail": detail,
        "fibers": o.raw,
    })
}

pub fn discrepancy(d: &Discrepancy) -> Value {
    json!({
        "degree": d.degree,
        "case": d.case,
        "field": d.field,
        "table": d.table,
        "computed": d.computed,
        "note": d.note,
    })
}

pub fn row_audit(a: &RowAudit) -> Value {
    json!({
        "degree": a.row.degree,
        "case": a.row.case,
        "cycle_types": a.row.cycle_types,
        "table_count": a.row.count,
        "table_group": a.row.group,
        "class_count": a.class_count,
        "orbit_sizes": a.orbit_sizes,
        "groups": a.groups,
        "count_matches": a.count_matches,
        "group_matches": a.group_matches,
    })
}

/// Slot cycle types in the bracketed form `[2^2],[4],[2]`.
pub fn cycle_types(slots: &[Vec<u32>]) -> String {
    let slot = |parts: &Vec<u32>| {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < parts.len() {
            let run = parts[i..].iter().take_while(|&&e| e == parts[i]).count();
            out.push(if run == 1 {
                parts[i].to_string()
            } else {
                format!("{}^{run}", parts[i])
            });
            i += run;
        }
        format!("[{}]", out.join(","))
    };
    slots.iter().map(slot).collect::<Vec<_>>().join(",")
}
