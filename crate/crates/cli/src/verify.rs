//! Symbolic identity checks behind `l3 verify` and `verify-all`.

use std::thread;

use serde_json::{json, Value};
use splitjac::algebra::int;
use splitjac::hurwitz::{audit_table, nielsen_enumerate};
use splitjac::l2::{derive_l2_locus, l2_locus_report, verify_diagonal, verify_isogeny_loci};
use splitjac::l3::{
    degenerate_solutions, symbolic_subcovers, verify_nu, verify_tn, verify_uv_quadratics,
};

use crate::render::{quadratic, rat};

pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

type Job = (&'static str, fn() -> (bool, Value));

fn l2_locus() -> (bool, Value) {
    let r = l2_locus_report(derive_l2_locus());
    let spots: Vec<Value> = r
        .spot_checks
        .iter()
        .map(|s| {
            json!({
                "monomial": s.monomial,
                "displayed": rat(&s.displayed),
                "derived": rat(&s.derived),
            })
        })
        .collect();
    let detail = json!({
        "terms": r.terms,
        "vanishes": r.vanishes,
        "matches_displayed": r.matches_displayed,
        "spot_checks": spots,
    });
    (r.passed(), detail)
}

fn l2_diagonal() -> (bool, Value) {
    let r = verify_diagonal();
    let detail = json!({
        "line_forces_equal_j": r.line_forces_equal_j,
        "discriminant_divisible": r.discriminant_divisible,
        "cofactor_supported": r.cofactor_supported,
    });
    (r.passed(), detail)
}

fn isogeny(level: u32) -> (bool, Value) {
    match verify_isogeny_loci(level) {
        Ok(r) => {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({ "factor": c.factor.as_str(), "divides": c.divides }))
                .collect();
            let detail = json!({
                "numerator_terms": r.numerator_terms,
                "checks": checks,
                "cofactor_degenerate": r.cofactor_degenerate,
            });
            (r.passed(), detail)
        }
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

fn l3_tn() -> (bool, Value) {
    let r = verify_tn();
    let detail = json!({
        "sum_identity": r.sum_identity,
        "product_identity": r.product_identity,
    });
    (r.passed(), detail)
}

fn l3_uv_quadratics() -> (bool, Value) {
    let r = verify_uv_quadratics();
    let detail = json!({
        "eq_u_vanishes": r.eq_u_vanishes,
        "eq_v_vanishes": r.eq_v_vanishes,
        "eq_u_conjugate_is_nu": r.eq_u_conjugate_is_nu,
        "eq_v_conjugate_is_nu": r.eq_v_conjugate_is_nu,
    });
    (r.passed(), detail)
}

fn l3_subcovers() -> (bool, Value) {
    match symbolic_subcovers() {
        Ok(maps) => {
            let branches: Vec<Value> = maps
                .iter()
                .map(|m| json!({ "branch": m.branch.as_str(), "identity_holds": m.identity_holds }))
                .collect();
            let ok = maps.iter().all(|m| m.identity_holds);
            (ok, json!({ "branches": branches }))
        }
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

fn l3_nu() -> (bool, Value) {
    let r = verify_nu();
    let detail = json!({
        "involution": r.involution,
        "fixes_r": r.fixes_r,
        "swaps_j": r.swaps_j,
    });
    (r.passed(), detail)
}

/// The diagonal cubic must split as `(j − 1728)(j² − 297j + 46656)`; the
/// solution count is reported, not asserted.
fn l3_degenerate() -> (bool, Value) {
    let d = degenerate_solutions();
    let ok = d.diagonal_rational == int(1728)
        && d.diagonal_quadratic.sum == int(297)
        && d.diagonal_quadratic.product == int(46656);
    let detail = json!({
        "diagonal_rational": rat(&d.diagonal_rational),
        "diagonal_quadratic": quadratic(&d.diagonal_quadratic),
        "mixed_count": d.mixed_count,
        "total_count": d.total_count,
    });
    (ok, detail)
}

fn hurwitz_transpositions() -> (bool, Value) {
    match nielsen_enumerate(3, &vec![vec![2]; 4]) {
        Ok(nc) => (nc.len() == 4, json!({ "class_count": nc.len() })),
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

fn hurwitz_table() -> (bool, Value) {
    let audit = audit_table();
    let detail = json!({
        "degree_5_agrees": audit.degree_agrees(5),
        "discrepancies": audit.discrepancies.len(),
    });
    (audit.degree_agrees(5), detail)
}

pub const L3_JOBS: [Job; 5] = [
    ("l3_tn", l3_tn),
    ("l3_uv_quadratics", l3_uv_quadratics),
    ("l3_subcovers", l3_subcovers),
    ("l3_nu", l3_nu),
    ("l3_degenerate", l3_degenerate),
];

pub const L2_JOBS: [Job; 4] = [
    ("l2_locus", l2_locus),
    ("l2_diagonal", l2_diagonal),
    ("l2_isogeny_2", || isogeny(2)),
    ("l2_isogeny_3", || isogeny(3)),
];

pub const HURWITZ_JOBS: [Job; 2] = [
    ("hurwitz_transpositions", hurwitz_transpositions),
    ("hurwitz_table", hurwitz_table),
];

/// Runs the jobs on separate threads; results keep the input order.
pub fn run(jobs: &[Job]) -> Vec<Check> {
    thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(name, f)| {
                s.spawn(move || {
                    eprintln!("splitjac: {name} started");
                    let out = f();
                    eprintln!(
                        "splitjac: {name} {}",
                        if out.0 { "passed" } else { "FAILED" }
                    );
                    out
                })
            })
            .collect();
        jobs.iter()
            .zip(handles)
            .map(|(&(name, _), h)| {
                let (passed, detail) = h
                    .join()
                    .unwrap_or_else(|_| (false, json!({ "error": "check panicked" })));
                Check {
                    name,
                    passed,
                    detail,
                }
            })
            .collect()
    })
}
