//! Recomputes the tabulated braid-orbit counts and monodromy groups and
//! reports every disagreement.

use std::collections::BTreeSet;

use super::braid::braid_orbits;
use super::nielsen::nielsen_enumerate;
use super::perm::parse_cycle_types;
use crate::cover_types::{ram_types_odd, CoverCase, OddCase};

/// One printed row: degree, degeneration index, slot cycle types, orbit
/// count and group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub degree: u32,
    pub case: Option<u8>,
    pub cycle_types: &'static str,
    pub count: usize,
    pub group: &'static str,
}

const fn row(
    degree: u32,
    case: Option<u8>,
    cycle_types: &'static str,
    count: usize,
    group: &'static str,
) -> TableRow {
    TableRow {
        degree,
        case,
        cycle_types,
        count,
        group,
    }
}

/// The rows as printed, including the degree-3 block.
pub const TABLE: [TableRow; 9] = [
    row(3, None, "2^2,2^2,2^2,2,2", 40, "S_3"),
    row(3, Some(1), "2^2,2^2,4,2", 8, "S_5"),
    row(3, Some(2), "2^2,2^2,3.2,2", 6, "S_5"),
    row(3, Some(3), "2^2,2^2,2^2,3", 9, "A_5"),
    row(5, None, "2^2,2^2,2^2,2,2", 40, "S_5"),
    row(5, Some(1), "2^2,2^2,4,2", 8, "S_5"),
    row(5, Some(2), "2^2,2^2,3.2,2", 6, "S_5"),
    row(5, Some(3), "2^2,2^2,2^2,3", 9, "A_5"),
    row(7, None, "2^2,2^2,2^2,2,2", 168, "S_7"),
];

/// Recomputed values for one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowAudit {
    pub row: TableRow,
    /// `None` when a slot cycle type does not fit in `S_n`.
    pub class_count: Option<usize>,
    pub orbit_sizes: Vec<usize>,
    pub groups: Vec<String>,
    pub count_matches: bool,
    pub group_matches: bool,
}

/// A disagreement between a printed entry and the computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: u32,
    pub case: Option<u8>,
    /// `cycle_type`, `count`, `group` or `orbit_split`.
    pub field: &'static str,
    pub table: String,
    pub computed: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAudit {
    pub rows: Vec<RowAudit>,
    pub discrepancies: Vec<Discrepancy>,
}

impl TableAudit {
    /// Whether every row of degree `n` agrees in count and group.
    pub fn degree_agrees(&self, n: u32) -> bool {
        self.rows
            .iter()
            .filter(|r| r.row.degree == n)
            .all(|r| r.count_matches && r.group_matches)
    }
}

/// Class count, orbit sizes and groups for `n` and slot types.
fn compute(n: usize, types: &[Vec<u32>]) -> (usize, Vec<usize>, Vec<String>) {
    let nc = nielsen_enumerate(n, types).expect("degree within the enumeration bound");
    let orbits = braid_orbits(&nc);
    let groups: BTreeSet<String> = nc.representatives.iter().map(|t| t.group().label).collect();
    (
        nc.len(),
        orbits.iter().map(|o| o.size).collect(),
        groups.into_iter().collect(),
    )
}

fn generic_odd_types(n: u32) -> Option<Vec<Vec<u32>>> {
    ram_types_odd(n)
        .ok()?
        .into_iter()
        .find(|(c, _)| *c == CoverCase::Odd(OddCase::I))
        .map(|(_, t)| t.branch_points)
}

fn fmt_types(types: &[Vec<u32>]) -> String {
    let slots: Vec<String> = types
        .iter()
        .map(|t| t.iter().map(u32::to_string).collect::<Vec<_>>().join("."))
        .collect();
    slots.join(",")
}

/// Audits one row.
pub fn audit_row(r: &TableRow) -> (RowAudit, Vec<Discrepancy>) {
    let n = r.degree as usize;
    let types = parse_cycle_types(r.cycle_types).expect("static cycle types");
    let mut out = Vec::new();
    let d = |field, table: String, computed: String, note: String| Discrepancy {
        degree: r.degree,
        case: r.case,
        field,
        table,
        computed,
        note,
    };
    let oversized: Vec<String> = types
        .iter()
        .filter(|t| t.iter().sum::<u32>() as usize > n)
        .map(|t| fmt_types(std::slice::from_ref(t)))
        .collect();
    let group_fits = r
        .group
        .strip_prefix("S_")
        .or_else(|| r.group.strip_prefix("A_"))
        .and_then(|k| k.parse::<usize>().ok())
        .is_none_or(|k| k <= n);
    if !oversized.is_empty() {
        let duplicate = TABLE.iter().find(|o| {
            o.degree != r.degree
                && o.case == r.case
                && o.cycle_types == r.cycle_types
                && o.count == r.count
        });
        let mut note = format!("cycle types {} do not fit in S_{n}", oversized.join(", "));
        if let Some(o) = duplicate {
            note.push_str(&format!("; the row repeats the degree-{} row", o.degree));
        }
        out.push(d(
            "cycle_type",
            r.cycle_types.to_string(),
            "impossible".into(),
            note,
        ));
        if !group_fits {
            out.push(d(
                "group",
                r.group.into(),
                "impossible".into(),
                format!("{} is not a subgroup of S_{n}", r.group),
            ));
        }
        let audit = RowAudit {
            row: *r,
            class_count: None,
            orbit_sizes: vec![],
            groups: vec![],
            count_matches: false,
            group_matches: false,
        };
        return (audit, out);
    }
    let (count, orbit_sizes, groups) = compute(n, &types);
    let count_matches = count == r.count || orbit_sizes.contains(&r.count);
    let group_matches = groups == [r.group.to_string()];
    if count == 0 {
        let rh: u32 = types.iter().flatten().map(|e| e - 1).sum();
        let mut note = format!(
            "no transitive product-one tuples: Σ(e − 1) = {rh}, below 2n − 2 = {}",
            2 * n - 2
        );
        if r.case.is_none() && n % 2 == 1 {
            if let Some(generic) = generic_odd_types(r.degree) {
                let (gc, gorbits, ggroups) = compute(n, &generic);
                note.push_str(&format!(
                    "; the generic degree-{n} type {} has {gc} classes in orbits {gorbits:?} with group {}",
                    fmt_types(&generic),
                    ggroups.join("/")
                ));
            }
        }
        out.push(d(
            "cycle_type",
            r.cycle_types.to_string(),
            "empty class".into(),
            note,
        ));
    } else if !count_matches {
        out.push(d(
            "count",
            r.count.to_string(),
            count.to_string(),
            format!("braid orbits {orbit_sizes:?}"),
        ));
    } else if orbit_sizes.len() > 1 && (count == r.count) != orbit_sizes.contains(&r.count) {
        out.push(d(
            "orbit_split",
            r.count.to_string(),
            format!("{count} classes in orbits {orbit_sizes:?}"),
            "the printed count matches only one reading".into(),
        ));
    }
    if count > 0 && !group_matches {
        out.push(d("group", r.group.into(), groups.join("/"), String::new()));
    }
    let audit = RowAudit {
        row: *r,
        class_count: Some(count),
        orbit_sizes,
        groups,
        count_matches,
        group_matches,
    };
    (audit, out)
}

/// Audits every printed row.
pub fn audit_table() -> TableAudit {
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for r in &TABLE {
        let (a, d) = audit_row(r);
        rows.push(a);
        discrepancies.extend(d);
    }
    TableAudit {
        rows,
        discrepancies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_five_rows_agree() {
        for r in TABLE.iter().filter(|r| r.degree == 5) {
            let (a, d) = audit_row(r);
            assert!(d.is_empty(), "{d:?}");
            assert_eq!(a.class_count, Some(r.count));
            assert_eq!(a.orbit_sizes, vec![r.count]);
        }
    }

    #[test]
    fn degree_three_block_is_flagged() {
        for r in TABLE.iter().filter(|r| r.degree == 3) {
            let (a, d) = audit_row(r);
            assert_eq!(a.class_count, None);
            assert_eq!(d[0].field, "cycle_type");
            assert!(
                d[0].note.contains("repeats the degree-5 row"),
                "{}",
                d[0].note
            );
        }
        let (_, d) = audit_row(&TABLE[1]);
        assert_eq!(d[1].field, "group");
    }
}
