//! Canonical text format for polynomial artifacts.
//!
//! ```text
//! # splitjac polynomial
//! variables: i1 i2 i3
//! order: grevlex
//! terms: 2
//! 2 (0,5,0)
//! -27 (6,0,0)
//! ```
//!
//! Terms are listed in descending grevlex order. The polynomial is stored as
//! its integral primitive part with positive leading coefficient, so the text
//! of a polynomial and of any nonzero rational multiple of it coincide.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::mpoly::{MPoly, Vars};
use crate::error::{Error, Result};

pub fn to_canonical_text(p: &MPoly) -> String {
    let q = p.primitive_part();
    let mut s = String::new();
    s.push_str("# splitjac polynomial\n");
    let _ = writeln!(s, "variables: {}", q.vars().join(" "));
    s.push_str("order: grevlex\n");
    let _ = writeln!(s, "terms: {}", q.num_terms());
    for (m, c) in q.terms().rev() {
        let exps: Vec<String> = m.exps().iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{} ({})", c.numer(), exps.join(","));
    }
    s
}

pub fn from_canonical_text(text: &str) -> Result<MPoly> {
    let bad = |m: &str| Error::Parse(format!("canonical polynomial text: {m}"));
    let mut vars: Option<Vars> = None;
    let mut declared = None;
    let mut terms = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("variables:") {
            let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
            vars = Some(names.into());
        } else if let Some(rest) = line.strip_prefix("order:") {
            if rest.trim() != "grevlex" {
                return Err(bad("unsupported monomial order"));
            }
        } else if let Some(rest) = line.strip_prefix("terms:") {
            declared = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("term count"))?,
            );
        } else {
            let (c, e) = line.split_once('(').ok_or_else(|| bad("term line"))?;
            let c: BigInt = c.trim().parse().map_err(|_| bad("coefficient"))?;
            let e: Vec<u32> = e
                .trim_end_matches(')')
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad("exponent")))
                .collect::<Result<_>>()?;
            terms.push((e, BigRational::from_integer(c)));
        }
    }
    let vars = vars.ok_or_else(|| bad("missing variables header"))?;
    if terms.iter().any(|(e, _)| e.len() != vars.len()) {
        return Err(bad("exponent arity"));
    }
    if declared.is_some_and(|n| n != terms.len()) {
        return Err(bad("term count mismatch"));
    }
    Ok(MPoly::from_terms(&vars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::vars;

    #[test]
    fn round_trip_and_normalization() {
        let v = vars(&["i1", "i2", "i3"]);
        let p = MPoly::parse("-3/2 i1^6 + 1/9 i2^5 - i3", &v).unwrap();
        let t = to_canonical_text(&p);
        let back = from_canonical_text(&t).unwrap();
        assert_eq!(back, p.primitive_part());
        assert_eq!(to_canonical_text(&p.scale_int(-7)), t);
        assert!(t.contains("order: grevlex"));
    }
}
