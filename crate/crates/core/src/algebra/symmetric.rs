//! Rewriting symmetric bivariate polynomials in elementary symmetric functions.

use super::mpoly::{vars, MPoly};
use crate::error::{Error, Result};

/// For `p(x, y)` symmetric (a polynomial over exactly two variables) returns
/// `q(e1, e2)` with `q(x + y, xy) = p(x, y)`.
pub fn symmetric_reduce(p: &MPoly) -> Result<MPoly> {
    if p.vars().len() != 2 {
        return Err(Error::Precondition(
            "symmetric_reduce expects exactly two variables".into(),
        ));
    }
    if p.swap_vars(0, 1) != *p {
        return Err(Error::NotSymmetric);
    }
    let ev = vars(&["e1", "e2"]);
    let xv = p.vars().clone();
    let s = MPoly::var_at(&xv, 0).add(&MPoly::var_at(&xv, 1));
    let prod = MPoly::var_at(&xv, 0).mul(&MPoly::var_at(&xv, 1));
    let mut r = p.clone();
    let mut q = MPoly::zero(&ev);
    while !r.is_zero() {
        let (m, c) = r
            .terms()
            .max_by(|a, b| a.0.exps().cmp(b.0.exps()))
            .map(|(m, c)| (m.exps().to_vec(), c.clone()))
            .unwrap();
        let (i, j) = (m[0], m[1]);
        debug_assert!(i >= j);
        q = q.add(&MPoly::from_terms(&ev, [(vec![i - j, j], c.clone())]));
        let t = s.pow(i - j).mul(&prod.pow(j)).scale(&c);
        r = r.sub(&t);
    }
    Ok(q)
}

/// Evaluates `q(e1, e2)` back as a polynomial in the two variables of `like`.
pub fn symmetric_expand(q: &MPoly, like: &MPoly) -> MPoly {
    let xv = like.vars().clone();
    let s = MPoly::var_at(&xv, 0).add(&MPoly::var_at(&xv, 1));
    let prod = MPoly::var_at(&xv, 0).mul(&MPoly::var_at(&xv, 1));
    let mut out = MPoly::zero(&xv);
    for (m, c) in q.terms() {
        let e = m.exps();
        out = out.add(&s.pow(e[0]).mul(&prod.pow(e[1])).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sums() {
        let xy = vars(&["x", "y"]);
        let ev = vars(&["e1", "e2"]);
        let r = |s| symmetric_reduce(&MPoly::parse(s, &xy).unwrap()).unwrap();
        assert_eq!(r("x^2 + y^2"), MPoly::parse("e1^2 - 2e2", &ev).unwrap());
        assert_eq!(r("x^3 + y^3"), MPoly::parse("e1^3 - 3e1e2", &ev).unwrap());
        assert!(matches!(
            symmetric_reduce(&MPoly::parse("x^2 - y^2", &xy).unwrap()),
            Err(Error::NotSymmetric)
        ));
    }
}
