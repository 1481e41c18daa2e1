//! Heuristic gcd by evaluation at large integers and `ξ`-adic
//! reconstruction, verified by exact division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::rational::Rational;

type IPoly = BTreeMap<Vec<u32>, BigInt>;

const ATTEMPTS: usize = 6;

/// The gcd of `a` and `b` up to a constant, or `None` when every
/// evaluation point was unlucky.
pub(crate) fn heu_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let ia = to_ipoly(&a.primitive_part());
    let ib = to_ipoly(&b.primitive_part());
    let g = heu(&ia, &ib, a.vars().len())?;
    let terms = g.into_iter().map(|(e, c)| (e, Rational::from_integer(c)));
    Some(MPoly::from_terms(a.vars(), terms).primitive_part())
}

fn to_ipoly(p: &MPoly) -> IPoly {
    p.terms()
        .map(|(m, c)| (m.exps().to_vec(), c.to_integer()))
        .collect()
}

fn involves(p: &IPoly, i: usize) -> bool {
    p.keys().any(|e| e[i] > 0)
}

fn content(p: &IPoly) -> BigInt {
    p.values().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn div_scalar(p: &IPoly, c: &BigInt) -> IPoly {
    p.iter().map(|(e, x)| (e.clone(), x / c)).collect()
}

fn norm(p: &IPoly) -> BigInt {
    p.values().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval(p: &IPoly, i: usize, xi: &BigInt) -> IPoly {
    let top = p.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
    let mut powers = vec![BigInt::one()];
    for k in 0..top {
        let next = &powers[k] * xi;
        powers.push(next);
    }
    let mut out = IPoly::new();
    for (e, c) in p {
        let mut f = e.clone();
        let k = std::mem::replace(&mut f[i], 0) as usize;
        let entry = out.entry(f).or_insert_with(BigInt::zero);
        *entry += c * &powers[k];
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn interpolate(h: &IPoly, i: usize, xi: &BigInt) -> IPoly {
    let mut out = IPoly::new();
    let mut h = h.clone();
    let mut k = 0u32;
    while !h.is_empty() {
        let mut next = IPoly::new();
        for (e, c) in &h {
            let g = symmetric_mod(c, xi);
            let rest = (c - &g) / xi;
            if !g.is_zero() {
                let mut f = e.clone();
                f[i] = k;
                out.insert(f, g);
            }
            if !rest.is_zero() {
                next.insert(e.clone(), rest);
            }
        }
        h = next;
        k += 1;
    }
    out
}

/// Whether `d` divides `p` in `ℤ[x]`, by leading-term division in lex order.
fn divides(d: &IPoly, p: &IPoly) -> bool {
    let Some((ld, lc)) = d.iter().next_back() else {
        return p.is_empty();
    };
    let mut r = p.clone();
    while let Some((lr, cr)) = r.iter().next_back() {
        if lr.iter().zip(ld).any(|(x, y)| x < y) {
            return false;
        }
        let (q, rem) = cr.div_rem(lc);
        if !rem.is_zero() {
            return false;
        }
        let shift: Vec<u32> = lr.iter().zip(ld).map(|(x, y)| x - y).collect();
        for (e, c) in d {
            let f: Vec<u32> = e.iter().zip(&shift).map(|(x, y)| x + y).collect();
            let entry = r.entry(f.clone()).or_insert_with(BigInt::zero);
            *entry -= c * &q;
            if entry.is_zero() {
                r.remove(&f);
            }
        }
    }
    true
}

fn heu(a: &IPoly, b: &IPoly, n: usize) -> Option<IPoly> {
    let Some(i) = (0..n).find(|&k| involves(a, k) || involves(b, k)) else {
        let g = content(a).gcd(&content(b));
        return Some(IPoly::from([(vec![0; n], g)]));
    };
    let (ca, cb) = (content(a), content(b));
    let gc = ca.gcd(&cb);
    let (a, b) = (div_scalar(a, &ca), div_scalar(b, &cb));
    let mut xi: BigInt = norm(&a).min(norm(&b)) * 2 + 29;
    for _ in 0..ATTEMPTS {
        let (ha, hb) = (eval(&a, i, &xi), eval(&b, i, &xi));
        if !ha.is_empty() && !hb.is_empty() {
            if let Some(h) = heu(&ha, &hb, n) {
                let g = interpolate(&h, i, &xi);
                let g = div_scalar(&g, &content(&g));
                if divides(&g, &a) && divides(&g, &b) {
                    return Some(g.into_iter().map(|(e, c)| (e, c * &gc)).collect());
                }
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::vars;

    #[test]
    fn recovers_common_factors() {
        let v = vars(&["x", "y", "z"]);
        let p = |s| MPoly::parse(s, &v).unwrap();
        let g = p("3x^2y - z^3 + 7xyz - 2");
        let a = g.mul(&p("x^3 - y + z^2")).mul(&p("y - 5"));
        let b = g.mul(&p("x + y + z + 1")).mul(&p("y - 5").pow(2));
        assert_eq!(heu_gcd(&a, &b), Some(g.mul(&p("y - 5")).primitive_part()));
        assert_eq!(heu_gcd(&p("x + 1"), &p("y + 1")), Some(p("1")));
    }

    #[test]
    fn division_test_is_exact() {
        let v = vars(&["x", "y"]);
        let i = |s| to_ipoly(&MPoly::parse(s, &v).unwrap());
        assert!(divides(&i("x + y"), &i("x^2 - y^2")));
        assert!(!divides(&i("x + y"), &i("x^2 + y^2")));
        assert!(!divides(&i("2x + 2"), &i("x + 1")));
    }
}
