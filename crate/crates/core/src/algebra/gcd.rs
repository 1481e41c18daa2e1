//! Multivariate gcd over ℚ by recursive content extraction and subresultant
//! remainder sequences, after a heuristic evaluation gcd and a
//! univariate-image shortcut for coprime inputs.

use super::heugcd::heu_gcd;
use super::mpoly::MPoly;
use super::rational::Rational;
use super::resultant::prem;
use super::upoly::UPoly;

/// Greatest common divisor, normalized to an integral primitive polynomial
/// with positive leading coefficient. `gcd(0, 0) = 0`; nonzero constants
/// give `1`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.vars());
    }
    if let Some(g) = heu_gcd(a, b) {
        return g;
    }
    let n = a.vars().len();
    let i = (0..n)
        .rev()
        .find(|&k| a.involves(k) && b.involves(k))
        .or_else(|| (0..n).rev().find(|&k| a.involves(k) || b.involves(k)))
        .expect("non-constant polynomial involves a variable");
    if !a.involves(i) {
        return gcd(a, &content_in(b, i));
    }
    if !b.involves(i) {
        return gcd(&content_in(a, i), b);
    }
    let ca = content_in(a, i);
    let cb = content_in(b, i);
    let g_content = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (pa, pb) = if pa.degree_in(i) < pb.degree_in(i) {
        (pb, pa)
    } else {
        (pa, pb)
    };
    let small = pb.degree_in(i).unwrap_or(0) as usize;
    match image_degree_bound(&pa, &pb, i) {
        Some(0) => return g_content.primitive_part(),
        Some(d) if d == small && pa.divisible_by(&pb) => {
            return g_content.mul(&pb).primitive_part();
        }
        _ => {}
    }
    let g = subresultant_gcd(pa.coeffs_in(i), pb.coeffs_in(i));
    if g.len() == 1 {
        return g_content.primitive_part();
    }
    let c = content_list(&g);
    let g = MPoly::from_coeffs(a.vars(), i, &g)
        .div_exact(&c)
        .expect("content divides");
    g_content.mul(&g).primitive_part()
}

/// Degree in variable `i` of the gcd of univariate images, an upper bound
/// for the degree of the true gcd when the leading coefficients survive.
fn image_degree_bound(a: &MPoly, b: &MPoly, i: usize) -> Option<usize> {
    let n = a.vars().len();
    let la = a.coeffs_in(i).pop()?;
    let lb = b.coeffs_in(i).pop()?;
    let mut best: Option<usize> = None;
    for attempt in 0..2i64 {
        let point: Vec<(usize, Rational)> = (0..n)
            .filter(|&k| k != i)
            .map(|k| {
                (
                    k,
                    Rational::from_integer(
                        (3 + 7 * attempt + 11 * k as i64 + 5 * (k as i64) * (k as i64)).into(),
                    ),
                )
            })
            .collect();
        if la.specialize_many(&point).is_zero() || lb.specialize_many(&point).is_zero() {
            continue;
        }
        let ua = UPoly::from_mpoly(&a.specialize_many(&point), i)?;
        let ub = UPoly::from_mpoly(&b.specialize_many(&point), i)?;
        let d = ua.gcd(&ub).degree().unwrap_or(0);
        best = Some(best.map_or(d, |e: usize| e.min(d)));
        if d == 0 {
            break;
        }
    }
    best
}

/// Last nonzero term of the subresultant remainder sequence, as a
/// coefficient list; `deg a ≥ deg b`.
fn subresultant_gcd(mut a: Vec<MPoly>, mut b: Vec<MPoly>) -> Vec<MPoly> {
    let one = MPoly::one(a[0].vars());
    let mut g = one.clone();
    let mut h = one;
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return r;
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        g = a.last().expect("nonempty").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
}

fn content_list(cs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero(cs[0].vars());
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Content of `p` as a polynomial in variable `i` (gcd of its coefficients).
pub fn content_in(p: &MPoly, i: usize) -> MPoly {
    let cs = p.coeffs_in(i);
    if cs.is_empty() {
        return p.clone();
    }
    content_list(&cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::vars;

    #[test]
    fn bivariate_gcd() {
        let v = vars(&["u", "v"]);
        let p = |s| MPoly::parse(s, &v).unwrap();
        let g = p("u^2 - 3v + 1");
        let a = g.mul(&p("u + v^2"));
        let b = g.mul(&p("2u - v + 7")).mul(&p("v"));
        assert_eq!(gcd(&a, &b), g);
        assert_eq!(gcd(&p("u+1"), &p("v+1")), p("1"));
        assert_eq!(gcd(&p("4u^2v"), &p("6uv^3")), p("uv"));
    }

    #[test]
    fn gcd_with_content() {
        let v = vars(&["x", "y", "z"]);
        let p = |s| MPoly::parse(s, &v).unwrap();
        let a = p("(y+z)^2 (x^2 + y) (x - z)");
        let b = p("(y+z) (x^2 + y) (x + 3)");
        assert_eq!(gcd(&a, &b), p("(y+z)(x^2+y)").primitive_part());
    }
}
