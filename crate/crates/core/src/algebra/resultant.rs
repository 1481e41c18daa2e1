//! Resultants and discriminants by the subresultant polynomial remainder
//! sequence over a multivariate coefficient ring.
//!
//! Polynomials are handled as coefficient lists in the elimination variable
//! (`Vec<MPoly>`, index = power). The sign convention is that of the
//! Sylvester determinant: `Res(A, B) = lc(A)^deg B · Π B(α)` over the roots
//! `α` of `A`.

use super::mpoly::MPoly;
use crate::error::{Error, Result};

fn trim(v: &mut Vec<MPoly>) {
    while v.last().is_some_and(MPoly::is_zero) {
        v.pop();
    }
}

fn degree(v: &[MPoly]) -> usize {
    v.len() - 1
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a = q·b + r`.
pub(crate) fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = degree(b);
    let lb = &b[db];
    let mut r: Vec<MPoly> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - db;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[k + j] = r[k + j].sub(&lr.mul(bc));
            }
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

fn div_all(v: &[MPoly], d: &MPoly) -> Vec<MPoly> {
    v.iter()
        .map(|c| c.div_exact(d).expect("subresultant division is exact"))
        .collect()
}

/// Resultant of two coefficient lists; `zero` supplies the coefficient ring.
pub(crate) fn resultant_coeffs(a: &[MPoly], b: &[MPoly], zero: &MPoly) -> MPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return zero.clone();
    }
    let mut sign_neg = false;
    if degree(&a) < degree(&b) {
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if degree(&b) == 0 {
        let r = b[0].pow(degree(&a) as u32);
        return if sign_neg { r.neg() } else { r };
    }
    let one = MPoly::one(zero.vars());
    let mut g = one.clone();
    let mut h = one;
    loop {
        let (da, db) = (degree(&a), degree(&b));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return zero.clone();
        }
        let divisor = g.mul(&h.pow(delta as u32));
        a = b;
        b = div_all(&r, &divisor);
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact"),
        };
        if degree(&b) == 0 {
            break;
        }
    }
    let da = degree(&a) as u32;
    let lb = &b[0];
    let res = if da == 0 {
        h
    } else {
        lb.pow(da)
            .div_exact(&h.pow(da - 1))
            .expect("subresultant division is exact")
    };
    if sign_neg {
        res.neg()
    } else {
        res
    }
}

fn var_index(p: &MPoly, var: &str) -> Result<usize> {
    p.var_index(var)
        .ok_or_else(|| Error::VariableNotPresent(var.to_string()))
}

/// Sylvester resultant of `p` and `q` with respect to `var`.
///
/// Both polynomials must share a variable list; the result lives in the same
/// ring and is free of `var`.
pub fn resultant(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly> {
    let i = var_index(p, var)?;
    if !p.involves(i) && !q.involves(i) {
        return Err(Error::VariableNotPresent(var.to_string()));
    }
    Ok(resultant_at(p, q, i))
}

/// Resultant with respect to the variable at index `i`.
pub fn resultant_at(p: &MPoly, q: &MPoly, i: usize) -> MPoly {
    let zero = MPoly::zero(p.vars());
    resultant_coeffs(&p.coeffs_in(i), &q.coeffs_in(i), &zero)
}

/// Discriminant `(-1)^(n(n-1)/2) Res(p, p') / lc(p)` with respect to `var`.
pub fn discriminant(p: &MPoly, var: &str) -> Result<MPoly> {
    let i = var_index(p, var)?;
    discriminant_at(p, i)
}

pub fn discriminant_at(p: &MPoly, i: usize) -> Result<MPoly> {
    let n = p.degree_in(i).unwrap_or(0);
    if n < 2 {
        return Err(Error::DegreeTooSmall(format!(
            "discriminant needs degree at least 2 in {}, got {}",
            p.vars()[i],
            n
        )));
    }
    let coeffs = p.coeffs_in(i);
    let lc = coeffs.last().unwrap().clone();
    let r = resultant_at(p, &p.derivative(i), i);
    let d = r
        .div_exact(&lc)
        .expect("leading coefficient divides Res(p, p')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        d.neg()
    } else {
        d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::vars;
    use crate::algebra::rational::int;
    use num_traits::Signed;

    #[test]
    fn linear_resultant_sign() {
        let v = vars(&["X", "c", "d"]);
        let p = MPoly::parse("X - c", &v).unwrap();
        let q = MPoly::parse("X - d", &v).unwrap();
        assert_eq!(
            resultant(&p, &q, "X").unwrap(),
            MPoly::parse("c - d", &v).unwrap()
        );
    }

    #[test]
    fn two_cubics_resultant() {
        let v = vars(&["X", "a", "b"]);
        let f = MPoly::parse("X^3 + aX^2 + bX + 1", &v).unwrap();
        let g = MPoly::parse("4X^3 + b^2X^2 + 2bX + 1", &v).unwrap();
        let r = resultant(&f, &g, "X").unwrap();
        let expected = MPoly::parse("4a^3 + 27 - 18ab - a^2b^2 + 4b^3", &v).unwrap();
        assert!(r == expected || r == expected.neg(), "got {r}");
        let at11 = r.specialize_many(&[(1, int(1)), (2, int(1))]);
        assert_eq!(at11.constant_value().unwrap().abs(), int(16));
    }

    #[test]
    fn cubic_discriminants() {
        let v = vars(&["X"]);
        let d = |s: &str| {
            discriminant(&MPoly::parse(s, &v).unwrap(), "X")
                .unwrap()
                .constant_value()
                .unwrap()
        };
        assert_eq!(d("X^3 + X^2 + X + 1"), int(-16));
        assert_eq!(d("4X^3 + X^2 + 2X + 1"), int(-416));
        assert_eq!(d("X^2 - 1"), int(4));
        assert!(discriminant(&MPoly::parse("X + 1", &v).unwrap(), "X").is_err());
    }

    #[test]
    fn generic_cubic_discriminant_formula() {
        let v = vars(&["X", "a", "b", "c", "d"]);
        let p = MPoly::parse("aX^3 + bX^2 + cX + d", &v).unwrap();
        let expected = MPoly::parse("18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2", &v).unwrap();
        assert_eq!(discriminant(&p, "X").unwrap(), expected);
    }

    #[test]
    fn absent_variable_is_an_error() {
        let v = vars(&["X", "Y"]);
        let p = MPoly::parse("Y + 1", &v).unwrap();
        assert!(matches!(
            resultant(&p, &p, "X"),
            Err(Error::VariableNotPresent(_))
        ));
    }
}
