//! Rational roots of univariate polynomials by p-adic lifting.
//!
//! The squarefree part is reduced modulo a prime for which it stays
//! squarefree; each root there is lifted by Newton iteration past the height
//! bound `2·|a_0|·|a_n|`, reconstructed as a fraction and confirmed by exact
//! evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mpoly::MPoly;
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// All rational roots of a univariate polynomial, with multiplicity, in
/// ascending order.
pub fn rational_roots(p: &MPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let involved: Vec<usize> = (0..p.vars().len()).filter(|&i| p.involves(i)).collect();
    let up = match involved.as_slice() {
        [] => return Ok(Vec::new()),
        [i] => UPoly::from_mpoly(p, *i).expect("univariate"),
        _ => {
            return Err(Error::Precondition(
                "rational_roots needs a univariate polynomial".into(),
            ))
        }
    };
    Ok(upoly_rational_roots(&up))
}

/// Rational roots (with multiplicity, ascending) of a nonzero [`UPoly`].
pub fn upoly_rational_roots(p: &UPoly) -> Vec<Rational> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sf = p.divrem(&p.gcd(&p.derivative())).0;
    for r in squarefree_roots(&sf) {
        let mut q = p.clone();
        let lin = UPoly::linear_root(&r);
        loop {
            let (quo, rem) = q.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            out.push(r.clone());
            q = quo;
        }
    }
    out.sort();
    out
}

fn integral_coeffs(p: &UPoly) -> Vec<BigInt> {
    let l = super::rational::denominator_lcm(p.coeffs());
    let v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    v.into_iter().map(|c| c / &g).collect()
}

fn squarefree_roots(p: &UPoly) -> Vec<Rational> {
    let mut f = integral_coeffs(p);
    let mut roots = Vec::new();
    if f[0].is_zero() {
        roots.push(Rational::zero());
        let k = f.iter().position(|c| !c.is_zero()).unwrap();
        f.drain(..k);
    }
    if f.len() <= 1 {
        return roots;
    }
    if f.len() == 2 {
        roots.push(BigRational::new(-f[0].clone(), f[1].clone()));
        return roots;
    }
    let lc = f.last().unwrap().abs();
    let c0 = f[0].abs();
    let bound = BigInt::from(2) * &lc * &c0;
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    let p = choose_prime(&f, &df);
    let pb = BigInt::from(p);
    let fp: Vec<u64> = f.iter().map(|c| mod_u64(c, p)).collect();
    for r0 in 0..p {
        if eval_mod_u64(&fp, r0, p) != 0 {
            continue;
        }
        let mut m = pb.clone();
        let mut r = BigInt::from(r0);
        while m <= bound {
            m = &m * &m;
            let fr = eval_mod(&f, &r, &m);
            let dfr = eval_mod(&df, &r, &m);
            let inv = mod_inverse(&dfr, &m).expect("simple root modulo p");
            r = (&r - fr * inv).mod_floor(&m);
        }
        if let Some(q) = reconstruct(&r, &m, &c0, &lc) {
            if is_root(&f, &q) {
                roots.push(q);
            }
        }
    }
    roots
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn eval_mod_u64(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter()
        .rev()
        .fold(0u128, |acc, &c| (acc * x as u128 + c as u128) % p as u128) as u64
}

fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Smallest prime at least 1009 keeping `f` squarefree and of full degree.
fn choose_prime(f: &[BigInt], df: &[BigInt]) -> u64 {
    let mut p = 1009u64;
    loop {
        if is_prime(p) && mod_u64(f.last().unwrap(), p) != 0 {
            let a: Vec<u64> = f.iter().map(|c| mod_u64(c, p)).collect();
            let b: Vec<u64> = df.iter().map(|c| mod_u64(c, p)).collect();
            if gcd_mod_degree(a, b, p) == 0 {
                return p;
            }
        }
        p += 2;
    }
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut bb = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    b = r as u64;
    b
}

/// Degree of `gcd(a, b)` over `F_p`.
fn gcd_mod_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p) as u128;
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let c = (*a.last().unwrap() as u128 * inv % p as u128) as u64;
            for (j, &bc) in b.iter().enumerate() {
                let t = (c as u128 * bc as u128 % p as u128) as u64;
                a[shift + j] = (a[shift + j] + p - t) % p;
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Finds `n/d` with `n ≡ d·r (mod m)`, `|n| ≤ nb`, `0 < d ≤ db`.
fn reconstruct(r: &BigInt, m: &BigInt, nb: &BigInt, db: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1.abs() > nb {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
        if r1.is_zero() && !nb.is_zero() {
            break;
        }
    }
    if t1.is_zero() || &t1.abs() > db {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn is_root(f: &[BigInt], q: &Rational) -> bool {
    let (n, d) = (q.numer(), q.denom());
    let deg = f.len() - 1;
    let mut dp = vec![BigInt::one(); deg + 1];
    for k in 1..=deg {
        dp[k] = &dp[k - 1] * d;
    }
    let mut np = BigInt::one();
    let mut s = BigInt::zero();
    for (k, c) in f.iter().enumerate() {
        s += c * &np * &dp[deg - k];
        np *= n;
    }
    s.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::vars;
    use crate::algebra::rational::{int, rat};

    fn roots(s: &str) -> Vec<Rational> {
        let v = vars(&["X"]);
        rational_roots(&MPoly::parse(s, &v).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(roots("X^3 - 2025X^2 + 559872X - 80621568"), vec![int(1728)]);
        assert!(roots("X^2 + 1").is_empty());
        assert_eq!(roots("6X^2 - 5X + 1"), vec![rat(1, 3), rat(1, 2)]);
        assert_eq!(
            roots("X^3 (X - 2)^2 (3X + 7)"),
            vec![rat(-7, 3), int(0), int(0), int(0), int(2), int(2)]
        );
    }

    #[test]
    fn large_heights() {
        let r = roots("(123456789 X - 987654321987) (X^2 - 2) (55555X + 3)^2 (X^4 + X + 17)");
        assert_eq!(
            r,
            vec![
                rat(-3, 55555),
                rat(-3, 55555),
                BigRational::new(987654321987i64.into(), 123456789.into())
            ]
        );
    }

    #[test]
    fn zero_polynomial_errors() {
        let v = vars(&["X"]);
        assert!(rational_roots(&MPoly::zero(&v)).is_err());
    }
}
