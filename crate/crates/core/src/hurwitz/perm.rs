//! Permutations of `{1, …, n}` stored as 0-based image arrays.
//!
//! Products act left to right: `p.mul(q)` applies `p` first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 0-based images; fails unless a bijection.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::Precondition(format!("image {i} out of range")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::Precondition(format!("image {i} repeated")));
            }
        }
        Ok(Perm(images))
    }

    /// From 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a == 0 || a > n || std::mem::replace(&mut used[a - 1], true) {
                    return Err(Error::Precondition(format!("bad cycle entry {a}")));
                }
                images[a - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
        }
        Ok(Perm(images))
    }

    /// Parses cycle notation such as `(1,2)(3,4,5)` or `()`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad permutation {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let inner = body[..end].trim();
            if !inner.is_empty() {
                let c = inner
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(c);
            }
            rest = body[end + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm(out)
    }

    /// `g⁻¹·self·g`: the cycle `(a b …)` becomes `(g(a) g(b) …)`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[g.0[i] as usize] = g.0[x as usize];
        }
        Perm(out)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                c.push(i);
                i = self.apply(i);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths ≥ 2, descending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut t: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// First point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .position(|(i, &x)| i != x as usize)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Every permutation of degree `n` with the given cycle type (parts ≥ 2),
/// in lexicographic order of image arrays.
pub fn conjugacy_class(n: usize, cycle_type: &[u32]) -> Vec<Perm> {
    let mut want = cycle_type.to_vec();
    want.retain(|&e| e >= 2);
    want.sort_unstable_by(|a, b| b.cmp(a));
    all_perms(n)
        .into_iter()
        .filter(|p| p.cycle_type() == want)
        .collect()
}

/// All of `S_n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(cur.clone()));
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Parses a list of cycle types: slots separated by `,`, parts by `.`,
/// with `k^m` for `m` repeated parts, e.g. `2.2,2^2,4,2`. The bracketed
/// form `[2^2],[3,2]` is also accepted.
pub fn parse_cycle_types(s: &str) -> Result<Vec<Vec<u32>>> {
    let bad = || Error::Parse(format!("bad cycle types {s:?}"));
    let slots: Vec<Vec<&str>> = if s.contains('[') {
        s.split(']')
            .map(|c| c.trim().trim_start_matches(',').trim())
            .filter(|c| !c.is_empty())
            .map(|c| {
                c.strip_prefix('[')
                    .map(|c| c.split([',', '.']).collect())
                    .ok_or_else(bad)
            })
            .collect::<Result<_>>()?
    } else {
        s.split(',').map(|slot| slot.split('.').collect()).collect()
    };
    slots
        .into_iter()
        .map(|slot| {
            let mut parts = Vec::new();
            for p in slot {
                let (base, exp) = match p.split_once('^') {
                    Some((b, e)) => (b, e.trim().parse::<usize>().map_err(|_| bad())?),
                    None => (p, 1),
                };
                let b = base.trim().parse::<u32>().map_err(|_| bad())?;
                if b == 0 {
                    return Err(bad());
                }
                parts.extend(std::iter::repeat_n(b, exp));
            }
            parts.retain(|&e| e >= 2);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Ok(parts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_conjugation() {
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        // apply (1,2) then (2,3): 1 → 2 → 3
        assert_eq!(a.mul(&b), Perm::parse(3, "(1,3,2)").unwrap());
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.conj(&b), Perm::parse(3, "(1,3)").unwrap());
        let c = Perm::parse(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(c.cycle_type(), vec![3, 2]);
        assert_eq!(c.to_string(), "(1,2,3)(4,5)");
        assert!(!c.is_even());
        assert!(c.mul(&c.inv()).is_identity());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(all_perms(5).len(), 120);
        assert_eq!(conjugacy_class(5, &[2, 2]).len(), 15);
        assert_eq!(conjugacy_class(5, &[3, 2]).len(), 20);
        assert_eq!(conjugacy_class(5, &[4]).len(), 30);
        assert_eq!(conjugacy_class(3, &[2]).len(), 3);
    }

    #[test]
    fn cycle_type_parsing() {
        assert_eq!(
            parse_cycle_types("2.2,2^2,4,2").unwrap(),
            vec![vec![2, 2], vec![2, 2], vec![4], vec![2]]
        );
        assert_eq!(
            parse_cycle_types("[2^2],[3,2]").unwrap(),
            vec![vec![2, 2], vec![3, 2]]
        );
        assert_eq!(
            parse_cycle_types("[2^2],[2^2],[4],[2]").unwrap(),
            parse_cycle_types("2.2,2.2,4,2").unwrap()
        );
        assert!(parse_cycle_types("2,x").is_err());
        assert!(parse_cycle_types("[2],3").is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::parse(3, "(1,4)").is_err());
        assert!(Perm::parse(3, "(1,2)(2,3)").is_err());
    }
}
