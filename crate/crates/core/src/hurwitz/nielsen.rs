//! Branch-cycle tuples and their classes up to simultaneous conjugation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::group::{group_info, is_transitive, GroupInfo};
use super::perm::{conjugacy_class, Perm};
use crate::error::{Error, Result};

/// Largest degree handled by exhaustive enumeration.
pub const MAX_ENUMERATION_DEGREE: usize = 7;

/// A tuple `(σ1, …, σr)` of permutations of one degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermTuple {
    entries: Vec<Perm>,
}

impl PermTuple {
    pub fn new(entries: Vec<Perm>) -> Result<Self> {
        let n = entries
            .first()
            .map(Perm::degree)
            .ok_or_else(|| Error::Precondition("empty tuple".into()))?;
        if entries.iter().any(|p| p.degree() != n) {
            return Err(Error::Precondition("entries of different degrees".into()));
        }
        Ok(PermTuple { entries })
    }

    pub fn entries(&self) -> &[Perm] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries[0].degree()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `σ1 ⋯ σr`, left to right.
    pub fn product(&self) -> Perm {
        self.entries
            .iter()
            .fold(Perm::identity(self.degree()), |acc, p| acc.mul(p))
    }

    pub fn is_product_one(&self) -> bool {
        self.product().is_identity()
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(self.degree(), &self.entries)
    }

    pub fn cycle_types(&self) -> Vec<Vec<u32>> {
        self.entries.iter().map(Perm::cycle_type).collect()
    }

    /// Simultaneous conjugation by `g`.
    pub fn conj(&self, g: &Perm) -> PermTuple {
        PermTuple {
            entries: self.entries.iter().map(|p| p.conj(g)).collect(),
        }
    }

    pub fn group(&self) -> GroupInfo {
        group_info(self.degree(), &self.entries)
    }
}

impl fmt::Display for PermTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Order and name of the group generated by the entries.
pub fn group_order(t: &PermTuple) -> GroupInfo {
    t.group()
}

/// Product-one transitive tuples with prescribed slot cycle types, one
/// canonical representative per simultaneous-conjugation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenClass {
    pub degree: usize,
    pub types: Vec<Vec<u32>>,
    /// Canonical representatives, ascending.
    pub representatives: Vec<PermTuple>,
}

impl NielsenClass {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// The standard element of a cycle type: consecutive cycles in descending
/// length, `(1 … L1)(L1+1 …)…`.
fn standard(n: usize, cycle_type: &[u32]) -> Perm {
    let mut cycles = Vec::new();
    let mut next = 1;
    for &l in cycle_type {
        cycles.push((next..next + l as usize).collect::<Vec<_>>());
        next += l as usize;
    }
    Perm::from_cycles(n, &cycles).expect("cycle type fits the degree")
}

/// Cycles including fixed points, stably sorted by descending length.
fn full_cycles(p: &Perm) -> Vec<Vec<usize>> {
    let mut cs = p.cycles();
    let moved: BTreeSet<usize> = cs.iter().flatten().copied().collect();
    cs.extend(
        (0..p.degree())
            .filter(|i| !moved.contains(i))
            .map(|i| vec![i]),
    );
    cs.sort_by_key(|c| std::cmp::Reverse(c.len()));
    cs
}

/// Some `g` with `p.conj(g) == q`, for `p`, `q` of equal cycle type.
fn conjugator(p: &Perm, q: &Perm) -> Perm {
    let mut g = vec![0u8; p.degree()];
    for (a, b) in full_cycles(p).iter().zip(full_cycles(q)) {
        for (x, y) in a.iter().zip(b) {
            g[*x] = y as u8;
        }
    }
    Perm::from_images(g).expect("cycle matching is a bijection")
}

/// All `g` with `m.conj(g) == m`: permutations of equal-length cycles
/// combined with rotations.
fn centralizer(m: &Perm) -> Vec<Perm> {
    let cycles = full_cycles(m);
    let mut groups: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in cycles {
        groups.entry(c.len()).or_default().push(c);
    }
    let mut out = vec![vec![0u8; m.degree()]];
    for (len, group) in groups {
        let k = group.len();
        let mut next = Vec::new();
        for order in permutations(k) {
            for rot in 0..len.pow(k as u32) {
                let mut r = rot;
                let shifts: Vec<usize> = (0..k)
                    .map(|_| {
                        let s = r % len;
                        r /= len;
                        s
                    })
                    .collect();
                for base in &out {
                    let mut g = base.clone();
                    for (src, &dst) in order.iter().enumerate() {
                        for (i, x) in group[src].iter().enumerate() {
                            g[*x] = group[dst][(i + shifts[src]) % len] as u8;
                        }
                    }
                    next.push(g);
                }
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|g| Perm::from_images(g).expect("centralizer element"))
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Canonical forms of tuples under simultaneous conjugation: conjugate the
/// first entry to its standard element, then take the least tuple over the
/// centralizer of that element.
pub(crate) struct Canonizer {
    n: usize,
    cache: BTreeMap<Vec<u32>, (Perm, Vec<Perm>)>,
}

impl Canonizer {
    pub(crate) fn new(n: usize) -> Self {
        Canonizer {
            n,
            cache: BTreeMap::new(),
        }
    }

    fn class(&mut self, t: &[u32]) -> &(Perm, Vec<Perm>) {
        let n = self.n;
        self.cache.entry(t.to_vec()).or_insert_with(|| {
            let m = standard(n, t);
            let c = centralizer(&m);
            (m, c)
        })
    }

    pub(crate) fn canonical(&mut self, t: &PermTuple) -> PermTuple {
        let first = &t.entries[0];
        let (m, cent) = self.class(&first.cycle_type()).clone();
        let t0 = t.conj(&conjugator(first, &m));
        cent.iter()
            .map(|c| t0.conj(c))
            .min()
            .expect("centralizer contains the identity")
    }

    /// Least representative among tuples whose first entry is already standard.
    fn canonical_fixed(&mut self, t: &PermTuple) -> PermTuple {
        let (_, cent) = self.class(&t.entries[0].cycle_type());
        cent.iter()
            .map(|c| t.conj(c))
            .min()
            .expect("centralizer contains the identity")
    }
}

/// Conjugation-class representatives of product-one transitive tuples whose
/// `k`-th entry has cycle type `types[k]`.
pub fn nielsen_enumerate(n: usize, types: &[Vec<u32>]) -> Result<NielsenClass> {
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::Precondition(format!(
            "degree {n} exceeds the exhaustive bound {MAX_ENUMERATION_DEGREE}; use braid_orbit_closure from a known tuple"
        )));
    }
    if n == 0 || types.is_empty() {
        return Err(Error::Precondition(
            "degree and cycle types must be nonempty".into(),
        ));
    }
    let types: Vec<Vec<u32>> = types
        .iter()
        .map(|t| {
            let mut t: Vec<u32> = t.iter().copied().filter(|&e| e >= 2).collect();
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        })
        .collect();
    let empty = NielsenClass {
        degree: n,
        types: types.clone(),
        representatives: Vec::new(),
    };
    if types.iter().any(|t| t.iter().sum::<u32>() as usize > n) {
        return Ok(empty);
    }
    let mut canon = Canonizer::new(n);
    let first = canon.class(&types[0]).0.clone();
    let r = types.len();
    let classes: Vec<Vec<Perm>> = types[1..r.saturating_sub(1)]
        .iter()
        .map(|t| conjugacy_class(n, t))
        .collect();
    let mut found = BTreeSet::new();
    let mut stack: Vec<Perm> = vec![first.clone()];
    let mut prefix: Vec<Perm> = vec![first];
    search(&types, &classes, &mut prefix, &mut stack, &mut |tuple| {
        let t = PermTuple { entries: tuple };
        if t.is_transitive() {
            found.insert(canon.canonical_fixed(&t));
        }
    });
    Ok(NielsenClass {
        degree: n,
        types,
        representatives: found.into_iter().collect(),
    })
}

/// Depth-first search over the middle slots; `products` holds the running
/// products `σ1 ⋯ σk`.
fn search(
    types: &[Vec<u32>],
    classes: &[Vec<Perm>],
    prefix: &mut Vec<Perm>,
    products: &mut Vec<Perm>,
    emit: &mut impl FnMut(Vec<Perm>),
) {
    let r = types.len();
    let k = prefix.len();
    let running = products.last().expect("nonempty").clone();
    if r == 1 {
        if running.is_identity() {
            emit(prefix.clone());
        }
        return;
    }
    if k == r - 1 {
        let last = running.inv();
        if last.cycle_type() == types[r - 1] {
            let mut t = prefix.clone();
            t.push(last);
            emit(t);
        }
        return;
    }
    for p in &classes[k - 1] {
        prefix.push(p.clone());
        products.push(running.mul(p));
        search(types, classes, prefix, products, emit);
        prefix.pop();
        products.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::perm::all_perms;

    #[test]
    fn small_counts() {
        assert_eq!(nielsen_enumerate(2, &[vec![2], vec![2]]).unwrap().len(), 1);
        assert_eq!(nielsen_enumerate(3, &vec![vec![2]; 4]).unwrap().len(), 4);
        assert!(nielsen_enumerate(8, &[vec![2], vec![2]]).is_err());
        assert!(nielsen_enumerate(3, &[vec![2, 2], vec![2, 2]])
            .unwrap()
            .is_empty());
    }

    /// 3⁴ tuples of transpositions, 27 with product one, 24 transitive (the
    /// 3 constant tuples are not), each with trivial stabilizer in `S_3`:
    /// 24/6 = 4 classes.
    #[test]
    fn three_transpositions_count_argument() {
        let ts = conjugacy_class(3, &[2]);
        let mut product_one = 0;
        let mut transitive = 0;
        for a in &ts {
            for b in &ts {
                for c in &ts {
                    for d in &ts {
                        let t = PermTuple::new(vec![a.clone(), b.clone(), c.clone(), d.clone()])
                            .unwrap();
                        if t.is_product_one() {
                            product_one += 1;
                            if t.is_transitive() {
                                transitive += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!((product_one, transitive), (27, 24));
        assert_eq!(
            transitive / 6,
            nielsen_enumerate(3, &vec![vec![2]; 4]).unwrap().len()
        );
    }

    #[test]
    fn centralizer_sizes() {
        for (t, size) in [
            (vec![2u32, 2], 8usize),
            (vec![3, 2], 6),
            (vec![4], 4),
            (vec![], 120),
        ] {
            let m = standard(5, &t);
            let c = centralizer(&m);
            assert_eq!(c.len(), size, "{t:?}");
            assert!(c.iter().all(|g| m.conj(g) == m));
        }
    }

    #[test]
    fn canonical_form_is_conjugation_invariant() {
        let t = PermTuple::new(vec![
            Perm::parse(5, "(1,2)(3,4)").unwrap(),
            Perm::parse(5, "(2,5)(3,4)").unwrap(),
            Perm::parse(5, "(1,5,2)").unwrap(),
        ])
        .unwrap();
        let mut canon = Canonizer::new(5);
        let c = canon.canonical(&t);
        for g in all_perms(5).iter().step_by(7) {
            assert_eq!(canon.canonical(&t.conj(g)), c);
        }
    }

    #[test]
    fn representatives_satisfy_the_class_invariants() {
        let nc = nielsen_enumerate(5, &[vec![2, 2], vec![2, 2], vec![4], vec![2]]).unwrap();
        assert!(!nc.is_empty());
        let mut canon = Canonizer::new(5);
        for t in &nc.representatives {
            assert!(t.is_product_one() && t.is_transitive());
            assert_eq!(t.cycle_types(), nc.types);
            assert_eq!(&canon.canonical(t), t);
        }
    }
}
