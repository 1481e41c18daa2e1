//! Braid action on tuples and its orbits on Nielsen classes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::nielsen::{Canonizer, NielsenClass, PermTuple};
use crate::error::{Error, Result};

/// `Q_i: (σi, σi+1) ↦ (σi σi+1 σi⁻¹, σi)`, 0-based `i`.
pub fn braid_move(t: &PermTuple, i: usize) -> PermTuple {
    let mut e = t.entries().to_vec();
    let (a, b) = (e[i].clone(), e[i + 1].clone());
    e[i] = a.mul(&b).mul(&a.inv());
    e[i + 1] = a;
    PermTuple::new(e).expect("same degree")
}

/// `Q_i⁻¹: (σi, σi+1) ↦ (σi+1, σi+1⁻¹ σi σi+1)`.
pub fn braid_move_inv(t: &PermTuple, i: usize) -> PermTuple {
    let mut e = t.entries().to_vec();
    let (a, b) = (e[i].clone(), e[i + 1].clone());
    e[i] = b.clone();
    e[i + 1] = b.inv().mul(&a).mul(&b);
    PermTuple::new(e).expect("same degree")
}

/// One braid orbit meeting a Nielsen class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidOrbit {
    /// Class representatives in the orbit, ascending.
    pub members: Vec<PermTuple>,
    pub size: usize,
    /// Conjugation classes in the full orbit, all slot orders included.
    pub closure_size: usize,
}

/// Conjugation classes reachable from `start` under the braid group.
fn closure(canon: &mut Canonizer, start: &PermTuple) -> BTreeSet<PermTuple> {
    let start = canon.canonical(start);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for i in 0..t.len().saturating_sub(1) {
            for next in [braid_move(&t, i), braid_move_inv(&t, i)] {
                let c = canon.canonical(&next);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

/// Partition of a Nielsen class into braid orbits, largest first.
pub fn braid_orbits(nc: &NielsenClass) -> Vec<BraidOrbit> {
    let mut canon = Canonizer::new(nc.degree);
    let members: BTreeSet<PermTuple> = nc.representatives.iter().cloned().collect();
    let mut assigned: BTreeMap<PermTuple, usize> = BTreeMap::new();
    let mut orbits: Vec<BraidOrbit> = Vec::new();
    for rep in &nc.representatives {
        if assigned.contains_key(rep) {
            continue;
        }
        let full = closure(&mut canon, rep);
        let inside: Vec<PermTuple> = full
            .iter()
            .filter(|t| members.contains(*t))
            .cloned()
            .collect();
        for t in &inside {
            assigned.insert(t.clone(), orbits.len());
        }
        orbits.push(BraidOrbit {
            size: inside.len(),
            members: inside,
            closure_size: full.len(),
        });
    }
    orbits.sort_by(|a, b| b.size.cmp(&a.size).then_with(|| a.members.cmp(&b.members)));
    orbits
}

/// Orbit of one tuple for degrees beyond exhaustive enumeration; the
/// members are all conjugation classes reached, in every slot order.
pub fn braid_orbit_closure(t: &PermTuple) -> Result<BraidOrbit> {
    if !t.is_product_one() {
        return Err(Error::Precondition(
            "tuple product is not the identity".into(),
        ));
    }
    let mut canon = Canonizer::new(t.degree());
    let full: Vec<PermTuple> = closure(&mut canon, t).into_iter().collect();
    let n = full.len();
    Ok(BraidOrbit {
        members: full,
        size: n,
        closure_size: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::nielsen::nielsen_enumerate;
    use crate::hurwitz::perm::Perm;

    #[test]
    fn moves_are_inverse() {
        let t = PermTuple::new(vec![
            Perm::parse(4, "(1,2)").unwrap(),
            Perm::parse(4, "(2,3,4)").unwrap(),
            Perm::parse(4, "(1,4)").unwrap(),
        ])
        .unwrap();
        for i in 0..2 {
            assert_eq!(braid_move_inv(&braid_move(&t, i), i), t);
            assert_eq!(braid_move(&braid_move_inv(&t, i), i), t);
            assert_eq!(braid_move(&t, i).product(), t.product());
        }
    }

    #[test]
    fn three_transpositions_form_one_orbit() {
        let nc = nielsen_enumerate(3, &vec![vec![2]; 4]).unwrap();
        let orbits = braid_orbits(&nc);
        assert_eq!(orbits.iter().map(|o| o.size).collect::<Vec<_>>(), vec![4]);
        assert_eq!(orbits[0].closure_size, 4);
    }

    #[test]
    fn orbits_partition_the_class() {
        let nc = nielsen_enumerate(4, &[vec![2], vec![2], vec![2], vec![2, 2], vec![2]]).unwrap();
        let orbits = braid_orbits(&nc);
        let mut all: Vec<PermTuple> = orbits.iter().flat_map(|o| o.members.clone()).collect();
        all.sort();
        assert_eq!(all, nc.representatives);
        assert!(orbits.windows(2).all(|w| w[0].size >= w[1].size));
    }

    #[test]
    fn closure_mode_matches_enumeration() {
        let nc = nielsen_enumerate(3, &vec![vec![2]; 4]).unwrap();
        let o = braid_orbit_closure(&nc.representatives[0]).unwrap();
        assert_eq!(o.members, nc.representatives);
    }
}
