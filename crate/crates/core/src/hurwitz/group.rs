//! Order of a permutation group from a stabilizer chain (Schreier–Sims).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;

/// Order and name of the group generated by a set of permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInfo {
    pub degree: usize,
    pub order: BigUint,
    pub transitive: bool,
    /// `S_n`, `A_n`, or `other(order)`.
    pub label: String,
}

struct Chain {
    base: Vec<usize>,
    /// Generators added at each level; level `i` fixes `base[..i]`.
    gens: Vec<Vec<Perm>>,
    /// For each level, `b ↦ u` with `u(base[i]) = b`.
    trans: Vec<BTreeMap<usize, Perm>>,
}

impl Chain {
    fn level_gens(&self, i: usize) -> Vec<Perm> {
        self.gens[i..].iter().flatten().cloned().collect()
    }

    fn orbit(&mut self, i: usize, n: usize) {
        let gens = self.level_gens(i);
        let b = self.base[i];
        let mut t = BTreeMap::from([(b, Perm::identity(n))]);
        let mut queue = vec![b];
        while let Some(x) = queue.pop() {
            for s in &gens {
                let y = s.apply(x);
                if !t.contains_key(&y) {
                    let u = t[&x].mul(s);
                    t.insert(y, u);
                    queue.push(y);
                }
            }
        }
        self.trans[i] = t;
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped.
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for i in from..self.base.len() {
            let b = g.apply(self.base[i]);
            match self.trans[i].get(&b) {
                Some(u) => g = g.mul(&u.inv()),
                None => return (g, i),
            }
        }
        (g, self.base.len())
    }

    fn add(&mut self, g: Perm, level: usize) {
        if level == self.base.len() {
            let b = g.first_moved().expect("nonidentity residue");
            self.base.push(b);
            self.gens.push(Vec::new());
            self.trans.push(BTreeMap::new());
        }
        self.gens[level].push(g);
    }

    fn build(gens: &[Perm], n: usize) -> Chain {
        let mut chain = Chain {
            base: Vec::new(),
            gens: Vec::new(),
            trans: Vec::new(),
        };
        for g in gens {
            let (r, j) = chain.strip(g.clone(), 0);
            if !r.is_identity() {
                chain.add(r, j);
                for i in 0..chain.base.len() {
                    chain.orbit(i, n);
                }
            }
        }
        'outer: loop {
            for i in (0..chain.base.len()).rev() {
                chain.orbit(i, n);
                let gens = chain.level_gens(i);
                let trans: Vec<(usize, Perm)> = chain.trans[i]
                    .iter()
                    .map(|(b, u)| (*b, u.clone()))
                    .collect();
                for (b, u) in &trans {
                    for s in &gens {
                        let schreier = u.mul(s).mul(&chain.trans[i][&s.apply(*b)].inv());
                        let (r, j) = chain.strip(schreier, i + 1);
                        if !r.is_identity() {
                            chain.add(r, j);
                            for k in 0..chain.base.len() {
                                chain.orbit(k, n);
                            }
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        chain
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Order of `⟨gens⟩ ≤ S_n`, its transitivity and a label.
pub fn group_info(n: usize, gens: &[Perm]) -> GroupInfo {
    let chain = Chain::build(gens, n);
    let order = chain
        .trans
        .iter()
        .fold(BigUint::one(), |acc, t| acc * BigUint::from(t.len()));
    let transitive = n <= 1 || orbit_of_zero(n, gens) == n;
    let full = factorial(n);
    let label = if n >= 2 && order == full {
        format!("S_{n}")
    } else if n >= 3 && &order * 2u32 == full && gens.iter().all(Perm::is_even) {
        format!("A_{n}")
    } else {
        format!("other({order})")
    };
    GroupInfo {
        degree: n,
        order,
        transitive,
        label,
    }
}

fn orbit_of_zero(n: usize, gens: &[Perm]) -> usize {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0];
    let mut count = 1;
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push(y);
            }
        }
    }
    count
}

/// Whether `⟨gens⟩` acts transitively on `{0, …, n − 1}`.
pub fn is_transitive(n: usize, gens: &[Perm]) -> bool {
    n <= 1 || orbit_of_zero(n, gens) == n
}
