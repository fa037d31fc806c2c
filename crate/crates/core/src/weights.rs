//! Higher weight hierarchies `d_i(M) = min{|τ| : |τ| - rank(τ) = i}`.
//!
//! Computed three ways: a direct subset sweep, unions of non-redundant circuit
//! families, and min-plus composition of the hierarchies of the blocks.

use serde::{Deserialize, Serialize};

use crate::betti::CycleProfile;
use crate::error::Result;
use crate::matroid::Matroid;
use crate::subset::{all_subsets, k_subsets, Subset};

/// `d_1 < d_2 < .. < d_{n-r}`; `d_0 = 0` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WeightHierarchy {
    pub d: Vec<usize>,
}

impl WeightHierarchy {
    pub fn new(d: Vec<usize>) -> Self {
        WeightHierarchy { d }
    }

    /// `d_i`, with `d_0 = 0`.
    pub fn get(&self, i: usize) -> Option<usize> {
        if i == 0 {
            Some(0)
        } else {
            self.d.get(i - 1).copied()
        }
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.d.windows(2).all(|w| w[0] < w[1])
    }
}

/// Reference algorithm: one pass over every subset, keeping the smallest size per nullity.
pub fn weight_hierarchy(m: &Matroid) -> WeightHierarchy {
    let n = m.n();
    let top = m.corank();
    let mut best = vec![usize::MAX; top + 1];
    for tau in all_subsets(n) {
        let nullity = tau.len() - m.rank_unchecked(tau);
        if tau.len() < best[nullity] {
            best[nullity] = tau.len();
        }
    }
    WeightHierarchy { d: best[1..].to_vec() }
}

/// A list of circuits of some ambient matroid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CircuitFamily {
    pub circuits: Vec<Subset>,
}

/// True iff removing any one member strictly shrinks the union.
pub fn is_nonredundant(f: &CircuitFamily) -> bool {
    let all = f.circuits.iter().fold(Subset::EMPTY, |acc, c| acc.union(*c));
    (0..f.circuits.len()).all(|k| {
        let rest = f
            .circuits
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(Subset::EMPTY, |acc, (_, c)| acc.union(*c));
        rest != all
    })
}

/// Largest size of a non-redundant family of circuits inside `sigma`.
///
/// Branch and bound over circuit families. Each member of a non-redundant family owns
/// an element no other member covers, so a family with union `U` inside `sigma` can grow
/// by at most `|sigma \ U|` more members.
pub fn degree_of_nonredundancy(m: &Matroid, sigma: Subset) -> Result<usize> {
    sigma.check_within(m.n())?;
    let circuits = sorted_circuits(m, sigma);
    Ok(max_nonredundant(&circuits, sigma, usize::MAX))
}

fn sorted_circuits(m: &Matroid, within: Subset) -> Vec<Subset> {
    let mut cs = m.circuits_within(within);
    cs.sort_by_key(|c| (c.len(), *c));
    cs
}

/// Max non-redundant family size among `circuits`, stopping once `goal` is reached.
fn max_nonredundant(circuits: &[Subset], sigma: Subset, goal: usize) -> usize {
    struct Search<'a> {
        circuits: &'a [Subset],
        sigma: Subset,
        goal: usize,
        best: usize,
        // private part of each chosen member: elements no other member covers
        privates: Vec<Subset>,
    }

    impl Search<'_> {
        fn run(&mut self, start: usize, union: Subset) {
            let k = self.privates.len();
            if k > self.best {
                self.best = k;
            }
            if self.best >= self.goal {
                return;
            }
            for idx in start..self.circuits.len() {
                if k + self.sigma.difference(union).len() <= self.best {
                    return;
                }
                let c = self.circuits[idx];
                let own = c.difference(union);
                if own.is_empty() || self.privates.iter().any(|p| p.is_subset_of(c)) {
                    continue;
                }
                let saved = self.privates.clone();
                for p in self.privates.iter_mut() {
                    *p = p.difference(c);
                }
                self.privates.push(own);
                self.run(idx + 1, union.union(c));
                self.privates = saved;
                if self.best >= self.goal {
                    return;
                }
            }
        }
    }

    let mut search = Search { circuits, sigma, goal, best: 0, privates: Vec::new() };
    search.run(0, Subset::EMPTY);
    search.best
}

/// `d_i` as the smallest union of a non-redundant family of `i` circuits, found as the
/// smallest `τ` whose degree of non-redundancy reaches `i`. Uses circuits only, never
/// the rank function's nullity directly.
pub fn weights_via_circuits(m: &Matroid) -> WeightHierarchy {
    let n = m.n();
    let circuits = sorted_circuits(m, m.ground());
    let mut d = Vec::new();
    for size in 1..=n {
        // degrees grow by at most one per element, so only `d.len() + 1` can be new
        loop {
            let target = d.len() + 1;
            let reached = k_subsets(n, size).any(|tau| {
                let inside: Vec<Subset> =
                    circuits.iter().copied().filter(|c| c.is_subset_of(tau)).collect();
                max_nonredundant(&inside, tau, target) >= target
            });
            if reached {
                d.push(size);
            } else {
                break;
            }
        }
    }
    WeightHierarchy { d }
}

/// Composes block hierarchies: `d_i(M) = min{Σ_j d_{k_j}(B_j) : Σ_j k_j = i}` with
/// `d_0 = 0`, as a left-to-right min-plus convolution.
pub fn block_weights(block_hierarchies: &[WeightHierarchy]) -> WeightHierarchy {
    let mut acc: Vec<usize> = vec![0];
    for h in block_hierarchies {
        let ext: Vec<usize> = std::iter::once(0).chain(h.d.iter().copied()).collect();
        let mut next = vec![usize::MAX; acc.len() + ext.len() - 1];
        for (a, &x) in acc.iter().enumerate() {
            for (b, &y) in ext.iter().enumerate() {
                next[a + b] = next[a + b].min(x + y);
            }
        }
        acc = next;
    }
    WeightHierarchy { d: acc[1..].to_vec() }
}

/// Hierarchy of each block by the subset sweep, composed over blocks.
pub fn weights_via_blocks(m: &Matroid) -> WeightHierarchy {
    let hs: Vec<WeightHierarchy> = m.blocks().iter().map(|b| weight_hierarchy(&b.matroid)).collect();
    block_weights(&hs)
}

/// Cactus hierarchy: partial sums of the sorted cycle lengths.
pub fn cactus_weights(p: &CycleProfile) -> WeightHierarchy {
    let d = p
        .lengths()
        .iter()
        .scan(0usize, |acc, &x| {
            *acc += x as usize;
            Some(*acc)
        })
        .collect();
    WeightHierarchy { d }
}
