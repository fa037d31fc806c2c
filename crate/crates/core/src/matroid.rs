//! Matroids given by a rank oracle.
//!
//! Every constructor produces an immutable [`Matroid`] whose rank function is the single
//! source of truth; bases, circuits and blocks are all derived by enumeration.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::subset::{all_subsets, k_subsets, Subset, MAX_GROUND};

/// How a matroid was built. Kept for diagnostics and for algorithm selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Graphic,
    Uniform,
    MultiUniform,
    ExplicitBases,
    DualOf,
    RestrictionOf,
    DirectSum,
}

#[derive(Clone)]
enum Oracle {
    Uniform { r: usize },
    MultiUniform { parts: Vec<(usize, Subset)> },
    Bases { bases: Vec<Subset> },
    Graphic { graph: Graph, edges: Vec<(u8, u8)> },
    Dual { inner: Matroid, inner_full_rank: usize },
    Restriction { parent: Matroid, labels: Vec<usize> },
    DirectSum { parts: Vec<(Matroid, Subset)> },
}

/// A matroid on the ground set `{0, .., n-1}` with `n <= 64`.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    oracle: Arc<Oracle>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.full_rank())
            .field("provenance", &self.provenance())
            .finish()
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

impl Matroid {
    fn with_oracle(n: usize, oracle: Oracle) -> Matroid {
        Matroid { n, oracle: Arc::new(oracle) }
    }

    /// The uniform matroid `U(r, n)`: every set of at most `r` elements is independent.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        check_ground(n)?;
        if r > n {
            return Err(Error::invalid(format!("uniform matroid needs r <= n, got r={r}, n={n}")));
        }
        Ok(Matroid::with_oracle(n, Oracle::Uniform { r }))
    }

    /// Direct sum of uniform matroids `U(r_i, n_i)` laid out on consecutive label blocks.
    pub fn multi_uniform(profile: &[(usize, usize)]) -> Result<Matroid> {
        let total: usize = profile.iter().map(|&(_, n)| n).sum();
        check_ground(total)?;
        let mut parts = Vec::with_capacity(profile.len());
        let mut offset = 0;
        for &(r, n) in profile {
            if r > n {
                return Err(Error::invalid(format!("invalid uniform part ({r}, {n}): r > n")));
            }
            let block = Subset(Subset::full(n).bits() << offset);
            parts.push((r, block));
            offset += n;
        }
        Ok(Matroid::with_oracle(total, Oracle::MultiUniform { parts }))
    }

    /// Builds a matroid from its list of bases, validating the basis-exchange axiom.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Matroid> {
        check_ground(n)?;
        if bases.is_empty() {
            return Err(Error::NotAMatroid("basis list is empty".into()));
        }
        let mut uniq: Vec<Subset> = bases.to_vec();
        uniq.sort();
        uniq.dedup();
        for b in &uniq {
            b.check_within(n)?;
        }
        let k = uniq[0].len();
        if let Some(b) = uniq.iter().find(|b| b.len() != k) {
            return Err(Error::NotAMatroid(format!(
                "bases have mixed cardinalities: {} has {} elements, {} has {}",
                uniq[0],
                k,
                b,
                b.len()
            )));
        }
        let set: HashSet<Subset> = uniq.iter().copied().collect();
        for &b1 in &uniq {
            for &b2 in &uniq {
                for x in b1.difference(b2).iter() {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|y| set.contains(&b1.remove(x).insert(y)));
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "basis exchange fails for {b1} and {b2} at element {x}"
                        )));
                    }
                }
            }
        }
        Ok(Matroid::with_oracle(n, Oracle::Bases { bases: uniq }))
    }

    /// The cycle matroid of a multigraph; edge `i` of the graph is element `i`.
    pub fn graphic(graph: &Graph) -> Result<Matroid> {
        let n = graph.edges().len();
        check_ground(n)?;
        // Isolated vertices do not affect rank; compress to touched vertices.
        let mut ids = vec![u8::MAX; graph.vertex_count()];
        let mut next = 0u8;
        let mut edges = Vec::with_capacity(n);
        for &(u, v) in graph.edges() {
            for w in [u, v] {
                if ids[w] == u8::MAX {
                    ids[w] = next;
                    next += 1;
                }
            }
            edges.push((ids[u], ids[v]));
        }
        Ok(Matroid::with_oracle(n, Oracle::Graphic { graph: graph.clone(), edges }))
    }

    /// Direct sum, with the parts' ground sets laid out consecutively.
    pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
        let total: usize = parts.iter().map(Matroid::n).sum();
        check_ground(total)?;
        let mut offset = 0;
        let parts = parts
            .iter()
            .map(|m| {
                let block = Subset(Subset::full(m.n).bits() << offset);
                offset += m.n;
                (m.clone(), block)
            })
            .collect();
        Ok(Matroid::with_oracle(total, Oracle::DirectSum { parts }))
    }

    /// Number of elements of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn provenance(&self) -> Provenance {
        match &*self.oracle {
            Oracle::Uniform { .. } => Provenance::Uniform,
            Oracle::MultiUniform { .. } => Provenance::MultiUniform,
            Oracle::Bases { .. } => Provenance::ExplicitBases,
            Oracle::Graphic { .. } => Provenance::Graphic,
            Oracle::Dual { .. } => Provenance::DualOf,
            Oracle::Restriction { .. } => Provenance::RestrictionOf,
            Oracle::DirectSum { .. } => Provenance::DirectSum,
        }
    }

    /// The underlying graph when this is a cycle matroid.
    pub fn graph(&self) -> Option<&Graph> {
        match &*self.oracle {
            Oracle::Graphic { graph, .. } => Some(graph),
            _ => None,
        }
    }

    /// For a restriction, the parent label of each element.
    pub fn labels(&self) -> Option<&[usize]> {
        match &*self.oracle {
            Oracle::Restriction { labels, .. } => Some(labels),
            _ => None,
        }
    }

    /// Rank of `sigma`, rejecting subsets outside the ground set.
    pub fn rank(&self, sigma: Subset) -> Result<usize> {
        sigma.check_within(self.n)?;
        Ok(self.rank_unchecked(sigma))
    }

    /// Rank of `sigma`; the caller guarantees `sigma` lies in the ground set.
    pub fn rank_unchecked(&self, sigma: Subset) -> usize {
        debug_assert!(sigma.check_within(self.n).is_ok());
        match &*self.oracle {
            Oracle::Uniform { r } => sigma.len().min(*r),
            Oracle::MultiUniform { parts } => parts
                .iter()
                .map(|&(r, block)| sigma.intersection(block).len().min(r))
                .sum(),
            Oracle::Bases { bases } => {
                bases.iter().map(|b| sigma.intersection(*b).len()).max().unwrap_or(0)
            }
            Oracle::Graphic { edges, .. } => graphic_rank(edges, sigma),
            Oracle::Dual { inner, inner_full_rank } => {
                sigma.len() + inner.rank_unchecked(sigma.complement(self.n)) - inner_full_rank
            }
            Oracle::Restriction { parent, labels } => parent.rank_unchecked(sigma.relabel(labels)),
            Oracle::DirectSum { parts } => parts
                .iter()
                .map(|(m, block)| m.rank_unchecked(sigma.compress(*block)))
                .sum(),
        }
    }

    /// `rank(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground())
    }

    /// `|E| - rank(E)`.
    pub fn corank(&self) -> usize {
        self.n - self.full_rank()
    }

    pub fn is_independent(&self, sigma: Subset) -> bool {
        self.rank_unchecked(sigma) == sigma.len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_unchecked(Subset::singleton(e)) == 0
    }

    /// All bases, in increasing bit-vector order.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.full_rank();
        k_subsets(self.n, r).filter(|&s| self.is_independent(s)).collect()
    }

    /// All circuits (minimal dependent sets), in increasing bit-vector order.
    pub fn circuits(&self) -> Vec<Subset> {
        all_subsets(self.n).filter(|&s| self.is_circuit(s)).collect()
    }

    /// Circuits contained in `within`, in increasing bit-vector order.
    pub fn circuits_within(&self, within: Subset) -> Vec<Subset> {
        let labels = within.to_vec();
        let mut out: Vec<Subset> = all_subsets(labels.len())
            .map(|s| s.relabel(&labels))
            .filter(|&s| self.is_circuit(s))
            .collect();
        out.sort();
        out
    }

    pub fn is_circuit(&self, sigma: Subset) -> bool {
        let k = sigma.len();
        k > 0
            && self.rank_unchecked(sigma) == k - 1
            && sigma.iter().all(|e| self.rank_unchecked(sigma.remove(e)) == k - 1)
    }

    /// The dual matroid, `r*(s) = |s| + r(E \ s) - r(E)`.
    pub fn dual(&self) -> Matroid {
        Matroid::with_oracle(
            self.n,
            Oracle::Dual { inner: self.clone(), inner_full_rank: self.full_rank() },
        )
    }

    /// The restriction to `sigma`, relabelled `0..|sigma|` in increasing label order.
    pub fn restriction(&self, sigma: Subset) -> Result<Matroid> {
        sigma.check_within(self.n)?;
        Ok(self.restriction_unchecked(sigma))
    }

    fn restriction_unchecked(&self, sigma: Subset) -> Matroid {
        Matroid::with_oracle(
            sigma.len(),
            Oracle::Restriction { parent: self.clone(), labels: sigma.to_vec() },
        )
    }

    /// Some basis, chosen greedily in label order.
    pub fn greedy_basis(&self) -> Subset {
        let mut b = Subset::EMPTY;
        for e in 0..self.n {
            let c = b.insert(e);
            if self.is_independent(c) {
                b = c;
            }
        }
        b
    }

    /// The connected components ("blocks") of the matroid.
    ///
    /// Two elements share a block iff some circuit contains both. Components are
    /// assembled from the fundamental circuits of a greedy basis, which connect
    /// exactly the same pairs as the full circuit family.
    pub fn blocks(&self) -> BlockPartition {
        let mut dsu = Dsu::new(self.n);
        let basis = self.greedy_basis();
        let r = basis.len();
        for e in self.ground().difference(basis).iter() {
            if self.is_loop(e) {
                continue;
            }
            let with_e = basis.insert(e);
            for b in basis.iter() {
                if self.rank_unchecked(with_e.remove(b)) == r {
                    dsu.union(e, b);
                }
            }
        }
        let mut classes: Vec<Subset> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let root = dsu.find(e);
            if root_of[root] == usize::MAX {
                root_of[root] = classes.len();
                classes.push(Subset::EMPTY);
            }
            let k = root_of[root];
            classes[k] = classes[k].insert(e);
        }
        let blocks = classes
            .into_iter()
            .map(|elements| Block { elements, matroid: self.restriction_unchecked(elements) })
            .collect();
        BlockPartition { blocks }
    }
}

/// One block: its elements in the parent ground set and the restricted matroid.
#[derive(Debug, Clone)]
pub struct Block {
    pub elements: Subset,
    pub matroid: Matroid,
}

/// Partition of the ground set into blocks, ordered by smallest element.
#[derive(Debug, Clone)]
pub struct BlockPartition {
    pub blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter()
    }
}

fn graphic_rank(edges: &[(u8, u8)], sigma: Subset) -> usize {
    let mut parent = [0u8; 128];
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i as u8;
    }
    fn find(parent: &mut [u8; 128], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    let mut rank = 0;
    for e in sigma.iter() {
        let (u, v) = edges[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a as usize] = b;
            rank += 1;
        }
    }
    rank
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller label as root so class order is stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Exhaustively checks normalization, boundedness, monotonicity and submodularity.
/// Intended for ground sets of at most ~10 elements.
pub fn check_rank_axioms(m: &Matroid) -> Result<()> {
    let n = m.n();
    let ranks: Vec<usize> = all_subsets(n).map(|s| m.rank_unchecked(s)).collect();
    if ranks[0] != 0 {
        return Err(Error::NotAMatroid("rank of the empty set is not 0".into()));
    }
    for s in all_subsets(n) {
        let rs = ranks[s.bits() as usize];
        if rs > s.len() {
            return Err(Error::NotAMatroid(format!("rank({s}) = {rs} exceeds its size")));
        }
        for e in s.complement(n).iter() {
            let rt = ranks[s.insert(e).bits() as usize];
            if rt < rs || rt > rs + 1 {
                return Err(Error::NotAMatroid(format!("unit increase fails at {s} + {e}")));
            }
        }
        for t in all_subsets(n) {
            let (u, i) = (s.union(t), s.intersection(t));
            if ranks[u.bits() as usize] + ranks[i.bits() as usize]
                > rs + ranks[t.bits() as usize]
            {
                return Err(Error::NotAMatroid(format!("submodularity fails at {s}, {t}")));
            }
        }
    }
    Ok(())
}
