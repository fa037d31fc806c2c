//! Test-side oracles. Ranks here come from first principles (cardinality caps and a
//! private union-find), never from the library's rank oracle.

#![allow(dead_code)]

use matroid_betti::{Graph, Matroid, Subset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_SEED: u64 = 0x5eed_be77;

/// A connected matroid with a rank function we compute ourselves.
#[derive(Debug, Clone)]
pub enum Component {
    Uniform { r: usize, k: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
}

impl Component {
    pub fn size(&self) -> usize {
        match self {
            Component::Uniform { k, .. } => *k,
            Component::Graphic { edges, .. } => edges.len(),
        }
    }

    /// Rank of the elements `0..size` selected by `bits`.
    pub fn rank(&self, bits: u64) -> usize {
        match self {
            Component::Uniform { r, .. } => (bits.count_ones() as usize).min(*r),
            Component::Graphic { vertices, edges } => {
                let mut parent: Vec<usize> = (0..*vertices).collect();
                fn find(p: &mut [usize], mut x: usize) -> usize {
                    while p[x] != x {
                        p[x] = p[p[x]];
                        x = p[x];
                    }
                    x
                }
                let mut rank = 0;
                for (e, &(u, v)) in edges.iter().enumerate() {
                    if bits >> e & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        if a != b {
                            parent[a] = b;
                            rank += 1;
                        }
                    }
                }
                rank
            }
        }
    }

    pub fn build(&self) -> Matroid {
        match self {
            Component::Uniform { r, k } => Matroid::uniform(*r, *k).unwrap(),
            Component::Graphic { vertices, edges } => {
                Matroid::graphic(&Graph::new(*vertices, edges.clone()).unwrap()).unwrap()
            }
        }
    }
}

/// Direct sum of connected components, ground sets laid out in order.
#[derive(Debug, Clone)]
pub struct SumSpec {
    pub parts: Vec<Component>,
}

impl SumSpec {
    pub fn n(&self) -> usize {
        self.parts.iter().map(Component::size).sum()
    }

    pub fn rank(&self, s: Subset) -> usize {
        let mut bits = s.bits();
        let mut total = 0;
        for p in &self.parts {
            let k = p.size();
            total += p.rank(bits & ((1u64 << k) - 1));
            bits >>= k;
        }
        total
    }

    pub fn full_rank(&self) -> usize {
        self.rank(Subset::full(self.n()))
    }

    pub fn build(&self) -> Matroid {
        let ms: Vec<Matroid> = self.parts.iter().map(Component::build).collect();
        Matroid::direct_sum(&ms).unwrap()
    }

    /// `d_i = min{|τ| : |τ| - r(τ) >= i}` by exhaustive sweep.
    pub fn brute_weights(&self) -> Vec<usize> {
        let n = self.n();
        let mut best = vec![usize::MAX; n - self.full_rank() + 1];
        for bits in 0..(1u64 << n) {
            let s = Subset(bits);
            let nullity = s.len() - self.rank(s);
            for slot in &mut best[1..=nullity] {
                *slot = (*slot).min(s.len());
            }
        }
        best[1..].to_vec()
    }
}

fn random_component(rng: &mut ChaCha8Rng, budget: usize) -> Component {
    loop {
        let c = match rng.gen_range(0..6) {
            0 => Component::Uniform { r: 0, k: 1 },
            1 => Component::Uniform { r: 1, k: 1 },
            2 | 3 => {
                let k = rng.gen_range(2..=5);
                Component::Uniform { r: rng.gen_range(1..k), k }
            }
            4 => {
                let len = rng.gen_range(2..=5);
                Component::Graphic { vertices: len, edges: (0..len).map(|i| (i, (i + 1) % len)).collect() }
            }
            _ => {
                let mut edges = match rng.gen_range(0..3) {
                    // K4
                    0 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
                    // K4 minus an edge
                    1 => vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
                    // theta: three paths of length 2, 1 and 2 between 0 and 1
                    _ => vec![(0, 2), (2, 1), (0, 1), (0, 3), (3, 1)],
                };
                edges.shuffle(rng);
                Component::Graphic { vertices: 4, edges }
            }
        };
        if c.size() <= budget {
            return c;
        }
    }
}

/// A direct sum of at least two components with at most `max_n` elements.
pub fn random_sum(rng: &mut ChaCha8Rng, max_n: usize) -> SumSpec {
    let mut parts = Vec::new();
    let mut used = 0;
    while used < max_n && (parts.len() < 2 || rng.gen_bool(0.5)) {
        let c = random_component(rng, max_n - used);
        used += c.size();
        parts.push(c);
    }
    SumSpec { parts }
}

/// The seeded multi-block suite: `count` direct sums with `n <= max_n`.
pub fn seeded_suite(count: usize, max_n: usize) -> Vec<SumSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    (0..count).map(|_| random_sum(&mut rng, max_n)).collect()
}

/// A few connected matroids that are not direct sums.
pub fn connected_extras() -> Vec<SumSpec> {
    let one = |c| SumSpec { parts: vec![c] };
    vec![
        one(Component::Uniform { r: 3, k: 7 }),
        one(Component::Uniform { r: 2, k: 6 }),
        one(Component::Graphic { vertices: 4, edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] }),
        one(Component::Graphic {
            vertices: 5,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)],
        }),
        one(Component::Graphic { vertices: 2, edges: vec![(0, 1), (0, 1), (0, 1)] }),
    ]
}

/// A random cactus: `lengths` cycles (1 = loop, 2 = double edge) plus `bridges`
/// pendant edges, each glued at a uniformly chosen existing vertex; edge order shuffled.
pub fn random_cactus(rng: &mut ChaCha8Rng, lengths: &[u64], bridges: usize) -> Graph {
    let mut vertices = 1;
    let mut edges = Vec::new();
    let mut pieces: Vec<Option<u64>> = lengths.iter().copied().map(Some).collect();
    pieces.extend(std::iter::repeat_n(None, bridges));
    pieces.shuffle(rng);
    for piece in pieces {
        let at = rng.gen_range(0..vertices);
        match piece {
            Some(1) => edges.push((at, at)),
            Some(m) => {
                let fresh: Vec<usize> = (vertices..vertices + m as usize - 1).collect();
                vertices += fresh.len();
                let mut walk = vec![at];
                walk.extend(fresh);
                for w in 0..walk.len() {
                    edges.push((walk[w], walk[(w + 1) % walk.len()]));
                }
            }
            None => {
                edges.push((at, vertices));
                vertices += 1;
            }
        }
    }
    edges.shuffle(rng);
    Graph::new(vertices, edges).unwrap()
}

/// Polynomial product of global Betti vectors.
pub fn convolve(vs: &[Vec<u64>]) -> Vec<u64> {
    vs.iter().fold(vec![1], |acc, v| {
        let mut out = vec![0; acc.len() + v.len() - 1];
        for (a, x) in acc.iter().enumerate() {
            for (b, y) in v.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        out
    })
}

/// All multisets of size `1..=max_t` drawn from `lo..=hi`, sorted ascending.
pub fn profiles(max_t: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    fn go(start: u64, hi: u64, left: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for x in start..=hi {
            cur.push(x);
            go(x, hi, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, max_t, &mut Vec::new(), &mut out);
    out
}

/// Elementary symmetric polynomials `e_0..e_t` of `xs`.
pub fn elementary(xs: &[u64]) -> Vec<u128> {
    let mut e = vec![1u128];
    for &x in xs {
        e.push(0);
        for j in (1..e.len()).rev() {
            e[j] += e[j - 1] * x as u128;
        }
    }
    e
}
