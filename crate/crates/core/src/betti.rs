//! Graded Betti numbers of the facet ideal `F(M) = <x^B : B a basis of M>`.
//!
//! Three independent routes produce a [`BettiTable`]:
//!
//! * [`hochster_betti`]: Hochster's formula on `V = (M*)^*`, whose Stanley–Reisner ideal
//!   is `F(M)`. One reduced homology dimension per subset on the linear strand.
//! * [`block_product_betti`]: the facet ideal factors over the blocks of `M`, and the
//!   global Betti vector is the convolution of the blocks' vectors.
//! * [`cactus_betti`]: for a cactus graph with cycle lengths `n_1..n_t`,
//!   `β_i = Σ_{j=0}^{i} (-1)^j C(t-j, i-j) σ_{t-j}` in the elementary symmetric
//!   polynomials of the lengths.
//!
//! Facet ideals of matroids have linear resolutions, so every table here has
//! `β_{i,j} = 0` unless `j = rank + i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::complex::{dual_alexander_complex, face_numbers, reduced_betti_within, PrimeField};
use crate::error::{Error, Result};
use crate::graphs::is_cactus;
use crate::matroid::Matroid;
use crate::subset::{binomial, k_subsets, Subset};

/// Homological-degree offset in `β_{i,σ} = h̃_{|σ| - i - 2 + OFFSET}(V|_σ)`, with `i`
/// indexing the resolution of the ideal itself (generators at `i = 0`).
///
/// Zero is the only value for which the triangle yields `(3, 2)` and `β_{0,σ} = 1`
/// exactly at bases; see `hochster_offset_is_pinned_by_the_triangle`.
pub const HOCHSTER_OFFSET: isize = 0;

/// Graded Betti numbers of a facet ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// Rank of the matroid; the degree of every generator.
    pub rank: usize,
    /// Number of variables (ground-set size).
    pub n: usize,
    /// `coarse[i][j] = β_{i,j}`, nonzero entries only.
    pub coarse: BTreeMap<usize, BTreeMap<usize, u64>>,
    /// `fine[i][σ] = β_{i,σ}`, nonzero entries only, when requested.
    pub fine: Option<BTreeMap<usize, BTreeMap<Subset, u64>>>,
    /// `global[i] = Σ_j β_{i,j}` for `i = 0..=n-rank`.
    pub global: Vec<u64>,
}

impl BettiTable {
    /// A linear table: `β_{i, rank+i} = global[i]`.
    pub fn linear(rank: usize, n: usize, global: Vec<u64>) -> BettiTable {
        let coarse = global
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, &b)| (i, BTreeMap::from([(rank + i, b)])))
            .collect();
        BettiTable { rank, n, coarse, fine: None, global }
    }

    fn from_fine(rank: usize, n: usize, fine: BTreeMap<usize, BTreeMap<Subset, u64>>, keep_fine: bool) -> BettiTable {
        let mut coarse: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        let mut global = vec![0u64; n - rank + 1];
        for (&i, row) in &fine {
            for (sigma, &b) in row {
                *coarse.entry(i).or_default().entry(sigma.len()).or_default() += b;
                if i >= global.len() {
                    global.resize(i + 1, 0);
                }
                global[i] += b;
            }
        }
        BettiTable { rank, n, coarse, fine: keep_fine.then_some(fine), global }
    }

    /// Length `l` of the resolution, `n - rank`.
    pub fn length(&self) -> usize {
        self.global.len() - 1
    }

    /// `β_{i,j}`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.coarse.get(&i).and_then(|row| row.get(&j)).copied().unwrap_or(0)
    }

    /// True iff every nonzero entry sits at `j = rank + i` (and every fine entry at
    /// `|σ| = rank + i`), and `global` is the row sum of `coarse`.
    pub fn is_linear(&self) -> bool {
        let coarse_ok = self
            .coarse
            .iter()
            .all(|(&i, row)| row.iter().all(|(&j, &b)| b == 0 || j == self.rank + i));
        let fine_ok = self.fine.as_ref().is_none_or(|fine| {
            fine.iter()
                .all(|(&i, row)| row.iter().all(|(s, &b)| b == 0 || s.len() == self.rank + i))
        });
        let sums_ok = self.global.len() == self.n + 1 - self.rank
            && self
                .global
                .iter()
                .enumerate()
                .all(|(i, &g)| self.coarse.get(&i).map_or(0, |row| row.values().sum()) == g);
        coarse_ok && fine_ok && sums_ok
    }

    /// Same rank, size, coarse and global entries; fine tables are ignored.
    pub fn same_graded(&self, other: &BettiTable) -> bool {
        self.rank == other.rank
            && self.n == other.n
            && self.coarse == other.coarse
            && self.global == other.global
    }

    /// The resolution in arrow notation, e.g. `0 <- S(-2)^3 <- S(-3)^2 <- 0`.
    pub fn resolution_string(&self) -> String {
        let mut out = String::from("0");
        for row in self.coarse.values() {
            for (&j, &b) in row {
                if b == 0 {
                    continue;
                }
                if j == 0 {
                    out.push_str(&format!(" <- S^{b}"));
                } else {
                    out.push_str(&format!(" <- S(-{j})^{b}"));
                }
            }
        }
        out.push_str(" <- 0");
        out
    }

    /// `β_{0,j}` with `j = rank`: the number of generators.
    pub fn generators(&self) -> u64 {
        self.global.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.resolution_string())
    }
}

/// The facet ideal of a matroid whose only basis is `∅` is the unit ideal.
fn unit_ideal_table(n: usize, fine: bool) -> BettiTable {
    let mut global = vec![0u64; n + 1];
    global[0] = 1;
    let mut t = BettiTable::linear(0, n, global);
    if fine {
        t.fine = Some(BTreeMap::from([(0, BTreeMap::from([(Subset::EMPTY, 1)]))]));
    }
    t
}

/// Betti numbers by Hochster's formula, sweeping only the linear strand
/// `|σ| = rank + i`.
pub fn hochster_betti(m: &Matroid, fld: PrimeField, fine: bool) -> Result<BettiTable> {
    let n = m.n();
    let r = m.full_rank();
    if r == 0 {
        return Ok(unit_ideal_table(n, fine));
    }
    let v = dual_alexander_complex(m).tabulated();
    let tasks: Vec<(usize, Subset)> =
        (0..=n - r).flat_map(|i| k_subsets(n, r + i).map(move |s| (i, s))).collect();
    let entries: Vec<(usize, Subset, u64)> = tasks
        .par_iter()
        .filter_map(|&(i, sigma)| {
            let d = sigma.len() as isize - i as isize - 2 + HOCHSTER_OFFSET;
            let b = reduced_betti_within(&v, sigma, d, fld) as u64;
            (b != 0).then_some((i, sigma, b))
        })
        .collect();
    let mut table: BTreeMap<usize, BTreeMap<Subset, u64>> = BTreeMap::new();
    for (i, sigma, b) in entries {
        table.entry(i).or_default().insert(sigma, b);
    }
    Ok(BettiTable::from_fine(r, n, table, fine))
}

/// Hochster's formula over every pair `(i, σ)`, not only the linear strand.
/// Used to test linearity rather than assume it; limited to small ground sets.
pub fn hochster_betti_exhaustive(m: &Matroid, fld: PrimeField) -> Result<BettiTable> {
    let n = m.n();
    if n > 12 {
        return Err(Error::invalid(format!("exhaustive Hochster sweep is capped at 12 elements, got {n}")));
    }
    let r = m.full_rank();
    if r == 0 {
        return Ok(unit_ideal_table(n, true));
    }
    let v = dual_alexander_complex(m).tabulated();
    let mut table: BTreeMap<usize, BTreeMap<Subset, u64>> = BTreeMap::new();
    for sigma in crate::subset::all_subsets(n) {
        for i in 0..=sigma.len() {
            let d = sigma.len() as isize - i as isize - 2 + HOCHSTER_OFFSET;
            let b = reduced_betti_within(&v, sigma, d, fld) as u64;
            if b != 0 {
                table.entry(i).or_default().insert(sigma, b);
            }
        }
    }
    Ok(BettiTable::from_fine(r, n, table, true))
}

/// Combines linear tables of the blocks of a matroid into the table of the matroid:
/// ranks and lengths add, `β_i = Σ_{u_1+..+u_t = i} Π_j β_{u_j}(B_j)`.
pub fn block_product_betti(block_tables: &[BettiTable]) -> Result<BettiTable> {
    let mut rank = 0;
    let mut n = 0;
    let mut global = vec![1u64];
    for (k, t) in block_tables.iter().enumerate() {
        if !t.is_linear() {
            return Err(Error::Contract(format!("block table {k} is not linear")));
        }
        rank += t.rank;
        n += t.n;
        let mut next = vec![0u64; global.len() + t.global.len() - 1];
        for (a, &x) in global.iter().enumerate() {
            for (b, &y) in t.global.iter().enumerate() {
                next[a + b] = x
                    .checked_mul(y)
                    .and_then(|p| next[a + b].checked_add(p))
                    .ok_or_else(|| Error::invalid("Betti number overflows u64"))?;
            }
        }
        global = next;
    }
    Ok(BettiTable::linear(rank, n, global))
}

/// Algorithm selector for [`betti`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Cactus closed form for cactus graphs, block product with two or more blocks,
    /// Hochster otherwise.
    #[default]
    Auto,
    Hochster,
    Blocks,
    Cactus,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] =
        [Algorithm::Auto, Algorithm::Hochster, Algorithm::Blocks, Algorithm::Cactus];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Hochster => "hochster",
            Algorithm::Blocks => "blocks",
            Algorithm::Cactus => "cactus",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "hochster" => Ok(Algorithm::Hochster),
            "blocks" => Ok(Algorithm::Blocks),
            "cactus" => Ok(Algorithm::Cactus),
            other => Err(Error::invalid(format!("unknown algorithm {other:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Betti table of `F(m)` by the chosen algorithm.
pub fn betti(m: &Matroid, algorithm: Algorithm, fld: PrimeField) -> Result<BettiTable> {
    match algorithm {
        Algorithm::Hochster => hochster_betti(m, fld, false),
        Algorithm::Blocks => blocks_betti(m, fld),
        Algorithm::Cactus => graphic_cactus_betti(m),
        Algorithm::Auto => {
            if let Some(g) = m.graph() {
                if g.is_connected() && is_cactus(g)?.is_cactus {
                    return graphic_cactus_betti(m);
                }
            }
            if m.blocks().len() >= 2 {
                blocks_betti(m, fld)
            } else {
                hochster_betti(m, fld, false)
            }
        }
    }
}

fn blocks_betti(m: &Matroid, fld: PrimeField) -> Result<BettiTable> {
    let tables = m
        .blocks()
        .iter()
        .map(|b| hochster_betti(&b.matroid, fld, false))
        .collect::<Result<Vec<_>>>()?;
    block_product_betti(&tables)
}

fn graphic_cactus_betti(m: &Matroid) -> Result<BettiTable> {
    let g = m
        .graph()
        .ok_or_else(|| Error::NotACactus("cactus mode needs a graphic matroid".into()))?;
    let cert = is_cactus(g).map_err(|e| Error::NotACactus(e.to_string()))?;
    let profile = cert.profile()?;
    let bridges = cert.bridges.len();
    if profile.is_empty() {
        // a tree: the facet ideal is principal
        return Ok(BettiTable::linear(bridges, bridges, vec![1]));
    }
    let mut t = cactus_betti(&profile)?;
    // bridges are coloops: one factor x_e each, no new syzygies
    t.rank += bridges;
    t.n += bridges;
    t.coarse = BettiTable::linear(t.rank, t.n, t.global.clone()).coarse;
    Ok(t)
}

/// Multiset of cycle lengths of a cactus (loops as length 1), sorted ascending, with
/// its elementary symmetric polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleProfile {
    lengths: Vec<u64>,
    sigma: Vec<u128>,
}

impl CycleProfile {
    pub fn new(mut lengths: Vec<u64>) -> Result<CycleProfile> {
        if lengths.contains(&0) {
            return Err(Error::invalid("cycle lengths must be at least 1"));
        }
        lengths.sort_unstable();
        let sigma = elementary_symmetric(&lengths)?;
        Ok(CycleProfile { lengths, sigma })
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    /// `σ_0..σ_t`.
    pub fn sigma(&self) -> &[u128] {
        &self.sigma
    }

    /// Number of cycles `t`, loops included.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn loops(&self) -> usize {
        self.lengths.iter().filter(|&&x| x == 1).count()
    }
}

/// `σ_0..σ_t` of `xs`, by the product expansion of `Π (1 + x_k T)`.
fn elementary_symmetric(xs: &[u64]) -> Result<Vec<u128>> {
    let mut e = vec![0u128; xs.len() + 1];
    e[0] = 1;
    for (k, &x) in xs.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            e[j] = e[j - 1]
                .checked_mul(x as u128)
                .and_then(|p| e[j].checked_add(p))
                .ok_or_else(|| Error::invalid("elementary symmetric polynomial overflows"))?;
        }
    }
    Ok(e)
}

/// Global Betti numbers of a cactus from its cycle lengths.
pub fn cactus_betti(p: &CycleProfile) -> Result<BettiTable> {
    let t = p.len();
    if t == 0 {
        return Err(Error::invalid("cactus profile must contain at least one cycle"));
    }
    let sigma: Vec<i128> = p
        .sigma()
        .iter()
        .map(|&s| i128::try_from(s).map_err(|_| Error::invalid("σ exceeds i128")))
        .collect::<Result<_>>()?;
    let mut global = Vec::with_capacity(t + 1);
    for i in 0..=t {
        let mut b: i128 = 0;
        for j in 0..=i {
            let term = binomial((t - j) as u64, (i - j) as u64) as i128 * sigma[t - j];
            b += if j % 2 == 0 { term } else { -term };
        }
        global.push(u64::try_from(b).map_err(|_| Error::invalid(format!("β_{i} = {b} out of range")))?);
    }
    let n: u64 = p.lengths().iter().sum();
    let rank: u64 = p.lengths().iter().map(|&x| x - 1).sum();
    Ok(BettiTable::linear(rank as usize, n as usize, global))
}

/// Recovers the cycle lengths of a cactus from its global Betti numbers, given the
/// number of loops.
///
/// Loops make the top `loops` Betti numbers vanish; the input may include or omit
/// those trailing zeros.
pub fn invert_cactus_betti(global: &[u64], loops: usize) -> Result<CycleProfile> {
    let bad = |msg: String| Error::NotCactusBetti(msg);
    let nonzero = global.iter().rposition(|&b| b != 0).map_or(0, |k| k + 1);
    if nonzero == 0 {
        return Err(bad("all Betti numbers are zero".into()));
    }
    let trailing = global.len() - nonzero;
    if trailing > loops {
        return Err(bad(format!("{trailing} trailing zeros but only {loops} loop(s)")));
    }
    let mut beta: Vec<i128> = global[..nonzero].iter().map(|&b| b as i128).collect();
    beta.extend(std::iter::repeat_n(0, loops));
    let t = beta.len() - 1;
    if t == 0 {
        return Err(bad("a single Betti number describes no cycles".into()));
    }

    // σ_t = β_0, then σ_{t-i} from β_i and the σ's already known
    let mut sigma = vec![0i128; t + 1];
    for i in 0..=t {
        let mut acc = beta[i];
        for j in 0..i {
            let term = binomial((t - j) as u64, (i - j) as u64) as i128 * sigma[t - j];
            acc -= if j % 2 == 0 { term } else { -term };
        }
        let s = if i % 2 == 0 { acc } else { -acc };
        if s <= 0 {
            return Err(bad(format!("σ_{} = {s} is not positive", t - i)));
        }
        sigma[t - i] = s;
    }
    if sigma[0] != 1 {
        return Err(bad(format!("σ_0 = {} instead of 1", sigma[0])));
    }

    // coefficients of X^t - σ_1 X^{t-1} + ... + (-1)^t σ_t, highest degree first
    let mut poly: Vec<i128> =
        (0..=t).map(|k| if k % 2 == 0 { sigma[k] } else { -sigma[k] }).collect();
    let mut roots = Vec::with_capacity(t);
    // every root is a positive integer bounded by the sum of all roots
    let mut candidate: i128 = 1;
    while poly.len() > 1 && candidate <= sigma[1] {
        let constant = *poly.last().unwrap();
        if constant % candidate != 0 {
            candidate += 1;
            continue;
        }
        match synthetic_division(&poly, candidate) {
            Some(q) => {
                roots.push(candidate as u64);
                poly = q;
            }
            None => candidate += 1,
        }
    }
    if poly.len() != 1 {
        return Err(bad("the length polynomial does not split over the positive integers".into()));
    }
    let found_loops = roots.iter().filter(|&&x| x == 1).count();
    if found_loops != loops {
        return Err(bad(format!("expected {loops} loop(s), the roots contain {found_loops}")));
    }
    let profile = CycleProfile::new(roots)?;
    let check = cactus_betti(&profile)?;
    if check.global.iter().map(|&b| b as i128).ne(beta.iter().copied()) {
        return Err(bad("recovered lengths do not reproduce the Betti numbers".into()));
    }
    Ok(profile)
}

/// Divides `poly` (highest degree first) by `X - root`; `None` if the remainder is nonzero.
fn synthetic_division(poly: &[i128], root: i128) -> Option<Vec<i128>> {
    let mut q = Vec::with_capacity(poly.len() - 1);
    let mut carry = 0i128;
    for &c in &poly[..poly.len() - 1] {
        carry = carry * root + c;
        q.push(carry);
    }
    (carry * root + poly[poly.len() - 1] == 0).then_some(q)
}

/// Face numbers of `V = (M*)^*` read off a Betti table: `fv[k]` counts faces with
/// `k` vertices.
///
/// The Hilbert series numerator `1 - Σ_{i,j} (-1)^i β_{i,j} t^j` of `S/F(M)` equals
/// `Σ_k f_k t^k (1-t)^{n-k}`; substituting `t = u/(1+u)` gives
/// `f_k = Σ_j c_j C(n-j, k-j)`.
pub fn face_numbers_from_betti(t: &BettiTable) -> Vec<i128> {
    let n = t.n;
    let mut numerator = vec![0i128; n + 1];
    numerator[0] = 1;
    for (&i, row) in &t.coarse {
        for (&j, &b) in row {
            if j <= n {
                let b = b as i128;
                numerator[j] -= if i % 2 == 0 { b } else { -b };
            }
        }
    }
    (0..=n)
        .map(|k| {
            (0..=k)
                .map(|j| numerator[j] * binomial((n - j) as u64, (k - j) as u64) as i128)
                .sum()
        })
        .collect()
}

/// Checks a Betti table against the face numbers of `V = (M*)^*` through the Hilbert
/// series of `S/F(M)`.
pub fn hilbert_check(t: &BettiTable, m: &Matroid) -> bool {
    if t.n != m.n() {
        return false;
    }
    let fv = face_numbers(&dual_alexander_complex(m));
    let predicted = face_numbers_from_betti(t);
    (0..=t.n).all(|k| predicted[k] == fv.with_size(k) as i128)
}

/// `d_1(M*)`: the smallest `i` with `f_{i-1}(M*) != C(n, i)`, counting independent
/// sets of the dual directly.
pub fn dual_min_distance(m: &Matroid) -> Result<usize> {
    let n = m.n();
    let dual = m.dual();
    for i in 1..=n {
        if k_subsets(n, i).any(|s| !dual.is_independent(s)) {
            return Ok(i);
        }
    }
    Err(Error::DualIsFree)
}

/// `d_1(M*)` computed from the Betti table alone. Faces of `V` are complements of
/// non-faces of `M*`, so `f_{i-1}(M*) = C(n, i) - #{faces of V with n - i vertices}`.
pub fn dual_min_distance_from_betti(t: &BettiTable) -> Result<usize> {
    let n = t.n;
    let fv = face_numbers_from_betti(t);
    (1..=n)
        .find(|&i| fv[n - i] != 0)
        .ok_or(Error::DualIsFree)
}
