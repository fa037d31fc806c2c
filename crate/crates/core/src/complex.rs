//! Simplicial complexes given by a face oracle, and their reduced homology over `GF(p)`.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::linalg::SparseRows;
pub use crate::linalg::PrimeField;
use crate::matroid::Matroid;
use crate::subset::{binomial, k_subsets_of, Subset};

/// Complexes on at most this many vertices are tabulated into a membership bitmap.
const TABULATE_LIMIT: usize = 24;

#[derive(Clone)]
enum Faces {
    Oracle(Arc<dyn Fn(Subset) -> bool + Send + Sync>),
    Table(Arc<Vec<u64>>),
}

/// A downward-closed family of subsets of `{0, .., n-1}`.
///
/// The complex with no faces at all (the void complex) is distinct from `{∅}`.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    faces: Faces,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("void", &self.is_void())
            .finish()
    }
}

impl SimplicialComplex {
    /// Wraps a face oracle. The oracle must be downward closed.
    pub fn from_oracle<F>(n: usize, is_face: F) -> SimplicialComplex
    where
        F: Fn(Subset) -> bool + Send + Sync + 'static,
    {
        SimplicialComplex { n, faces: Faces::Oracle(Arc::new(is_face)) }
    }

    /// The complex generated by `facets`.
    pub fn from_facets(n: usize, facets: Vec<Subset>) -> SimplicialComplex {
        SimplicialComplex::from_oracle(n, move |s| facets.iter().any(|f| s.is_subset_of(*f)))
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_oracle(n, |_| true)
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_oracle(n, |_| false)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn is_face(&self, s: Subset) -> bool {
        match &self.faces {
            Faces::Oracle(f) => f(s),
            Faces::Table(t) => {
                let i = s.bits() as usize;
                t[i / 64] >> (i % 64) & 1 == 1
            }
        }
    }

    pub fn is_void(&self) -> bool {
        !self.is_face(Subset::EMPTY)
    }

    /// Evaluates the oracle on every subset once and answers from a bitmap afterwards.
    /// Returns `self` unchanged above the tabulation limit.
    pub fn tabulated(self) -> SimplicialComplex {
        if matches!(self.faces, Faces::Table(_)) || self.n > TABULATE_LIMIT {
            return self;
        }
        let total = 1usize << self.n;
        let mut table = vec![0u64; total.div_ceil(64)];
        for i in 0..total {
            if self.is_face(Subset(i as u64)) {
                table[i / 64] |= 1u64 << (i % 64);
            }
        }
        SimplicialComplex { n: self.n, faces: Faces::Table(Arc::new(table)) }
    }

    /// Faces with exactly `k` vertices, all inside `within`, in increasing order.
    pub fn faces_of_size_within(&self, within: Subset, k: usize) -> Vec<Subset> {
        k_subsets_of(within, k).filter(|&s| self.is_face(s)).collect()
    }

    /// Dimension (largest face size minus one); `None` for the void complex,
    /// `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        if self.is_void() {
            return None;
        }
        let mut dim = -1;
        for k in 1..=self.n {
            if self.faces_of_size_within(self.vertices(), k).is_empty() {
                break;
            }
            dim = k as isize - 1;
        }
        Some(dim)
    }
}

/// `V = (M*)^*`, the Alexander dual of the dual matroid: `σ` is a face iff `E \ σ` is
/// dependent in `M*`. Its Stanley–Reisner ideal is the facet ideal of `m`.
pub fn dual_alexander_complex(m: &Matroid) -> SimplicialComplex {
    let n = m.n();
    let dual = m.dual();
    SimplicialComplex::from_oracle(n, move |s| {
        let rest = s.complement(n);
        dual.rank_unchecked(rest) < rest.len()
    })
}

/// The induced subcomplex on `sigma`, relabelled `0..|sigma|`.
pub fn induced(c: &SimplicialComplex, sigma: Subset) -> Result<SimplicialComplex> {
    sigma.check_within(c.n)?;
    let labels = sigma.to_vec();
    let parent = c.clone();
    Ok(SimplicialComplex::from_oracle(labels.len(), move |s| parent.is_face(s.relabel(&labels))))
}

/// Dimension of the reduced homology group `H̃_d(c; GF(p))`.
///
/// Uses the augmented chain complex, so `{∅}` has `H̃_{-1} = 1`. The void complex has
/// no homology in any degree.
pub fn reduced_betti(c: &SimplicialComplex, d: isize, fld: PrimeField) -> usize {
    reduced_betti_within(c, c.vertices(), d, fld)
}

/// Reduced homology of the subcomplex induced on `within`, without relabelling.
pub(crate) fn reduced_betti_within(
    c: &SimplicialComplex,
    within: Subset,
    d: isize,
    fld: PrimeField,
) -> usize {
    if d < -1 || c.is_void() || d + 1 > within.len() as isize {
        return 0;
    }
    let k = (d + 1) as usize;
    let chains = c.faces_of_size_within(within, k);
    if chains.is_empty() {
        return 0;
    }
    let lower = if k == 0 { Vec::new() } else { c.faces_of_size_within(within, k - 1) };
    let upper = c.faces_of_size_within(within, k + 1);
    let rank_out = boundary_rank(&chains, &lower, fld);
    let rank_in = boundary_rank(&upper, &chains, fld);
    chains.len() - rank_out - rank_in
}

/// Rank of the boundary map from `upper` (faces of size `k+1`) to `lower` (size `k`).
/// Both lists are sorted.
fn boundary_rank(upper: &[Subset], lower: &[Subset], fld: PrimeField) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let mut m = SparseRows::new(lower.len());
    m.rows.reserve(upper.len());
    for &face in upper {
        let row = face
            .iter()
            .enumerate()
            .filter_map(|(pos, v)| {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                lower.binary_search(&face.remove(v)).ok().map(|col| (col, sign))
            })
            .collect();
        m.rows.push(row);
    }
    m.rank(fld)
}

/// Face numbers: `f_{-1}` (1 unless void) and `f_i` for each dimension `i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    pub empty: u64,
    /// `f[i]` counts faces with `i + 1` vertices.
    pub f: Vec<u64>,
}

impl FVector {
    /// `f_dim`, with `dim = -1` the empty face.
    pub fn get(&self, dim: isize) -> u64 {
        match dim {
            -1 => self.empty,
            d if d >= 0 => self.f.get(d as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Number of faces with `k` vertices.
    pub fn with_size(&self, k: usize) -> u64 {
        self.get(k as isize - 1)
    }

    /// `Σ_{d >= -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = -(self.empty as i64);
        for (i, &x) in self.f.iter().enumerate() {
            chi += if i % 2 == 0 { x as i64 } else { -(x as i64) };
        }
        chi
    }
}

pub fn face_numbers(c: &SimplicialComplex) -> FVector {
    let empty = u64::from(!c.is_void());
    let mut f = Vec::new();
    if empty == 1 {
        for k in 1..=c.n {
            let count = c.faces_of_size_within(c.vertices(), k).len() as u64;
            debug_assert!(count <= binomial(c.n as u64, k as u64));
            if count == 0 {
                break;
            }
            f.push(count);
        }
    }
    FVector { empty, f }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::all_subsets;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    fn points(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_oracle(n, |s| s.len() <= 1)
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_oracle(3, |s| s.len() <= 2)
    }

    #[test]
    fn dual_alexander_of_u23_is_three_points() {
        let v = dual_alexander_complex(&Matroid::uniform(2, 3).unwrap());
        let faces: Vec<Subset> = all_subsets(3).filter(|&x| v.is_face(x)).collect();
        assert_eq!(faces, vec![s(&[]), s(&[0]), s(&[1]), s(&[2])]);
    }

    #[test]
    fn dual_alexander_of_free_matroid_is_simplex_boundary() {
        let v = dual_alexander_complex(&Matroid::uniform(4, 4).unwrap());
        for x in all_subsets(4) {
            assert_eq!(v.is_face(x), x.len() < 4);
        }
    }

    #[test]
    fn dual_alexander_of_a_loop_is_void() {
        let v = dual_alexander_complex(&Matroid::uniform(0, 1).unwrap());
        assert!(v.is_void());
        assert!(all_subsets(1).all(|x| !v.is_face(x)));
        assert_eq!(v.dimension(), None);
    }

    #[test]
    fn induced_examples() {
        let c = points(3);
        let e = induced(&c, Subset::EMPTY).unwrap();
        assert_eq!(e.vertex_count(), 0);
        assert!(e.is_face(Subset::EMPTY));
        let same = induced(&c, c.vertices()).unwrap();
        assert!(all_subsets(3).all(|x| same.is_face(x) == c.is_face(x)));
        let two = induced(&c, s(&[0, 2])).unwrap();
        assert_eq!(face_numbers(&two), FVector { empty: 1, f: vec![2] });
        assert!(induced(&c, s(&[3])).is_err());
    }

    #[test]
    fn reduced_betti_examples() {
        assert_eq!(reduced_betti(&points(3), 0, PrimeField::GF2), 2);
        assert_eq!(reduced_betti(&hollow_triangle(), 1, PrimeField::GF2), 1);
        assert_eq!(reduced_betti(&hollow_triangle(), 0, PrimeField::GF2), 0);
        let only_empty = SimplicialComplex::from_oracle(0, |s| s.is_empty());
        assert_eq!(reduced_betti(&only_empty, -1, PrimeField::GF2), 1);
        assert_eq!(reduced_betti(&points(2), -1, PrimeField::GF2), 0);
        assert_eq!(reduced_betti(&SimplicialComplex::void(3), -1, PrimeField::GF2), 0);
        assert_eq!(reduced_betti(&SimplicialComplex::simplex(4), 2, PrimeField::GF2), 0);
    }

    #[test]
    fn projective_plane_sees_the_field() {
        // 6-vertex triangulation of RP^2: H_1 = Z/2, so h̃_1 is 1 over GF(2) and 0 over GF(3)
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let c = SimplicialComplex::from_facets(6, tris.iter().map(|t| s(t)).collect());
        let gf3 = PrimeField::new(3).unwrap();
        assert_eq!(reduced_betti(&c, 1, PrimeField::GF2), 1);
        assert_eq!(reduced_betti(&c, 2, PrimeField::GF2), 1);
        assert_eq!(reduced_betti(&c, 1, gf3), 0);
        assert_eq!(reduced_betti(&c, 2, gf3), 0);
    }

    #[test]
    fn face_numbers_examples() {
        let only_empty = SimplicialComplex::from_oracle(0, |s| s.is_empty());
        assert_eq!(face_numbers(&only_empty), FVector { empty: 1, f: vec![] });
        assert_eq!(face_numbers(&SimplicialComplex::simplex(3)), FVector { empty: 1, f: vec![3, 3, 1] });
        let u13 = Matroid::uniform(1, 3).unwrap();
        let indep = SimplicialComplex::from_oracle(3, move |x| u13.is_independent(x));
        let fv = face_numbers(&indep);
        assert_eq!((fv.get(-1), fv.get(0), fv.get(1)), (1, 3, 0));
    }

    #[test]
    fn tabulation_preserves_faces() {
        let v = dual_alexander_complex(&Matroid::uniform(3, 7).unwrap());
        let t = v.clone().tabulated();
        assert!(all_subsets(7).all(|x| v.is_face(x) == t.is_face(x)));
    }
}
