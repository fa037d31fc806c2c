//! Fixed-width subsets of a ground set of at most 64 elements.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., n-1}` stored as a membership bit-vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0u64, |acc, e| acc | (1u64 << e)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | (1u64 << e))
    }

    #[inline]
    pub fn remove(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    /// Complement inside a ground set of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Checks that no bit at position `>= n` is set.
    pub fn check_within(self, n: usize) -> Result<()> {
        if self.is_subset_of(Subset::full(n)) {
            Ok(())
        } else {
            Err(Error::OutOfRange { subset: self.to_vec(), n })
        }
    }

    /// Maps the elements of a subset of `{0, .., labels.len()-1}` through `labels`.
    pub fn relabel(self, labels: &[usize]) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, e| acc.insert(labels[e]))
    }

    /// Inverse of [`Subset::relabel`]: positions within `parent` of the members of `self`.
    /// Members of `self` outside `parent` are dropped.
    pub fn compress(self, parent: Subset) -> Subset {
        let mut out = 0u64;
        for (pos, e) in parent.iter().enumerate() {
            if self.contains(e) {
                out |= 1u64 << pos;
            }
        }
        Subset(out)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of a ground set of size `n`, in increasing bit-vector order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    debug_assert!(n <= MAX_GROUND);
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets { n, next }
}

pub struct KSubsets {
    n: usize,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            if overflow || r == 0 {
                None
            } else {
                let v = (((r ^ cur) >> 2) / c) | r;
                if self.n < 64 && v >> self.n != 0 {
                    None
                } else {
                    Some(v)
                }
            }
        };
        Some(Subset(cur))
    }
}

/// All `k`-subsets of `within`, ordered by their compressed bit pattern.
pub fn k_subsets_of(within: Subset, k: usize) -> impl Iterator<Item = Subset> {
    let labels = within.to_vec();
    k_subsets(labels.len(), k).map(move |s| s.relabel(&labels))
}

/// Every subset of `{0, .., n-1}` in increasing bit-vector order. Only meant for small `n`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n < 64, "exhaustive sweep over 2^{n} subsets");
    (0..(1u64 << n)).map(Subset)
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
