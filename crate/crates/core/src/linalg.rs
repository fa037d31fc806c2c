//! Exact matrix rank over prime fields.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field `GF(p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };

    pub fn new(p: u32) -> Result<PrimeField> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::invalid(format!("{p} is not a prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::invalid(format!("characteristic {p} is too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let mut base = a;
        let mut exp = self.p - 2;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::GF2
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// A sparse integer matrix given row by row as `(column, value)` pairs.
#[derive(Debug, Clone, Default)]
pub struct SparseRows {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseRows {
    pub fn new(cols: usize) -> Self {
        SparseRows { cols, rows: Vec::new() }
    }

    /// Rank over `fld`, by dense Gaussian elimination.
    pub fn rank(&self, fld: PrimeField) -> usize {
        if self.rows.is_empty() || self.cols == 0 {
            return 0;
        }
        if fld.p == 2 {
            rank_gf2(self)
        } else {
            rank_gfp(self, fld)
        }
    }
}

fn rank_gf2(m: &SparseRows) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; words];
            for &(c, x) in r {
                if x & 1 != 0 {
                    v[c / 64] ^= 1u64 << (c % 64);
                }
            }
            v
        })
        .filter(|v| v.iter().any(|&w| w != 0))
        .collect();

    let mut rank = 0;
    for col in 0..m.cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & bit != 0 {
                for (a, b) in row[w..].iter_mut().zip(&prow[w..]) {
                    *a ^= *b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_gfp(m: &SparseRows, fld: PrimeField) -> usize {
    let p = fld.p;
    let mut rows: Vec<Vec<u32>> = m
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![0u32; m.cols];
            for &(c, x) in r {
                v[c] = (v[c] + fld.reduce(x)) % p;
            }
            v
        })
        .collect();

    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = fld.inv(rows[rank][col]);
        for x in rows[rank][col..].iter_mut() {
            *x = fld.mul(*x, inv);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor != 0 {
                let neg = p - factor;
                for (a, &b) in row[col..].iter_mut().zip(&prow[col..]) {
                    *a = ((*a as u64 + neg as u64 * b as u64) % p as u64) as u32;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
