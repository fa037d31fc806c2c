//! Reference run over the known results: the outerplanar counterexamples
//! G1..G4 and the cactus closed form with its inversion.

use std::fmt::Write as _;

use crate::betti::{
    betti, cactus_betti, dual_min_distance, hilbert_check, invert_cactus_betti, Algorithm,
    BettiTable, CycleProfile,
};
use crate::complex::PrimeField;
use crate::graphs::{fixture, Fixture};
use crate::matroid::Matroid;
use crate::weights::{cactus_weights, weight_hierarchy};

/// Global Betti numbers shared by G1 and G2, degrees 9..14.
pub const G1_G2_BETTI: [u64; 6] = [393, 1459, 2187, 1652, 628, 96];
pub const G1_WEIGHTS: [usize; 5] = [3, 6, 8, 11, 14];
pub const G2_WEIGHTS: [usize; 5] = [3, 6, 9, 11, 14];
/// Degrees 6..9.
pub const G3_BETTI: [u64; 4] = [41, 92, 70, 18];
pub const G4_BETTI: [u64; 4] = [39, 86, 64, 16];
pub const G3_G4_WEIGHTS: [usize; 3] = [3, 6, 9];
pub const G1_G2_DUAL_D1: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

fn fixture_matroid(f: Fixture) -> Matroid {
    Matroid::graphic(&fixture(f)).expect("fixtures fit the ground-set cap")
}

/// Betti numbers by Hochster's formula, with degree and Hilbert-series checks.
pub fn check_fixture_betti(f: Fixture, expected: &[u64], first_degree: usize) -> Check {
    let m = fixture_matroid(f);
    let name = format!("{} Betti numbers", f.name());
    match betti(&m, Algorithm::Hochster, PrimeField::GF2) {
        Ok(t) => {
            let degrees_ok = degrees_match(&t, first_degree);
            let hilbert_ok = hilbert_check(&t, &m);
            Check::new(
                name,
                t.global == expected && degrees_ok && hilbert_ok,
                format!("{} (hilbert {})", t.resolution_string(), if hilbert_ok { "ok" } else { "FAILED" }),
            )
        }
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn degrees_match(t: &BettiTable, first_degree: usize) -> bool {
    t.rank == first_degree
        && t.global.iter().enumerate().all(|(i, &b)| t.get(i, first_degree + i) == b)
}

pub fn check_fixture_weights(f: Fixture, expected: &[usize]) -> Check {
    let h = weight_hierarchy(&fixture_matroid(f));
    Check::new(format!("{} weight hierarchy", f.name()), h.d == expected, format!("{:?}", h.d))
}

pub fn check_fixture_dual_d1(f: Fixture, expected: usize) -> Check {
    let name = format!("{} dual minimum distance", f.name());
    match dual_min_distance(&fixture_matroid(f)) {
        Ok(d) => Check::new(name, d == expected, format!("d_1(M*) = {d}")),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

/// Closed form against the block-product convolution of single cycles, then inverted.
pub fn check_cactus(lengths: &[u64]) -> Check {
    let name = format!("cactus {lengths:?}");
    let run = || -> crate::error::Result<(bool, String)> {
        let p = CycleProfile::new(lengths.to_vec())?;
        let t = cactus_betti(&p)?;
        let per_cycle: Vec<BettiTable> = p
            .lengths()
            .iter()
            .map(|&m| BettiTable::linear(m as usize - 1, m as usize, vec![m, m - 1]))
            .collect();
        let product = crate::betti::block_product_betti(&per_cycle)?;
        let back = invert_cactus_betti(&t.global, p.loops())?;
        let ok = product.same_graded(&t) && back == p;
        Ok((ok, format!("{:?}, d = {:?}", t.global, cactus_weights(&p).d)))
    };
    match run() {
        Ok((ok, detail)) => Check::new(name, ok, detail),
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

pub fn run_all() -> Vec<Check> {
    let mut out = vec![
        check_fixture_betti(Fixture::G1, &G1_G2_BETTI, 9),
        check_fixture_betti(Fixture::G2, &G1_G2_BETTI, 9),
        check_fixture_weights(Fixture::G1, &G1_WEIGHTS),
        check_fixture_weights(Fixture::G2, &G2_WEIGHTS),
        check_fixture_dual_d1(Fixture::G1, G1_G2_DUAL_D1),
        check_fixture_dual_d1(Fixture::G2, G1_G2_DUAL_D1),
        check_fixture_betti(Fixture::G3, &G3_BETTI, 6),
        check_fixture_betti(Fixture::G4, &G4_BETTI, 6),
        check_fixture_weights(Fixture::G3, &G3_G4_WEIGHTS),
        check_fixture_weights(Fixture::G4, &G3_G4_WEIGHTS),
    ];
    for lengths in [&[3u64][..], &[7], &[3, 3], &[3, 4, 5], &[1, 3, 4], &[2, 2, 6, 9]] {
        out.push(check_cactus(lengths));
    }
    out
}

pub fn render_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "{} {:width$}  {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(s, "{passed}/{} checks passed", checks.len());
    s
}
