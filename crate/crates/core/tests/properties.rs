mod common;

use common::{elementary, random_cactus, random_sum, SumSpec};
use matroid_betti::betti::{dual_min_distance_from_betti, hochster_betti_exhaustive};
use matroid_betti::complex::{dual_alexander_complex, face_numbers, induced, reduced_betti};
use matroid_betti::matroid::check_rank_axioms;
use matroid_betti::subset::{all_subsets, binomial};
use matroid_betti::weights::{block_weights, cactus_weights, weights_via_blocks, weights_via_circuits};
use matroid_betti::{
    betti, dual_min_distance, hochster_betti, is_cactus, weight_hierarchy, Algorithm, CycleProfile, Graph,
    Matroid, PrimeField, Subset,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sum_from_seed(seed: u64, max_n: usize) -> SumSpec {
    random_sum(&mut ChaCha8Rng::seed_from_u64(seed), max_n)
}

/// Minimal dependent sets under the test-side rank.
fn oracle_circuits(spec: &SumSpec) -> Vec<Subset> {
    let n = spec.n();
    let dependent = |s: Subset| spec.rank(s) < s.len();
    all_subsets(n)
        .filter(|&s| dependent(s) && s.iter().all(|e| !dependent(s.remove(e))))
        .collect()
}

/// Classes of "some circuit contains both", by repeated merging.
fn xi_classes(n: usize, circuits: &[Subset]) -> Vec<Subset> {
    let mut classes: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    for &c in circuits {
        let (touching, rest): (Vec<Subset>, Vec<Subset>) =
            classes.into_iter().partition(|k| !k.intersection(c).is_empty());
        classes = rest;
        classes.push(touching.into_iter().fold(Subset::EMPTY, Subset::union));
    }
    classes.sort();
    classes
}

fn random_graph(seed: u64, vertices: usize, edges: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = (0..edges)
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    Graph::new(vertices, e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_first_principles(seed in any::<u64>()) {
        let spec = sum_from_seed(seed, 10);
        let m = spec.build();
        check_rank_axioms(&m).unwrap();
        for s in all_subsets(spec.n()) {
            prop_assert_eq!(m.rank(s).unwrap(), spec.rank(s));
        }
    }

    #[test]
    fn dual_is_an_involution(seed in any::<u64>()) {
        let m = sum_from_seed(seed, 10).build();
        let n = m.n();
        let d = m.dual();
        prop_assert_eq!(d.full_rank(), n - m.full_rank());
        let mut complements: Vec<Subset> = d.bases().into_iter().map(|b| b.complement(n)).collect();
        complements.sort();
        let mut bases = m.bases();
        bases.sort();
        prop_assert_eq!(&complements, &bases);
        let dd = d.dual();
        for s in all_subsets(n) {
            prop_assert_eq!(dd.rank(s).unwrap(), m.rank(s).unwrap());
        }
    }

    #[test]
    fn blocks_are_circuit_classes(seed in any::<u64>()) {
        let spec = sum_from_seed(seed, 9);
        let m = spec.build();
        let mut blocks: Vec<Subset> = m.blocks().iter().map(|b| b.elements).collect();
        blocks.sort();
        prop_assert_eq!(blocks, xi_classes(spec.n(), &oracle_circuits(&spec)));
    }

    #[test]
    fn circuits_match_first_principles(seed in any::<u64>()) {
        let spec = sum_from_seed(seed, 9);
        let mut got = spec.build().circuits();
        got.sort();
        prop_assert_eq!(got, oracle_circuits(&spec));
    }

    #[test]
    fn multi_uniform_basis_count(parts in proptest::collection::vec((0usize..4, 1usize..5), 1..4)) {
        let parts: Vec<(usize, usize)> = parts.into_iter().map(|(r, n)| (r.min(n), n)).collect();
        let m = Matroid::multi_uniform(&parts).unwrap();
        let expected: u64 = parts.iter().map(|&(r, n)| binomial(n as u64, r as u64)).product();
        prop_assert_eq!(m.bases().len() as u64, expected);
    }

    #[test]
    fn euler_poincare(seed in any::<u64>(), mask in any::<u64>()) {
        let m = sum_from_seed(seed, 9).build();
        let v = dual_alexander_complex(&m);
        let sigma = Subset(mask & m.ground().bits());
        let w = induced(&v, sigma).unwrap();
        let f = face_numbers(&w);
        let top = sigma.len() as isize;
        let homology: i64 = (-1..top)
            .map(|d| {
                let h = reduced_betti(&w, d, PrimeField::GF2) as i64;
                if d.rem_euclid(2) == 0 { h } else { -h }
            })
            .sum();
        prop_assert_eq!(homology, f.reduced_euler_characteristic());
    }

    #[test]
    fn edge_relabelling_preserves_invariants(seed in any::<u64>()) {
        let g = random_graph(seed, 5, 8);
        let mut edges = g.edges().to_vec();
        edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let h = Graph::new(g.vertex_count(), edges).unwrap();
        let (mg, mh) = (Matroid::graphic(&g).unwrap(), Matroid::graphic(&h).unwrap());
        let (tg, th) = (hochster_betti(&mg, PrimeField::GF2, false), hochster_betti(&mh, PrimeField::GF2, false));
        match (tg, th) {
            (Ok(a), Ok(b)) => prop_assert!(a.same_graded(&b)),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
        prop_assert_eq!(weight_hierarchy(&mg), weight_hierarchy(&mh));
    }

    #[test]
    fn induced_subcomplexes_compose(seed in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let m = sum_from_seed(seed, 9).build();
        let v = dual_alexander_complex(&m);
        let outer = Subset(a & m.ground().bits());
        let inner = Subset(b).intersection(outer);
        // induced complexes are relabelled, so `inner` is re-expressed inside `outer`
        let twice = induced(&induced(&v, outer).unwrap(), inner.compress(outer)).unwrap();
        let once = induced(&v, inner).unwrap();
        prop_assert_eq!(twice.vertex_count(), inner.len());
        for s in all_subsets(inner.len()) {
            prop_assert_eq!(twice.is_face(s), once.is_face(s));
        }
    }

    #[test]
    fn exhaustive_sweep_is_linear(seed in any::<u64>()) {
        let m = sum_from_seed(seed, 8).build();
        let full = hochster_betti_exhaustive(&m, PrimeField::GF2).unwrap();
        let strand = hochster_betti(&m, PrimeField::GF2, true).unwrap();
        prop_assert!(full.is_linear());
        prop_assert_eq!(full, strand);
    }

    #[test]
    fn graphic_tables_are_field_independent(seed in any::<u64>()) {
        let m = Matroid::graphic(&random_graph(seed, 5, 9)).unwrap();
        let gf2 = hochster_betti(&m, PrimeField::GF2, true);
        let gf5 = hochster_betti(&m, PrimeField::new(5).unwrap(), true);
        prop_assert_eq!(gf2, gf5);
    }

    #[test]
    fn weight_routes_agree(seed in any::<u64>()) {
        let spec = sum_from_seed(seed, 9);
        let m = spec.build();
        let brute = spec.brute_weights();
        prop_assert_eq!(&weight_hierarchy(&m).d, &brute);
        prop_assert_eq!(&weights_via_circuits(&m).d, &brute);
        prop_assert_eq!(&weights_via_blocks(&m).d, &brute);
        prop_assert!(weight_hierarchy(&m).is_strictly_increasing());
    }

    #[test]
    fn block_weights_ignore_block_order(seed in any::<u64>()) {
        let m = sum_from_seed(seed, 10).build();
        let mut hs: Vec<_> = m.blocks().iter().map(|b| weight_hierarchy(&b.matroid)).collect();
        let before = block_weights(&hs);
        hs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(block_weights(&hs), before);
    }

    #[test]
    fn dual_distance_three_ways(seed in any::<u64>()) {
        let m = sum_from_seed(seed, 9).build();
        let direct = dual_min_distance(&m);
        let t = hochster_betti(&m, PrimeField::GF2, false).unwrap();
        prop_assert_eq!(&dual_min_distance_from_betti(&t), &direct);
        let dual_d1 = weight_hierarchy(&m.dual()).get(1);
        prop_assert_eq!(direct.ok(), dual_d1);
    }

    #[test]
    fn random_cacti(
        seed in any::<u64>(),
        cycles in proptest::collection::vec(2u64..=6, 1..4),
        loops in 0usize..3,
        bridges in 0usize..3,
    ) {
        let mut lengths = cycles;
        lengths.extend(std::iter::repeat_n(1, loops));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cactus(&mut rng, &lengths, bridges);
        let m = Matroid::graphic(&g).unwrap();
        let cert = is_cactus(&g).unwrap();
        prop_assert!(cert.is_cactus);
        prop_assert_eq!(cert.bridges.len(), bridges);
        prop_assert_eq!(cert.loops, loops);
        let p = cert.profile().unwrap();
        let mut sorted = lengths.clone();
        sorted.sort();
        prop_assert_eq!(p.lengths(), sorted.as_slice());

        let product: u64 = lengths.iter().product();
        prop_assert_eq!(m.bases().len() as u64, product);

        let closed = betti(&m, Algorithm::Cactus, PrimeField::GF2).unwrap();
        prop_assert!(closed.is_linear());
        prop_assert_eq!(closed.global.len(), m.n() - m.full_rank() + 1);
        if m.n() <= 14 {
            let direct = hochster_betti(&m, PrimeField::GF2, false).unwrap();
            prop_assert!(closed.same_graded(&direct), "{:?} vs {:?}", closed.global, direct.global);
        }
        prop_assert_eq!(weight_hierarchy(&m), cactus_weights(&p));
    }

    #[test]
    fn cactus_sigma_matches_expansion(lengths in proptest::collection::vec(1u64..=9, 1..6)) {
        let p = CycleProfile::new(lengths.clone()).unwrap();
        let mut sorted = lengths;
        sorted.sort();
        let e = elementary(&sorted);
        prop_assert_eq!(p.sigma(), e.as_slice());
    }
}
