//! Algebraic and coding-theoretic invariants of matroids.
//!
//! * [`matroid`]: rank-oracle matroids, bases, circuits, duals, restrictions, blocks.
//! * [`complex`]: simplicial complexes and exact reduced homology over `GF(p)`.
//! * [`betti`]: graded Betti numbers of the facet ideal by Hochster's formula, by the
//!   block product, and by the cactus closed form; cactus inversion.
//! * [`weights`]: higher weight hierarchies.
//! * [`graphs`]: multigraphs, cycle matroids, cactus recognition, fixture graphs.
//! * [`cli`]: the `matroid-betti` command-line tool.

pub mod betti;
pub mod cli;
pub mod complex;
pub mod error;
pub mod graphs;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod subset;
pub mod verify;
pub mod weights;

pub use betti::{
    betti, block_product_betti, cactus_betti, dual_min_distance, hilbert_check, hochster_betti,
    invert_cactus_betti, Algorithm, BettiTable, CycleProfile,
};
pub use complex::{PrimeField, SimplicialComplex};
pub use error::{Error, Result};
pub use graphs::{cycle_matroid, fixture, is_cactus, Fixture, Graph};
pub use matroid::{BlockPartition, Matroid, Provenance};
pub use subset::Subset;
pub use weights::{weight_hierarchy, WeightHierarchy};
