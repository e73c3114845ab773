//! Exact computation of the representation dimension of finite groups.
//!
//! `rdim(G)` is the smallest `n` such that `G` embeds into the invertible
//! `n x n` complex matrices; equivalently, the least total degree of a set
//! of irreducible characters with trivial joint kernel. This crate builds
//! finite groups from permutation generators, multiplication tables, or
//! family builders, computes their exact character tables (cyclotomic
//! integer values, verified orthogonality), reduces the faithfulness
//! constraint to a weighted set cover over the minimal normal subgroups,
//! and solves it exactly with a verifiable certificate. Independent
//! brute-force, abelian, and p-group routes confirm every answer, and the
//! bundled corpus exercises the classification checks branch by branch.
//!
//! ```
//! use rdim::families::FamilySpec;
//! use rdim::group::{load_group, GroupSpec, LoadLimits};
//! use rdim::solver::{rdim_of_group, SolverConfig};
//!
//! let g = load_group(
//!     &GroupSpec::Family(FamilySpec::GeneralizedQuaternion { order: 8 }),
//!     &LoadLimits::default(),
//! ).unwrap();
//! assert_eq!(rdim_of_group(&g, &SolverConfig::default()).unwrap(), 2);
//! ```
//!
//! The `book/` directory contains a guide whose code snippets double as the
//! doc-tests below.

// indexed loops over parallel arrays are the norm in the table and solver
// kernels; iterator rewrites obscure them
#![allow(clippy::needless_range_loop)]

pub mod chartab;
pub mod classes;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod fq;
pub mod group;
pub mod harness;
pub mod perm;
pub mod radicals;
pub mod solver;
pub mod structure;
pub mod theorems;
pub mod util;

pub use error::{Error, Result};

// Keep the book in sync with the crate: every fenced Rust block in the
// guide compiles and runs under `cargo test`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;

    #[doc = include_str!("../../../book/src/groups.md")]
    pub struct BuildingGroups;

    #[doc = include_str!("../../../book/src/character-tables.md")]
    pub struct CharacterTables;

    #[doc = include_str!("../../../book/src/representation-dimension.md")]
    pub struct RepresentationDimension;

    #[doc = include_str!("../../../book/src/classification-checks.md")]
    pub struct ClassificationChecks;

    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
}
