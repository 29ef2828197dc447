//! Exact computations behind supersolvable descent: finite groups with
//! outer actions, supersolvable filtrations, splittings of group extensions
//! and nonabelian 1-cocycles, permutation resolutions of Galois lattices,
//! and number fields with prescribed norms and trace forms over ℚ.
//!
//! Everything is exact (dense multiplication tables, big integers, big
//! rationals) and deterministic. See the `examples/` directory of this
//! crate for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod extension;
pub mod group;
pub mod json;
pub mod lattice;
pub mod numfield;
pub mod oracle;
pub mod outer;

pub use error::{Error, Result};

/// Bounds shared by the searches in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group the library will build.
    pub group_cap: usize,
    /// Node limit for backtracking searches.
    pub node_limit: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { group_cap: group::DEFAULT_CAP, node_limit: group::AUT_NODE_LIMIT }
    }
}
