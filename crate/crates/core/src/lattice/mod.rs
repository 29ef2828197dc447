//! Galois lattices: finitely generated abelian groups with an action of a
//! finite group, their maps and exact sequences, and resolutions by
//! permutation modules. All arithmetic is exact, via Smith normal form over
//! big integers.

mod matrix;
mod module;
mod resolution;

pub use matrix::{determinant, image_basis, kernel_basis, smith, solve, solve_matrix, IntMatrix, Smith};
pub use module::{verify_exact, ExactSequence, ExactnessReport, FreeForm, GaloisLattice, ModuleMap};
pub use resolution::{
    kummer_compare, norm_one_lattice, permutation_cover, pushout, torus_resolution, KummerReport, PermutationCover,
    Pushout, ResolutionRanks, TorusResolution,
};

/// `Hom(M, ℤ)` with the contragredient action; `M` must be torsion-free.
pub fn dualize(m: &GaloisLattice) -> crate::Result<GaloisLattice> {
    m.dual()
}
