//! Finitely generated abelian groups with an action of a finite group,
//! presented as cokernels `ℤᵐ / im(R)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::matrix::{image_basis, kernel_basis, smith, solve_matrix, solve_with, IntMatrix, Smith};
use crate::error::{Error, Result};
use crate::group::{generating_set, FiniteGroup, SpanningTree};

/// `ℤᵐ / im(relations)` with `Γ` acting by integer matrices.
#[derive(Clone)]
pub struct GaloisLattice {
    gamma: FiniteGroup,
    ambient: usize,
    relations: IntMatrix,
    /// One matrix per element of `Γ`.
    matrices: Vec<IntMatrix>,
    /// `perm[γ][i] = j` when `γ eᵢ = eⱼ` in a free presentation.
    permutation: Option<Vec<Vec<usize>>>,
    smith: OnceLock<Smith>,
}

impl GaloisLattice {
    /// Builds the module from matrices for a generating set of `Γ`, given as
    /// `(element index, matrix)` pairs, and checks that they define an
    /// action on the quotient.
    pub fn new(gamma: &FiniteGroup, ambient: usize, relations: IntMatrix, generators: &[(usize, IntMatrix)]) -> Result<Self> {
        if relations.rows() != ambient {
            return Err(Error::InvalidModule(format!(
                "relations have {} rows, ambient rank is {ambient}",
                relations.rows()
            )));
        }
        for (g, m) in generators {
            if *g >= gamma.order() || m.rows() != ambient || m.cols() != ambient {
                return Err(Error::InvalidModule(format!("bad action matrix for element {g}")));
            }
        }
        let gens: Vec<usize> = generators.iter().map(|(g, _)| *g).collect();
        let tree = SpanningTree::new(gamma, &gens);
        if !tree.spans() {
            return Err(Error::InvalidModule("action generators do not generate the group".into()));
        }
        let mats: Vec<IntMatrix> = generators.iter().map(|(_, m)| m.clone()).collect();
        let id = IntMatrix::identity(ambient);
        let mut matrices = vec![id.clone(); gamma.order()];
        for &x in &tree.elements()[1..] {
            let (p, i) = tree.edge(x).expect("reached");
            matrices[x] = &matrices[p] * &mats[i];
        }
        let m = GaloisLattice {
            gamma: gamma.clone(),
            ambient,
            relations,
            matrices,
            permutation: None,
            smith: OnceLock::new(),
        };
        for (i, a) in mats.iter().enumerate() {
            if !m.preserves_relations(a) {
                return Err(Error::InvalidModule(format!(
                    "action of element {} does not preserve the relations",
                    gens[i]
                )));
            }
        }
        for x in gamma.elements() {
            for (i, &g) in gens.iter().enumerate() {
                let prod = &m.matrices[x] * &mats[i];
                if !m.same_endomorphism(&m.matrices[gamma.mul(x, g)], &prod) {
                    return Err(Error::InvalidModule(format!(
                        "action matrices violate a relation of the group at ({x}, {g})"
                    )));
                }
            }
        }
        Ok(m)
    }

    /// From a matrix for every element of `Γ`, with the same checks.
    pub fn from_element_matrices(gamma: &FiniteGroup, ambient: usize, relations: IntMatrix, matrices: Vec<IntMatrix>) -> Result<Self> {
        let gens = generating_set(gamma);
        let pairs: Vec<(usize, IntMatrix)> = gens.iter().map(|&g| (g, matrices[g].clone())).collect();
        let m = Self::new(gamma, ambient, relations, &pairs)?;
        if (0..gamma.order()).any(|x| !m.same_endomorphism(&m.matrices[x], &matrices[x])) {
            return Err(Error::InvalidModule("element matrices are not an action".into()));
        }
        Ok(GaloisLattice { matrices, ..m })
    }

    pub(crate) fn from_parts_unchecked(gamma: &FiniteGroup, ambient: usize, relations: IntMatrix, matrices: Vec<IntMatrix>) -> Self {
        GaloisLattice {
            gamma: gamma.clone(),
            ambient,
            relations,
            matrices,
            permutation: None,
            smith: OnceLock::new(),
        }
    }

    /// Free module on `n` points permuted by `Γ`: `perm[γ][i]` is the image
    /// of point `i` under `γ`. Carries the permutation witness.
    pub fn permutation_module(gamma: &FiniteGroup, perm: Vec<Vec<usize>>) -> Result<Self> {
        let n = perm.first().map_or(0, Vec::len);
        if perm.len() != gamma.order() {
            return Err(Error::InvalidModule("one permutation per group element expected".into()));
        }
        let matrices = perm.iter().map(|p| IntMatrix::permutation(p)).collect();
        let mut m = Self::from_element_matrices(gamma, n, IntMatrix::zeros(n, 0), matrices)?;
        m.permutation = Some(perm);
        m.verify_permutation_witness()?;
        Ok(m)
    }

    /// `ℤⁿ` with trivial action.
    pub fn trivial_free(gamma: &FiniteGroup, rank: usize) -> Self {
        let perm = vec![(0..rank).collect::<Vec<_>>(); gamma.order()];
        Self::permutation_module(gamma, perm).expect("trivial permutation action")
    }

    /// `ℤ/n` with trivial action.
    pub fn cyclic_torsion(gamma: &FiniteGroup, n: u64) -> Self {
        let rel = IntMatrix::from_columns(1, &[vec![BigInt::from(n)]]);
        Self::from_parts_unchecked(gamma, 1, rel, vec![IntMatrix::identity(1); gamma.order()])
    }

    /// The group ring `ℤ[Γ]` with left translation.
    pub fn regular(gamma: &FiniteGroup) -> Self {
        let perm = gamma.elements().map(|g| gamma.elements().map(|h| gamma.mul(g, h)).collect()).collect();
        Self::permutation_module(gamma, perm).expect("left translation")
    }

    /// `ℤ[C₂]/(1 + g)`, on which the generator acts by `−1`.
    pub fn sign_module() -> Self {
        let c2 = FiniteGroup::cyclic(2);
        let rel = IntMatrix::from_columns(2, &[vec![BigInt::one(), BigInt::one()]]);
        let swap = IntMatrix::permutation(&[1, 0]);
        Self::from_element_matrices(&c2, 2, rel, vec![IntMatrix::identity(2), swap]).expect("sign module")
    }

    /// `M ⊕ N`.
    pub fn direct_sum(&self, other: &GaloisLattice) -> Result<Self> {
        if !self.gamma.same_as(&other.gamma) {
            return Err(Error::InvalidModule("direct sum over different groups".into()));
        }
        let relations = IntMatrix::block_diag(&self.relations, &other.relations);
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| IntMatrix::block_diag(a, b))
            .collect();
        let mut m = Self::from_parts_unchecked(&self.gamma, self.ambient + other.ambient, relations, matrices);
        if let (Some(p), Some(q)) = (&self.permutation, &other.permutation) {
            let k = self.ambient;
            m.permutation = Some(
                p.iter()
                    .zip(q)
                    .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&j| j + k)).collect())
                    .collect(),
            );
        }
        Ok(m)
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn matrix(&self, gamma_element: usize) -> &IntMatrix {
        &self.matrices[gamma_element]
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    pub fn permutation(&self) -> Option<&[Vec<usize>]> {
        self.permutation.as_deref()
    }

    pub(crate) fn with_permutation(mut self, perm: Vec<Vec<usize>>) -> Result<Self> {
        self.permutation = Some(perm);
        self.verify_permutation_witness()?;
        Ok(self)
    }

    pub(crate) fn smith(&self) -> &Smith {
        self.smith.get_or_init(|| smith(&self.relations))
    }

    /// `v ∈ im(R)`.
    pub fn is_relation(&self, v: &[BigInt]) -> bool {
        solve_with(self.smith(), self.relations.cols(), v).is_some()
    }

    /// Every column of `a` lies in `im(R)`.
    pub fn columns_are_relations(&self, a: &IntMatrix) -> bool {
        a.columns().iter().all(|c| self.is_relation(c))
    }

    /// `a` and `b` induce the same map into this module.
    pub fn same_endomorphism(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        self.columns_are_relations(&a.sub(b))
    }

    fn preserves_relations(&self, a: &IntMatrix) -> bool {
        self.columns_are_relations(&(a * &self.relations))
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.smith().diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion().is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.ambient - self.smith().rank()
    }

    pub fn is_zero_module(&self) -> bool {
        self.free_rank() == 0 && self.is_torsion_free()
    }

    /// The relations are zero, so the ambient basis is a basis.
    pub fn is_free_presentation(&self) -> bool {
        self.smith().rank() == 0
    }

    /// Checks the permutation witness, if any: free presentation and each
    /// element acting by the recorded permutation matrix.
    pub fn verify_permutation_witness(&self) -> Result<()> {
        let Some(perm) = &self.permutation else {
            return Err(Error::InvalidModule("no permutation witness".into()));
        };
        if !self.is_free_presentation() {
            return Err(Error::InvalidModule("permutation module must be presented freely".into()));
        }
        for (g, p) in perm.iter().enumerate() {
            let mut seen = vec![false; p.len()];
            if p.len() != self.ambient || p.iter().any(|&j| j >= p.len() || std::mem::replace(&mut seen[j], true)) {
                return Err(Error::InvalidModule(format!("witness for element {g} is not a permutation")));
            }
            if self.matrices[g] != IntMatrix::permutation(p) {
                return Err(Error::InvalidModule(format!("element {g} does not act by its witness")));
            }
        }
        Ok(())
    }

    /// A free presentation `ℤᵏ` of a torsion-free module together with
    /// inverse isomorphisms to and from it.
    pub fn to_free(&self) -> Result<FreeForm> {
        if !self.is_torsion_free() {
            return Err(Error::Torsion);
        }
        if self.is_free_presentation() {
            let id = ModuleMap::identity(self);
            return Ok(FreeForm { module: self.clone(), to: id.clone(), from: id });
        }
        let s = self.smith();
        let r = s.rank();
        let k = self.ambient - r;
        // v ↦ (U v)[r..] is an isomorphism M → ℤᵏ, with inverse
        // w ↦ U⁻¹ (0, w).
        let to_m = s.u.row_block(r..self.ambient);
        let from_m = s.u_inv.column_block(r..self.ambient);
        let matrices = self.matrices.iter().map(|a| &(&to_m * a) * &from_m).collect();
        let module = Self::from_parts_unchecked(&self.gamma, k, IntMatrix::zeros(k, 0), matrices);
        let to = ModuleMap::new(self, &module, to_m)?;
        let from = ModuleMap::new(&module, self, from_m)?;
        Ok(FreeForm { module, to, from })
    }

    /// `Hom(M, ℤ)` with `γ` acting by `(A_{γ⁻¹})ᵀ`.
    pub fn dual(&self) -> Result<GaloisLattice> {
        let free = self.to_free()?;
        let m = &free.module;
        let matrices = self.gamma.elements().map(|g| m.matrices[self.gamma.inv(g)].transpose()).collect();
        let mut d = Self::from_parts_unchecked(&self.gamma, m.ambient, IntMatrix::zeros(m.ambient, 0), matrices);
        if self.is_free_presentation() {
            if let Some(p) = &self.permutation {
                d = d.with_permutation(p.clone())?;
            }
        }
        Ok(d)
    }

    /// The isomorphism `M → M^∨∨`.
    pub fn double_dual_iso(&self) -> Result<ModuleMap> {
        let free = self.to_free()?;
        let dd = self.dual()?.dual()?;
        ModuleMap::new(self, &dd, free.to.matrix().clone())
    }

    /// Trace of `γ` on `M ⊗ ℚ`.
    pub fn character(&self, gamma_element: usize) -> BigInt {
        // rational trace is invariant under passing to the free quotient
        let s = self.smith();
        let r = s.rank();
        let a = &(&s.u.row_block(r..self.ambient) * &self.matrices[gamma_element]) * &s.u_inv.column_block(r..self.ambient);
        a.trace()
    }
}

impl PartialEq for GaloisLattice {
    fn eq(&self, other: &Self) -> bool {
        self.gamma.same_as(&other.gamma)
            && self.ambient == other.ambient
            && self.relations == other.relations
            && self.matrices == other.matrices
    }
}

impl std::fmt::Debug for GaloisLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GaloisLattice(ambient {}, free rank {}, torsion {:?}, |Γ| = {})",
            self.ambient,
            self.free_rank(),
            self.torsion(),
            self.gamma.order()
        )
    }
}

impl Serialize for GaloisLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaloisLattice", 6)?;
        st.serialize_field("ambient_rank", &self.ambient)?;
        st.serialize_field("relations", &self.relations.transpose())?;
        let action: std::collections::BTreeMap<String, &IntMatrix> = generating_set(&self.gamma)
            .into_iter()
            .map(|g| (g.to_string(), &self.matrices[g]))
            .collect();
        st.serialize_field("action", &action)?;
        st.serialize_field("free_rank", &self.free_rank())?;
        let torsion: Vec<serde_json::Value> = self.torsion().iter().map(super::matrix::bigint_json).collect();
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("permutation", &self.permutation)?;
        st.end()
    }
}

/// A torsion-free module rewritten on a basis.
#[derive(Clone, Debug)]
pub struct FreeForm {
    pub module: GaloisLattice,
    pub to: ModuleMap,
    pub from: ModuleMap,
}

/// A `Γ`-equivariant map given by a matrix on ambient generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: GaloisLattice,
    target: GaloisLattice,
    matrix: IntMatrix,
}

impl ModuleMap {
    /// Checks that the matrix descends to the quotients and commutes with
    /// the action.
    pub fn new(source: &GaloisLattice, target: &GaloisLattice, matrix: IntMatrix) -> Result<Self> {
        if !source.gamma.same_as(&target.gamma) {
            return Err(Error::InvalidModule("map between modules over different groups".into()));
        }
        if matrix.rows() != target.ambient || matrix.cols() != source.ambient {
            return Err(Error::InvalidModule(format!(
                "map matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                target.ambient,
                source.ambient
            )));
        }
        if !target.columns_are_relations(&(&matrix * &source.relations)) {
            return Err(Error::InvalidModule("map does not send relations to relations".into()));
        }
        for g in generating_set(&source.gamma) {
            let lhs = &matrix * &source.matrices[g];
            let rhs = &target.matrices[g] * &matrix;
            if !target.same_endomorphism(&lhs, &rhs) {
                return Err(Error::InvalidModule(format!("map is not equivariant for element {g}")));
            }
        }
        Ok(ModuleMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(m: &GaloisLattice) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: IntMatrix::identity(m.ambient) }
    }

    pub fn zero(source: &GaloisLattice, target: &GaloisLattice) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.ambient, source.ambient),
        }
    }

    pub fn source(&self) -> &GaloisLattice {
        &self.source
    }

    pub fn target(&self) -> &GaloisLattice {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target != self.source {
            return Err(Error::NonComposable("target of the first map differs from source of the second".into()));
        }
        Ok(ModuleMap { source: first.source.clone(), target: self.target.clone(), matrix: &self.matrix * &first.matrix })
    }

    /// Equal as maps of quotient modules.
    pub fn same_map(&self, other: &ModuleMap) -> bool {
        self.source == other.source && self.target == other.target && self.target.same_endomorphism(&self.matrix, &other.matrix)
    }

    /// Basis (as columns) of `{v ∈ ℤᵐ : F v ∈ im(S)}`, the preimage of zero.
    fn preimage_lattice(&self) -> IntMatrix {
        let m = self.source.ambient;
        let stacked = IntMatrix::hstack(self.target.ambient, &[&self.matrix, &self.target.relations]);
        let k = kernel_basis(&stacked);
        let gens = k.row_block(0..m);
        image_basis(&IntMatrix::hstack(m, &[&gens, &self.source.relations]))
    }

    /// The kernel as a module, with its inclusion.
    pub fn kernel(&self) -> Result<(GaloisLattice, ModuleMap)> {
        let src = &self.source;
        let b = self.preimage_lattice();
        let k = b.cols();
        let relations = solve_matrix(&b, &src.relations).expect("relations lie in the preimage of zero");
        let matrices = src
            .matrices
            .iter()
            .map(|a| solve_matrix(&b, &(a * &b)).expect("preimage of zero is stable"))
            .collect();
        let kernel = GaloisLattice::from_parts_unchecked(&src.gamma, k, relations, matrices);
        let incl = ModuleMap::new(&kernel, src, b)?;
        Ok((kernel, incl))
    }

    pub fn is_injective(&self) -> bool {
        let b = self.preimage_lattice();
        self.source.columns_are_relations(&b)
    }

    pub fn is_surjective(&self) -> bool {
        let t = &self.target;
        let span = IntMatrix::hstack(t.ambient, &[&self.matrix, &t.relations]);
        let s = smith(&span);
        (0..t.ambient).all(|i| {
            let mut e = vec![BigInt::zero(); t.ambient];
            e[i] = BigInt::one();
            solve_with(&s, span.cols(), &e).is_some()
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `f^∨ : N^∨ → M^∨`, for maps between freely presented modules.
    pub fn dual(&self) -> Result<ModuleMap> {
        if !self.source.is_free_presentation() || !self.target.is_free_presentation() {
            return Err(Error::InvalidModule("dual map needs freely presented modules".into()));
        }
        ModuleMap::new(&self.target.dual()?, &self.source.dual()?, self.matrix.transpose())
    }
}

impl Serialize for ModuleMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// Composable maps `M₀ → M₁ → ⋯ → Mₖ`.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub maps: Vec<ModuleMap>,
    /// Read as `0 → M₀ → ⋯ → Mₖ → 0`: first map injective, last surjective.
    pub short: bool,
}

/// Outcome of [`verify_exact`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub exact: bool,
    /// Where the first failure was found.
    pub failure: Option<String>,
}

impl ExactSequence {
    pub fn new(maps: Vec<ModuleMap>, short: bool) -> Self {
        ExactSequence { maps, short }
    }

    pub fn modules(&self) -> Vec<&GaloisLattice> {
        let mut v: Vec<&GaloisLattice> = self.maps.iter().map(ModuleMap::source).collect();
        if let Some(last) = self.maps.last() {
            v.push(last.target());
        }
        v
    }
}

/// Image equals kernel at every interior module; for short sequences also
/// injectivity of the first map and surjectivity of the last.
pub fn verify_exact(seq: &ExactSequence) -> Result<ExactnessReport> {
    for (i, w) in seq.maps.windows(2).enumerate() {
        if w[0].target() != w[1].source() {
            return Err(Error::NonComposable(format!("maps {i} and {}", i + 1)));
        }
    }
    let fail = |s: String| Ok(ExactnessReport { exact: false, failure: Some(s) });
    if seq.short {
        if let Some(f) = seq.maps.first() {
            if !f.is_injective() {
                return fail("first map is not injective".into());
            }
        }
        if let Some(g) = seq.maps.last() {
            if !g.is_surjective() {
                return fail("last map is not surjective".into());
            }
        }
    }
    for (i, w) in seq.maps.windows(2).enumerate() {
        let (f, g) = (&w[0], &w[1]);
        let b = f.target();
        if !g.target().columns_are_relations(&(g.matrix() * f.matrix())) {
            return fail(format!("joint {}: composite is not zero", i + 1));
        }
        let ker = g.preimage_lattice();
        let span = IntMatrix::hstack(b.ambient, &[f.matrix(), &b.relations]);
        let s = smith(&span);
        if ker.columns().iter().any(|c| solve_with(&s, span.cols(), c).is_none()) {
            return fail(format!("joint {}: kernel is larger than image", i + 1));
        }
    }
    Ok(ExactnessReport { exact: true, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn z_mod(n: u64) -> GaloisLattice {
        GaloisLattice::cyclic_torsion(&FiniteGroup::cyclic(1), n)
    }

    fn z() -> GaloisLattice {
        GaloisLattice::trivial_free(&FiniteGroup::cyclic(1), 1)
    }

    fn scalar_map(a: &GaloisLattice, b: &GaloisLattice, c: i64) -> ModuleMap {
        ModuleMap::new(a, b, IntMatrix::scalar(1, c)).unwrap()
    }

    #[test]
    fn kummer_shaped_sequences() {
        let seq = ExactSequence::new(vec![scalar_map(&z(), &z(), 6), scalar_map(&z(), &z_mod(6), 1)], true);
        assert!(verify_exact(&seq).unwrap().exact);
        let bad = ExactSequence::new(vec![scalar_map(&z(), &z(), 6), scalar_map(&z(), &z_mod(4), 1)], true);
        let r = verify_exact(&bad).unwrap();
        assert!(!r.exact);
        assert!(r.failure.unwrap().starts_with("joint 1"));
        let noncomposable = ExactSequence::new(vec![scalar_map(&z(), &z_mod(6), 1), scalar_map(&z(), &z(), 1)], false);
        assert!(matches!(verify_exact(&noncomposable), Err(Error::NonComposable(_))));
    }

    #[test]
    fn invalid_maps_rejected() {
        // ℤ/4 → ℤ/6 by 1 does not respect relations; by 3 it does
        assert!(ModuleMap::new(&z_mod(4), &z_mod(6), IntMatrix::scalar(1, 1)).is_err());
        assert!(ModuleMap::new(&z_mod(4), &z_mod(6), IntMatrix::scalar(1, 3)).is_ok());
        let sign = GaloisLattice::sign_module();
        let triv = GaloisLattice::trivial_free(&FiniteGroup::cyclic(2), 1);
        assert!(ModuleMap::new(&sign, &triv, IntMatrix::from_rows(&[vec![1, 0]], 2)).is_err());
    }

    #[test]
    fn sign_module_structure() {
        let s = GaloisLattice::sign_module();
        assert_eq!(s.free_rank(), 1);
        assert!(s.is_torsion_free());
        assert_eq!(s.character(1), BigInt::from(-1));
        let f = s.to_free().unwrap();
        assert_eq!(f.module.matrix(1), &IntMatrix::scalar(1, -1));
        assert!(f.to.is_isomorphism() && f.from.is_isomorphism());
        let d = s.dual().unwrap();
        assert_eq!(d.matrix(1), &IntMatrix::scalar(1, -1));
        assert!(s.double_dual_iso().unwrap().is_isomorphism());
        assert_eq!(z_mod(6).dual().unwrap_err(), Error::Torsion);
    }

    #[test]
    fn kernels() {
        let f = scalar_map(&z(), &z_mod(5), 1);
        let (k, incl) = f.kernel().unwrap();
        assert_eq!(k.free_rank(), 1);
        assert_eq!(incl.matrix().get(0, 0).abs(), BigInt::from(5));
        assert!(incl.is_injective());
        assert!(!f.is_injective() && f.is_surjective());
    }

    #[test]
    fn bad_actions_rejected() {
        let c2 = FiniteGroup::cyclic(2);
        // an order-3 matrix cannot represent the generator of C₂
        let m = IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]], 2);
        assert!(GaloisLattice::new(&c2, 2, IntMatrix::zeros(2, 0), &[(1, m)]).is_err());
        let c3 = FiniteGroup::cyclic(3);
        let m = IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]], 2);
        let gen = (1..3).find(|&g| c3.element_order(g) == 3).unwrap();
        assert!(GaloisLattice::new(&c3, 2, IntMatrix::zeros(2, 0), &[(gen, m)]).is_ok());
        // swapping coordinates does not preserve the relation (1, 0)
        let rel = IntMatrix::from_columns(2, &[vec![BigInt::one(), BigInt::zero()]]);
        assert!(GaloisLattice::new(&c2, 2, rel, &[(1, IntMatrix::permutation(&[1, 0]))]).is_err());
    }

    #[test]
    fn dual_of_permutation_module_keeps_witness() {
        let r = GaloisLattice::regular(&FiniteGroup::symmetric(3));
        let d = r.dual().unwrap();
        assert_eq!(d.permutation(), r.permutation());
        d.verify_permutation_witness().unwrap();
    }
}
