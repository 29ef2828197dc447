use std::fmt;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism between finite groups, stored as its full image array.
#[derive(Clone)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    /// Checks the homomorphism law exhaustively.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if images.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidHom("image out of range".into()));
        }
        let h = Self::new_unchecked(source.clone(), target.clone(), images);
        if !h.is_hom() {
            return Err(Error::InvalidHom("images[xy] != images[x]·images[y]".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: FiniteGroup, target: FiniteGroup, images: Vec<usize>) -> Self {
        GroupHom { source, target, images }
    }

    /// Extends an assignment on generators, failing if it does not define a
    /// homomorphism.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Result<Self> {
        let tree = super::SpanningTree::new(source, gens);
        if !tree.spans() {
            return Err(Error::InvalidHom("elements do not generate the source".into()));
        }
        tree.extend(target, images)
            .map(|im| Self::new_unchecked(source.clone(), target.clone(), im))
            .ok_or_else(|| Error::InvalidHom("generator images violate a relation".into()))
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_hom(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.images[0] == 0
            && s.elements().all(|x| {
                s.elements()
                    .all(|y| self.images[s.mul(x, y)] == t.mul(self.images[x], self.images[y]))
            })
    }

    pub fn kernel(&self) -> Subgroup {
        let els = self.source.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_sorted_unchecked(self.source.clone(), els)
    }

    pub fn image(&self) -> Subgroup {
        let mut els = self.images.clone();
        els.sort_unstable();
        els.dedup();
        Subgroup::from_sorted_unchecked(self.target.clone(), els)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    /// `self ∘ inner`
    pub fn after(&self, inner: &GroupHom) -> Result<GroupHom> {
        if !inner.target.same_as(&self.source) {
            return Err(Error::InvalidHom("composition of incompatible maps".into()));
        }
        let images = inner.images.iter().map(|&y| self.images[y]).collect();
        Ok(GroupHom::new_unchecked(inner.source.clone(), self.target.clone(), images))
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom{:?}", self.images)
    }
}

/// A bijective endomorphism. Composition follows functions: `(a∘b)(x) = a(b(x))`.
#[derive(Clone)]
pub struct Automorphism {
    group: FiniteGroup,
    images: Vec<usize>,
}

impl Automorphism {
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let h = GroupHom::new(group, group, images)?;
        if !h.is_injective() {
            return Err(Error::InvalidHom("endomorphism is not bijective".into()));
        }
        Ok(Self::new_unchecked(group.clone(), h.images))
    }

    pub(crate) fn new_unchecked(group: FiniteGroup, images: Vec<usize>) -> Self {
        Automorphism { group, images }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Self::new_unchecked(group.clone(), group.elements().collect())
    }

    /// `y ↦ x y x⁻¹`
    pub fn inner(group: &FiniteGroup, x: usize) -> Self {
        let images = group.elements().map(|y| group.conj(x, y)).collect();
        Self::new_unchecked(group.clone(), images)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Automorphism::new_unchecked(self.group.clone(), images)
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Automorphism::new_unchecked(self.group.clone(), images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Some `x` with `self = conj(x)`, if the automorphism is inner.
    pub fn inner_witness(&self) -> Option<usize> {
        let g = &self.group;
        let gens = super::generating_set(g);
        g.elements()
            .find(|&x| gens.iter().all(|&s| g.conj(x, s) == self.images[s]))
    }

    pub fn is_inner(&self) -> bool {
        self.inner_witness().is_some()
    }

    pub fn as_hom(&self) -> GroupHom {
        GroupHom::new_unchecked(self.group.clone(), self.group.clone(), self.images.clone())
    }

    /// True iff the automorphism maps `h` onto itself.
    pub fn preserves(&self, h: &Subgroup) -> bool {
        h.elements().iter().all(|&x| h.contains(self.images[x]))
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.group.same_as(&other.group)
    }
}

impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism{:?}", self.images)
    }
}
