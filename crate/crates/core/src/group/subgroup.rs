use std::fmt;

use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// A subgroup, stored as the sorted list of its element indices in `parent`.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates closure under multiplication; `elements` may be in any order.
    pub fn new(parent: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        if let Some(&x) = elements.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::InvalidSubgroup(format!("element {x} out of range")));
        }
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x] = true;
        }
        for &a in &elements {
            for &b in &elements {
                if !member[parent.mul(a, b)] {
                    return Err(Error::InvalidSubgroup(format!("not closed: {a}·{b}")));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(parent.clone(), elements))
    }

    pub(crate) fn from_sorted_unchecked(parent: FiniteGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { parent, elements }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent.order()];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        let member = self.membership();
        // Conjugating by generators of G is enough.
        let gens = super::generating_set(g);
        gens.iter()
            .all(|&x| self.elements.iter().all(|&h| member[g.conj(x, h)]))
    }

    /// `x H x⁻¹`
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let g = &self.parent;
        let mut els: Vec<usize> = self.elements.iter().map(|&h| g.conj(x, h)).collect();
        els.sort_unstable();
        Subgroup::from_sorted_unchecked(g.clone(), els)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted_unchecked(self.parent.clone(), els)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.elements.clone();
        gens.extend_from_slice(&other.elements);
        self.parent.subgroup_generated(&gens)
    }

    /// Largest normal subgroup of the parent contained in `self`: the
    /// intersection of all conjugates.
    pub fn core(&self) -> Subgroup {
        let g = &self.parent;
        let mut current = self.clone();
        for x in g.elements() {
            if current.is_trivial() {
                break;
            }
            current = current.intersection(&self.conjugate(x));
        }
        current
    }

    /// The subgroup as a group in its own right, with elements renumbered in
    /// increasing parent order, together with the inclusion map.
    pub fn to_group(&self) -> (FiniteGroup, GroupHom) {
        let g = &self.parent;
        let n = self.order();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            pos[x] = i;
        }
        let labels = g
            .labels()
            .map(|l| self.elements.iter().map(|&x| l[x].clone()).collect());
        let els = &self.elements;
        let h = FiniteGroup::from_fn(n, labels, |i, j| pos[g.mul(els[i], els[j])]);
        let incl = GroupHom::new_unchecked(h.clone(), g.clone(), els.clone());
        (h, incl)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.parent.same_as(&other.parent)
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

/// Largest normal subgroup of `g` contained in `h`.
pub fn subgroup_core(h: &Subgroup) -> Subgroup {
    h.core()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transposition_subgroup(s3: &FiniteGroup) -> Subgroup {
        let t = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        s3.subgroup_generated(&[t])
    }

    #[test]
    fn core_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(transposition_subgroup(&s3).core().is_trivial());
        assert_eq!(s3.whole().core().order(), 6);
        let d4 = FiniteGroup::dihedral(4);
        let z = d4.center();
        assert_eq!(z.core(), z);
    }

    #[test]
    fn invalid_subgroups() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(Subgroup::new(&s3, vec![1]).is_err());
        let t = transposition_subgroup(&s3);
        assert!(Subgroup::new(&s3, t.elements().to_vec()).is_ok());
        assert!(!t.is_normal());
        let u = (0..6).find(|&x| s3.element_order(x) == 2 && !t.contains(x)).unwrap();
        let mut bad = t.elements().to_vec();
        bad.push(u);
        assert!(Subgroup::new(&s3, bad).is_err());
    }

    #[test]
    fn to_group_keeps_structure() {
        let s4 = FiniteGroup::symmetric(4);
        let a4 = s4.subgroup_generated(
            &(0..24).filter(|&x| s4.element_order(x) == 3).collect::<Vec<_>>(),
        );
        assert_eq!(a4.order(), 12);
        let (g, incl) = a4.to_group();
        g.verify_axioms().unwrap();
        assert!(incl.is_hom());
    }
}
