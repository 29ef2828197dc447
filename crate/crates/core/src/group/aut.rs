use std::collections::HashMap;

use super::search::{search_homs, signatures, Budget};
use super::{generating_set, Automorphism, FiniteGroup, GroupHom, Quotient, Subgroup};
use crate::error::{Error, Result};
use crate::Limits;

/// Default node limit for automorphism and section searches.
pub const AUT_NODE_LIMIT: u64 = 10_000_000;

/// Every automorphism of `g`, sorted by image array (identity first).
///
/// Backtracks over images of a small generating set; candidate images must
/// match the generator's element order and conjugacy-class size.
pub fn automorphisms(g: &FiniteGroup, node_limit: u64) -> Result<Vec<Automorphism>> {
    let gens = generating_set(g);
    let sig = signatures(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| sig[y] == sig[s]).collect())
        .collect();
    let mut out = Vec::new();
    let mut budget = Budget::new(node_limit);
    search_homs(g, g, &gens, &candidates, &mut budget, |images| {
        let mut seen = vec![false; images.len()];
        let mut bijective = true;
        for &y in images {
            if seen[y] {
                bijective = false;
                break;
            }
            seen[y] = true;
        }
        if bijective {
            out.push(images.to_vec());
        }
        true
    })?;
    out.sort();
    Ok(out
        .into_iter()
        .map(|images| Automorphism::new_unchecked(g.clone(), images))
        .collect())
}

/// `Aut(G)` as a finite group, with `Inn(G)` and `Out(G) = Aut(G)/Inn(G)`.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub base: FiniteGroup,
    /// Table group on indices into `automorphisms`.
    pub group: FiniteGroup,
    pub automorphisms: Vec<Automorphism>,
    /// `x ↦ (y ↦ x y x⁻¹)`, a homomorphism `G → Aut(G)`.
    pub conjugation: GroupHom,
    pub inner: Subgroup,
    pub out: Quotient,
    gens: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
}

impl AutomorphismGroup {
    pub fn compute(g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let autos = automorphisms(g, limits.node_limit)?;
        let m = autos.len();
        if m > limits.group_cap {
            return Err(Error::CapExceeded { cap: limits.group_cap });
        }
        let gens = generating_set(g);
        let key = |images: &[usize]| gens.iter().map(|&s| images[s]).collect::<Vec<_>>();
        let index: HashMap<Vec<usize>, usize> =
            autos.iter().enumerate().map(|(i, a)| (key(a.images()), i)).collect();
        let aut = FiniteGroup::from_fn(m, None, |i, j| {
            let (a, b) = (&autos[i], &autos[j]);
            let k: Vec<usize> = gens.iter().map(|&s| a.apply(b.apply(s))).collect();
            index[&k]
        });
        let conj_images: Vec<usize> = g
            .elements()
            .map(|x| index[&gens.iter().map(|&s| g.conj(x, s)).collect::<Vec<_>>()])
            .collect();
        let conjugation = GroupHom::new_unchecked(g.clone(), aut.clone(), conj_images);
        let inner = conjugation.image();
        let out = aut.quotient(&inner)?;
        Ok(AutomorphismGroup {
            base: g.clone(),
            group: aut,
            automorphisms: autos,
            conjugation,
            inner,
            out,
            gens,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn out_order(&self) -> usize {
        self.out.group.order()
    }

    /// Index of an automorphism of the base group in [`group`](Self::group).
    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        let k: Vec<usize> = self.gens.iter().map(|&s| a.apply(s)).collect();
        self.index.get(&k).copied()
    }

    /// The class in `Out(G)` of an automorphism.
    pub fn outer_class(&self, a: &Automorphism) -> Option<usize> {
        self.index_of(a).map(|i| self.out.projection.apply(i))
    }
}

impl FiniteGroup {
    pub fn automorphism_group(&self) -> Result<AutomorphismGroup> {
        AutomorphismGroup::compute(self, &Limits::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_automorphism_groups() {
        assert_eq!(automorphisms(&FiniteGroup::cyclic(5), AUT_NODE_LIMIT).unwrap().len(), 4);
        assert_eq!(automorphisms(&FiniteGroup::cyclic(8), AUT_NODE_LIMIT).unwrap().len(), 4);
        let v4 = FiniteGroup::dihedral(2);
        assert_eq!(automorphisms(&v4, AUT_NODE_LIMIT).unwrap().len(), 6);
        let autos = automorphisms(&FiniteGroup::symmetric(3), AUT_NODE_LIMIT).unwrap();
        assert!(autos[0].is_identity());
    }

    #[test]
    fn a5_and_s5() {
        let a = FiniteGroup::alternating(5).automorphism_group().unwrap();
        assert_eq!(a.order(), 120);
        assert_eq!(a.out_order(), 2);
        assert_eq!(a.inner.order(), 60);
        assert!(a.inner.is_normal());
        a.group.verify_axioms().unwrap();
        let s = FiniteGroup::symmetric(5).automorphism_group().unwrap();
        assert_eq!(s.out_order(), 1);
    }

    #[test]
    fn budget_is_reported() {
        let err = automorphisms(&FiniteGroup::symmetric(4), 3).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 3 });
    }
}
