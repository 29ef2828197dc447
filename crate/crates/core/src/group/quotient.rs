use super::{FiniteGroup, GroupHom, Subgroup};
use crate::error::{Error, Result};

/// `G/N` together with the projection and a representative per coset.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    /// Smallest element of each coset, indexed by quotient element.
    pub representatives: Vec<usize>,
}

impl FiniteGroup {
    /// Coset group `G/N`. Cosets are numbered in order of their smallest
    /// element, so the identity coset is `0`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        if !normal.parent().same_as(self) {
            return Err(Error::InvalidSubgroup("subgroup of a different group".into()));
        }
        if !normal.is_normal() {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &h in normal.elements() {
                coset[self.mul(x, h)] = id;
            }
        }
        let m = reps.len();
        let labels = self.labels().map(|l| {
            reps.iter().map(|&r| format!("{}N", l[r])).collect::<Vec<_>>()
        });
        let q = FiniteGroup::from_fn(m, labels, |i, j| coset[self.mul(reps[i], reps[j])]);
        let projection = GroupHom::new_unchecked(self.clone(), q.clone(), coset);
        Ok(Quotient { group: q, projection, representatives: reps })
    }
}
