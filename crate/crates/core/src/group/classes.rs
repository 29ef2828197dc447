use std::collections::{BTreeSet, HashSet};

use super::{FiniteGroup, Subgroup};

impl FiniteGroup {
    /// Conjugacy classes sorted by `(size, smallest element)`; each class is
    /// sorted. The identity class comes first.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        let (classes, _) = self.class_cache();
        classes.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            let mut out = Vec::new();
            for a in 0..n {
                if seen[a] {
                    continue;
                }
                let mut class: Vec<usize> = Vec::new();
                for x in 0..n {
                    let c = self.conj(x, a);
                    if !seen[c] {
                        seen[c] = true;
                        class.push(c);
                    }
                }
                class.sort_unstable();
                out.push(class);
            }
            out.sort_by_key(|c| (c.len(), c[0]));
            out
        })
    }

    /// Position in [`conjugacy_classes`](Self::conjugacy_classes) of each element.
    pub fn class_index(&self) -> &[usize] {
        let (_, class_of) = self.class_cache();
        class_of.get_or_init(|| {
            let mut idx = vec![0; self.order()];
            for (i, c) in self.conjugacy_classes().iter().enumerate() {
                for &x in c {
                    idx[x] = i;
                }
            }
            idx
        })
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.conjugacy_classes().iter().map(Vec::len).collect()
    }

    /// All normal subgroups, sorted by order and then element list.
    ///
    /// Every normal subgroup is the product of the normal closures of the
    /// classes it contains, so the lattice is the closure of the set of
    /// class normal-closures under products `NM`.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut atoms: Vec<Vec<usize>> = Vec::new();
        for class in self.conjugacy_classes() {
            let ncl = self.closure(class);
            if found.insert(ncl.clone()) {
                atoms.push(ncl);
            }
        }
        let mut frontier: Vec<Vec<usize>> = atoms.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &atoms {
                    let prod = self.normal_product(a, b);
                    if found.insert(prod.clone()) {
                        next.push(prod);
                    }
                }
            }
            frontier = next;
        }
        debug_assert!(found.contains(&(0..n).collect::<Vec<_>>()));
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out.into_iter()
            .map(|els| Subgroup::from_sorted_unchecked(self.clone(), els))
            .collect()
    }

    /// `NM` for normal subgroups given as sorted element lists.
    fn normal_product(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        if b.len() > a.len() {
            return self.normal_product(b, a);
        }
        let mut member = vec![false; self.order()];
        for &x in a {
            member[x] = true;
        }
        if b.iter().all(|&y| member[y]) {
            return a.to_vec();
        }
        let mut set: HashSet<usize> = HashSet::with_capacity(a.len() * 2);
        for &x in a {
            for &y in b {
                set.insert(self.mul(x, y));
            }
        }
        let mut v: Vec<usize> = set.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Only `{1}` and the whole group are normal, and the group is nontrivial.
    pub fn is_simple(&self) -> bool {
        self.order() > 1 && self.normal_subgroups().len() == 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes_examples() {
        assert_eq!(FiniteGroup::cyclic(1).class_sizes(), vec![1]);
        assert_eq!(FiniteGroup::symmetric(3).class_sizes(), vec![1, 2, 3]);
        let mut a5 = FiniteGroup::alternating(5).class_sizes();
        assert_eq!(a5, vec![1, 12, 12, 15, 20]);
        a5.sort_unstable();
        assert_eq!(a5.iter().sum::<usize>(), 60);
        assert_eq!(FiniteGroup::alternating(5).conjugacy_classes()[0], vec![0]);
    }

    #[test]
    fn normal_subgroup_examples() {
        let sizes = |g: &FiniteGroup| g.normal_subgroups().iter().map(|h| h.order()).collect::<Vec<_>>();
        assert_eq!(sizes(&FiniteGroup::alternating(5)), vec![1, 60]);
        assert_eq!(sizes(&FiniteGroup::symmetric(4)), vec![1, 4, 12, 24]);
        assert_eq!(sizes(&FiniteGroup::cyclic(6)), vec![1, 2, 3, 6]);
        for h in FiniteGroup::symmetric(4).normal_subgroups() {
            assert!(h.is_normal());
        }
        assert!(FiniteGroup::alternating(5).is_simple());
        assert!(!FiniteGroup::cyclic(1).is_simple());
    }
}
