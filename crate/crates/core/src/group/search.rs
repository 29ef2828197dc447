//! Generator-image backtracking shared by automorphism, isomorphism and
//! section searches.

use std::collections::VecDeque;

use super::FiniteGroup;
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// Breadth-first spanning tree of the Cayley graph of `⟨gens⟩`.
///
/// Every reached element `x ≠ 1` is recorded as `parent(x) · gens[step(x)]`.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    source: FiniteGroup,
    gens: Vec<usize>,
    order: Vec<usize>,
    parent: Vec<usize>,
    step: Vec<usize>,
}

impl SpanningTree {
    pub fn new(group: &FiniteGroup, gens: &[usize]) -> Self {
        let n = group.order();
        let mut parent = vec![UNSET; n];
        let mut step = vec![UNSET; n];
        parent[0] = 0;
        let mut order = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (i, &g) in gens.iter().enumerate() {
                let y = group.mul(x, g);
                if parent[y] == UNSET {
                    parent[y] = x;
                    step[y] = i;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        SpanningTree { source: group.clone(), gens: gens.to_vec(), order, parent, step }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Elements reached, in breadth-first order (identity first).
    pub fn elements(&self) -> &[usize] {
        &self.order
    }

    pub fn spans(&self) -> bool {
        self.order.len() == self.parent.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.parent[x] != UNSET
    }

    /// `(parent, generator position)` for a non-identity reached element.
    pub fn edge(&self, x: usize) -> Option<(usize, usize)> {
        (x != 0 && self.contains(x)).then(|| (self.parent[x], self.step[x]))
    }

    /// Extends generator images to a homomorphism on the spanned subgroup,
    /// with `mul` the target multiplication. Elements outside the subgroup
    /// get `None`. Returns `None` if some relation is violated.
    pub fn extend_with<T, F>(&self, identity: T, images: &[T], mul: F) -> Option<Vec<Option<T>>>
    where
        T: Clone + PartialEq,
        F: Fn(&T, &T) -> T,
    {
        let mut out: Vec<Option<T>> = vec![None; self.parent.len()];
        out[0] = Some(identity);
        for &x in &self.order[1..] {
            let p = out[self.parent[x]].as_ref().expect("parent visited first");
            out[x] = Some(mul(p, &images[self.step[x]]));
        }
        for &x in &self.order {
            let ix = out[x].as_ref().expect("reached");
            for (i, &g) in self.gens.iter().enumerate() {
                let y = self.source.mul(x, g);
                if out[y].as_ref() != Some(&mul(ix, &images[i])) {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Images on the spanned subgroup (`usize::MAX` outside it), or `None`
    /// when the generator images violate a relation.
    pub(crate) fn extend_partial(&self, target: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
        let mut out = vec![UNSET; self.parent.len()];
        out[0] = 0;
        for &x in &self.order[1..] {
            out[x] = target.mul(out[self.parent[x]], images[self.step[x]]);
        }
        for &x in &self.order {
            for (i, &g) in self.gens.iter().enumerate() {
                let y = self.source.mul(x, g);
                if out[y] != target.mul(out[x], images[i]) {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Full homomorphism `source → target` determined by generator images.
    pub fn extend(&self, target: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
        if !self.spans() {
            return None;
        }
        self.extend_partial(target, images)
    }
}

/// Deterministic, greedily small generating set.
///
/// Each step adds the element that enlarges the generated subgroup the most,
/// preferring elements whose (order, class size) signature is rare, then the
/// smallest index. Cached on the group.
pub fn generating_set(group: &FiniteGroup) -> Vec<usize> {
    group
        .generator_cache()
        .get_or_init(|| compute_generating_set(group))
        .clone()
}

fn compute_generating_set(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    if n == 1 {
        return Vec::new();
    }
    let rarity = signature_counts(group);
    let mut gens: Vec<usize> = Vec::new();
    let mut current = vec![0usize];
    while current.len() < n {
        let mut member = vec![false; n];
        for &x in &current {
            member[x] = true;
        }
        let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
        let mut tried = vec![false; n];
        for x in 1..n {
            if member[x] || tried[x] {
                continue;
            }
            // x and its generating powers give the same subgroup
            let ox = group.element_order(x);
            let mut y = x;
            for k in 1..ox {
                if gcd(k, ox) == 1 {
                    tried[y] = true;
                }
                y = group.mul(y, x);
            }
            let mut trial = gens.clone();
            trial.push(x);
            let size = group.closure(&trial).len();
            let key = (size, usize::MAX - rarity[x], usize::MAX - x);
            let better = match &best {
                None => true,
                Some((s, r, i, _)) => key > (*s, usize::MAX - *r, usize::MAX - *i),
            };
            if better {
                best = Some((size, rarity[x], x, trial));
            }
            if size == n && rarity[x] == 1 {
                break;
            }
        }
        let (_, _, x, _) = best.expect("a non-member exists");
        gens.push(x);
        current = group.closure(&gens);
    }
    gens
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// For each element, how many elements share its (order, class size).
fn signature_counts(group: &FiniteGroup) -> Vec<usize> {
    let sig = signatures(group);
    let mut counts = std::collections::HashMap::new();
    for s in &sig {
        *counts.entry(*s).or_insert(0usize) += 1;
    }
    sig.iter().map(|s| counts[s]).collect()
}

/// `(element order, conjugacy class size)` for every element.
pub(crate) fn signatures(group: &FiniteGroup) -> Vec<(usize, usize)> {
    let classes = group.conjugacy_classes();
    let class_of = group.class_index();
    group
        .elements()
        .map(|x| (group.element_order(x), classes[class_of[x]].len()))
        .collect()
}

/// Node counter for bounded searches.
#[derive(Debug)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Enumerates homomorphisms `source → target` that send `gens[i]` into
/// `candidates[i]`, in lexicographic order of the candidate lists. `visit`
/// receives each full image array and returns `false` to stop.
pub(crate) fn search_homs(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    budget: &mut Budget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    let trees: Vec<SpanningTree> = (1..=gens.len())
        .map(|k| SpanningTree::new(source, &gens[..k]))
        .collect();
    if gens.is_empty() {
        if source.order() == 1 {
            visit(&[0]);
        }
        return Ok(());
    }
    let mut chosen = Vec::with_capacity(gens.len());
    recurse(target, &trees, candidates, &mut chosen, budget, &mut visit)?;
    Ok(())
}

fn recurse(
    target: &FiniteGroup,
    trees: &[SpanningTree],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Result<bool> {
    let level = chosen.len();
    for &c in &candidates[level] {
        budget.tick()?;
        chosen.push(c);
        if let Some(images) = trees[level].extend_partial(target, chosen) {
            if level + 1 == trees.len() {
                if !visit(&images) {
                    chosen.pop();
                    return Ok(false);
                }
            } else if !recurse(target, trees, candidates, chosen, budget, visit)? {
                chosen.pop();
                return Ok(false);
            }
        }
        chosen.pop();
    }
    Ok(true)
}

/// Decides whether two groups are isomorphic.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b, u64::MAX).ok().flatten().is_some()
}

/// An isomorphism `a → b` as an image array, if one exists.
pub(crate) fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup, limit: u64) -> Result<Option<Vec<usize>>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut ha = sa.clone();
    let mut hb = sb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(None);
    }
    let gens = generating_set(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| b.elements().filter(|&y| sb[y] == sa[g]).collect())
        .collect();
    let mut found = None;
    let mut budget = Budget::new(limit);
    search_homs(a, b, &gens, &candidates, &mut budget, |images| {
        let mut seen = vec![false; images.len()];
        for &y in images {
            seen[y] = true;
        }
        if seen.iter().all(|&s| s) {
            found = Some(images.to_vec());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generating_sets_generate() {
        for g in [
            FiniteGroup::symmetric(4),
            FiniteGroup::alternating(5),
            FiniteGroup::cyclic(12),
            FiniteGroup::dihedral(2).direct_product(&FiniteGroup::cyclic(2)),
        ] {
            let gens = generating_set(&g);
            assert_eq!(g.closure(&gens).len(), g.order());
        }
        assert_eq!(generating_set(&FiniteGroup::cyclic(12)).len(), 1);
        assert_eq!(generating_set(&FiniteGroup::symmetric(5)).len(), 2);
    }

    #[test]
    fn isomorphism_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let d3 = FiniteGroup::dihedral(3);
        assert!(is_isomorphic(&s3, &d3));
        assert!(!is_isomorphic(&s3, &FiniteGroup::cyclic(6)));
        let c6 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        assert!(is_isomorphic(&c6, &FiniteGroup::cyclic(6)));
        assert!(!is_isomorphic(&FiniteGroup::quaternion(), &FiniteGroup::dihedral(4)));
    }
}
