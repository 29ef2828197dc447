use super::FiniteGroup;

impl FiniteGroup {
    /// Composition factors read off a top-down series: at each step divide
    /// by a largest proper normal subgroup. Factors are sorted by order.
    pub fn composition_factors(&self) -> Vec<FiniteGroup> {
        let mut out = Vec::new();
        top_down(self, &mut out);
        sort_factors(&mut out);
        out
    }

    /// Same multiset from a bottom-up series through minimal normal
    /// subgroups. Kept as an independent cross-check.
    pub fn composition_factors_bottom_up(&self) -> Vec<FiniteGroup> {
        let mut out = Vec::new();
        bottom_up(self, &mut out);
        sort_factors(&mut out);
        out
    }
}

fn top_down(g: &FiniteGroup, out: &mut Vec<FiniteGroup>) {
    if g.order() == 1 {
        return;
    }
    let normals = g.normal_subgroups();
    // sorted by order, so the second-to-last is a largest proper one
    let m = &normals[normals.len() - 2];
    let q = g.quotient(m).expect("normal").group;
    debug_assert!(q.is_simple());
    out.push(q);
    top_down(&m.to_group().0, out);
}

fn bottom_up(g: &FiniteGroup, out: &mut Vec<FiniteGroup>) {
    if g.order() == 1 {
        return;
    }
    let normals = g.normal_subgroups();
    let n = &normals[1];
    if n.is_whole() {
        out.push(g.clone());
        return;
    }
    bottom_up(&n.to_group().0, out);
    bottom_up(&g.quotient(n).expect("normal").group, out);
}

fn sort_factors(v: &mut [FiniteGroup]) {
    v.sort_by_key(|f| (f.order(), f.class_sizes()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    fn orders(v: &[FiniteGroup]) -> Vec<usize> {
        v.iter().map(|f| f.order()).collect()
    }

    #[test]
    fn factor_examples() {
        assert_eq!(orders(&FiniteGroup::cyclic(6).composition_factors()), vec![2, 3]);
        assert_eq!(orders(&FiniteGroup::symmetric(4).composition_factors()), vec![2, 2, 2, 3]);
        let a5 = FiniteGroup::alternating(5).composition_factors();
        assert_eq!(orders(&a5), vec![60]);
        assert!(a5.iter().all(FiniteGroup::is_simple));
        assert!(FiniteGroup::cyclic(1).composition_factors().is_empty());
    }

    #[test]
    fn series_agree() {
        for g in [
            FiniteGroup::symmetric(4),
            FiniteGroup::symmetric(5),
            FiniteGroup::dihedral(6),
            FiniteGroup::quaternion(),
        ] {
            let a = g.composition_factors();
            let b = g.composition_factors_bottom_up();
            assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                assert!(is_isomorphic(x, y));
            }
            assert_eq!(a.iter().map(FiniteGroup::order).product::<usize>(), g.order());
        }
    }
}
