//! Finite groups as dense multiplication tables.
//!
//! Elements are indices `0..order` with the identity at `0`. Every structure
//! built on top (subgroups, homomorphisms, automorphisms) refers to elements
//! by index only; labels exist for display.

mod aut;
pub mod catalog;
mod classes;
mod hom;
mod perm;
mod quotient;
mod search;
mod series;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub use aut::{automorphisms, AutomorphismGroup, AUT_NODE_LIMIT};
pub use hom::{Automorphism, GroupHom};
pub use perm::Perm;
pub use quotient::Quotient;
pub use search::{generating_set, is_isomorphic, SpanningTree};
pub(crate) use search::{search_homs, Budget};
pub use subgroup::{subgroup_core, Subgroup};

/// Default upper bound on the order of any group the library will build.
pub const DEFAULT_CAP: usize = 5040;

/// A finite group given by its multiplication table.
///
/// Cloning is cheap: the table lives behind an `Arc`.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
    element_orders: OnceLock<Vec<usize>>,
    classes: OnceLock<Vec<Vec<usize>>>,
    class_of: OnceLock<Vec<usize>>,
    generators: OnceLock<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of a set of permutations of `0..points`.
    ///
    /// Elements are numbered breadth-first from the identity, multiplying on
    /// the right by the sorted, deduplicated generators.
    pub fn from_permutations(points: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        let mut gens: Vec<Perm> = generators
            .iter()
            .map(|g| Perm::new(g.clone()))
            .collect::<Result<_>>()?;
        for g in &gens {
            if g.degree() != points {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} acts on {} points, expected {points}",
                    g.degree()
                )));
            }
        }
        gens.sort();
        gens.dedup();
        gens.retain(|g| !g.is_identity());

        let identity = Perm::identity(points);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = elements[i].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&a.compose(b)] as u32;
            }
        }
        let labels = elements.iter().map(|p| p.to_string()).collect();
        Ok(Self::from_table_unchecked(table, n, Some(labels)))
    }

    /// Builds a group from an explicit table, verifying the group axioms
    /// exhaustively. Row `i`, column `j` holds the index of `i * j`.
    pub fn from_table(rows: &[Vec<usize>], cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > cap {
            return Err(Error::CapExceeded { cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range in row {i}")));
                }
                table.push(x as u32);
            }
        }
        // Inverses are filled in by the unchecked constructor only after we
        // know every row is a permutation, so check that first.
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                seen[table[i * n + j] as usize] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
            }
        }
        let g = Self::from_table_unchecked(table, n, None);
        g.verify_axioms()?;
        Ok(g)
    }

    /// Internal constructor for tables already known to be valid.
    pub(crate) fn from_table_unchecked(table: Vec<u32>, n: usize, labels: Option<Vec<String>>) -> Self {
        let mut inverses = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverses[i] = j as u32;
                    break;
                }
            }
        }
        FiniteGroup(Arc::new(GroupData {
            order: n,
            table,
            inverses,
            labels,
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            generators: OnceLock::new(),
        }))
    }

    pub(crate) fn from_fn(n: usize, labels: Option<Vec<String>>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = mul(i, j) as u32;
            }
        }
        Self::from_table_unchecked(table, n, labels)
    }

    /// Exhaustive check of identity, inverses and associativity.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable("index 0 is not a two-sided identity".into()));
            }
            let b = self.inv(a);
            if self.mul(a, b) != 0 || self.mul(b, a) != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a] as usize
    }

    /// `x a x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.0.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Row-major copy of the table, one row per element.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.mul(i, j)).collect()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.0.element_orders.get_or_init(|| {
            (0..self.order())
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.element_orders().contains(&n)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.clone(), self.closure(gens))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.clone(), self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.clone(), vec![0])
    }

    pub fn center(&self) -> Subgroup {
        let n = self.order();
        let elements = (0..n)
            .filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect();
        Subgroup::from_sorted_unchecked(self.clone(), elements)
    }

    /// Same table, same object (pointer equality first).
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.order() == other.order() && self.0.table == other.0.table)
    }

    /// `G × H` with `(g, h)` stored at index `g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let labels = match (self.labels(), other.labels()) {
            (Some(a), Some(b)) => Some(
                (0..self.order() * m)
                    .map(|i| format!("({}, {})", a[i / m], b[i % m]))
                    .collect(),
            ),
            _ => None,
        };
        FiniteGroup::from_fn(self.order() * m, labels, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0, "cyclic group of order 0");
        FiniteGroup::from_fn(n, None, |a, b| (a + b) % n)
    }

    pub fn symmetric(n: usize) -> FiniteGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        FiniteGroup::from_permutations(n.max(1), &gens, usize::MAX).expect("symmetric group")
    }

    pub fn alternating(n: usize) -> FiniteGroup {
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        FiniteGroup::from_permutations(n.max(1), &gens, usize::MAX).expect("alternating group")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 2);
        if n == 2 {
            return FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], usize::MAX)
                .expect("Klein four");
        }
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::from_permutations(n, &[rot, refl], usize::MAX).expect("dihedral group")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> FiniteGroup {
        catalog::metacyclic(4, 2, 3, 2).expect("Q8 parameters are valid")
    }

    // cached conjugacy data lives in classes.rs
    pub(crate) fn class_cache(&self) -> (&OnceLock<Vec<Vec<usize>>>, &OnceLock<Vec<usize>>) {
        (&self.0.classes, &self.0.class_of)
    }

    pub(crate) fn generator_cache(&self) -> &OnceLock<Vec<usize>> {
        &self.0.generators
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order()).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for FiniteGroup {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_generators() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        g.verify_axioms().unwrap();
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = FiniteGroup::from_permutations(4, &[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn a5_closure_count() {
        let g = FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], DEFAULT_CAP)
            .unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(FiniteGroup::alternating(5).order(), 60);
    }

    #[test]
    fn cap_is_enforced() {
        let err = FiniteGroup::from_permutations(5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 100)
            .unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 100 });
    }

    #[test]
    fn bad_tables_are_rejected() {
        // not associative: a Latin square with identity that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&rows, DEFAULT_CAP), Err(Error::InvalidTable(_))));
        let no_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(&no_identity, DEFAULT_CAP).is_err());
        let c3 = FiniteGroup::cyclic(3).table_rows();
        assert_eq!(FiniteGroup::from_table(&c3, DEFAULT_CAP).unwrap().order(), 3);
    }

    #[test]
    fn determinism_of_numbering() {
        let a = FiniteGroup::symmetric(4);
        let b = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3], vec![1, 0, 2, 3]], DEFAULT_CAP)
            .unwrap();
        assert_eq!(a.table_rows(), b.table_rows());
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn center_examples() {
        assert_eq!(FiniteGroup::cyclic(6).center().order(), 6);
        assert_eq!(FiniteGroup::symmetric(3).center().order(), 1);
        assert_eq!(FiniteGroup::dihedral(4).center().order(), 2);
    }

    #[test]
    fn cyclicity() {
        assert!(FiniteGroup::cyclic(6).is_cyclic());
        assert!(!FiniteGroup::dihedral(2).is_cyclic());
        assert!(!FiniteGroup::symmetric(3).is_cyclic());
        assert_eq!(FiniteGroup::symmetric(3).element_orders().iter().max(), Some(&3));
    }
}
