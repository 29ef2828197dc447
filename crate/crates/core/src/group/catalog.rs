//! Constructions of small groups and a complete list of groups up to a
//! modest order.
//!
//! [`small_groups`] builds candidates from cyclic groups, direct products,
//! split extensions `A ⋊ C_n` and metacyclic presentations, then removes
//! isomorphic duplicates. For every order up to 24 the result has exactly
//! one representative per isomorphism class; the unit tests compare the
//! counts with the classical enumeration.

use std::collections::HashMap;

use super::aut::{automorphisms, AUT_NODE_LIMIT};
use super::{is_isomorphic, Automorphism, FiniteGroup};
use crate::error::{Error, Result};

/// Number of groups of order `n` for `n = 0..=24` (index 0 unused).
pub const GROUP_COUNTS: [usize; 25] = [
    0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
];

/// `⟨a, b | aᵐ = 1, bⁿ = aˢ, b a b⁻¹ = aʳ⟩` of order `m·n`, with `aⁱbʲ`
/// stored at index `i + m·j`.
pub fn metacyclic(m: usize, n: usize, r: usize, s: usize) -> Result<FiniteGroup> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidTable("metacyclic parameters must be positive".into()));
    }
    let r = r % m;
    let s = s % m;
    if m > 1 && (pow_mod(r, n, m) != 1 % m || !(s * (r + m - 1)).is_multiple_of(m) || gcd(r, m) != 1) {
        return Err(Error::InvalidTable(format!("inconsistent metacyclic data ({m}, {n}, {r}, {s})")));
    }
    let rpow: Vec<usize> = (0..n).map(|j| pow_mod(r, j, m)).collect();
    let g = FiniteGroup::from_fn(m * n, None, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let mut a = (i + k * rpow[j]) % m;
        let mut b = j + l;
        if b >= n {
            b -= n;
            a = (a + s) % m;
        }
        a + m * b
    });
    g.verify_axioms()?;
    Ok(g)
}

/// `A ⋊ Cₙ` where the generator of `Cₙ` acts by `phi`; `(a, j)` is stored at
/// index `a + |A|·j`.
pub fn semidirect_cyclic(a: &FiniteGroup, n: usize, phi: &Automorphism) -> Result<FiniteGroup> {
    let k = a.order();
    let mut powers = vec![Automorphism::identity(a)];
    for j in 1..=n {
        powers.push(phi.compose(&powers[j - 1]));
    }
    if !powers[n].is_identity() {
        return Err(Error::InvalidHom("acting automorphism has order not dividing n".into()));
    }
    Ok(FiniteGroup::from_fn(k * n, None, |x, y| {
        let (a1, j1) = (x % k, x / k);
        let (a2, j2) = (y % k, y / k);
        a.mul(a1, powers[j1].apply(a2)) + k * ((j1 + j2) % n)
    }))
}

/// One representative of every isomorphism class of groups of order
/// `1..=max_order`, grouped by order.
pub fn small_groups(max_order: usize) -> Vec<Vec<FiniteGroup>> {
    let mut by_order: Vec<Vec<FiniteGroup>> = vec![Vec::new(); max_order + 1];
    for n in 1..=max_order {
        let mut found: Vec<FiniteGroup> = Vec::new();
        let mut keys: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
        let mut offer = |g: FiniteGroup, found: &mut Vec<FiniteGroup>| {
            debug_assert_eq!(g.order(), n);
            let key = invariant_key(&g);
            let bucket = keys.entry(key).or_default();
            if bucket.iter().any(|&i| is_isomorphic(&found[i], &g)) {
                return;
            }
            bucket.push(found.len());
            found.push(g);
        };
        offer(FiniteGroup::cyclic(n), &mut found);
        for d in 2..n {
            if n % d != 0 {
                continue;
            }
            for a in by_order[d].clone() {
                for b in by_order[n / d].clone() {
                    offer(a.direct_product(&b), &mut found);
                }
            }
        }
        for m in 1..=n {
            if n % m != 0 {
                continue;
            }
            let k = n / m;
            for r in 0..m.max(1) {
                for s in 0..m.max(1) {
                    if let Ok(g) = metacyclic(m, k, r, s) {
                        offer(g, &mut found);
                    }
                }
            }
        }
        for k in 2..=n {
            if n % k != 0 || n / k < 2 {
                continue;
            }
            for a in by_order[n / k].clone() {
                let autos = automorphisms(&a, AUT_NODE_LIMIT).expect("small automorphism group");
                for phi in &autos {
                    if let Ok(g) = semidirect_cyclic(&a, k, phi) {
                        offer(g, &mut found);
                    }
                }
            }
        }
        by_order[n] = found;
    }
    by_order
}

fn invariant_key(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = g
        .elements()
        .map(|x| (g.element_order(x), g.conjugacy_classes()[g.class_index()[x]].len()))
        .collect();
    v.sort_unstable();
    v
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Short name for groups that have an obvious one.
pub fn describe(g: &FiniteGroup) -> String {
    let n = g.order();
    if g.is_cyclic() {
        return format!("C{n}");
    }
    if g.is_abelian() {
        return format!("abelian of order {n}");
    }
    if n == 60 && g.is_simple() {
        return "A5".to_string();
    }
    format!("group of order {n}")
}
