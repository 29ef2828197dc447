//! Slow reference implementations written directly from the definitions.
//! They share no search code with the main modules and exist to
//! cross-check them in tests.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::extension::GroupExtension;
use crate::group::FiniteGroup;
use crate::numfield::{NfElement, Place, PolyQ, Q};
use crate::outer::LiftedAction;

type Bits = u128;

fn bits_of(elems: impl IntoIterator<Item = usize>) -> Bits {
    elems.into_iter().fold(0, |acc, x| acc | (1 << x))
}

fn members(b: Bits) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| b >> i & 1 == 1)
}

/// Closure of a set under multiplication (finite, so a subgroup).
fn close(g: &FiniteGroup, start: Bits) -> Bits {
    let mut set = start | 1 << g.identity();
    loop {
        let mut next = set;
        for a in members(set) {
            for b in members(set) {
                next |= 1 << g.mul(a, b);
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Every subgroup, as sorted element lists in increasing bitset order.
/// Joins of cyclic subgroups until nothing new appears. Only for `|G| ≤ 128`.
pub fn subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    assert!(g.order() <= 128);
    let cyclic: BTreeSet<Bits> = g.elements().map(|x| close(g, 1 << x)).collect();
    let mut all: BTreeSet<Bits> = cyclic.clone();
    let mut queue: VecDeque<Bits> = all.iter().copied().collect();
    while let Some(h) = queue.pop_front() {
        for &c in &cyclic {
            if c & !h == 0 {
                continue;
            }
            let j = close(g, h | c);
            if all.insert(j) {
                queue.push_back(j);
            }
        }
    }
    all.into_iter().map(|b| members(b).collect()).collect()
}

fn is_normal_bits(g: &FiniteGroup, h: Bits) -> bool {
    members(h).all(|x| g.elements().all(|a| h >> g.mul(g.mul(a, x), g.inv(a)) & 1 == 1))
}

/// Subgroups fixed by every conjugation.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    subgroups(g).into_iter().filter(|h| is_normal_bits(g, bits_of(h.iter().copied()))).collect()
}

/// Shortest length of a chain `1 = G₀ < G₁ < … < G_n = G` of normal
/// subgroups of `G` with every `G_{i+1}/G_i` cyclic, or `None`.
pub fn supersolvable_length(g: &FiniteGroup) -> Option<usize> {
    let normal: Vec<Bits> = normal_subgroups(g).iter().map(|h| bits_of(h.iter().copied())).collect();
    let top = bits_of(g.elements());
    let bottom: Bits = 1 << g.identity();
    let mut queue = VecDeque::from([(bottom, 0usize)]);
    let mut seen: HashSet<Bits> = HashSet::from([bottom]);
    while let Some((n, k)) = queue.pop_front() {
        if n == top {
            return Some(k);
        }
        for &m in &normal {
            if m & n != n || m == n || seen.contains(&m) {
                continue;
            }
            // M/N is cyclic iff one element of M generates it over N
            if members(m).any(|x| close(g, n | 1 << x) == m) {
                seen.insert(m);
                queue.push_back((m, k + 1));
            }
        }
    }
    None
}

/// Number of classes of maps `σ: Γ → G` with
/// `σ(γδ) = σ(γ)·γ(σ(δ))`, modulo `σ ~ (γ ↦ g⁻¹σ(γ)γ(g))`, by running over
/// every map `Γ → G`. Returns `(classes, cocycles)`.
pub fn h1_count(action: &LiftedAction) -> (usize, usize) {
    let gamma = action.gamma();
    let g = action.target();
    let n = gamma.order();
    let mut cocycles: Vec<Vec<usize>> = Vec::new();
    let mut values = vec![0usize; n];
    loop {
        let ok = gamma.elements().all(|a| {
            gamma.elements().all(|b| {
                values[gamma.mul(a, b)] == g.mul(values[a], action.act(a, values[b]))
            })
        });
        if ok {
            cocycles.push(values.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return (count_classes(action, &cocycles), cocycles.len());
            }
            values[i] += 1;
            if values[i] < g.order() {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

fn count_classes(action: &LiftedAction, cocycles: &[Vec<usize>]) -> usize {
    let g = action.target();
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        cocycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..cocycles.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, c) in cocycles.iter().enumerate() {
        for h in g.elements() {
            let moved: Vec<usize> = action
                .gamma()
                .elements()
                .map(|a| g.mul(g.mul(g.inv(h), c[a]), action.act(a, h)))
                .collect();
            let j = index[&moved];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    (0..cocycles.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Every section `s: Γ → E` of the projection that is a homomorphism, as
/// image lists, by running over all choices of one element per fiber.
pub fn splittings(ext: &GroupExtension) -> Vec<Vec<usize>> {
    let gamma = ext.gamma();
    let e = ext.total();
    let fibers: Vec<Vec<usize>> = gamma.elements().map(|x| ext.fiber(x)).collect();
    let mut choice = vec![0usize; fibers.len()];
    let mut out = Vec::new();
    loop {
        let s: Vec<usize> = choice.iter().zip(&fibers).map(|(&c, f)| f[c]).collect();
        if gamma.elements().all(|a| gamma.elements().all(|b| s[gamma.mul(a, b)] == e.mul(s[a], s[b]))) {
            out.push(s);
        }
        let mut i = 0;
        loop {
            if i == fibers.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < fibers[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Whether `z² = a x² + b y²` has a nonzero solution over `ℚ_v`, decided by
/// looking for a primitive solution modulo `p³` (odd `p`) or `2⁶` after
/// removing square factors. With `v_p(a), v_p(b) ≤ 1` such a solution lifts
/// by Hensel's lemma, and any `p`-adic solution reduces to one.
pub fn locally_solvable(a: i64, b: i64, v: Place) -> bool {
    assert!(a != 0 && b != 0);
    let p = match v {
        Place::Infinity => return a > 0 || b > 0,
        Place::Prime(p) => p as i64,
    };
    let strip = |mut x: i64| {
        while x % (p * p) == 0 {
            x /= p * p;
        }
        x
    };
    let (a, b) = (strip(a), strip(b));
    let m = if p == 2 { 64 } else { p * p * p };
    let r = |x: i64| x.rem_euclid(m);
    let unit = |x: i64| x % p != 0;
    let squares: HashSet<i64> = (0..m).map(|t| r(t * t)).collect();
    // a coordinate that is a unit can be scaled to 1
    // x = 1: z² − b y² = a
    if (0..m).any(|y| squares.contains(&r(a + b * y * y))) {
        return true;
    }
    // y = 1: z² − a x² = b
    if (0..m).any(|x| squares.contains(&r(b + a * x * x))) {
        return true;
    }
    // z = 1 and x, y nonunits: a x² + b y² = 1
    let by2: HashSet<i64> = (0..m).filter(|&y| !unit(y)).map(|y| r(b * y * y)).collect();
    (0..m).filter(|&x| !unit(x)).any(|x| by2.contains(&r(1 - a * x * x)))
}

/// Characteristic polynomial of multiplication by `z` on the basis
/// `1, x, …, x^{d−1}`, by the Faddeev–LeVerrier recursion.
pub fn char_poly_faddeev(z: &NfElement) -> PolyQ {
    let field = z.field();
    let d = field.degree();
    // column j is z · x^j
    let mut a = vec![vec![Q::zero(); d]; d];
    let mut basis = field.from_rational(Q::one());
    for j in 0..d {
        let col = z.mul(&basis);
        for (i, row) in a.iter_mut().enumerate() {
            row[j] = col.repr().coeff(i);
        }
        basis = basis.mul(&field.generator());
    }
    let matmul = |x: &Vec<Vec<Q>>, y: &Vec<Vec<Q>>| {
        let mut out = vec![vec![Q::zero(); d]; d];
        for i in 0..d {
            for k in 0..d {
                if x[i][k].is_zero() {
                    continue;
                }
                for j in 0..d {
                    out[i][j] += &x[i][k] * &y[k][j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![Q::zero(); d + 1];
    coeffs[d] = Q::one();
    let mut m = vec![vec![Q::zero(); d]; d];
    for k in 1..=d {
        let mut next = matmul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[d - k + 1];
        }
        m = next;
        let am = matmul(&a, &m);
        let tr: Q = (0..d).map(|i| am[i][i].clone()).sum();
        coeffs[d - k] = -tr / Q::from_integer((k as i64).into());
    }
    PolyQ::new(coeffs)
}
