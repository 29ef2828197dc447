//! Outer actions of a finite Galois quotient on a finite group, stability of
//! normal subgroups, and supersolvable filtrations.
//!
//! An outer action is stored as one representative automorphism per element
//! of `Γ`; the representatives only need to multiply correctly up to inner
//! automorphisms. Stability of a normal subgroup does not depend on which
//! representatives are chosen, so one per element is enough.

use std::collections::{HashMap, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extension::{is_almost_complete, is_complete};
use crate::group::{generating_set, Automorphism, FiniteGroup, SpanningTree, Subgroup};
use crate::Limits;

/// Recognises inner automorphisms by their images on a generating set.
struct InnerIndex {
    gens: Vec<usize>,
    by_images: HashMap<Vec<usize>, usize>,
}

impl InnerIndex {
    fn new(g: &FiniteGroup) -> Self {
        let gens = generating_set(g);
        let mut by_images = HashMap::new();
        for x in g.elements() {
            let key: Vec<usize> = gens.iter().map(|&s| g.conj(x, s)).collect();
            by_images.entry(key).or_insert(x);
        }
        InnerIndex { gens, by_images }
    }

    fn witness(&self, a: &Automorphism) -> Option<usize> {
        let key: Vec<usize> = self.gens.iter().map(|&s| a.apply(s)).collect();
        self.by_images.get(&key).copied()
    }
}

/// A homomorphism `Γ → Out(G)` given by representatives in `Aut(G)`.
#[derive(Clone, Debug)]
pub struct OuterAction {
    gamma: FiniteGroup,
    target: FiniteGroup,
    reps: Vec<Automorphism>,
}

impl OuterAction {
    /// Checks that `reps[γ₁]∘reps[γ₂]` and `reps[γ₁γ₂]` differ by an inner
    /// automorphism for every pair.
    pub fn new(gamma: &FiniteGroup, target: &FiniteGroup, reps: Vec<Automorphism>) -> Result<Self> {
        if reps.len() != gamma.order() {
            return Err(Error::InvalidAction(format!(
                "{} representatives for Γ of order {}",
                reps.len(),
                gamma.order()
            )));
        }
        for r in &reps {
            if !r.group().same_as(target) {
                return Err(Error::InvalidAction("representative of a different group".into()));
            }
        }
        let inner = InnerIndex::new(target);
        if inner.witness(&reps[0]).is_none() {
            return Err(Error::InvalidAction("identity of Γ does not act innerly".into()));
        }
        for a in gamma.elements() {
            for b in gamma.elements() {
                let lhs = reps[a].compose(&reps[b]);
                let defect = lhs.compose(&reps[gamma.mul(a, b)].inverse());
                if inner.witness(&defect).is_none() {
                    return Err(Error::InvalidAction(format!(
                        "reps[{a}]∘reps[{b}] is not inner-equivalent to reps[{}]",
                        gamma.mul(a, b)
                    )));
                }
            }
        }
        Ok(OuterAction { gamma: gamma.clone(), target: target.clone(), reps })
    }

    pub fn trivial(gamma: &FiniteGroup, target: &FiniteGroup) -> Self {
        OuterAction {
            gamma: gamma.clone(),
            target: target.clone(),
            reps: vec![Automorphism::identity(target); gamma.order()],
        }
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn reps(&self) -> &[Automorphism] {
        &self.reps
    }

    pub fn rep(&self, gamma_element: usize) -> &Automorphism {
        &self.reps[gamma_element]
    }

    /// The same outer action with each representative composed with the
    /// inner automorphism by `twists[γ]`.
    pub fn with_inner_twists(&self, twists: &[usize]) -> OuterAction {
        let reps = self
            .reps
            .iter()
            .zip(twists)
            .map(|(r, &x)| Automorphism::inner(&self.target, x).compose(r))
            .collect();
        OuterAction { gamma: self.gamma.clone(), target: self.target.clone(), reps }
    }

    /// True when the representatives already form a homomorphism.
    pub fn is_genuine(&self) -> bool {
        let g = &self.gamma;
        g.elements().all(|a| {
            g.elements()
                .all(|b| self.reps[a].compose(&self.reps[b]) == self.reps[g.mul(a, b)])
        })
    }

    /// Both actions induce the same map `Γ → Out(G)`.
    pub fn same_outer_class(&self, other: &OuterAction) -> bool {
        if !self.gamma.same_as(&other.gamma) || !self.target.same_as(&other.target) {
            return false;
        }
        let inner = InnerIndex::new(&self.target);
        self.reps
            .iter()
            .zip(&other.reps)
            .all(|(a, b)| inner.witness(&a.compose(&b.inverse())).is_some())
    }
}

/// A genuine action `Γ → Aut(G)`, one automorphism per element of `Γ`.
#[derive(Clone, Debug)]
pub struct LiftedAction {
    gamma: FiniteGroup,
    target: FiniteGroup,
    autos: Vec<Automorphism>,
}

impl LiftedAction {
    /// Checks the homomorphism law exhaustively.
    pub fn new(gamma: &FiniteGroup, target: &FiniteGroup, autos: Vec<Automorphism>) -> Result<Self> {
        let a = Self::new_unchecked(gamma.clone(), target.clone(), autos);
        if a.autos.len() != gamma.order() || a.autos.iter().any(|x| !x.group().same_as(target)) {
            return Err(Error::InvalidAction("wrong number or kind of automorphisms".into()));
        }
        if !a.autos[0].is_identity() {
            return Err(Error::InvalidAction("identity of Γ acts nontrivially".into()));
        }
        for x in gamma.elements() {
            for y in gamma.elements() {
                if a.autos[x].compose(&a.autos[y]) != a.autos[gamma.mul(x, y)] {
                    return Err(Error::InvalidAction(format!("action law fails at ({x}, {y})")));
                }
            }
        }
        Ok(a)
    }

    pub(crate) fn new_unchecked(gamma: FiniteGroup, target: FiniteGroup, autos: Vec<Automorphism>) -> Self {
        LiftedAction { gamma, target, autos }
    }

    pub fn trivial(gamma: &FiniteGroup, target: &FiniteGroup) -> Self {
        Self::new_unchecked(
            gamma.clone(),
            target.clone(),
            vec![Automorphism::identity(target); gamma.order()],
        )
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.autos
    }

    pub fn auto(&self, gamma_element: usize) -> &Automorphism {
        &self.autos[gamma_element]
    }

    /// `γ · x`
    pub fn act(&self, gamma_element: usize, x: usize) -> usize {
        self.autos[gamma_element].apply(x)
    }

    pub fn to_outer(&self) -> OuterAction {
        OuterAction { gamma: self.gamma.clone(), target: self.target.clone(), reps: self.autos.clone() }
    }
}

impl PartialEq for LiftedAction {
    fn eq(&self, other: &Self) -> bool {
        self.gamma.same_as(&other.gamma) && self.target.same_as(&other.target) && self.autos == other.autos
    }
}

/// A chain `{1} = G₀ ⊆ G₁ ⊆ ⋯ ⊆ Gₙ = G` of normal, stable subgroups with
/// cyclic successive quotients.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    chain: Vec<Subgroup>,
}

impl Filtration {
    /// Validates a user-supplied chain against `action`.
    pub fn new(action: &OuterAction, chain: Vec<Subgroup>) -> Result<Self> {
        let f = Filtration { chain };
        f.verify(action)?;
        Ok(f)
    }

    pub fn chain(&self) -> &[Subgroup] {
        &self.chain
    }

    /// Length `n` of the chain.
    pub fn class(&self) -> usize {
        self.chain.len() - 1
    }

    /// Re-checks every defining condition.
    pub fn verify(&self, action: &OuterAction) -> Result<()> {
        let g = action.target();
        let first = self.chain.first().ok_or_else(|| Error::InvalidSubgroup("empty chain".into()))?;
        let last = self.chain.last().expect("nonempty");
        if !first.is_trivial() || !last.is_whole() {
            return Err(Error::InvalidSubgroup("chain must run from {1} to G".into()));
        }
        for h in &self.chain {
            if !h.parent().same_as(g) {
                return Err(Error::InvalidSubgroup("subgroup of a different group".into()));
            }
            if !h.is_normal() {
                return Err(Error::NotNormal);
            }
            if !action.reps().iter().all(|r| r.preserves(h)) {
                return Err(Error::NotStable);
            }
        }
        for w in self.chain.windows(2) {
            if !w[0].is_subset_of(&w[1]) || !cyclic_quotient(&w[0], &w[1]) {
                return Err(Error::InvalidSubgroup(format!(
                    "step of orders {} ⊆ {} is not an inclusion with cyclic quotient",
                    w[0].order(),
                    w[1].order()
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for Filtration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Filtration", 2)?;
        let chain: Vec<&[usize]> = self.chain.iter().map(|h| h.elements()).collect();
        st.serialize_field("chain", &chain)?;
        st.serialize_field("class", &self.class())?;
        st.end()
    }
}

/// `upper / lower` is cyclic, for `lower ⊆ upper` both normal in the parent.
pub(crate) fn cyclic_quotient(lower: &Subgroup, upper: &Subgroup) -> bool {
    let g = lower.parent();
    let index = upper.order() / lower.order();
    if index == 1 {
        return true;
    }
    let in_lower = lower.membership();
    upper.elements().iter().any(|&m| {
        let mut k = 1;
        let mut x = m;
        while !in_lower[x] {
            x = g.mul(x, m);
            k += 1;
        }
        k == index
    })
}

/// True iff `n` is normal and every representative maps it onto itself.
pub fn is_stable(n: &Subgroup, action: &OuterAction) -> Result<bool> {
    check_subgroup_of(n, action.target())?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    Ok(action.reps().iter().all(|r| r.preserves(n)))
}

fn check_subgroup_of(n: &Subgroup, g: &FiniteGroup) -> Result<()> {
    if n.parent().same_as(g) {
        Ok(())
    } else {
        Err(Error::InvalidSubgroup("subgroup of a different group".into()))
    }
}

/// Result of the filtration search.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationSearch {
    /// A filtration of minimal length, if any exists.
    pub filtration: Option<Filtration>,
    /// When none exists: the tops of the maximal admissible chains, i.e.
    /// stable normal subgroups reachable from `{1}` with no admissible step
    /// upward.
    #[serde(serialize_with = "serialize_subgroups")]
    pub frontier: Vec<Subgroup>,
}

impl FiltrationSearch {
    pub fn is_supersolvable(&self) -> bool {
        self.filtration.is_some()
    }

    pub fn class(&self) -> Option<usize> {
        self.filtration.as_ref().map(Filtration::class)
    }
}

pub(crate) fn serialize_subgroups<S: Serializer>(v: &[Subgroup], s: S) -> std::result::Result<S::Ok, S::Error> {
    let lists: Vec<&[usize]> = v.iter().map(|h| h.elements()).collect();
    lists.serialize(s)
}

/// Breadth-first search over stable normal subgroups for a shortest chain
/// from `{1}` to the whole group with cyclic steps.
pub fn supersolvable_filtration(action: &OuterAction) -> FiltrationSearch {
    let g = action.target();
    let nodes: Vec<Subgroup> = g
        .normal_subgroups()
        .into_iter()
        .filter(|h| action.reps().iter().all(|r| r.preserves(h)))
        .collect();
    // nodes are sorted by order: 0 is {1}, last is G
    let top = nodes.len() - 1;
    let mut parent = vec![usize::MAX; nodes.len()];
    parent[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut dead_ends = Vec::new();
    while let Some(i) = queue.pop_front() {
        if i == top {
            break;
        }
        let mut extended = false;
        for j in i + 1..nodes.len() {
            if nodes[j].order() > nodes[i].order()
                && nodes[i].is_subset_of(&nodes[j])
                && cyclic_quotient(&nodes[i], &nodes[j])
            {
                extended = true;
                if parent[j] == usize::MAX {
                    parent[j] = i;
                    queue.push_back(j);
                }
            }
        }
        if !extended {
            dead_ends.push(i);
        }
    }
    if parent[top] != usize::MAX {
        let mut chain = vec![nodes[top].clone()];
        let mut i = top;
        while i != 0 {
            i = parent[i];
            chain.push(nodes[i].clone());
        }
        chain.reverse();
        return FiltrationSearch { filtration: Some(Filtration { chain }), frontier: Vec::new() };
    }
    let frontier = dead_ends.into_iter().map(|i| nodes[i].clone()).collect();
    FiltrationSearch { filtration: None, frontier }
}

/// The outer action induced on `G/N` by a stable normal subgroup `N`.
pub fn induced_quotient_action(action: &OuterAction, n: &Subgroup) -> Result<OuterAction> {
    if !is_stable(n, action)? {
        return Err(Error::NotStable);
    }
    let g = action.target();
    let q = g.quotient(n)?;
    let reps = action
        .reps()
        .iter()
        .map(|r| {
            let images = q
                .representatives
                .iter()
                .map(|&x| q.projection.apply(r.apply(x)))
                .collect();
            Automorphism::new(&q.group, images)
        })
        .collect::<Result<Vec<_>>>()?;
    OuterAction::new(action.gamma(), &q.group, reps)
}

/// A genuine action agreeing with `action` modulo inner automorphisms, if
/// one exists. Backtracks over inner twists of the representatives on a
/// generating set of `Γ`.
pub fn lift_outer_action(action: &OuterAction, node_limit: u64) -> Result<Option<LiftedAction>> {
    let gamma = action.gamma();
    let target = action.target();
    if action.is_genuine() {
        return Ok(Some(LiftedAction::new_unchecked(
            gamma.clone(),
            target.clone(),
            action.reps().to_vec(),
        )));
    }
    let gens = generating_set(gamma);
    if gens.is_empty() {
        return Ok(Some(LiftedAction::trivial(gamma, target)));
    }
    let candidates: Vec<Vec<Automorphism>> = gens
        .iter()
        .map(|&s| {
            let mut c: Vec<Automorphism> = target
                .elements()
                .map(|x| Automorphism::inner(target, x).compose(action.rep(s)))
                .collect();
            c.sort_by(|a, b| a.images().cmp(b.images()));
            c.dedup();
            c
        })
        .collect();
    let trees: Vec<SpanningTree> = (1..=gens.len()).map(|k| SpanningTree::new(gamma, &gens[..k])).collect();
    let identity = Automorphism::identity(target);
    let mut nodes = 0u64;
    let mut chosen: Vec<Automorphism> = Vec::new();

    fn go(
        level: usize,
        chosen: &mut Vec<Automorphism>,
        candidates: &[Vec<Automorphism>],
        trees: &[SpanningTree],
        identity: &Automorphism,
        action: &OuterAction,
        nodes: &mut u64,
        limit: u64,
    ) -> Result<Option<Vec<Automorphism>>> {
        for c in &candidates[level] {
            *nodes += 1;
            if *nodes > limit {
                return Err(Error::BudgetExceeded { limit });
            }
            chosen.push(c.clone());
            let ext = trees[level].extend_with(identity.clone(), chosen, |a, b| a.compose(b));
            if let Some(ext) = ext {
                if level + 1 == trees.len() {
                    let full: Vec<Automorphism> = ext.into_iter().map(|a| a.expect("spans")).collect();
                    let lifted = action.clone_with_reps(full.clone());
                    if lifted.same_outer_class(action) {
                        return Ok(Some(full));
                    }
                } else if let Some(found) =
                    go(level + 1, chosen, candidates, trees, identity, action, nodes, limit)?
                {
                    return Ok(Some(found));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    let found = go(0, &mut chosen, &candidates, &trees, &identity, action, &mut nodes, node_limit)?;
    Ok(found.map(|autos| LiftedAction::new_unchecked(gamma.clone(), target.clone(), autos)))
}

impl OuterAction {
    fn clone_with_reps(&self, reps: Vec<Automorphism>) -> OuterAction {
        OuterAction { gamma: self.gamma.clone(), target: self.target.clone(), reps }
    }
}

/// Whether `N` is stable and `G/N` is supersolvable for the induced outer
/// action; these are the group-theoretic hypotheses under which descent
/// along `G → G/N` applies.
#[derive(Clone, Debug, Serialize)]
pub struct DescentHypotheses {
    pub stable: bool,
    pub quotient_supersolvable: bool,
    /// Witness filtration of `G/N` when both hold.
    pub filtration: Option<Filtration>,
}

impl DescentHypotheses {
    pub fn hold(&self) -> bool {
        self.stable && self.quotient_supersolvable
    }
}

pub fn check_descent_hypotheses(action: &OuterAction, n: &Subgroup) -> Result<DescentHypotheses> {
    if !is_stable(n, action)? {
        return Ok(DescentHypotheses { stable: false, quotient_supersolvable: false, filtration: None });
    }
    let induced = induced_quotient_action(action, n)?;
    let search = supersolvable_filtration(&induced);
    Ok(DescentHypotheses {
        stable: true,
        quotient_supersolvable: search.is_supersolvable(),
        filtration: search.filtration,
    })
}

/// Which kernel conditions hold on top of [`check_descent_hypotheses`]:
/// an almost complete kernel (`case_i`) or a complete one
/// (`case_iii_complete`).
#[derive(Clone, Debug, Serialize)]
pub struct KernelClassification {
    pub stable: bool,
    pub quotient_supersolvable: bool,
    pub kernel_almost_complete: bool,
    pub kernel_complete: bool,
    pub case_i: bool,
    pub case_iii_complete: bool,
}

pub fn classify_kernel(action: &OuterAction, n: &Subgroup, limits: &Limits) -> Result<KernelClassification> {
    let hyp = check_descent_hypotheses(action, n)?;
    let (kernel, _) = n.to_group();
    let almost = is_almost_complete(&kernel, limits)?.is_some();
    let complete = is_complete(&kernel, limits)?;
    Ok(KernelClassification {
        stable: hyp.stable,
        quotient_supersolvable: hyp.quotient_supersolvable,
        kernel_almost_complete: almost,
        kernel_complete: complete,
        case_i: hyp.hold() && almost,
        case_iii_complete: hyp.hold() && complete,
    })
}
