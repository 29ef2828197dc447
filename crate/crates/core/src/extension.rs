//! Finite group extensions `1 → N → E → Γ → 1`: splittings and their
//! classes under conjugation by `N`, difference cocycles, inner twists,
//! nonabelian `H¹`, and (almost) complete kernels.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{search_homs, Automorphism, AutomorphismGroup, Budget, FiniteGroup, GroupHom, Subgroup};
use crate::group::generating_set;
use crate::outer::{LiftedAction, OuterAction};
use crate::Limits;

/// A short exact sequence with explicit embedding and projection.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    kernel_embed: GroupHom,
    proj: GroupHom,
    /// Element of `E` ↦ its preimage in `N`, or `usize::MAX`.
    kernel_pos: Vec<usize>,
}

impl GroupExtension {
    pub fn new(kernel_embed: GroupHom, proj: GroupHom) -> Result<Self> {
        if !kernel_embed.target().same_as(proj.source()) {
            return Err(Error::InvalidExtension("embedding and projection disagree on E".into()));
        }
        if !kernel_embed.is_hom() || !proj.is_hom() {
            return Err(Error::InvalidExtension("maps are not homomorphisms".into()));
        }
        if !kernel_embed.is_injective() {
            return Err(Error::InvalidExtension("kernel embedding is not injective".into()));
        }
        if !proj.is_surjective() {
            return Err(Error::InvalidExtension("projection is not surjective".into()));
        }
        if kernel_embed.image() != proj.kernel() {
            return Err(Error::InvalidExtension("image of N differs from kernel of the projection".into()));
        }
        Ok(Self::assemble(kernel_embed, proj))
    }

    fn assemble(kernel_embed: GroupHom, proj: GroupHom) -> Self {
        let mut kernel_pos = vec![usize::MAX; proj.source().order()];
        for (n, &e) in kernel_embed.images().iter().enumerate() {
            kernel_pos[e] = n;
        }
        GroupExtension { kernel_embed, proj, kernel_pos }
    }

    /// `1 → N → E → E/N → 1` for a normal subgroup `N`.
    pub fn from_normal_subgroup(total: &FiniteGroup, n: &Subgroup) -> Result<Self> {
        let q = total.quotient(n)?;
        let (_, incl) = n.to_group();
        Ok(Self::assemble(incl, q.projection))
    }

    /// `1 → N → N × Γ → Γ → 1`.
    pub fn direct_product(n: &FiniteGroup, gamma: &FiniteGroup) -> Self {
        let e = n.direct_product(gamma);
        let k = gamma.order();
        let embed = GroupHom::new(n, &e, n.elements().map(|x| x * k).collect()).expect("factor inclusion");
        let proj = GroupHom::new(&e, gamma, e.elements().map(|x| x % k).collect()).expect("factor projection");
        Self::assemble(embed, proj)
    }

    pub fn total(&self) -> &FiniteGroup {
        self.proj.source()
    }

    pub fn kernel(&self) -> &FiniteGroup {
        self.kernel_embed.source()
    }

    pub fn gamma(&self) -> &FiniteGroup {
        self.proj.target()
    }

    pub fn kernel_embed(&self) -> &GroupHom {
        &self.kernel_embed
    }

    pub fn proj(&self) -> &GroupHom {
        &self.proj
    }

    /// The image of `N` in `E`.
    pub fn kernel_image(&self) -> Subgroup {
        self.kernel_embed.image()
    }

    /// Preimage in `N` of an element of `E` lying in the kernel.
    pub fn kernel_preimage(&self, e: usize) -> Option<usize> {
        let n = self.kernel_pos[e];
        (n != usize::MAX).then_some(n)
    }

    /// Elements of `E` over `γ`, ascending.
    pub fn fiber(&self, gamma_element: usize) -> Vec<usize> {
        self.total().elements().filter(|&e| self.proj.apply(e) == gamma_element).collect()
    }

    /// Conjugation by `e` restricted to `N`.
    pub fn conjugation_on_kernel(&self, e: usize) -> Automorphism {
        let total = self.total();
        let images = self
            .kernel()
            .elements()
            .map(|n| self.kernel_pos[total.conj(e, self.kernel_embed.apply(n))])
            .collect();
        Automorphism::new(self.kernel(), images).expect("conjugation preserves a normal subgroup")
    }

    /// The outer action of `Γ` on `N`: conjugation by the smallest element
    /// of each fiber.
    pub fn outer_action(&self) -> Result<OuterAction> {
        let mut reps = vec![None; self.gamma().order()];
        for e in self.total().elements() {
            let g = self.proj.apply(e);
            if reps[g].is_none() {
                reps[g] = Some(self.conjugation_on_kernel(e));
            }
        }
        OuterAction::new(self.gamma(), self.kernel(), reps.into_iter().map(|r| r.expect("surjective")).collect())
    }

    /// All homomorphic sections of the projection, sorted by image array.
    pub fn splittings(&self, node_limit: u64) -> Result<Vec<Splitting>> {
        let gamma = self.gamma();
        let gens = generating_set(gamma);
        let candidates: Vec<Vec<usize>> = gens.iter().map(|&s| self.fiber(s)).collect();
        let mut found = Vec::new();
        let mut budget = Budget::new(node_limit);
        search_homs(gamma, self.total(), &gens, &candidates, &mut budget, |images| {
            found.push(images.to_vec());
            true
        })?;
        found.sort();
        found
            .into_iter()
            .map(|images| {
                let s = GroupHom::new(gamma, self.total(), images)?;
                self.check_section(&s)?;
                Ok(Splitting { section: s })
            })
            .collect()
    }

    fn check_section(&self, s: &GroupHom) -> Result<()> {
        if !s.source().same_as(self.gamma()) || !s.target().same_as(self.total()) {
            return Err(Error::InvalidExtension("section of a different extension".into()));
        }
        if self.gamma().elements().any(|g| self.proj.apply(s.apply(g)) != g) {
            return Err(Error::InvalidComplement("projection ∘ section is not the identity".into()));
        }
        Ok(())
    }

    /// Splittings grouped into classes under `s ↦ n s n⁻¹` for `n ∈ N`.
    /// Classes appear in order of their smallest member.
    pub fn splitting_classes(&self, node_limit: u64) -> Result<Vec<Vec<Splitting>>> {
        let all = self.splittings(node_limit)?;
        let index: HashMap<&[usize], usize> =
            all.iter().enumerate().map(|(i, s)| (s.section.images(), i)).collect();
        let total = self.total();
        let kernel = self.kernel_image();
        let mut class_of = vec![usize::MAX; all.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..all.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for &n in kernel.elements() {
                let conj: Vec<usize> = all[i].section.images().iter().map(|&e| total.conj(n, e)).collect();
                let j = index[conj.as_slice()];
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(classes
            .into_iter()
            .map(|m| m.into_iter().map(|i| all[i].clone()).collect())
            .collect())
    }

    /// The action of `Γ` on `N` through a splitting: `γ·n = s(γ) n s(γ)⁻¹`.
    pub fn action_through(&self, s: &Splitting) -> Result<LiftedAction> {
        self.check_section(&s.section)?;
        let autos = self
            .gamma()
            .elements()
            .map(|g| self.conjugation_on_kernel(s.section.apply(g)))
            .collect();
        LiftedAction::new(self.gamma(), self.kernel(), autos)
    }

    /// `γ ↦ s₂(γ)·s(γ)⁻¹`, a cocycle with values in `N` for the action
    /// through `s`.
    pub fn difference_cocycle(&self, s: &Splitting, s2: &Splitting) -> Result<Cocycle> {
        self.check_section(&s.section)?;
        self.check_section(&s2.section)?;
        let total = self.total();
        let values = self
            .gamma()
            .elements()
            .map(|g| {
                let e = total.mul(s2.section.apply(g), total.inv(s.section.apply(g)));
                self.kernel_preimage(e).expect("lands in the kernel")
            })
            .collect();
        Cocycle::new(&self.action_through(s)?, values)
    }

    /// The splitting `γ ↦ n s(γ) n⁻¹`.
    pub fn conjugate_splitting(&self, s: &Splitting, n: usize) -> Splitting {
        let total = self.total();
        let e = self.kernel_embed.apply(n);
        let images = s.section.images().iter().map(|&x| total.conj(e, x)).collect();
        Splitting {
            section: GroupHom::new(self.gamma(), total, images).expect("conjugate of a section"),
        }
    }
}

/// A homomorphic section `Γ → E` of the projection.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    section: GroupHom,
}

impl Splitting {
    pub fn section(&self) -> &GroupHom {
        &self.section
    }

    /// The image `s(Γ)`, a complement to `N`.
    pub fn complement(&self) -> Subgroup {
        self.section.image()
    }
}

impl Serialize for Splitting {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Splitting", 1)?;
        st.serialize_field("section", self.section.images())?;
        st.end()
    }
}

/// A 1-cocycle `Γ → G` for a genuine action, stored on every element.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    action: LiftedAction,
    values: Vec<usize>,
}

impl Cocycle {
    /// Checks `σ(γ₁γ₂) = σ(γ₁) · γ₁(σ(γ₂))` for all pairs.
    pub fn new(action: &LiftedAction, values: Vec<usize>) -> Result<Self> {
        let (gamma, g) = (action.gamma(), action.target());
        if values.len() != gamma.order() || values.iter().any(|&v| v >= g.order()) {
            return Err(Error::InvalidCocycle("values must be one target element per element of Γ".into()));
        }
        for a in gamma.elements() {
            for b in gamma.elements() {
                if values[gamma.mul(a, b)] != g.mul(values[a], action.act(a, values[b])) {
                    return Err(Error::InvalidCocycle(format!("fails at ({a}, {b})")));
                }
            }
        }
        Ok(Cocycle { action: action.clone(), values })
    }

    pub fn trivial(action: &LiftedAction) -> Self {
        Cocycle { action: action.clone(), values: vec![0; action.gamma().order()] }
    }

    pub fn action(&self) -> &LiftedAction {
        &self.action
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, gamma_element: usize) -> usize {
        self.values[gamma_element]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `γ ↦ g⁻¹ σ(γ) γ(g)`.
    pub fn transform(&self, g: usize) -> Cocycle {
        let t = self.action.target();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(c, &v)| t.mul(t.mul(t.inv(g), v), self.action.act(c, g)))
            .collect();
        Cocycle { action: self.action.clone(), values }
    }

    /// Some `g` with `other = self.transform(g)`.
    pub fn cohomologous(&self, other: &Cocycle) -> Option<usize> {
        if self.action != other.action {
            return None;
        }
        self.action.target().elements().find(|&g| self.transform(g).values == other.values)
    }

    /// `γ ↦ σ(γ)⁻¹`, a cocycle for the twisted action.
    pub fn inverse(&self) -> Result<Cocycle> {
        let twisted = twist_action(&self.action, self)?;
        let t = self.action.target();
        Cocycle::new(&twisted, self.values.iter().map(|&v| t.inv(v)).collect())
    }
}

impl Serialize for Cocycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cocycle", 1)?;
        let values: std::collections::BTreeMap<String, usize> =
            self.values.iter().enumerate().map(|(i, &v)| (i.to_string(), v)).collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

/// `γ ↦ (conjugation by σ(γ)) ∘ action(γ)`.
pub fn twist_action(action: &LiftedAction, c: &Cocycle) -> Result<LiftedAction> {
    if &c.action != action {
        // re-check the law against the given action
        Cocycle::new(action, c.values.clone())?;
    }
    let g = action.target();
    let autos = action
        .automorphisms()
        .iter()
        .zip(&c.values)
        .map(|(a, &v)| Automorphism::inner(g, v).compose(a))
        .collect();
    LiftedAction::new(action.gamma(), g, autos)
}

/// Cohomology classes of 1-cocycles, trivial class first, the others by
/// their least member.
#[derive(Clone, Debug)]
pub struct H1 {
    /// Lexicographically least cocycle in each class.
    pub representatives: Vec<Cocycle>,
    pub class_sizes: Vec<usize>,
    /// `|Z¹|`
    pub cocycle_count: usize,
}

impl H1 {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

impl Serialize for H1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("H1", 3)?;
        st.serialize_field("classes", &self.representatives)?;
        st.serialize_field("class_sizes", &self.class_sizes)?;
        st.serialize_field("cocycle_count", &self.cocycle_count)?;
        st.end()
    }
}

/// All 1-cocycles, as splittings of `G ⋊ Γ`: values on a generating set
/// of `Γ` are chosen freely and extended, relations pruning the search.
pub fn cocycles(action: &LiftedAction, node_limit: u64) -> Result<Vec<Cocycle>> {
    let checked = LiftedAction::new(action.gamma(), action.target(), action.automorphisms().to_vec())?;
    let gamma = checked.gamma();
    let g = checked.target();
    let gens = generating_set(gamma);
    if gens.is_empty() {
        return Ok(vec![Cocycle::trivial(&checked)]);
    }
    let trees: Vec<_> = (1..=gens.len())
        .map(|k| crate::group::SpanningTree::new(gamma, &gens[..k]))
        .collect();
    // (value, γ) multiplies as in G ⋊ Γ
    let mul = |x: &(usize, usize), y: &(usize, usize)| (g.mul(x.0, checked.act(x.1, y.0)), gamma.mul(x.1, y.1));
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut budget = Budget::new(node_limit);
    let mut stack = vec![0usize];
    // iterative depth-first search; stack[i] is the next candidate at level i
    while let Some(&next) = stack.last() {
        let level = stack.len() - 1;
        if next == g.order() {
            stack.pop();
            chosen.pop();
            if let Some(top) = stack.last_mut() {
                *top += 1;
            }
            continue;
        }
        budget.tick()?;
        chosen.truncate(level);
        chosen.push((next, gens[level]));
        match trees[level].extend_with((0, 0), &chosen, mul) {
            Some(ext) if level + 1 == gens.len() => {
                let values = ext.into_iter().map(|v| v.expect("spans").0).collect();
                out.push(Cocycle::new(&checked, values)?);
                *stack.last_mut().expect("nonempty") += 1;
            }
            Some(_) => stack.push(0),
            None => *stack.last_mut().expect("nonempty") += 1,
        }
    }
    out.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(out)
}

/// `H¹(Γ, G)` for a genuine action.
pub fn h1(action: &LiftedAction, node_limit: u64) -> Result<H1> {
    let all = cocycles(action, node_limit)?;
    let index: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, c)| (c.values.as_slice(), i)).collect();
    let mut class_of = vec![usize::MAX; all.len()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    // `all` is sorted, so the first unvisited cocycle is its class's least
    // member and the trivial cocycle comes first
    for i in 0..all.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        let mut size = 0;
        for g in action.target().elements() {
            let j = index[all[i].transform(g).values.as_slice()];
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                size += 1;
            }
        }
        reps.push(all[i].clone());
        sizes.push(size);
    }
    Ok(H1 { representatives: reps, class_sizes: sizes, cocycle_count: all.len() })
}

/// Trivial centre and every automorphism inner.
pub fn is_complete(n: &FiniteGroup, limits: &Limits) -> Result<bool> {
    if !n.center().is_trivial() {
        return Ok(false);
    }
    let autos = crate::group::automorphisms(n, limits.node_limit)?;
    Ok(autos.len() == n.order())
}

/// A homomorphic section `Out(N) → Aut(N)` of the quotient map.
#[derive(Clone, Debug)]
pub struct OutSection {
    pub aut: AutomorphismGroup,
    /// Out element ↦ index into `aut.automorphisms`.
    pub images: Vec<usize>,
}

impl OutSection {
    pub fn kernel(&self) -> &FiniteGroup {
        &self.aut.base
    }

    pub fn automorphism(&self, out_element: usize) -> &Automorphism {
        &self.aut.automorphisms[self.images[out_element]]
    }

    /// Re-checks the hom law and that each image lies over its class.
    pub fn verify(&self) -> Result<()> {
        let out = &self.aut.out.group;
        let hom = GroupHom::new(out, &self.aut.group, self.images.clone())?;
        if out.elements().any(|o| self.aut.out.projection.apply(hom.apply(o)) != o) {
            return Err(Error::InvalidHom("section does not lie over Out".into()));
        }
        Ok(())
    }
}

impl Serialize for OutSection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OutSection", 2)?;
        st.serialize_field("out_order", &self.aut.out_order())?;
        let autos: Vec<&[usize]> = self.images.iter().map(|&i| self.aut.automorphisms[i].images()).collect();
        st.serialize_field("automorphisms", &autos)?;
        st.end()
    }
}

/// Trivial centre and `Aut(N) → Out(N)` splits; returns the section.
pub fn is_almost_complete(n: &FiniteGroup, limits: &Limits) -> Result<Option<OutSection>> {
    if !n.center().is_trivial() {
        return Ok(None);
    }
    let aut = AutomorphismGroup::compute(n, limits)?;
    let out = aut.out.group.clone();
    let gens = generating_set(&out);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&o| aut.group.elements().filter(|&a| aut.out.projection.apply(a) == o).collect())
        .collect();
    let mut budget = Budget::new(limits.node_limit);
    let mut found = None;
    search_homs(&out, &aut.group, &gens, &candidates, &mut budget, |images| {
        found = Some(images.to_vec());
        false
    })?;
    Ok(match found {
        Some(images) => {
            let s = OutSection { aut, images };
            s.verify()?;
            Some(s)
        }
        None => None,
    })
}

/// The complement `C = {e : conjugation by e on N equals section(class of e)}`
/// pulled back from a section `Out(N) → Aut(N)`, as a splitting, together
/// with whether `C` centralizes `N`.
pub fn split_with_complete_kernel(ext: &GroupExtension, section: &OutSection) -> Result<(Splitting, bool)> {
    let kernel = ext.kernel();
    if !kernel.center().is_trivial() {
        return Err(Error::NontrivialCentre);
    }
    if !section.kernel().same_as(kernel) {
        return Err(Error::InvalidExtension("section belongs to a different kernel".into()));
    }
    let total = ext.total();
    let mut by_gamma = vec![usize::MAX; ext.gamma().order()];
    let mut complement = Vec::new();
    for e in total.elements() {
        let c = ext.conjugation_on_kernel(e);
        let class = section
            .aut
            .outer_class(&c)
            .ok_or_else(|| Error::InvalidComplement("conjugation is not an automorphism".into()))?;
        if *section.automorphism(class) == c {
            let g = ext.proj().apply(e);
            if by_gamma[g] != usize::MAX {
                return Err(Error::InvalidComplement(format!("two elements of C lie over {g}")));
            }
            by_gamma[g] = e;
            complement.push(e);
        }
    }
    if by_gamma.contains(&usize::MAX) {
        return Err(Error::InvalidComplement("C does not meet every fiber".into()));
    }
    let s = GroupHom::new(ext.gamma(), total, by_gamma)
        .map_err(|e| Error::InvalidComplement(e.to_string()))?;
    ext.check_section(&s)?;
    let centralizing = complement.iter().all(|&e| ext.conjugation_on_kernel(e).is_identity());
    Ok((Splitting { section: s }, centralizing))
}

/// Every composition factor is almost complete. Sufficient, not necessary.
pub fn almost_complete_via_factors(g: &FiniteGroup, limits: &Limits) -> Result<bool> {
    for f in g.composition_factors() {
        if !f.is_simple() || is_almost_complete(&f, limits)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
