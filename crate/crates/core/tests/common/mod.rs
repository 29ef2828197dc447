#![allow(dead_code)]

use std::collections::VecDeque;

use descent_forge::group::{automorphisms, generating_set, Automorphism, FiniteGroup};
use descent_forge::lattice::{norm_one_lattice, GaloisLattice};
use descent_forge::outer::{LiftedAction, OuterAction};

/// Every homomorphism `Γ → Aut(G)`, found by choosing images of a
/// generating set and closing up.
pub fn all_actions(gamma: &FiniteGroup, g: &FiniteGroup) -> Vec<LiftedAction> {
    let autos = automorphisms(g, 10_000_000).unwrap();
    let gens = generating_set(gamma);
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(a) = extend(gamma, g, &gens, &choice.iter().map(|&i| autos[i].clone()).collect::<Vec<_>>()) {
            out.push(a);
        }
        let mut i = 0;
        loop {
            if i == gens.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < autos.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extend(gamma: &FiniteGroup, g: &FiniteGroup, gens: &[usize], images: &[Automorphism]) -> Option<LiftedAction> {
    let mut autos: Vec<Option<Automorphism>> = vec![None; gamma.order()];
    autos[gamma.identity()] = Some(Automorphism::identity(g));
    let mut queue = VecDeque::from([gamma.identity()]);
    while let Some(x) = queue.pop_front() {
        let ax = autos[x].clone().unwrap();
        for (&s, phi) in gens.iter().zip(images) {
            let y = gamma.mul(x, s);
            let ay = ax.compose(phi);
            match &autos[y] {
                Some(existing) if existing.images() != ay.images() => return None,
                Some(_) => {}
                None => {
                    autos[y] = Some(ay);
                    queue.push_back(y);
                }
            }
        }
    }
    LiftedAction::new(gamma, g, autos.into_iter().map(Option::unwrap).collect()).ok()
}

/// `(Γ, G, action)` triples for cohomology checks; brute force over
/// `|G|^|Γ|` maps stays below a few thousand.
pub fn h1_corpus() -> Vec<(String, LiftedAction)> {
    let small = descent_forge::group::catalog::small_groups(8);
    let c2 = FiniteGroup::cyclic(2);
    let gammas = [
        ("C2", c2.clone()),
        ("C3", FiniteGroup::cyclic(3)),
        ("C4", FiniteGroup::cyclic(4)),
        ("C2xC2", c2.direct_product(&c2)),
        ("S3", FiniteGroup::symmetric(3)),
    ];
    let mut out = Vec::new();
    for (gname, gamma) in &gammas {
        for by_order in &small {
            for (j, g) in by_order.iter().enumerate() {
                let maps = (g.order() as f64).powi(gamma.order() as i32);
                if g.order() < 2 || maps > 300_000.0 {
                    continue;
                }
                let name = format!("{gname} on {} [{j}]", descent_forge::group::catalog::describe(g));
                for (i, a) in all_actions(gamma, g).into_iter().enumerate() {
                    out.push((format!("{name} #{i}"), a));
                }
            }
        }
    }
    out
}

/// `C₅ × C₅` with `C₃` acting through `(a, b) ↦ (−b, a − b)`.
pub fn c5xc5_with_c3() -> OuterAction {
    let c5 = FiniteGroup::cyclic(5);
    let v = c5.direct_product(&c5);
    let m = |x: usize| {
        let (a, b) = (x / 5, x % 5);
        ((5 - b) % 5) * 5 + (a + 5 - b) % 5
    };
    let gen = Automorphism::new(&v, v.elements().map(m).collect()).unwrap();
    let reps = vec![Automorphism::identity(&v), gen.clone(), gen.compose(&gen)];
    OuterAction::new(&FiniteGroup::cyclic(3), &v, reps).unwrap()
}

pub fn lattice_corpus() -> Vec<(&'static str, GaloisLattice)> {
    let c2 = FiniteGroup::cyclic(2);
    let c3 = FiniteGroup::cyclic(3);
    let v4 = c2.direct_product(&c2);
    vec![
        ("Z/2", GaloisLattice::cyclic_torsion(&c2, 2)),
        ("Z/3", GaloisLattice::cyclic_torsion(&c2, 3)),
        ("Z/4", GaloisLattice::cyclic_torsion(&c2, 4)),
        ("Z/12", GaloisLattice::cyclic_torsion(&c2, 12)),
        ("sign", GaloisLattice::sign_module()),
        ("Z[C2]", GaloisLattice::regular(&c2)),
        ("norm-one C2", norm_one_lattice(&c2)),
        ("norm-one C3", norm_one_lattice(&c3)),
        ("Z", GaloisLattice::trivial_free(&c2, 1)),
        ("Z[C3]", GaloisLattice::regular(&c3)),
        ("norm-one V4", norm_one_lattice(&v4)),
        (
            "Z/2 + sign",
            GaloisLattice::cyclic_torsion(&c2, 2).direct_sum(&GaloisLattice::sign_module()).unwrap(),
        ),
    ]
}
