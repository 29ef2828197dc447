mod common;

use descent_forge::extension::{is_almost_complete, split_with_complete_kernel, GroupExtension};
use descent_forge::group::catalog::small_groups;
use descent_forge::group::FiniteGroup;
use descent_forge::lattice::{pushout, GaloisLattice, IntMatrix, ModuleMap};
use descent_forge::numfield::{
    hilbert_symbol, n_theta_eval, product_formula_check, q, q_frac, NumberField, Place, PolyQ, Theta, Q,
};
use descent_forge::oracle;
use descent_forge::outer::{is_stable, lift_outer_action, supersolvable_filtration, OuterAction};
use descent_forge::Limits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn groups_upto(n: usize) -> Vec<FiniteGroup> {
    small_groups(n).into_iter().flatten().collect()
}

fn place() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Infinity),
        Just(Place::Prime(2)),
        Just(Place::Prime(3)),
        Just(Place::Prime(5)),
        Just(Place::Prime(7)),
        Just(Place::Prime(13)),
    ]
}

fn rational() -> impl Strategy<Value = Q> {
    (-500i64..=500, 1i64..=500).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| q_frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symbol_symmetry_and_bimultiplicativity(a in rational(), a2 in rational(), b in rational(), v in place()) {
        let s = |x: &Q, y: &Q| hilbert_symbol(x, y, v).unwrap();
        prop_assert_eq!(s(&a, &b), s(&b, &a));
        prop_assert_eq!(s(&(&a * &a2), &b), s(&a, &b) * s(&a2, &b));
        prop_assert_eq!(s(&a, &-a.clone()), 1);
        prop_assert_eq!(s(&a, &(&a * &a)), 1);
        prop_assert!(product_formula_check(&a, &b).unwrap());
    }

    #[test]
    fn stability_ignores_inner_twists(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let groups = groups_upto(16);
        let g = &groups[rng.gen_range(0..groups.len())];
        let gamma = FiniteGroup::cyclic(2);
        let actions = common::all_actions(&gamma, g);
        let a = actions[rng.gen_range(0..actions.len())].to_outer();
        let twists: Vec<usize> = gamma.elements().map(|_| rng.gen_range(0..g.order())).collect();
        let twisted = a.with_inner_twists(&twists);
        prop_assert!(twisted.same_outer_class(&a));
        for n in g.normal_subgroups() {
            prop_assert_eq!(is_stable(&n, &a).unwrap(), is_stable(&n, &twisted).unwrap());
        }
        prop_assert_eq!(supersolvable_filtration(&a).class(), supersolvable_filtration(&twisted).class());
    }

    #[test]
    fn lifts_agree_with_outer_class(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let groups = groups_upto(12);
        let g = &groups[rng.gen_range(0..groups.len())];
        let gamma = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)][rng.gen_range(0..2)].clone();
        let actions = common::all_actions(&gamma, g);
        let a = actions[rng.gen_range(0..actions.len())].to_outer();
        let twists: Vec<usize> = gamma.elements().map(|_| rng.gen_range(0..g.order())).collect();
        let twisted = a.with_inner_twists(&twists);
        let lift = lift_outer_action(&twisted, 1_000_000).unwrap().expect("a genuine action exists in the class");
        prop_assert!(lift.to_outer().same_outer_class(&a));
        prop_assert!(lift.to_outer().is_genuine());
    }

    #[test]
    fn newton_consistency(coeffs in prop::collection::vec(-6i64..=6, 2..=5), elem in prop::collection::vec(-9i64..=9, 1..=5)) {
        // Eisenstein at 2 keeps these irreducible
        let mut f: Vec<i64> = coeffs.iter().map(|c| 2 * c).collect();
        f[0] = 2;
        f.push(1);
        let d = f.len() - 1;
        let field = NumberField::new(&PolyQ::from_ints(&f)).unwrap();
        let z = field.element(&PolyQ::from_ints(&elem));
        let cp = z.char_poly();
        prop_assert_eq!(&cp, &oracle::char_poly_faddeev(&z));
        let sign = if d.is_multiple_of(2) { q(1) } else { q(-1) };
        prop_assert_eq!(n_theta_eval(&z, &Theta::Product).unwrap(), sign * cp.coeff(0));
        prop_assert_eq!(n_theta_eval(&z, &Theta::Sum).unwrap(), -cp.coeff(d - 1));
        prop_assert_eq!(n_theta_eval(&z, &Theta::PowerSum(0)).unwrap(), q(d as i64));
        // p₂ = Tr(z²)
        let z2 = z.mul(&z);
        prop_assert_eq!(n_theta_eval(&z, &Theta::PowerSum(2)).unwrap(), z2.trace());
    }

    #[test]
    fn pushout_universal_property(a in 1i64..=12, b in 1i64..=12, t in -5i64..=5) {
        let trivial = FiniteGroup::cyclic(1);
        let z = GaloisLattice::trivial_free(&trivial, 1);
        let times = |n: i64| ModuleMap::new(&z, &z, IntMatrix::from_rows(&[vec![n]], 1)).unwrap();
        let (l, p) = (times(a), times(b));
        let po = pushout(&l, &p).unwrap();
        let (f, g) = (times(b * t), times(a * t));
        let h = po.factor(&l, &p, &f, &g).unwrap();
        prop_assert!(h.after(&po.from_l).unwrap().same_map(&f));
        prop_assert!(h.after(&po.from_p).unwrap().same_map(&g));
        prop_assert!(po.from_l.after(&l).unwrap().same_map(&po.from_p.after(&p).unwrap()));
    }
}

#[test]
fn symbol_random_pairs_product_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let a = q_frac(rng.gen_range(1..=1000) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=1000));
        let b = q_frac(rng.gen_range(1..=1000) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=1000));
        assert!(product_formula_check(&a, &b).unwrap(), "({a}, {b})");
    }
}

#[test]
fn filtration_search_is_monotone() {
    // a stable filtration under an action is a filtration under the trivial action
    let gamma = FiniteGroup::cyclic(2);
    for g in groups_upto(16) {
        for a in common::all_actions(&gamma, &g) {
            let outer = a.to_outer();
            let with = supersolvable_filtration(&outer);
            let without = supersolvable_filtration(&OuterAction::trivial(&gamma, &g));
            if let Some(f) = &with.filtration {
                f.verify(&outer).unwrap();
                assert!(without.is_supersolvable());
                assert!(without.class().unwrap() <= f.class());
            }
        }
    }
}

#[test]
fn almost_complete_kernels_split() {
    let limits = Limits::default();
    for e in groups_upto(24) {
        for n in e.normal_subgroups() {
            if n.is_trivial() || n.is_whole() {
                continue;
            }
            let ext = GroupExtension::from_normal_subgroup(&e, &n).unwrap();
            let Some(section) = is_almost_complete(ext.kernel(), &limits).unwrap() else { continue };
            let (sp, _) = split_with_complete_kernel(&ext, &section).unwrap();
            assert!(sp.section().is_hom());
            assert!(ext.gamma().elements().all(|x| ext.proj().apply(sp.section().apply(x)) == x));
            assert_eq!(sp.complement().order(), ext.gamma().order());
        }
    }
}

#[test]
fn double_duals_and_resolutions() {
    for (name, m) in common::lattice_corpus() {
        if !m.is_torsion_free() {
            continue;
        }
        let iso = m.double_dual_iso().unwrap();
        assert!(iso.is_isomorphism(), "{name}");
        for g in m.gamma().elements() {
            assert_eq!(m.character(g), m.dual().unwrap().character(m.gamma().inv(g)), "{name}");
        }
    }
}

