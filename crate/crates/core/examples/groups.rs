//! Basic invariants of a few small groups.

use descent_forge::group::catalog::describe;
use descent_forge::group::{AutomorphismGroup, FiniteGroup};
use descent_forge::Limits;

fn main() -> descent_forge::Result<()> {
    // S3 from two permutations of {0, 1, 2}
    let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], 5040)?;
    let groups = [
        ("S3", s3),
        ("D4", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
        ("A5", FiniteGroup::alternating(5)),
    ];
    for (name, g) in &groups {
        let mut sizes = g.class_sizes();
        sizes.sort_unstable();
        let aut = AutomorphismGroup::compute(g, &Limits::default())?;
        let factors: Vec<String> = g.composition_factors().iter().map(describe).collect();
        println!("{name}: order {}, class sizes {sizes:?}", g.order());
        println!("  centre of order {}, {} normal subgroups", g.center().order(), g.normal_subgroups().len());
        println!("  |Aut| = {}, |Out| = {}", aut.order(), aut.out_order());
        println!("  composition factors {factors:?}");
    }
    Ok(())
}
