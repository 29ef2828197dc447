//! Permutation resolutions of Galois lattices and the Kummer comparison.

use descent_forge::group::FiniteGroup;
use descent_forge::lattice::{kummer_compare, norm_one_lattice, torus_resolution, GaloisLattice};

fn main() -> descent_forge::Result<()> {
    let c2 = FiniteGroup::cyclic(2);
    let modules = [
        ("sign", GaloisLattice::sign_module()),
        ("Z[C2]", GaloisLattice::regular(&c2)),
        ("norm-one C3", norm_one_lattice(&FiniteGroup::cyclic(3))),
        ("Z/4", GaloisLattice::cyclic_torsion(&c2, 4)),
    ];
    for (name, m) in &modules {
        let r = torus_resolution(m)?;
        r.verify()?;
        let k = r.ranks();
        println!("{name}: L {} K {} P {} C {} S {}", k.l, k.k, k.p, k.c, k.s);
    }
    for n in [2, 5, 12] {
        let report = kummer_compare(n)?;
        println!("Z/{n}: matches 0 -> Z -> Z -> Z/{n} -> 0: {}", report.isomorphic);
    }
    Ok(())
}
