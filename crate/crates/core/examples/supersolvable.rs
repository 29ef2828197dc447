//! Stable filtrations with cyclic steps, with and without an outer action.

use descent_forge::group::{Automorphism, FiniteGroup};
use descent_forge::outer::{supersolvable_filtration, OuterAction};

fn main() -> descent_forge::Result<()> {
    let c1 = FiniteGroup::cyclic(1);
    for (name, g) in [("S3", FiniteGroup::symmetric(3)), ("Q8", FiniteGroup::quaternion()), ("S4", FiniteGroup::symmetric(4))] {
        let search = supersolvable_filtration(&OuterAction::trivial(&c1, &g));
        match &search.filtration {
            Some(f) => {
                let orders: Vec<usize> = f.chain().iter().map(|h| h.order()).collect();
                println!("{name}: class {}, chain orders {orders:?}", f.class());
            }
            None => println!("{name}: no filtration"),
        }
    }

    // C3 acting on C5 x C5 by (a, b) -> (-b, a - b) leaves no line stable
    let c5 = FiniteGroup::cyclic(5);
    let v = c5.direct_product(&c5);
    let rot = Automorphism::new(&v, v.elements().map(|x| ((5 - x % 5) % 5) * 5 + (x / 5 + 5 - x % 5) % 5).collect())?;
    let action = OuterAction::new(&FiniteGroup::cyclic(3), &v, vec![Automorphism::identity(&v), rot.clone(), rot.compose(&rot)])?;
    let trivial = supersolvable_filtration(&OuterAction::trivial(&c1, &v));
    let twisted = supersolvable_filtration(&action);
    println!("C5 x C5, trivial action: class {:?}", trivial.class());
    println!("C5 x C5, order-3 action: class {:?}", twisted.class());
    let frontier: Vec<usize> = twisted.frontier.iter().map(|h| h.order()).collect();
    println!("  stuck at subgroups of order {frontier:?}");
    Ok(())
}
