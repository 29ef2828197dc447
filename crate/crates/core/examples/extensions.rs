//! Splittings of S3 -> C2, the cocycles between them, and nonabelian H1.

use descent_forge::extension::{h1, twist_action, GroupExtension};
use descent_forge::group::{Automorphism, FiniteGroup};
use descent_forge::outer::LiftedAction;

fn main() -> descent_forge::Result<()> {
    let s3 = FiniteGroup::symmetric(3);
    let a3 = s3.normal_subgroups().into_iter().find(|h| h.order() == 3).expect("A3");
    let ext = GroupExtension::from_normal_subgroup(&s3, &a3)?;
    let splittings = ext.splittings(1_000_000)?;
    let classes = ext.splitting_classes(1_000_000)?;
    println!("S3 over C2: {} splittings in {} class(es)", splittings.len(), classes.len());

    let (s, s2) = (&splittings[0], &splittings[1]);
    let c = ext.difference_cocycle(s, s2)?;
    println!("difference cocycle values {:?}", c.values());
    let twisted = twist_action(&ext.action_through(s)?, &c)?;
    println!("twisting by it gives the action through s2: {}", twisted == ext.action_through(s2)?);

    let c2 = FiniteGroup::cyclic(2);
    let c3 = FiniteGroup::cyclic(3);
    let inversion = Automorphism::new(&c3, vec![0, 2, 1])?;
    let a = LiftedAction::new(&c2, &c3, vec![Automorphism::identity(&c3), inversion])?;
    let h = h1(&a, 1_000_000)?;
    println!("H1(C2, C3 with inversion): {} class(es) from {} cocycles", h.len(), h.cocycle_count);
    let h = h1(&LiftedAction::trivial(&c2, &c2), 1_000_000)?;
    println!("H1(C2, C2 trivial): {} class(es)", h.len());
    Ok(())
}
