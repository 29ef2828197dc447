//! Complete and almost complete kernels, and the splitting they force.

use descent_forge::extension::{is_almost_complete, is_complete, split_with_complete_kernel, GroupExtension};
use descent_forge::group::FiniteGroup;
use descent_forge::Limits;

fn main() -> descent_forge::Result<()> {
    let limits = Limits::default();
    for n in 3..=6 {
        println!("S{n} complete: {}", is_complete(&FiniteGroup::symmetric(n), &limits)?);
    }
    let a5 = FiniteGroup::alternating(5);
    let section = is_almost_complete(&a5, &limits)?.expect("A5 is almost complete");
    section.verify()?;
    println!("A5: |Out| = {}, section verified", section.aut.out_order());

    let s5 = FiniteGroup::symmetric(5);
    let kernel = s5.normal_subgroups().into_iter().find(|h| h.order() == 60).expect("A5 in S5");
    let ext = GroupExtension::from_normal_subgroup(&s5, &kernel)?;
    let section = is_almost_complete(ext.kernel(), &limits)?.expect("kernel is A5");
    let (splitting, centralizing) = split_with_complete_kernel(&ext, &section)?;
    println!("S5 -> C2 splits with complement {:?} (centralizing: {centralizing})", splitting.complement().elements());
    Ok(())
}
