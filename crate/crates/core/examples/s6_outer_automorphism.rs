//! S6 acts on the six conjugates of PGL(2,5) inside it; the resulting map
//! S6 -> S6 is an automorphism that is not inner.

use kleingeo::perm::Permutation;
use kleingeo::s6::{build_outer_automorphism, OuterAutomorphism};

fn main() -> kleingeo::Result<()> {
    let outer = OuterAutomorphism::canonical()?;
    let samples: [&[&[usize]]; 3] = [&[&[0, 1]], &[&[0, 1, 2]], &[&[0, 1], &[2, 3], &[4, 5]]];
    for cycles in samples {
        let tau = Permutation::from_cycles(6, cycles)?;
        let img = outer.apply(&tau);
        println!(
            "F({tau}) = {img}  cycle type {:?} -> {:?}",
            tau.cycle_type(),
            img.cycle_type()
        );
    }
    let rep = build_outer_automorphism(1)?;
    println!("{:?}", rep.flags);
    Ok(())
}
