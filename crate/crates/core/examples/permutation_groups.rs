//! Permutations, generated groups and a brute-force normalizer.

use kleingeo::group::{normalizer_brute, normalizes};
use kleingeo::perm::{lex_unrank, Permutation};
use kleingeo::PermGroup;

fn main() -> kleingeo::Result<()> {
    let a = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])?;
    let b = Permutation::from_cycles(5, &[&[1, 4], &[2, 3]])?;
    println!(
        "a = {a}, b = {b}, ab = {}, a^-1 = {}",
        a.compose(&b),
        a.inverse()
    );
    println!("cycle type of ab: {:?}", a.compose(&b).cycle_type());

    // the dihedral group of the pentagon
    let d5 = PermGroup::generate(5, &[a.clone(), b.clone()], 1000)?;
    println!("|D5| = {}", d5.order());

    let n = normalizer_brute(&d5, 1_000_000, 1)?;
    println!(
        "|N_S5(D5)| = {} generated by {:?}",
        n.order(),
        n.generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );

    let c = lex_unrank(5, 7);
    println!(
        "{c} (lex rank {}) normalizes D5: {}",
        c.lex_rank(),
        normalizes(&c, &d5)?
    );
    Ok(())
}
