//! Reading the field automorphism off a normalizing permutation of the line.

use kleingeo::klein::lemma2_campaign;
use kleingeo::perm::Permutation;
use kleingeo::staudt::{extract_field_aut, frobenius_power_of, pgammal_group, verify_lemma2};
use kleingeo::{Field, Limits, ProjSpace};

fn main() -> kleingeo::Result<()> {
    let limits = Limits::default();
    let space = ProjSpace::new(Field::new(3, 2)?, 1)?;
    let pgammal = pgammal_group(&space, &limits, 1)?;
    for phi in pgammal.elements().iter().step_by(61).take(6) {
        let h = extract_field_aut(&space, phi)?;
        let frob = frobenius_power_of(&space, &h)?;
        println!(
            "{phi}: h = {:?} = x^(3^{}), checks {:?}",
            h.iter().map(|e| e.0).collect::<Vec<_>>(),
            frob.map(|a| a.exponent).unwrap(),
            verify_lemma2(&space, phi, &h)?
        );
    }

    let swap = Permutation::from_cycles(space.len(), &[&[8, 9]])?;
    let h = extract_field_aut(&space, &swap)?;
    println!(
        "{swap} is not in PGammaL: checks {:?}",
        verify_lemma2(&space, &swap, &h)?
    );

    let rep = lemma2_campaign(space.field().clone(), &limits, 1)?;
    println!(
        "{}: {} of {} elements yield a Frobenius power and pass every check",
        rep.geometry.label, rep.all_flags_true, rep.checked
    );
    Ok(())
}
