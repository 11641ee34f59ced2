//! The affine group on F_q^n and its normalizer.

use kleingeo::klein::verify_theorem_affine;
use kleingeo::{Field, Limits};

fn main() -> kleingeo::Result<()> {
    let limits = Limits::default();
    for (p, k, n) in [(2, 2, 1), (5, 1, 1), (3, 1, 2), (2, 1, 2)] {
        let rep = verify_theorem_affine(Field::new(p, k)?, n, &limits, 1)?;
        println!(
            "{}: |Aff| = {}, restricted |PGammaL| = {}, |N| = {}{}",
            rep.geometry.label,
            rep.orders.structural,
            rep.orders.claimed,
            rep.orders.normalizer.unwrap(),
            rep.excluded_case
                .map(|r| format!(" ({r})"))
                .unwrap_or_default()
        );
    }
    Ok(())
}
