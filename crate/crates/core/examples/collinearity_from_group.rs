//! Collinearity detected from the group alone: P3 lies on the line P1P2
//! exactly when the orbit of P3 under the projectivities fixing P1 and P2 is
//! the rest of that line.

use kleingeo::klein::{h_set, lemma1_campaign, projective_geometry};
use kleingeo::{Field, Limits};

fn main() -> kleingeo::Result<()> {
    let geom = projective_geometry(Field::new(3, 1)?, 2, &Limits::default(), 1)?;
    let space = geom.projective_space().unwrap();
    for (a, b, c) in [(0, 1, 2), (0, 1, 4), (3, 5, 12)] {
        println!(
            "H_{{{a},{b}}}({c}) = {:?}; rank test says collinear: {}",
            h_set(&geom, a, b, c)?,
            space.collinear_rank(a, b, c)?
        );
    }
    let rep = lemma1_campaign(&geom)?;
    println!(
        "{}: {}/{} triples agree, {} collinear",
        rep.geometry.label, rep.agreements, rep.triples, rep.collinear
    );
    Ok(())
}
