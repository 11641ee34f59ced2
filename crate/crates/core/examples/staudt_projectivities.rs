//! Semilinear maps, their projectivizations, and recovering (A, h) from a
//! permutation.

use kleingeo::linalg::Matrix;
use kleingeo::staudt::{decompose_staudt, pgammal_group, pgl_group, projectivize, SemilinearMap};
use kleingeo::{Elem, Field, FieldAut, Limits, ProjSpace};

fn main() -> kleingeo::Result<()> {
    let space = ProjSpace::new(Field::new(2, 2)?, 1)?;
    let f = space.field();
    let a = Matrix::from_rows(&[vec![Elem(1), Elem(2)], vec![Elem(0), Elem(1)]]);
    let frob = SemilinearMap::new(Matrix::identity(2), FieldAut::new(1));
    let lin = SemilinearMap::linear(a);
    let composite = lin.compose(f, &frob);

    for (name, map) in [
        ("A", &lin),
        ("frobenius", &frob),
        ("A . frobenius", &composite),
    ] {
        let phi = projectivize(&space, map)?;
        let back = decompose_staudt(&space, &phi)?.expect("semilinear");
        println!(
            "{name:>14}: {phi}  decomposes as h = x^(2^{}), A = {:?}",
            back.aut.exponent,
            back.matrix
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| e.0).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
    }

    let limits = Limits::default();
    let pgl = pgl_group(&space, &limits, 1)?;
    let pgammal = pgammal_group(&space, &limits, 1)?;
    println!(
        "|PGL(2,4)| = {}, |PGammaL(2,4)| = {}",
        pgl.order(),
        pgammal.order()
    );
    Ok(())
}
