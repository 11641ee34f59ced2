//! Line-preserving bijections of the Fano plane.

use kleingeo::staudt::{collineations, decompose_staudt, pgl_group};
use kleingeo::{Field, Limits, ProjSpace};

fn main() -> kleingeo::Result<()> {
    let space = ProjSpace::new(Field::new(2, 1)?, 2)?;
    println!("lines: {:?}", space.lines());
    let found = collineations(&space)?;
    let pgl = pgl_group(&space, &Limits::default(), 1)?;
    println!(
        "{} collineations; equal to PGL(3,2): {}",
        found.len(),
        found == pgl.elements()
    );
    let g = &found[found.len() / 2];
    let f = decompose_staudt(&space, g)?.expect("collineations are semilinear");
    let rows: Vec<Vec<u32>> = f
        .matrix
        .rows()
        .iter()
        .map(|r| r.iter().map(|e| e.0).collect())
        .collect();
    println!("{g} comes from the matrix {rows:?}");
    Ok(())
}
