//! Points, lines and the affine patch of P_n(F_q).
//!
//!     cargo run --example projective_space -- 3 1 2

use kleingeo::{Field, ProjSpace};

fn main() -> kleingeo::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, k, n) = match args[..] {
        [p, k, n] => (p, k as u32, n as usize),
        _ => (2, 1, 2),
    };
    let space = ProjSpace::new(Field::new(p, k)?, n)?;
    println!(
        "P_{n}(F_{}) has {} points",
        space.field().order(),
        space.len()
    );
    for id in 0..space.len() {
        let c: Vec<u32> = space.coords(id).iter().map(|e| e.0).collect();
        println!("  {id:>3}: {c:?}");
    }
    if n >= 2 {
        let lines = space.lines();
        println!("{} lines of {} points each", lines.len(), lines[0].len());
        for line in lines.iter().take(10) {
            println!("  {line:?}");
        }
        println!(
            "points 0, 1, 2 collinear: {}",
            space.collinear_rank(0, 1, 2)?
        );
    }
    let patch = space.affine_patch()?;
    println!(
        "affine patch x0 != 0: {} points, {} at infinity {:?}",
        patch.len(),
        patch.infinity().len(),
        patch.infinity()
    );
    Ok(())
}
