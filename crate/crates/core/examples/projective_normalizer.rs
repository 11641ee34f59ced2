//! The normalizer of PGL in the symmetric group on the points is PGammaL.
//!
//!     cargo run --release --example projective_normalizer -- 2 3 1
//!
//! A fourth argument switches to the sampled strategy with that many samples.

use kleingeo::klein::{automorphism_group, projective_geometry, Search};
use kleingeo::{Field, Limits};

fn main() -> kleingeo::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, k, n, search) = match args[..] {
        [p, k, n] => (p, k as u32, n as usize, Search::Brute),
        [p, k, n, samples] => (
            p,
            k as u32,
            n as usize,
            Search::Sampled {
                samples: samples as usize,
                seed: 0,
            },
        ),
        _ => (2, 2, 1, Search::Brute),
    };
    let limits = Limits::default();
    let geom = projective_geometry(Field::new(p, k)?, n, &limits, 1)?;
    let rep = automorphism_group(&geom, search, &limits, 1)?;
    println!("{} ({} points)", rep.geometry.label, rep.geometry.degree);
    println!("  |PGL|     = {}", rep.orders.structural);
    println!("  |PGammaL| = {}", rep.orders.claimed);
    match (rep.orders.normalizer, &rep.sampling) {
        (Some(n), _) => println!(
            "  |N|       = {n} ({:?} conjugates of PGL)",
            rep.orders.conjugates
        ),
        (None, Some(s)) => println!(
            "  sampled {} permutations: {} outside PGammaL, {} normalize",
            s.samples, s.outside_claimed, s.normalizing
        ),
        _ => {}
    }
    println!("  passed: {}", rep.passed);
    Ok(())
}
