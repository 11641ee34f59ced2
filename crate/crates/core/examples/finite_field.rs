//! Arithmetic in GF(p^k): tables, inverses and the Frobenius automorphisms.
//!
//!     cargo run --example finite_field -- 3 2

use kleingeo::{Elem, Field};

fn main() -> kleingeo::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (p, k) = match args[..] {
        [p, k] => (p, k as u32),
        _ => (2, 2),
    };
    let f = Field::new(p, k)?;
    println!(
        "GF({p}^{k}), modulus (constant term first): {:?}",
        f.modulus()
    );

    print!("  *  |");
    for b in f.elements() {
        print!("{:>3}", b.0);
    }
    println!();
    for a in f.elements() {
        print!("{:>4} |", a.0);
        for b in f.elements() {
            print!("{:>3}", f.mul(a, b).0);
        }
        println!();
    }

    for a in f.nonzero() {
        let inv = f.inv(a)?;
        assert_eq!(f.mul(a, inv), Elem::ONE);
        println!("{:>3} = {:?} has inverse {}", a.0, f.coefficients(a), inv.0);
    }
    for aut in f.automorphisms()? {
        let table: Vec<u32> = aut.table(&f).iter().map(|x| x.0).collect();
        println!("x -> x^({p}^{}): {:?}", aut.exponent, table);
    }
    Ok(())
}
