//! Coproducts and antipodes of the first generators, and a sweep of the
//! Hopf algebra identities.
//!
//!     cargo run --example coproduct -- 6

use fdb::hopf::{antipode, antipode_recursive, check_hopf_axioms, coproduct};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let upto: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    for n in 2..=upto {
        println!("Δa_{n} = {}", coproduct(n)?);
    }
    println!();
    for n in 2..=upto {
        let s = antipode(n)?;
        assert_eq!(s, antipode_recursive(n)?);
        println!("S(a_{n}) = {s}");
    }
    println!();
    println!("{}", check_hopf_axioms(upto)?);
    Ok(())
}
