//! Shuffles, deconcatenation and the image Γ_n of δ_n in the shuffle
//! algebra.
//!
//!     cargo run --example shuffle_gamma -- 4

use fdb::words::{check_hopf_embedding, gamma_closed, gamma_recursive, shuffle_product, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let upto: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let (u, v) = (Word::new(vec![1, 2])?, Word::new(vec![3])?);
    println!("u^{u} u^{v} = {}", shuffle_product(&u, &v));
    for n in 1..=upto {
        let g = gamma_closed(n)?;
        assert_eq!(g, gamma_recursive(n)?);
        println!("Γ_{n} = {g}");
    }
    println!("{}", check_hopf_embedding(upto.min(7))?);
    Ok(())
}
