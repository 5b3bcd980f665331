//! Products in the graded dual and the commutators of the b'_n.
//!
//!     cargo run --example graded_dual

use fdb::dual::{b_bracket, dual_product, DualFunctional};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, m) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        println!("a'_{n} a'_{m} = {}", dual_product(n, m)?);
    }
    for n in 1..=3 {
        println!("b'_{n} = {}", DualFunctional::b_prime(n)?);
    }
    for n in 1..=3 {
        for m in n + 1..=4 {
            println!("[b'_{n}, b'_{m}] = {}", b_bracket(n, m)?);
        }
    }
    Ok(())
}
