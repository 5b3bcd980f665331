//! Primitive elements by exact linear algebra, degree by degree.
//!
//!     cargo run --example primitives -- 6

use fdb::hopf::{coproduct_poly, primitive_space};
use fdb::poly::TensorElement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let upto: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    for d in 1..=upto {
        let basis = primitive_space(d)?;
        println!("degree {d}: dimension {}", basis.len());
        for p in basis {
            assert_eq!(coproduct_poly(&p)?, TensorElement::primitive(&p));
            println!("  {p}");
        }
    }
    Ok(())
}
