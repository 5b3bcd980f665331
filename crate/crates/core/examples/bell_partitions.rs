//! Bell polynomials, set partitions and the partition-lattice picture of
//! the coproduct.
//!
//!     cargo run --example bell_partitions -- 5

use fdb::partitions::{
    bell_number, bell_partial, enumerate_partitions, groupoid_cardinality, incidence_coproduct, stirling2,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    for k in 1..=n {
        println!("{:?}    S({n},{k}) = {}", bell_partial(n, k)?, stirling2(n, k)?);
    }
    println!("Bell({n}) = {}", bell_number(n));
    for p in enumerate_partitions(n.min(4))? {
        println!("  {p}");
    }
    println!("Δ from the partition lattice: {}", incidence_coproduct(n)?);
    for m in [5, 10, 15, 20] {
        let c = groupoid_cardinality(m);
        println!("Σ_(n<={m}) Bell(n)/n! = {:.12} (error {:.2e})", c.decimal, c.error);
    }
    Ok(())
}
