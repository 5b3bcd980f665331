//! Series in two variables: composition, reversion, and the coloured
//! coproduct behind them.
//!
//!     cargo run --example coloured_series
//!     cargo run --example coloured_series -- f.json

use fdb::arith::rat;
use fdb::coloured::{
    check_coloured_axioms, coloured_convolution, coloured_coproduct, enumerate_coloured_partitions, nseries_compose,
    nseries_revert, MultiIndex, NSeries,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f: NSeries = match std::env::args().nth(1) {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        None => {
            // (t1 + t1², t2 + t1 t2)
            let mut f = NSeries::identity(2, 4)?;
            f.set(1, MultiIndex::new(vec![2, 0])?, rat(2))?;
            f.set(2, MultiIndex::new(vec![1, 1])?, rat(1))?;
            f
        }
    };
    let g = nseries_revert(&f)?;
    println!("f      = {}", serde_json::to_string(&f)?);
    println!("f^-1   = {}", serde_json::to_string(&g)?);
    println!("f∘f^-1 = {}", serde_json::to_string(&nseries_compose(&f, &g)?)?);
    assert_eq!(coloured_convolution(&g, &f)?, nseries_compose(&f, &g)?);

    let n = MultiIndex::new(vec![1, 1])?;
    for p in enumerate_coloured_partitions(&n, 1)? {
        println!("  {p}");
    }
    println!("ΔΠ^1_(2,1) = {}", coloured_coproduct(1, &MultiIndex::new(vec![2, 1])?)?);
    println!("{}", check_coloured_axioms(2, 3)?);
    Ok(())
}
