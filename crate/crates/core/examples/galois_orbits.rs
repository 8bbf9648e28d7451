//! Galois conjugation of braided categories and the orbit partition.
//!
//! ```bash
//! cargo run -p anfield --example galois_orbits
//! ```

use anfield::modular::{galois_conjugate, galois_orbits, BraidingParams};

fn main() -> anfield::Result<()> {
    for k in 2..=5 {
        println!("k={k}: {:?}", galois_orbits(k));
    }
    let bp = BraidingParams::plus(3, 1)?;
    for j in [1, 3, 7, 9] {
        let c = galois_conjugate(&bp, j)?;
        println!("σ_{j}: ell 1 -> {} (s -> {})", c.ell(), c.s());
    }
    Ok(())
}
