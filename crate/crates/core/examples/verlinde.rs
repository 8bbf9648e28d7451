//! Fusion multiplicities recovered from the S matrix.
//!
//! ```bash
//! cargo run -p anfield --example verlinde
//! ```

use anfield::modular::{s_matrix, verlinde_check, verlinde_check_matrix, BraidingParams};
use anfield::CyclotomicNumber;

fn main() -> anfield::Result<()> {
    for (k, ell) in [(2, 1), (4, 1), (6, 1), (3, 2)] {
        let bp = BraidingParams::plus(k, ell)?;
        let r = verlinde_check(&bp)?;
        println!("{bp}: {} triples, passed {}", r.checked, r.passed());
    }

    // odd k with odd ℓ is not modular
    println!("k=3 ell=1: {:?}", verlinde_check(&BraidingParams::plus(3, 1)?).err());

    let bp = BraidingParams::plus(2, 1)?;
    let mut s = s_matrix(&bp);
    s[1][1] = &s[1][1] + &CyclotomicNumber::one(bp.field_order());
    let r = verlinde_check_matrix(&bp, &s)?;
    println!("perturbed S: {} failing triples", r.failures.len());
    Ok(())
}
