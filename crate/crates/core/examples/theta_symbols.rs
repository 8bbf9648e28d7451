//! θ symbols from the closed formula, checked against the diagram calculus.
//!
//! ```bash
//! cargo run -p anfield --release --example theta_symbols
//! ```

use anfield::fusion::{admissible, theta_oracle, theta_symbol, CategoryParams, PivotalSign};

fn main() -> anfield::Result<()> {
    for sign in [PivotalSign::Plus, PivotalSign::Minus] {
        let p = CategoryParams::new(3, 1, sign)?;
        println!("{p}");
        for a in 0..=3 {
            for b in a..=3 {
                for c in (b..=3).filter(|&c| admissible(3, a, b, c)) {
                    let v = theta_symbol(&p, a, b, c)?;
                    let agrees = v == theta_oracle(&p, a, b, c)?;
                    println!("  θ({a},{b},{c}) ≈ {:>9.5}  network agrees: {agrees}", v.approx_f64().0);
                }
            }
        }
    }
    Ok(())
}
