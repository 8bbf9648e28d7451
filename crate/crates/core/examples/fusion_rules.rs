//! Fusion rules, dimensions and the global dimension.
//!
//! ```bash
//! cargo run -p anfield --example fusion_rules
//! ```

use anfield::fusion::{fuse, global_dim, global_dim_by_sum, qdim, CategoryParams, PivotalSign};

fn main() -> anfield::Result<()> {
    let k = 4;
    println!("fusion at level {k}:");
    for i in 0..=k {
        let row: Vec<String> = (0..=k).map(|j| format!("{:?}", fuse(k, i, j))).collect();
        println!("  X_{i} ⊗ X_j: {}", row.join(" "));
    }

    for sign in [PivotalSign::Plus, PivotalSign::Minus] {
        let p = CategoryParams::new(k, 1, sign)?;
        let dims: Vec<String> = (0..=k).map(|n| format!("{:.4}", qdim(&p, n).unwrap().approx_f64().0)).collect();
        println!("{p}: dims [{}]", dims.join(", "));
    }

    let p = CategoryParams::plus(k, 1)?;
    let closed = global_dim(&p);
    println!("global dimension {closed}, equals Σ dim²: {}", closed == global_dim_by_sum(&p));
    Ok(())
}
