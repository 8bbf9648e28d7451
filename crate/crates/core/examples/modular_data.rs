//! S and T matrices, R coefficients, modularity and conductors.
//!
//! ```bash
//! cargo run -p anfield --example modular_data
//! ```

use anfield::modular::{
    conductor, modularity_rank, predicted_conductor, r_coeff, s_matrix, t_matrix, BraidingParams,
};

fn main() -> anfield::Result<()> {
    let bp = BraidingParams::plus(2, 1)?;
    println!("{bp}: s = {}, δ ≈ {:.6}", bp.s(), bp.delta().approx_f64().0);
    for row in s_matrix(&bp) {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>9.5}", x.approx_f64().0)).collect();
        println!("  S: {}", cells.join(" "));
    }
    let t: Vec<String> = t_matrix(&bp).iter().map(|x| x.to_string()).collect();
    println!("  T = diag({})", t.join(", "));
    println!("  R(1,1;0) = {}, R(1,1;2) = {}", r_coeff(&bp, 1, 1, 0)?, r_coeff(&bp, 1, 1, 2)?);

    for k in 1..=5u32 {
        let ranks: Vec<String> = (1..4 * (k + 2))
            .filter_map(|ell| BraidingParams::plus(k, ell as i64).ok())
            .map(|b| format!("{}:{}", b.ell(), modularity_rank(&b)))
            .collect();
        println!("k={k} S-ranks by ell: {}", ranks.join(" "));
    }

    for k in 2..=4u32 {
        let b = BraidingParams::plus(k, 1)?;
        println!("k={k} ell=1 conductor {} (table {})", conductor(&b), predicted_conductor(k, 1));
    }
    Ok(())
}
