//! 6j symbols: the closed formula, the cached table, and the change-of-basis oracle.
//!
//! ```bash
//! cargo run -p anfield --release --example six_j_symbols
//! ```

use anfield::fusion::{six_j, sixj_oracle_column, CategoryParams, SixJLabels, SixJTable};

fn main() -> anfield::Result<()> {
    let p = CategoryParams::plus(2, 1)?;

    // H_f = Σ_e {1 1 e; 1 1 f} I_e for the four-point space of X_1
    for f in [0, 2] {
        let column = sixj_oracle_column(&p, 1, 1, 1, 1, f)?;
        for (e, oracle) in column {
            let formula = six_j(&p, &SixJLabels::new(1, 1, e, 1, 1, f))?;
            println!("{{1 1 {e}; 1 1 {f}}} = {formula}   oracle agrees: {}", formula == oracle);
        }
    }

    let zero = six_j(&p, &SixJLabels::new(1, 1, 1, 1, 1, 0))?;
    println!("inadmissible labels give {zero}");

    let table = SixJTable::new(&CategoryParams::plus(5, 1)?)?;
    println!("level 5 table: {} nonzero-label entries", table.len());
    Ok(())
}
