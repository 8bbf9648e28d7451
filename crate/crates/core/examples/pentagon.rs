//! The pentagon identity over a whole 6j table, and catching an injected fault.
//!
//! ```bash
//! cargo run -p anfield --release --example pentagon
//! ```

use anfield::fusion::{pentagon_check_table, CategoryParams, SixJLabels, SixJTable};
use anfield::CyclotomicNumber;

fn main() -> anfield::Result<()> {
    for (k, m) in [(1, 1), (2, 1), (3, 2), (4, 1)] {
        let table = SixJTable::new(&CategoryParams::plus(k, m)?)?;
        let report = pentagon_check_table(&table);
        println!("k={k} m={m}: {} labellings, passed {}", report.checked, report.passed());
    }

    let mut table = SixJTable::new(&CategoryParams::plus(3, 1)?)?;
    table.perturb(&SixJLabels::new(1, 1, 2, 1, 1, 2), &CyclotomicNumber::one(1));
    let report = pentagon_check_table(&table);
    println!("perturbed: {} failures, first {:?}", report.failures, report.counterexamples.first());
    Ok(())
}
