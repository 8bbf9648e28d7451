//! The canonical JSON form used by every emitter.
//!
//! ```bash
//! cargo run -p anfield --example json_output
//! ```

use anfield::json::{set_approx_digits, to_canonical_string};
use anfield::modular::{t_matrix, BraidingParams};

fn main() -> anfield::Result<()> {
    set_approx_digits(8);
    let bp = BraidingParams::plus(1, 4)?;
    println!("{}", to_canonical_string(&t_matrix(&bp)));
    Ok(())
}
