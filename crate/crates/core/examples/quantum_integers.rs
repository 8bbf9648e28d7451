//! Quantum integers in the s-convention and cancelling factorial ratios.
//!
//! ```bash
//! cargo run -p anfield --example quantum_integers
//! ```

use anfield::cyclotomic::{quantum_factorial_ratio, quantum_integer, FactorialRatio};
use anfield::fusion::CategoryParams;

fn main() -> anfield::Result<()> {
    // C_{2,1}: s = zeta_16^5 ... but any s with the same delta gives the same brackets
    let p = CategoryParams::plus(2, 1)?;
    let s = p.s();
    for n in 0..=5 {
        let v = quantum_integer(n, &s)?;
        println!("[{n}] = {v}  ≈ {:.6}", v.approx_f64().0);
    }

    // [4] = 0 at level 2, yet [5]!/[4]! = [5] is finite
    println!("[4]! = {}", quantum_factorial_ratio(&[4], &[], &s)?);
    println!("[5]!/[4]! = {}", quantum_factorial_ratio(&[5], &[4], &s)?);
    match quantum_factorial_ratio(&[], &[4], &s) {
        Err(e) => println!("1/[4]! -> {e}"),
        Ok(v) => println!("1/[4]! = {v}"),
    }

    let (num, den) = FactorialRatio::new(&[4], &[2, 2]).symbolic();
    println!("[4]!/([2]![2]!) = ({num}) / ({den})");
    Ok(())
}
