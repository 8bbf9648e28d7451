//! Exact arithmetic in cyclotomic fields.
//!
//! ```bash
//! cargo run -p anfield --example cyclotomic_arithmetic
//! ```

use anfield::cyclotomic::{cyclotomic_polynomial, root_of_unity};
use anfield::CyclotomicNumber;

fn main() -> anfield::Result<()> {
    for n in [1, 4, 12, 15] {
        println!("Phi_{n}(x) = {}", cyclotomic_polynomial(n));
    }

    let i = root_of_unity(4, 1);
    println!("i * i = {}", &i * &i);

    // the golden ratio identity in Q(zeta_5)
    let z = |j| root_of_unity(5, j);
    let phi = &z(1) + &z(4);
    let psi = &z(2) + &z(3);
    println!("(z5 + z5^4)(z5^2 + z5^3) = {}", &phi * &psi);

    let z12 = root_of_unity(12, 1);
    println!("galois(z12, 5) = {}", z12.galois_apply(5)?);
    println!("z12^4 has order {:?}", root_of_unity(12, 4).multiplicative_order());

    let sqrt2 = &root_of_unity(8, 1) + &root_of_unity(8, -1);
    let a = sqrt2.approx_complex(30);
    println!("z8 + z8^-1 ≈ {} + {}i", a.re, a.im);

    let x = &sqrt2 + &CyclotomicNumber::one(8);
    let inv = x.inverse()?;
    println!("1/(1 + sqrt 2) = {inv}, check: {}", &x * &inv);

    // values of different orders compare after promotion
    let omega = root_of_unity(3, 1);
    println!("z3 == z12^4: {}", omega == root_of_unity(12, 4));
    Ok(())
}
