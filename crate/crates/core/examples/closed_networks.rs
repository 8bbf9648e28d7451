//! Evaluating closed trivalent networks built from Jones–Wenzl clasps.
//!
//! ```bash
//! cargo run -p anfield --release --example closed_networks
//! ```

use anfield::tl::network::{evaluate_closed_network, TrivalentBuilder};
use anfield::tl::RationalFunction;

fn main() -> anfield::Result<()> {
    let d = RationalFunction::delta();
    let mut b = TrivalentBuilder::new(&d);

    for (a, bb, c) in [(1, 1, 0), (1, 1, 2), (2, 2, 2), (3, 2, 1), (3, 3, 4)] {
        let net = b.theta(a, bb, c)?;
        println!("theta({a},{bb},{c}) = {}", evaluate_closed_network(&net, &d)?);
    }

    // tr(I_e^† H_f) and tr(I_e^† I_e) for the four-point space 1 ⊗ 1 → 1 ⊗ 1
    for e in [0, 2] {
        for f in [0, 2] {
            let tet = evaluate_closed_network(&b.tetrahedral_network(1, 1, 1, 1, e, f)?, &d)?;
            println!("Tet(1,1,1,1; e={e}, f={f}) = {tet}");
        }
        let gram = evaluate_closed_network(&b.gram_network(1, 1, 1, 1, e, e)?, &d)?;
        println!("Gram(e={e}) = {gram}");
    }
    Ok(())
}
