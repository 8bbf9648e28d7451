//! Planar diagrams and the Temperley–Lieb calculus over a formal loop value.
//!
//! ```bash
//! cargo run -p anfield --example temperley_lieb
//! ```

use anfield::tl::{PlanarDiagram, RationalFunction, TLMorphism};

fn main() -> anfield::Result<()> {
    let d = RationalFunction::delta();

    for n in 0..=6 {
        println!("TL_{n} has {} diagrams", PlanarDiagram::enumerate(n, n).len());
    }

    let circle = TLMorphism::cap(&d).compose(&TLMorphism::cup(&d))?;
    println!("cap ∘ cup = {}", circle.scalar_value()?);

    let zigzag = TLMorphism::cap(&d)
        .tensor(&TLMorphism::identity(1, &d))
        .compose(&TLMorphism::identity(1, &d).tensor(&TLMorphism::cup(&d)))?;
    println!("zig-zag is the identity: {}", zigzag == TLMorphism::identity(1, &d));

    let e1 = TLMorphism::e(3, 1, &d)?;
    let e2 = TLMorphism::e(3, 2, &d)?;
    println!("e1 e1 = δ e1: {}", e1.compose(&e1)? == e1.scale(&d));
    println!("e1 e2 e1 = e1: {}", e1.compose(&e2)?.compose(&e1)? == e1);

    let x = e1.add(&e2)?;
    println!("tr(e1 + e2) = {}", x.markov_trace()?);
    println!("right partial trace of e1 + e2:");
    for (diagram, c) in x.partial_trace_right()?.terms() {
        println!("  {c}  {:?}", diagram.pairs());
    }
    Ok(())
}
