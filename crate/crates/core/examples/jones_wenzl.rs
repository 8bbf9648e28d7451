//! Jones–Wenzl projectors, symbolically and at a root of unity.
//!
//! ```bash
//! cargo run -p anfield --release --example jones_wenzl
//! ```

use anfield::tl::{jones_wenzl_at_level, Projectors, RationalFunction, TLMorphism};

fn main() -> anfield::Result<()> {
    let delta = RationalFunction::delta();
    let mut jw = Projectors::new(&delta);

    let f2 = jw.get(2)?;
    for (diagram, c) in f2.terms() {
        println!("f(2): {c:>12}  {:?}", diagram.pairs());
    }

    for n in 0..=6 {
        let f = jw.get(n)?;
        let idempotent = f.compose(&f)? == *f;
        let killed = (1..n).all(|i| {
            let e = TLMorphism::e(n, i, &delta).unwrap();
            e.compose(&f).unwrap().is_zero() && f.compose(&e).unwrap().is_zero()
        });
        println!(
            "f({n}): {:>3} terms, idempotent {idempotent}, killed by e_i {killed}, tr = {}",
            f.len(),
            f.markov_trace()?
        );
    }

    // at level k = 3 the trace of f(4) vanishes: that is the relation f(k+1) = 0
    let f4 = jones_wenzl_at_level(4, 3, 1)?;
    println!("level 3: tr f(4) = {}", f4.markov_trace()?);
    println!("level 3: f(5) -> {:?}", jones_wenzl_at_level(5, 3, 1).err());
    Ok(())
}
