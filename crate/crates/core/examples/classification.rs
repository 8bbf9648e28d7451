//! The classification tables: categories, equivalences, invertible objects,
//! auto-equivalences, algebra objects and Drinfeld centres.
//!
//! ```bash
//! cargo run -p anfield --example classification
//! ```

use anfield::classification::{
    a2_categories, algebra_objects, autoequivalence_groups, braided_classes, descriptors, drinfeld_centre,
    enumerate_monoidal, invertible_subcategory, monoidal_equiv,
};
use anfield::fusion::CategoryParams;
use anfield::modular::BraidingParams;

fn main() -> anfield::Result<()> {
    for (name, ells) in a2_categories() {
        println!("{name}: ell = {ells:?}");
    }

    for k in [2, 3, 4, 10] {
        let ms: Vec<u32> = enumerate_monoidal(k).iter().map(|e| e.m).collect();
        println!("\nk={k}: monoidal m = {ms:?}");
        println!("  braided classes: {:?}", braided_classes(k));
        let (t, b) = autoequivalence_groups(k);
        println!("  Aut: tensor {t}, braided {b}");
        for &m in &ms {
            let p = CategoryParams::plus(k, m as i64)?;
            println!("  m={m}: Z = {}", drinfeld_centre(&p));
            for a in algebra_objects(&p) {
                println!("    A = 1+f{:?} -> {} ({:?})", &a.summands[1..], a.module_category, a.commutative);
            }
        }
        let bp = BraidingParams::plus(k, 1)?;
        println!("  Inv(C^br_{{{k},1}}) = {}", invertible_subcategory(&bp)?);
    }

    println!("\nmonoidal_equiv(3, 1, 9) = {}", monoidal_equiv(3, 1, 9));
    let d = descriptors(&CategoryParams::plus(6, 1)?);
    println!("k=6: {} pivotal structures, spherical {}, depth {:?}", d.pivotal_structures, d.spherical, d.equivariantisation_depth);
    Ok(())
}
