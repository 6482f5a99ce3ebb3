//! Transporter categories: objects, hom-set sizes, the essential
//! subcategory, and morphism decompositions through it.
use std::sync::Arc;

use localities::transporter::{build_transporter, decompose_morphism, t_essential_objects, verify_morphism_decomposition};
use localities::{library, DeltaSpec, Locality};

fn main() -> localities::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let l = Arc::new(Locality::build(Arc::new(library::builtin(&name)?), 2, &DeltaSpec::All)?);
    let t = build_transporter(l);
    let g = t.group();
    println!("{name}: {} objects, {} morphisms", t.objects().len(), t.morphism_count());
    println!("category laws: {}", t.verify_category_laws());
    let ess = t_essential_objects(&t)?;
    for p in &ess {
        println!("  T^e object {:?}", g.subgroup_labels(p));
    }
    let mut checked = 0;
    for (i, p) in t.objects().iter().enumerate() {
        for (j, q) in t.objects().iter().enumerate() {
            for &x in t.hom(i, j) {
                let f = decompose_morphism(&t, p, q, x)?;
                assert!(verify_morphism_decomposition(&t, &ess, (p, q, x), &f).passed());
                checked += 1;
            }
        }
    }
    println!("{checked} morphisms factor through T^e");
    Ok(())
}
