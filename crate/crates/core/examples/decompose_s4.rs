//! Decompose every element of the 2-local Σ4 locality and verify each
//! certificate. Pass an element, e.g. "(1 2 3)", to see one certificate.
use std::sync::Arc;

use localities::alperin::{verify_certificate_with, Decomposer};
use localities::{library, DeltaSpec, Locality};

fn main() -> localities::Result<()> {
    let l = Arc::new(Locality::build(Arc::new(library::builtin("S4")?), 2, &DeltaSpec::All)?);
    let g = l.ambient();
    let d = Decomposer::new(l.clone());
    let ess: Vec<Vec<String>> = d.essentials().iter().map(|p| g.subgroup_labels(p)).collect();
    println!("S = {:?}\nessentials = {ess:?}", g.subgroup_labels(l.s()));
    if let Some(text) = std::env::args().nth(1) {
        let c = d.decompose(g.element(&text)?)?;
        for f in &c.factors {
            println!("  x = {} in N_L(Q), Q = {:?}", g.label(f.x), g.subgroup_labels(&f.q));
        }
        println!("{}", verify_certificate_with(&l, d.essentials(), &c));
        return Ok(());
    }
    let mut longest = 0;
    for x in l.elements().iter() {
        let c = d.decompose(x)?;
        assert!(verify_certificate_with(&l, d.essentials(), &c).passed());
        longest = longest.max(c.factors.len());
    }
    println!("{} certificates verified, longest has {longest} factors", l.size());
    Ok(())
}
