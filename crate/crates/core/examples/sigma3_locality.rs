//! The locality of Σ3 at p = 2: its essential subgroup and the
//! decomposition of a 3-cycle, which N_L(S) alone cannot produce.
use std::sync::Arc;

use localities::alperin::{essentials, verify_certificate, Decomposer};
use localities::{library, DeltaSpec, Locality};

fn main() -> localities::Result<()> {
    for spec in [DeltaSpec::All, DeltaSpec::Nontrivial] {
        let l = Arc::new(Locality::build(Arc::new(library::builtin("S3")?), 2, &spec)?);
        let g = l.ambient();
        println!("Δ = {spec:?}: |L| = {}, |Δ| = {}", l.size(), l.delta().len());
        println!("  axioms: {}", l.verify_axioms(3));
        let ess: Vec<Vec<String>> = essentials(&l).iter().map(|p| g.subgroup_labels(p)).collect();
        println!("  essentials: {ess:?}");
        let d = Decomposer::new(l.clone());
        for x in l.elements().iter() {
            let c = d.decompose(x)?;
            let factors: Vec<String> =
                c.factors.iter().map(|f| format!("{} in N_L({:?})", g.label(f.x), g.subgroup_labels(&f.q))).collect();
            println!("  {} = {}  [{}]", g.label(x), factors.join(" · "), verify_certificate(&l, &c).passed());
        }
    }
    Ok(())
}
