//! Inverse limits of fixed-point functors over T and T^e.
use std::sync::Arc;

use localities::cohomology::GModule;
use localities::transporter::{build_group_transporter, fixed_point_functor, inverse_limit, t_essential_subcategory};
use localities::{library, DeltaSpec};

fn main() -> localities::Result<()> {
    for name in ["S3", "S4", "D8", "A4"] {
        let g = Arc::new(library::builtin(name)?);
        let t = build_group_transporter(g.clone(), 2, &DeltaSpec::All)?;
        let te = t_essential_subcategory(&t)?;
        for (label, m) in [
            ("Z/4 trivial", GModule::trivial(g.clone(), 2, vec![4])?),
            ("F2 permutation", GModule::permutation(g.clone(), 2)?),
        ] {
            let f = fixed_point_functor(&t, &m)?;
            let (a, b) = (inverse_limit(&t, &f)?, inverse_limit(&te, &f)?);
            println!("{name} {label}: lim_T {:?}, lim_Te {:?}", a.invariant_factors(), b.invariant_factors());
        }
    }
    Ok(())
}
