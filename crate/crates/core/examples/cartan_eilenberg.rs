//! H^n(G; F2) next to the limits of H^n(-; F2) over T_S(G) and T_S^e(G).
use std::sync::Arc;
use std::time::Instant;

use localities::cohomology::{check_cartan_eilenberg, GModule};
use localities::library;

fn main() -> localities::Result<()> {
    let max_degree: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1);
    for name in ["S3", "D8", "S4", "A4"] {
        let g = Arc::new(library::builtin(name)?);
        let f2 = GModule::trivial(g.clone(), 2, vec![2])?;
        for n in 0..=max_degree {
            let start = Instant::now();
            let r = check_cartan_eilenberg(g.clone(), 2, &f2, n)?;
            println!(
                "{name} n={n}: H={:?} lim_T={:?} lim_Te={:?} equal={} ({:.2?})",
                r.h, r.lim_t, r.lim_te, r.equal, start.elapsed()
            );
        }
    }
    Ok(())
}
