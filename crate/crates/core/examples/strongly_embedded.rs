//! Strongly p-embedded subgroups: graph method next to the brute force.
use localities::embedding::{strongly_p_embedded, strongly_p_embedded_bruteforce};
use localities::library;

fn main() -> localities::Result<()> {
    for name in ["S3", "S4", "D8", "D12", "A4", "SL23", "C6"] {
        let g = library::builtin(name)?;
        for p in [2, 3] {
            let fast = strongly_p_embedded(&g, p);
            let slow = strongly_p_embedded_bruteforce(&g, p)?;
            let witness = fast.witness.map(|h| h.order());
            println!("{name} p={p}: exists {} (brute force {}), witness order {witness:?}", fast.exists, slow.exists);
        }
    }
    Ok(())
}
