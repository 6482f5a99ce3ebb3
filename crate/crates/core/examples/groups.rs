//! Built-in groups: orders, Sylow subgroups, subgroup counts.
use localities::arith::prime_divisors;
use localities::library;

fn main() -> localities::Result<()> {
    for name in library::BUILTIN_NAMES.iter().copied().chain(["C6"]) {
        let g = library::builtin(name)?;
        let sylows: Vec<String> = prime_divisors(g.order() as u64)
            .into_iter()
            .map(|p| format!("p={p}: |S|={}", g.sylow(&g.whole(), p).order()))
            .collect();
        println!(
            "{name}: order {}, abelian {}, {} subgroups, {}",
            g.order(),
            g.is_abelian(),
            g.all_subgroups()?.len(),
            sylows.join(", ")
        );
    }
    let s4 = library::builtin("S4")?;
    let (a, b) = (s4.element("(1 2)")?, s4.element("(2 3 4)")?);
    println!("in S4: (1 2)(2 3 4) = {}, (1 2)^(2 3 4) = {}", s4.label(s4.mul(a, b)), s4.label(s4.conj(a, b)));
    Ok(())
}
