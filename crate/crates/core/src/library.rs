//! Built-in permutation groups.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// Names accepted by [`builtin`], besides `C<n>` for any `n ≥ 1`.
pub const BUILTIN_NAMES: &[&str] = &["S3", "S4", "D8", "D12", "A4", "SL23"];

fn cycle(n: usize, pts: &[usize]) -> Perm {
    Perm::from_cycles(n, &[pts.to_vec()]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("symmetric group needs n ≥ 1".into()));
    }
    if n == 1 {
        return FiniteGroup::from_permutations("S1", 1, &[]);
    }
    let gens = [cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
    FiniteGroup::from_permutations(&format!("S{n}"), n, &gens)
}

/// The dihedral group of order `2n`, acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::InvalidInput("dihedral group needs n ≥ 2".into()));
    }
    let rotation = cycle(n, &(0..n).collect::<Vec<_>>());
    let reflection = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
    FiniteGroup::from_permutations(&format!("D{}", 2 * n), n, &[rotation, reflection])
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group needs n ≥ 1".into()));
    }
    let gens: Vec<Perm> = if n == 1 { vec![] } else { vec![cycle(n, &(0..n).collect::<Vec<_>>())] };
    FiniteGroup::from_permutations(&format!("C{n}"), n.max(1), &gens)
}

pub fn alternating4() -> Result<FiniteGroup> {
    let gens = [cycle(4, &[0, 1, 2]), Perm::parse(4, "(1 2)(3 4)")?];
    FiniteGroup::from_permutations("A4", 4, &gens)
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F_3^2`.
pub fn sl23() -> Result<FiniteGroup> {
    let vectors: Vec<[u8; 2]> =
        (0..9u8).map(|i| [i / 3, i % 3]).filter(|v| *v != [0, 0]).collect();
    let act = |m: [[u8; 2]; 2]| -> Result<Perm> {
        let images = vectors
            .iter()
            .map(|v| {
                let w = [(v[0] * m[0][0] + v[1] * m[1][0]) % 3, (v[0] * m[0][1] + v[1] * m[1][1]) % 3];
                vectors.iter().position(|u| *u == w).expect("nonzero image")
            })
            .collect();
        Perm::from_images(images)
    };
    let gens = [act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?];
    FiniteGroup::from_permutations("SL23", 8, &gens)
}

/// Looks up a built-in group by name: `S3`, `S4`, `D8`, `D12`, `A4`, `SL23`,
/// or `C<n>` / `C_<n>`.
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    match name {
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "D8" => dihedral(4),
        "D12" => dihedral(6),
        "A4" => alternating4(),
        "SL23" => sl23(),
        _ => {
            let n = name
                .strip_prefix("C_")
                .or_else(|| name.strip_prefix('C'))
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| Error::InvalidInput(format!("unknown built-in group {name:?}")))?;
            cyclic(n)
        }
    }
}
