//! Brute-force oracles shared by the oracle and acceptance suites.
#![allow(dead_code)]

use localities::transporter::{FunctorPres, TransporterCat};
use localities::FiniteGroup;

/// Rank over F2 of rows given as bitsets.
fn f2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len) * 64;
    for col in 0..width {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(i) = (rank..rows.len()).find(|&i| rows[i][w] & b != 0) else { continue };
        rows.swap(rank, i);
        let pivot = rows[rank].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != rank && row[w] & b != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of the bar differential d^n for trivial F2 coefficients.
fn bar_rank(g: &FiniteGroup, n: usize) -> usize {
    let k = g.order();
    let dim = k.pow(n as u32);
    let words = dim.div_ceil(64);
    let index = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * k + x);
    let mut rows = Vec::new();
    for code in 0..k.pow(n as u32 + 1) {
        let t: Vec<usize> = (0..=n).rev().map(|i| (code / k.pow(i as u32)) % k).collect();
        let mut row = vec![0u64; words];
        let mut flip = |c: usize| row[c / 64] ^= 1 << (c % 64);
        flip(index(&t[1..]));
        for i in 1..=n {
            let mut m = t.clone();
            m[i - 1] = g.mul(t[i - 1], t[i]);
            m.remove(i);
            flip(index(&m));
        }
        flip(index(&t[..n]));
        rows.push(row);
    }
    f2_rank(rows)
}

pub fn h_dim_oracle(g: &FiniteGroup, n: usize) -> usize {
    let below = if n == 0 { 0 } else { bar_rank(g, n - 1) };
    g.order().pow(n as u32) - bar_rank(g, n) - below
}

/// |Hom(G, F2)| by trying every assignment on generators.
pub fn hom_to_f2(g: &FiniteGroup) -> usize {
    let gens = g.generators(&g.whole());
    (0..1u32 << gens.len())
        .filter(|&mask| {
            let mut value: Vec<Option<u8>> = vec![None; g.order()];
            value[0] = Some(0);
            let mut stack = vec![0];
            while let Some(x) = stack.pop() {
                for (i, &s) in gens.iter().enumerate() {
                    let y = g.mul(x, s);
                    let v = value[x].unwrap() ^ ((mask >> i) & 1) as u8;
                    match value[y] {
                        None => {
                            value[y] = Some(v);
                            stack.push(y);
                        }
                        Some(w) if w != v => return false,
                        Some(_) => {}
                    }
                }
            }
            true
        })
        .count()
}

/// Counts the families in ∏ F(P) satisfying every constraint, assigning
/// objects from the largest down and pruning on constraints among the
/// objects assigned so far.
pub fn limit_by_enumeration(t: &TransporterCat, f: &FunctorPres) -> u128 {
    let f = f.restrict_to(t).unwrap();
    let n = t.objects().len();
    let order: Vec<usize> = (0..n).rev().collect();
    let mut x: Vec<Option<Vec<i64>>> = vec![None; n];
    search(t, &f, &order, &mut x)
}

fn consistent(t: &TransporterCat, f: &FunctorPres, x: &[Option<Vec<i64>>], i: usize, j: usize) -> bool {
    let (Some(xi), Some(xj)) = (&x[i], &x[j]) else { return true };
    t.hom(i, j).iter().all(|&g| {
        let m = f.matrix_of(i, j, g).unwrap();
        m.iter().zip(&f.value_at(i).cyclic_orders).enumerate().all(|(a, (row, &o))| {
            let y: i64 = row.iter().zip(xj).map(|(c, v)| c * v).sum();
            (y - xi[a]).rem_euclid(o as i64) == 0
        })
    })
}

fn search(t: &TransporterCat, f: &FunctorPres, order: &[usize], x: &mut Vec<Option<Vec<i64>>>) -> u128 {
    let Some((&i, rest)) = order.split_first() else { return 1 };
    let orders = f.value_at(i).cyclic_orders.clone();
    let total: u64 = orders.iter().product();
    let mut count = 0;
    for code in 0..total {
        let mut r = code;
        x[i] = Some(orders.iter().map(|&o| { let v = (r % o) as i64; r /= o; v }).collect());
        if (0..x.len()).all(|j| consistent(t, f, x, i, j) && consistent(t, f, x, j, i)) {
            count += search(t, f, rest, x);
        }
    }
    x[i] = None;
    count
}
