//! Exact linear algebra: Smith normal form over the integers, and kernels
//! and subquotients of finite abelian `p`-groups computed over `Z/p^e`.

use serde::Serialize;

use crate::arith::{is_prime, p_log};
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Copy + Into<i128>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().map(|&x| x.into()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i128) {
        self.data[i * self.cols + j] = x;
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i128]>::to_vec).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("dimension mismatch".into()));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    let t = self.get(i, k).checked_mul(other.get(k, j)).ok_or(Error::Overflow)?;
                    acc = acc.checked_add(t).ok_or(Error::Overflow)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: i128) -> Result<()> {
        for j in 0..self.cols {
            let t = self.get(src, j).checked_mul(c).and_then(|t| t.checked_add(self.get(dst, j)));
            self.set(dst, j, t.ok_or(Error::Overflow)?);
        }
        Ok(())
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: i128) -> Result<()> {
        for i in 0..self.rows {
            let t = self.get(i, src).checked_mul(c).and_then(|t| t.checked_add(self.get(i, dst)));
            self.set(i, dst, t.ok_or(Error::Overflow)?);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self.data[i * self.cols + j] = -self.data[i * self.cols + j];
        }
    }
}

/// `U·A·V = D` with `U`, `V` unimodular and `d_1 | d_2 | …`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<i128> {
        self.d.diagonal().into_iter().filter(|&x| x != 0).collect()
    }
}

/// Smith normal form with transforms; arithmetic is checked and reports
/// [`Error::Overflow`] instead of wrapping.
pub fn smith_normal_form(a: &IntMatrix) -> Result<Snf> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block
        let Some((pi, pj)) = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| d.get(i, j) != 0)
            .min_by_key(|&(i, j)| d.get(i, j).unsigned_abs())
        else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let pivot = d.get(t, t);
            let mut dirty = false;
            for i in t + 1..m {
                let q = d.get(i, t).div_euclid(pivot);
                if q != 0 {
                    d.add_row(i, t, -q)?;
                    u.add_row(i, t, -q)?;
                }
                dirty |= d.get(i, t) != 0;
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_euclid(pivot);
                if q != 0 {
                    d.add_col(j, t, -q)?;
                    v.add_col(j, t, -q)?;
                }
                dirty |= d.get(t, j) != 0;
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d.get(i, j) % pivot != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        d.add_row(t, i, 1)?;
                        u.add_row(t, i, 1)?;
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let (bi, bj) = (t..m)
                .map(|i| (i, t))
                .chain((t..n).map(|j| (t, j)))
                .filter(|&(i, j)| d.get(i, j) != 0)
                .min_by_key(|&(i, j)| d.get(i, j).unsigned_abs())
                .expect("pivot is nonzero");
            if bi != t {
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
            }
            if bj != t {
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
            }
        }
        if d.get(t, t) < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(Snf { u, d, v })
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(a: &IntMatrix) -> Result<i128> {
    if a.rows != a.cols {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m.get(k, k) == 0 {
            match (k + 1..n).find(|&i| m.get(i, k) != 0) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = m
                    .get(i, j)
                    .checked_mul(m.get(k, k))
                    .zip(m.get(i, k).checked_mul(m.get(k, j)))
                    .and_then(|(a, b)| a.checked_sub(b))
                    .ok_or(Error::Overflow)?;
                m.set(i, j, x / prev);
            }
        }
        prev = m.get(k, k);
    }
    Ok(if n == 0 { 1 } else { sign * m.get(n - 1, n - 1) })
}

/// A finite abelian `p`-group as a direct sum of cyclic groups of the given
/// orders. Coordinates are fixed; compare with [`AbPres::invariant_factors`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbPres {
    pub cyclic_orders: Vec<u64>,
}

impl AbPres {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = cyclic_orders.iter().find(|&&q| q < 2 || crate::arith::prime_divisors(q).len() != 1) {
            return Err(Error::InvalidInput(format!("{bad} is not a prime power")));
        }
        let primes: Vec<u64> = cyclic_orders.iter().map(|&q| crate::arith::prime_divisors(q)[0]).collect();
        if primes.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidInput("orders for different primes".into()));
        }
        Ok(AbPres { cyclic_orders })
    }

    pub fn trivial() -> Self {
        AbPres::default()
    }

    pub fn rank(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn order(&self) -> u128 {
        self.cyclic_orders.iter().map(|&q| q as u128).product()
    }

    /// Sorted orders, for comparing presentations up to isomorphism.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut out = self.cyclic_orders.clone();
        out.sort_unstable();
        out
    }

    pub fn is_isomorphic(&self, other: &AbPres) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }
}

/// `Z/p^e` with `p^e < 2^31`, so products fit in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Ring {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl Ring {
    pub fn new(p: u64, e: u32) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = p.checked_pow(e.max(1)).filter(|&q| q < 1 << 31).ok_or(Error::Overflow)?;
        Ok(Ring { p, e: e.max(1), q })
    }

    /// The smallest ring over which every order in `orders` is a quotient.
    pub fn for_orders<'a>(p: u64, orders: impl IntoIterator<Item = &'a u64>) -> Result<Ring> {
        let mut e = 1;
        for &o in orders {
            e = e.max(p_log(o, p).ok_or_else(|| Error::InvalidInput(format!("{o} is not a power of {p}")))?);
        }
        Ring::new(p, e)
    }

    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.q as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn pow_p(&self, k: u32) -> u64 {
        if k >= self.e {
            0
        } else {
            self.p.pow(k)
        }
    }

    /// `p`-adic valuation, with `v(0) = e`.
    pub fn val(&self, mut a: u64) -> u32 {
        if a == 0 {
            return self.e;
        }
        let mut v = 0;
        while a % self.p == 0 {
            a /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: u64) -> u64 {
        let (mut r0, mut r1) = (self.q as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (t0, t1) = (t1, t0 - k * t1);
        }
        debug_assert_eq!(r0, 1, "not a unit");
        self.reduce(t0)
    }

    /// `a / p^k` for `a` divisible by `p^k`, as an integer in `[0, p^{e-k})`.
    pub fn div_pow(&self, a: u64, k: u32) -> u64 {
        a / self.p.pow(k)
    }

    /// Exponent of the order `p^k` of a cyclic coordinate.
    pub fn exponent_of(&self, order: u64) -> u32 {
        p_log(order, self.p).expect("order is a power of p")
    }
}

/// Sparse row: `(column, coefficient)`.
pub(crate) type SparseRow = Vec<(usize, u64)>;

/// Kernel of a homomorphism `⊕ Z/p^{k_j} → ⊕ Z/p^{l_i}`, fed one target
/// coordinate at a time as `(row, l_i)`. Returns generators in `R^n`; the
/// relations of the domain are among the kernel.
pub(crate) fn kernel(ring: Ring, ncols: usize, rows: impl IntoIterator<Item = (SparseRow, u32)>) -> Vec<Vec<u64>> {
    let mut gens: Vec<Vec<u64>> = (0..ncols)
        .map(|i| {
            let mut v = vec![0; ncols];
            v[i] = 1;
            v
        })
        .collect();
    for (row, l) in rows {
        let scale = ring.pow_p(ring.e - l);
        if scale == 0 {
            continue;
        }
        let alpha: Vec<u64> = gens
            .iter()
            .map(|g| row.iter().fold(0, |acc, &(c, a)| ring.add(acc, ring.mul(a, g[c]))))
            .map(|x| ring.mul(x, scale))
            .collect();
        let Some(j) = (0..gens.len()).filter(|&t| alpha[t] != 0).min_by_key(|&t| ring.val(alpha[t])) else {
            continue;
        };
        let v = ring.val(alpha[j]);
        let unit_inv = ring.inv(ring.div_pow(alpha[j], v));
        let pivot = gens[j].clone();
        for t in 0..gens.len() {
            if t == j || alpha[t] == 0 {
                continue;
            }
            let c = ring.mul(ring.div_pow(alpha[t], v), unit_inv);
            for (x, &y) in gens[t].iter_mut().zip(&pivot) {
                *x = ring.sub(*x, ring.mul(c, y));
            }
        }
        let shrink = ring.pow_p(ring.e - v);
        for x in gens[j].iter_mut() {
            *x = ring.mul(*x, shrink);
        }
        gens.retain(|g| g.iter().any(|&x| x != 0));
    }
    gens
}

/// Local Smith form of a dense matrix (rows × cols) over `Z/p^e`, keeping
/// the row transform and its inverse. Diagonal valuations are nondecreasing.
pub(crate) struct LocalSnf {
    pub u: Vec<Vec<u64>>,
    pub u_inv: Vec<Vec<u64>>,
    /// Valuation of each pivot, in order; pivots beyond `vals.len()` are zero.
    pub vals: Vec<u32>,
}

pub(crate) fn local_snf(ring: Ring, mut a: Vec<Vec<u64>>, rows: usize) -> LocalSnf {
    let cols = a.first().map_or(0, Vec::len);
    let mut u: Vec<Vec<u64>> = (0..rows).map(|i| (0..rows).map(|j| u64::from(i == j)).collect()).collect();
    let mut u_inv = u.clone();
    let mut vals = Vec::new();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    for t in 0..rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for i in t..rows {
            for jj in t..cols {
                let x = a[i][col_perm[jj]];
                if x != 0 {
                    let v = ring.val(x);
                    if best.map_or(true, |b| v < b.0) {
                        best = Some((v, i, jj));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in u_inv.iter_mut() {
            row.swap(t, pi);
        }
        col_perm.swap(t, pj);
        let c = col_perm[t];
        let unit = ring.div_pow(a[t][c], v);
        let unit_inv = ring.inv(unit);
        for x in a[t].iter_mut() {
            *x = ring.mul(*x, unit_inv);
        }
        for x in u[t].iter_mut() {
            *x = ring.mul(*x, unit_inv);
        }
        for row in u_inv.iter_mut() {
            row[t] = ring.mul(row[t], unit);
        }
        let pivot_row = a[t].clone();
        let pivot_u = u[t].clone();
        for i in t + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = ring.div_pow(a[i][c], v);
            for (x, &y) in a[i].iter_mut().zip(&pivot_row) {
                *x = ring.sub(*x, ring.mul(f, y));
            }
            for (x, &y) in u[i].iter_mut().zip(&pivot_u) {
                *x = ring.sub(*x, ring.mul(f, y));
            }
            // inverse of row_i -= f row_t is col_t += f col_i
            for row in u_inv.iter_mut() {
                row[t] = ring.add(row[t], ring.mul(f, row[i]));
            }
        }
        vals.push(v);
    }
    LocalSnf { u, u_inv, vals }
}

/// `N1 / N0` for submodules `N0 ≤ N1` of `A = ⊕ Z/p^{k_i}`, both given by
/// generators in `R^n` (the relations of `A` are added here).
#[derive(Clone, Debug)]
pub(crate) struct Subquotient {
    ring: Ring,
    dim: usize,
    /// Rows of `U` for the pivots of `N1`, with their valuations.
    u_rows: Vec<Vec<u64>>,
    vals: Vec<u32>,
    /// Rows of `U` that must vanish on `N1`.
    zero_rows: Vec<Vec<u64>>,
    /// Second transform and the exponents of the surviving factors.
    u2: Vec<Vec<u64>>,
    factors: Vec<(usize, u32)>,
    /// Representatives in `R^n`, one per factor.
    pub reps: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
}

fn relations(ring: Ring, orders: &[u64]) -> Vec<Vec<u64>> {
    orders
        .iter()
        .enumerate()
        .filter_map(|(i, &o)| {
            let r = ring.reduce(o as i128);
            (r != 0).then(|| {
                let mut v = vec![0; orders.len()];
                v[i] = r;
                v
            })
        })
        .collect()
}

pub(crate) fn subquotient(ring: Ring, orders: &[u64], n1: &[Vec<u64>], n0: &[Vec<u64>]) -> Result<Subquotient> {
    let dim = orders.len();
    let rel = relations(ring, orders);
    let gens1: Vec<&Vec<u64>> = n1.iter().chain(&rel).collect();
    let mat: Vec<Vec<u64>> = (0..dim).map(|i| gens1.iter().map(|g| g[i]).collect()).collect();
    let snf = local_snf(ring, mat, dim);
    let k = snf.vals.len();
    let mut sq = Subquotient {
        ring,
        dim,
        u_rows: snf.u[..k].to_vec(),
        vals: snf.vals.clone(),
        zero_rows: snf.u[k..].to_vec(),
        u2: Vec::new(),
        factors: Vec::new(),
        reps: Vec::new(),
        orders: Vec::new(),
    };
    // coordinates of N0 in the basis of N1, next to the orders of that basis
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for y in n0.iter().chain(&rel) {
        cols.push(sq.coordinates(y).ok_or_else(|| Error::InternalInvariantViolation("N0 is not inside N1".into()))?);
    }
    for (i, &v) in sq.vals.iter().enumerate() {
        let mut c = vec![0; k];
        c[i] = ring.pow_p(ring.e - v);
        cols.push(c);
    }
    let mat: Vec<Vec<u64>> = (0..k).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let snf2 = local_snf(ring, mat, k);
    for j in 0..k {
        let v2 = snf2.vals.get(j).copied().unwrap_or(ring.e);
        if v2 > 0 {
            sq.factors.push((j, v2));
            sq.orders.push(ring.p.pow(v2));
            let c: Vec<u64> = (0..k).map(|i| snf2.u_inv[i][j]).collect();
            let mut w = vec![0; dim];
            for (i, &ci) in c.iter().enumerate() {
                let s = ring.mul(ci, ring.pow_p(sq.vals[i]));
                for (r, x) in w.iter_mut().enumerate() {
                    *x = ring.add(*x, ring.mul(s, snf.u_inv[r][i]));
                }
            }
            sq.reps.push(w);
        }
    }
    sq.u2 = snf2.u;
    Ok(sq)
}

impl Subquotient {
    fn coordinates(&self, w: &[u64]) -> Option<Vec<u64>> {
        let r = self.ring;
        let dot = |row: &Vec<u64>| row.iter().zip(w).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b)));
        if self.zero_rows.iter().any(|row| dot(row) != 0) {
            return None;
        }
        let mut out = Vec::with_capacity(self.vals.len());
        for (row, &v) in self.u_rows.iter().zip(&self.vals) {
            let x = dot(row);
            if r.val(x) < v {
                return None;
            }
            out.push(r.div_pow(x, v));
        }
        Some(out)
    }

    pub fn invariant_orders(&self) -> AbPres {
        AbPres { cyclic_orders: self.orders.clone() }
    }

    /// Coordinates of the class of `w ∈ N1`; `NotInSpan` if `w ∉ N1`.
    pub fn project(&self, w: &[u64]) -> Result<Vec<u64>> {
        debug_assert_eq!(w.len(), self.dim);
        let c = self.coordinates(w).ok_or(Error::NotInSpan)?;
        let r = self.ring;
        Ok(self
            .factors
            .iter()
            .zip(&self.orders)
            .map(|(&(j, _), &o)| self.u2[j].iter().zip(&c).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b))) % o)
            .collect())
    }
}
