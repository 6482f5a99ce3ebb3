//! Group cohomology from the bar resolution, restriction and conjugation
//! maps, and the comparison of `H^n(G; M)` with limits over transporter
//! categories.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::linalg::{kernel, subquotient, AbPres, IntMatrix, Ring, SparseRow, Subquotient};
use crate::locality::DeltaSpec;
use crate::transporter::{
    build_group_transporter, inverse_limit, t_essential_subcategory, transpose, FunctorPres, Matrix, TransporterCat,
};

pub const DEFAULT_DEGREE_BOUND: usize = 2;
/// Bound on `|H|^{n+1} · rank(M)`, the row count of `d^n`.
pub const DEFAULT_COCHAIN_BOUND: usize = 20_000;

/// A finite abelian `p`-group with a left action `ρ(gh) = ρ(g)ρ(h)`.
/// `action[g]` has entry `(a, b)` = coefficient of `e_a` in `g·e_b`.
#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    p: u64,
    ab: AbPres,
    ring: Ring,
    action: Vec<Vec<Vec<u64>>>,
}

impl GModule {
    /// One matrix per group element; validated exhaustively.
    pub fn from_element_matrices(group: Arc<FiniteGroup>, p: u64, orders: Vec<u64>, mats: Vec<Matrix>) -> Result<Self> {
        let ab = AbPres::new(orders)?;
        let ring = Ring::for_orders(p, &ab.cyclic_orders)?;
        if mats.len() != group.order() {
            return Err(Error::ActionInvalid("one matrix per group element".into()));
        }
        let r = ab.rank();
        let mut action = Vec::with_capacity(mats.len());
        for m in &mats {
            if m.len() != r || m.iter().any(|row| row.len() != r) {
                return Err(Error::ActionInvalid(format!("matrices must be {r}x{r}")));
            }
            action.push(reduce_matrix(ring, m, &ab.cyclic_orders));
        }
        let module = GModule { group, p, ab, ring, action };
        module.validate()?;
        Ok(module)
    }

    /// Extends the action of generators multiplicatively.
    pub fn from_generators(group: Arc<FiniteGroup>, p: u64, orders: Vec<u64>, gens: &[(Elem, Matrix)]) -> Result<Self> {
        let ab = AbPres::new(orders)?;
        let ring = Ring::for_orders(p, &ab.cyclic_orders)?;
        let r = ab.rank();
        let mut gen_mats = Vec::new();
        for (g, m) in gens {
            if *g >= group.order() {
                return Err(Error::IndexOutOfRange(*g, group.order()));
            }
            if m.len() != r || m.iter().any(|row| row.len() != r) {
                return Err(Error::ActionInvalid(format!("matrices must be {r}x{r}")));
            }
            gen_mats.push((*g, reduce_matrix(ring, m, &ab.cyclic_orders)));
        }
        let mut action: Vec<Option<Vec<Vec<u64>>>> = vec![None; group.order()];
        action[0] = Some(identity(r));
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in &gen_mats {
                let y = group.mul(x, *g);
                let my = mul_mod(ring, action[x].as_ref().expect("visited"), m, &ab.cyclic_orders);
                match &action[y] {
                    Some(existing) if *existing != my => {
                        return Err(Error::ActionInvalid(format!(
                            "generator matrices do not define an action (at {})",
                            group.label(y)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        action[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let action: Vec<_> = action
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::ActionInvalid("generators do not generate the group".into()))?;
        let module = GModule { group, p, ab, ring, action };
        module.validate()?;
        Ok(module)
    }

    pub fn trivial(group: Arc<FiniteGroup>, p: u64, orders: Vec<u64>) -> Result<Self> {
        let r = orders.len();
        let n = group.order();
        let id: Matrix = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        Self::from_element_matrices(group, p, orders, vec![id; n])
    }

    /// `F_p^n` for a permutation group of degree `n`, with `g·e_i = e_{i^{g⁻¹}}`.
    pub fn permutation(group: Arc<FiniteGroup>, p: u64) -> Result<Self> {
        let n = group.degree().ok_or_else(|| Error::ActionInvalid("not a permutation group".into()))?;
        let mats = (0..group.order())
            .map(|g| {
                let inv = group.perm(group.inv(g)).expect("permutation group");
                let mut m = vec![vec![0; n]; n];
                for (i, col) in (0..n).map(|i| (i, inv.apply(i))) {
                    m[col][i] = 1;
                }
                m
            })
            .collect();
        Self::from_element_matrices(group, p, vec![p; n], mats)
    }

    fn validate(&self) -> Result<()> {
        let r = self.ab.rank();
        let orders = &self.ab.cyclic_orders;
        if self.action[0] != identity(r) {
            return Err(Error::ActionInvalid("identity does not act trivially".into()));
        }
        for (g, m) in self.action.iter().enumerate() {
            for a in 0..r {
                for b in 0..r {
                    if self.ring.mul(m[a][b], self.ring.reduce(orders[b] as i128)) % orders[a] != 0 {
                        return Err(Error::ActionInvalid(format!("{} is not a homomorphism", self.group.label(g))));
                    }
                }
            }
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                let gh = self.group.mul(g, h);
                if mul_mod(self.ring, &self.action[g], &self.action[h], orders) != self.action[gh] {
                    return Err(Error::ActionInvalid(format!(
                        "rho({} {}) != rho({}) rho({})",
                        self.group.label(g),
                        self.group.label(h),
                        self.group.label(g),
                        self.group.label(h)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ab(&self) -> &AbPres {
        &self.ab
    }

    pub fn rank(&self) -> usize {
        self.ab.rank()
    }

    pub fn matrix(&self, g: Elem) -> Matrix {
        self.action[g].iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect()
    }

    /// `g·v`, coordinates reduced into their cyclic orders.
    pub fn apply(&self, g: Elem, v: &[u64]) -> Vec<u64> {
        let r = self.ring;
        self.action[g]
            .iter()
            .zip(&self.ab.cyclic_orders)
            .map(|(row, &o)| row.iter().zip(v).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b))) % o)
            .collect()
    }

    pub(crate) fn ring(&self) -> Ring {
        self.ring
    }

    /// `M^P` as a subquotient of `M`.
    pub(crate) fn fixed_points(&self, p: &Subgroup) -> Result<Subquotient> {
        let r = self.ring;
        let gens = self.group.generators(p);
        let rows = gens.iter().flat_map(|&g| {
            (0..self.rank()).map(move |a| {
                let mut row: SparseRow = Vec::new();
                for b in 0..self.rank() {
                    let x = r.sub(self.action[g][a][b], u64::from(a == b));
                    if x != 0 {
                        row.push((b, x));
                    }
                }
                (row, r.exponent_of(self.ab.cyclic_orders[a]))
            })
        });
        let ker = kernel(r, self.rank(), rows);
        subquotient(r, &self.ab.cyclic_orders, &ker, &[])
    }
}

fn identity(r: usize) -> Vec<Vec<u64>> {
    (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect()
}

fn reduce_matrix(ring: Ring, m: &Matrix, orders: &[u64]) -> Vec<Vec<u64>> {
    m.iter().zip(orders).map(|(row, &o)| row.iter().map(|&x| ring.reduce(x as i128) % o).collect()).collect()
}

fn mul_mod(ring: Ring, a: &[Vec<u64>], b: &[Vec<u64>], orders: &[u64]) -> Vec<Vec<u64>> {
    a.iter()
        .zip(orders)
        .map(|(row, &o)| {
            (0..b.len())
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, rb)| ring.add(acc, ring.mul(x, rb[j]))) % o)
                .collect()
        })
        .collect()
}

/// Index bookkeeping for cochains `H^n → M`: tuple `(h_1, …, h_n)` and
/// module coordinate `a` sit at `(Σ pos(h_k)·|H|^{n-k}) · rank + a`.
struct Cochains<'a> {
    m: &'a GModule,
    elems: Vec<Elem>,
    pos: HashMap<Elem, usize>,
}

impl<'a> Cochains<'a> {
    fn new(m: &'a GModule, h: &Subgroup) -> Self {
        let elems: Vec<Elem> = h.iter().collect();
        let pos = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Cochains { m, elems, pos }
    }

    fn dim(&self, n: usize) -> usize {
        self.elems.len().pow(n as u32) * self.m.rank()
    }

    fn tuple_index(&self, tuple: &[Elem]) -> usize {
        tuple.iter().fold(0, |acc, x| acc * self.elems.len() + self.pos[x])
    }

    fn tuples(&self, n: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
        let k = self.elems.len();
        (0..k.pow(n as u32)).map(move |mut code| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = self.elems[code % k];
                code /= k;
            }
            t
        })
    }

    /// Rows of `d^n`, one per `(tuple in H^{n+1}, coordinate)`, with the
    /// exponent of that coordinate's order.
    fn coboundary_rows(&self, n: usize) -> impl Iterator<Item = (SparseRow, u32)> + '_ {
        let r = self.m.ring();
        let rank = self.m.rank();
        let grp = &self.m.group;
        self.tuples(n + 1).flat_map(move |t| {
            (0..rank).map(move |a| {
                let mut acc: HashMap<usize, u64> = HashMap::new();
                let mut add = |col: usize, c: u64| {
                    let e = acc.entry(col).or_insert(0);
                    *e = r.add(*e, c);
                };
                // g_1 · f(g_2, …)
                let base = self.tuple_index(&t[1..]) * rank;
                for b in 0..rank {
                    add(base + b, self.m.action[t[0]][a][b]);
                }
                for i in 1..=n {
                    let mut merged = t.clone();
                    merged[i - 1] = grp.mul(t[i - 1], t[i]);
                    merged.remove(i);
                    let c = if i % 2 == 1 { r.neg(1) } else { 1 };
                    add(self.tuple_index(&merged) * rank + a, c);
                }
                let c = if (n + 1) % 2 == 1 { r.neg(1) } else { 1 };
                add(self.tuple_index(&t[..n]) * rank + a, c);
                let mut row: SparseRow = acc.into_iter().filter(|&(_, c)| c != 0).collect();
                row.sort_unstable();
                (row, r.exponent_of(self.m.ab.cyclic_orders[a]))
            })
        })
    }

    fn orders(&self, n: usize) -> Vec<u64> {
        let per = &self.m.ab.cyclic_orders;
        (0..self.elems.len().pow(n as u32)).flat_map(|_| per.iter().copied()).collect()
    }
}

fn check_bounds(m: &GModule, h: &Subgroup, n: usize, max_degree: usize) -> Result<()> {
    if n > max_degree {
        return Err(Error::BoundExceeded(format!("degree {n} exceeds {max_degree}")));
    }
    let rows = (h.order() as u128).pow(n as u32 + 1) * m.rank() as u128;
    if rows > DEFAULT_COCHAIN_BOUND as u128 {
        return Err(Error::BoundExceeded(format!("{rows} cochain coordinates exceed {DEFAULT_COCHAIN_BOUND}")));
    }
    Ok(())
}

/// `d^n : C^n(H; M) → C^{n+1}(H; M)` as an integer matrix with entries
/// reduced modulo the exponent of `M`.
pub fn coboundary(m: &GModule, h: &Subgroup, n: usize) -> Result<IntMatrix> {
    check_bounds(m, h, n, usize::MAX)?;
    let c = Cochains::new(m, h);
    let mut out = IntMatrix::zeros(c.dim(n + 1), c.dim(n));
    for (i, (row, _)) in c.coboundary_rows(n).enumerate() {
        for (j, x) in row {
            out.set(i, j, x as i128);
        }
    }
    Ok(out)
}

/// `H^n(H; M)` with chosen cocycle representatives and a projection from
/// cocycles to coordinates.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub subgroup: Subgroup,
    pub degree: usize,
    sq: Subquotient,
}

impl Cohomology {
    pub fn value(&self) -> AbPres {
        self.sq.invariant_orders()
    }

    pub fn representatives(&self) -> &[Vec<u64>] {
        &self.sq.reps
    }

    /// Class of a cocycle; `NotInSpan` if `f` is not a cocycle.
    pub fn project(&self, f: &[u64]) -> Result<Vec<u64>> {
        self.sq.project(f)
    }
}

pub fn cohomology(m: &GModule, h: &Subgroup, n: usize) -> Result<Cohomology> {
    cohomology_bounded(m, h, n, DEFAULT_DEGREE_BOUND)
}

pub fn cohomology_bounded(m: &GModule, h: &Subgroup, n: usize, max_degree: usize) -> Result<Cohomology> {
    check_bounds(m, h, n, max_degree)?;
    let c = Cochains::new(m, h);
    let ring = m.ring();
    let cocycles = kernel(ring, c.dim(n), c.coboundary_rows(n));
    let mut boundaries = Vec::new();
    if n > 0 {
        let mut cols = vec![vec![0u64; c.dim(n)]; c.dim(n - 1)];
        for (i, (row, _)) in c.coboundary_rows(n - 1).enumerate() {
            for (j, x) in row {
                cols[j][i] = x;
            }
        }
        boundaries = cols;
    }
    let sq = subquotient(ring, &c.orders(n), &cocycles, &boundaries)?;
    Ok(Cohomology { subgroup: *h, degree: n, sq })
}

/// The map `H^n(Q; M) → H^n(P; M)` of `g : P → Q`, from
/// `(φ^* f)(p_1, …, p_n) = g · f(p_1^g, …, p_n^g)`, as a matrix from the
/// coordinates of `H^n(Q)` to those of `H^n(P)`.
pub fn induced_map(m: &GModule, target: &Cohomology, source: &Cohomology, g: Elem) -> Result<Matrix> {
    let grp = &m.group;
    let (p, q) = (&source.subgroup, &target.subgroup);
    if source.degree != target.degree || !grp.conjugate_subgroup(p, g).is_subgroup_of(q) {
        return Err(Error::NotAMorphism);
    }
    let n = source.degree;
    let cp = Cochains::new(m, p);
    let cq = Cochains::new(m, q);
    let rank = m.rank();
    let mut cols = Vec::new();
    for f in target.representatives() {
        let mut pulled = vec![0u64; cp.dim(n)];
        for t in cp.tuples(n) {
            let moved: Vec<Elem> = t.iter().map(|&x| grp.conj(x, g)).collect();
            let at = cq.tuple_index(&moved) * rank;
            let value = m.apply(g, &f[at..at + rank]);
            let to = cp.tuple_index(&t) * rank;
            pulled[to..to + rank].copy_from_slice(&value);
        }
        let class = source.project(&pulled).map_err(|_| {
            Error::InternalInvariantViolation(format!("pullback along {} is not a cocycle", grp.label(g)))
        })?;
        cols.push(class);
    }
    Ok(transpose(&cols, source.value().rank()))
}

/// `P ↦ H^n(P; M)` on a transporter category, validated as a functor.
pub fn cohomology_functor(t: &TransporterCat, m: &GModule, n: usize) -> Result<FunctorPres> {
    if m.group().order() != t.group().order() || m.p() != t.p() {
        return Err(Error::ActionInvalid("module is for a different group or prime".into()));
    }
    let values: Vec<Cohomology> = t.objects().iter().map(|p| cohomology(m, p, n)).collect::<Result<_>>()?;
    let k = t.objects().len();
    let mut maps = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(t.hom(i, j).iter().map(|&g| induced_map(m, &values[j], &values[i], g)).collect::<Result<Vec<_>>>()?);
        }
        maps.push(row);
    }
    FunctorPres::new(t.clone(), values.iter().map(Cohomology::value).collect(), maps)
}

/// `H^n(G; M)` next to the limits over `T_S(G)` (all subgroups of `S`) and
/// over its essential subcategory, as invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanEilenberg {
    #[serde(rename = "H")]
    pub h: Vec<u64>,
    #[serde(rename = "lim_T")]
    pub lim_t: Vec<u64>,
    #[serde(rename = "lim_Te")]
    pub lim_te: Vec<u64>,
    pub equal: bool,
}

pub fn check_cartan_eilenberg(g: Arc<FiniteGroup>, p: u64, m: &GModule, n: usize) -> Result<CartanEilenberg> {
    let t = build_group_transporter(g.clone(), p, &DeltaSpec::All)?;
    let te = t_essential_subcategory(&t)?;
    let h = cohomology(m, &g.whole(), n)?.value().invariant_factors();
    let f = cohomology_functor(&t, m, n)?;
    let lim_t = inverse_limit(&t, &f)?.invariant_factors();
    let lim_te = inverse_limit(&te, &f)?.invariant_factors();
    let equal = h == lim_t && lim_t == lim_te;
    Ok(CartanEilenberg { h, lim_t, lim_te, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::transporter::fixed_point_functor;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(library::builtin(name).unwrap())
    }

    fn f2(g: &Arc<FiniteGroup>) -> GModule {
        GModule::trivial(g.clone(), 2, vec![2]).unwrap()
    }

    /// F2 with Σ3 acting through the sign: trivial mod 2, so use Z/4 where
    /// the sign is visible.
    fn sign_z4(g: &Arc<FiniteGroup>) -> GModule {
        let mats = (0..g.order())
            .map(|x| {
                let odd = g.perm(x).unwrap().cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
                vec![vec![if odd { -1 } else { 1 }]]
            })
            .collect();
        GModule::from_element_matrices(g.clone(), 2, vec![4], mats).unwrap()
    }

    fn mod_mul(a: &IntMatrix, b: &IntMatrix, q: i128) -> Vec<Vec<i128>> {
        a.mul(b).unwrap().to_rows().into_iter().map(|r| r.into_iter().map(|x| x.rem_euclid(q)).collect()).collect()
    }

    #[test]
    fn module_validation() {
        let s3 = group("S3");
        let perm = GModule::permutation(s3.clone(), 2).unwrap();
        assert_eq!(perm.rank(), 3);
        let t = s3.element("(1 2)").unwrap();
        let c = s3.element("(1 2 3)").unwrap();
        let gens = vec![(t, perm.matrix(t)), (c, perm.matrix(c))];
        let again = GModule::from_generators(s3.clone(), 2, vec![2, 2, 2], &gens).unwrap();
        for x in 0..6 {
            assert_eq!(again.matrix(x), perm.matrix(x));
        }
        // (1 2) acting as a 3-cycle on coordinates is not an action
        let bad = vec![(t, perm.matrix(c)), (c, perm.matrix(c))];
        assert!(matches!(GModule::from_generators(s3.clone(), 2, vec![2, 2, 2], &bad), Err(Error::ActionInvalid(_))));
        let mats = (0..6).map(|x| if x == 0 { vec![vec![1]] } else { vec![vec![2]] }).collect();
        assert!(matches!(GModule::from_element_matrices(s3, 2, vec![4], mats), Err(Error::ActionInvalid(_))));
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let s3 = group("S3");
        for m in [f2(&s3), sign_z4(&s3), GModule::permutation(s3.clone(), 2).unwrap()] {
            let q = m.ring().q as i128;
            for n in 0..2 {
                let d0 = coboundary(&m, &s3.whole(), n).unwrap();
                let d1 = coboundary(&m, &s3.whole(), n + 1).unwrap();
                assert!(mod_mul(&d1, &d0, q).iter().flatten().all(|&x| x == 0));
            }
        }
        let d0 = coboundary(&f2(&s3), &s3.whole(), 0).unwrap();
        assert!(d0.to_rows().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn cohomology_examples() {
        let s3 = group("S3");
        let m = f2(&s3);
        for n in 0..=2 {
            assert_eq!(cohomology(&m, &s3.whole(), n).unwrap().value().cyclic_orders, vec![2], "n={n}");
        }
        let c2 = group("C2");
        assert_eq!(cohomology(&f2(&c2), &c2.whole(), 1).unwrap().value().cyclic_orders, vec![2]);
        assert_eq!(cohomology(&m, &Subgroup::trivial(), 1).unwrap().value().cyclic_orders, Vec::<u64>::new());
        // the sign module: H^0 = {x | -x = x} in Z/4
        let sign = sign_z4(&s3);
        assert_eq!(cohomology(&sign, &s3.whole(), 0).unwrap().value().cyclic_orders, vec![2]);
        assert!(matches!(cohomology(&m, &s3.whole(), 3), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn h0_is_fixed_points() {
        for name in ["S3", "S4", "D8", "A4"] {
            let g = group(name);
            let m = GModule::permutation(g.clone(), 2).unwrap();
            let h0 = cohomology(&m, &g.whole(), 0).unwrap().value();
            let fixed = m.fixed_points(&g.whole()).unwrap().invariant_orders();
            assert!(h0.is_isomorphic(&fixed), "{name}");
        }
    }

    #[test]
    fn induced_maps() {
        let s4 = group("S4");
        let m = f2(&s4);
        let t = build_group_transporter(s4.clone(), 2, &DeltaSpec::All).unwrap();
        for n in 0..=1 {
            let values: Vec<Cohomology> = t.objects().iter().map(|p| cohomology(&m, p, n).unwrap()).collect();
            for (i, p) in t.objects().iter().enumerate() {
                let id: Matrix = (0..values[i].value().rank()).map(|a| (0..values[i].value().rank()).map(|b| i64::from(a == b)).collect()).collect();
                for x in p.iter() {
                    assert_eq!(induced_map(&m, &values[i], &values[i], x).unwrap(), id, "inner at {p:?}");
                }
            }
        }
        let s = t.locality().s();
        let one = cohomology(&m, &Subgroup::trivial(), 1).unwrap();
        let top = cohomology(&m, s, 1).unwrap();
        assert_eq!(induced_map(&m, &one, &top, 0), Err(Error::NotAMorphism));
        // degree 0 agrees with the fixed-point functor
        let f0 = cohomology_functor(&t, &m, 0).unwrap();
        let fp = fixed_point_functor(&t, &m).unwrap();
        for i in 0..t.objects().len() {
            for j in 0..t.objects().len() {
                for &g in t.hom(i, j) {
                    assert_eq!(f0.matrix_of(i, j, g), fp.matrix_of(i, j, g));
                }
            }
        }
    }

    #[test]
    fn functor_values() {
        let s3 = group("S3");
        let t = build_group_transporter(s3.clone(), 2, &DeltaSpec::All).unwrap();
        let te = t_essential_subcategory(&t).unwrap();
        let f = cohomology_functor(&te, &f2(&s3), 1).unwrap();
        // objects sorted as (1, S)
        assert_eq!(f.value_at(0).cyclic_orders, Vec::<u64>::new());
        assert_eq!(f.value_at(1).cyclic_orders, vec![2]);
        assert_eq!(inverse_limit(&te, &f).unwrap().cyclic_orders, vec![2]);

        let s4 = group("S4");
        let t = build_group_transporter(s4.clone(), 2, &DeltaSpec::All).unwrap();
        let te = t_essential_subcategory(&t).unwrap();
        let f = cohomology_functor(&te, &f2(&s4), 1).unwrap();
        assert_eq!(f.value_at(0).cyclic_orders, vec![2, 2]);
        assert_eq!(f.value_at(1).cyclic_orders, vec![2, 2]);
        assert_eq!(inverse_limit(&te, &f).unwrap().cyclic_orders, vec![2]);
    }

    #[test]
    fn cartan_eilenberg_small() {
        let s3 = group("S3");
        for n in 0..=2 {
            let r = check_cartan_eilenberg(s3.clone(), 2, &f2(&s3), n).unwrap();
            assert_eq!(r.h, vec![2]);
            assert!(r.equal, "{r:?}");
        }
        let d8 = group("D8");
        let r = check_cartan_eilenberg(d8.clone(), 2, &f2(&d8), 1).unwrap();
        assert_eq!(r.h, vec![2, 2]);
        assert!(r.equal);
    }
}
