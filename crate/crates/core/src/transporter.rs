//! Transporter categories, the essential subcategory, morphism
//! decomposition, and inverse limits of abelian-group-valued functors.

use std::sync::Arc;

use crate::alperin::Decomposer;
use crate::arith::p_part;
use crate::cohomology::GModule;
use crate::embedding::strongly_p_embedded;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::linalg::{kernel, subquotient, AbPres, Ring, SparseRow};
use crate::locality::{DeltaSpec, Locality};
use crate::report::Report;

/// Objects are sorted; `hom[i][j]` is the sorted set of elements `g` with
/// `P_i ≤ S_g` and `P_i^g ≤ P_j`. Composition is the product in the
/// ambient group.
#[derive(Clone)]
pub struct TransporterCat {
    decomposer: Arc<Decomposer>,
    objects: Vec<Subgroup>,
    hom: Vec<Vec<Vec<Elem>>>,
}

impl std::fmt::Debug for TransporterCat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TransporterCat")
            .field("objects", &self.objects)
            .field("morphisms", &self.morphism_count())
            .finish()
    }
}

pub fn build_transporter(l: Arc<Locality>) -> TransporterCat {
    let objects: Vec<Subgroup> = l.delta().iter().copied().collect();
    let g = l.ambient();
    let hom = objects
        .iter()
        .map(|p| {
            objects
                .iter()
                .map(|q| {
                    l.elements()
                        .iter()
                        .filter(|&x| p.is_subgroup_of(&l.s_g(x)) && g.conjugate_subgroup(p, x).is_subgroup_of(q))
                        .collect()
                })
                .collect()
        })
        .collect();
    TransporterCat::assemble(l, objects, hom)
}

/// `T_S^Δ(G)`: hom-sets `{g ∈ G | P^g ≤ Q}` computed directly in `G`. The
/// objects come from the group locality for the same `Δ`.
pub fn build_group_transporter(g: Arc<FiniteGroup>, p: u64, spec: &DeltaSpec) -> Result<TransporterCat> {
    let l = Arc::new(Locality::build(g.clone(), p, spec)?);
    let objects: Vec<Subgroup> = l.delta().iter().copied().collect();
    let hom = objects
        .iter()
        .map(|a| {
            objects
                .iter()
                .map(|b| (0..g.order()).filter(|&x| g.conjugate_subgroup(a, x).is_subgroup_of(b)).collect())
                .collect()
        })
        .collect();
    Ok(TransporterCat::assemble(l, objects, hom))
}

impl TransporterCat {
    fn assemble(l: Arc<Locality>, mut objects: Vec<Subgroup>, hom: Vec<Vec<Vec<Elem>>>) -> Self {
        debug_assert!(objects.windows(2).all(|w| w[0] < w[1]));
        objects.dedup();
        TransporterCat { decomposer: Arc::new(Decomposer::new(l)), objects, hom }
    }

    pub fn locality(&self) -> &Locality {
        self.decomposer.locality()
    }

    pub fn decomposer(&self) -> &Decomposer {
        &self.decomposer
    }

    pub fn group(&self) -> &FiniteGroup {
        self.locality().ambient()
    }

    pub fn p(&self) -> u64 {
        self.locality().p()
    }

    pub fn objects(&self) -> &[Subgroup] {
        &self.objects
    }

    pub fn index_of(&self, p: &Subgroup) -> Option<usize> {
        self.objects.binary_search(p).ok()
    }

    pub fn hom(&self, i: usize, j: usize) -> &[Elem] {
        &self.hom[i][j]
    }

    pub fn morphism_count(&self) -> usize {
        self.hom.iter().flatten().map(Vec::len).sum()
    }

    pub fn is_morphism(&self, i: usize, j: usize, g: Elem) -> bool {
        self.hom[i][j].binary_search(&g).is_ok()
    }

    /// `Aut_T(P_i)`: the morphisms `P_i → P_i`, a subgroup of the ambient group.
    pub fn aut(&self, i: usize) -> Result<Subgroup> {
        self.group().subgroup_from_set(self.hom[i][i].iter().copied().collect())
    }

    /// The full subcategory on `objects`, which must all be objects here.
    pub fn full_subcategory(&self, objects: &[Subgroup]) -> Result<TransporterCat> {
        let mut objs = objects.to_vec();
        objs.sort();
        objs.dedup();
        let idx: Vec<usize> = objs
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::InvalidInput("not an object of the category".into())))
            .collect::<Result<_>>()?;
        let hom = idx.iter().map(|&i| idx.iter().map(|&j| self.hom[i][j].clone()).collect()).collect();
        Ok(TransporterCat { decomposer: self.decomposer.clone(), objects: objs, hom })
    }

    /// Identities, closure under composition, associativity of the
    /// locality product along composable triples, and `P ≤ Aut_T(P)`.
    pub fn verify_category_laws(&self) -> Report {
        let l = self.locality();
        let g = self.group();
        let n = self.objects.len();
        let mut r = Report::new("transporter category");
        for i in 0..n {
            let p = &self.objects[i];
            r.check(self.is_morphism(i, i, g.identity()), "identity", || format!("{p:?}"));
            r.check(p.iter().all(|x| self.is_morphism(i, i, x)), "P in Aut_T(P)", || format!("{p:?}"));
            for j in 0..n {
                for &x in &self.hom[i][j] {
                    r.check(
                        p.is_subgroup_of(&l.s_g(x)) && g.conjugate_subgroup(p, x).is_subgroup_of(&self.objects[j]),
                        "hom-set membership",
                        || format!("{} in Mor({p:?}, {:?})", g.label(x), self.objects[j]),
                    );
                    for k in 0..n {
                        for &y in &self.hom[j][k] {
                            let ok = l.in_domain(&[x, y]) && self.is_morphism(i, k, g.mul(x, y));
                            r.check(ok, "closure", || format!("{} then {}", g.label(x), g.label(y)));
                        }
                    }
                }
            }
            // associativity depends only on the elements, so one pass per source
            let first: Vec<Elem> = l.elements().iter().filter(|&x| p.is_subgroup_of(&l.s_g(x))).collect();
            for &x in &first {
                let px = g.conjugate_subgroup(p, x);
                for y in l.elements().iter().filter(|&y| px.is_subgroup_of(&l.s_g(y))) {
                    let pxy = g.conjugate_subgroup(&px, y);
                    for z in l.elements().iter().filter(|&z| pxy.is_subgroup_of(&l.s_g(z))) {
                        let ok = l.product(&[x, y, z]).ok() == Some(g.mul(g.mul(x, y), z))
                            && l.product(&[x, g.mul(y, z)]).ok() == Some(g.mul(x, g.mul(y, z)));
                        r.check(ok, "associativity", || format!("{} {} {}", g.label(x), g.label(y), g.label(z)));
                    }
                }
            }
        }
        r
    }
}

/// Objects of `T^e`: `S` and each `P` with `N_S(P)` Sylow in `Aut_T(P)` and
/// `Aut_T(P)/P` having a strongly `p`-embedded subgroup.
pub fn t_essential_objects(t: &TransporterCat) -> Result<Vec<Subgroup>> {
    let g = t.group();
    let s = *t.locality().s();
    let mut out = Vec::new();
    for (i, p) in t.objects().iter().enumerate() {
        if *p == s {
            out.push(s);
            continue;
        }
        let aut = t.aut(i)?;
        let ns = g.normalizer(&s, p);
        if ns.order() as u64 != p_part(aut.order() as u64, t.p()) || !ns.is_subgroup_of(&aut) {
            continue;
        }
        let (quotient, _) = g.quotient(&aut, p)?;
        if strongly_p_embedded(&quotient, t.p()).exists {
            out.push(*p);
        }
    }
    Ok(out)
}

pub fn t_essential_subcategory(t: &TransporterCat) -> Result<TransporterCat> {
    t.full_subcategory(&t_essential_objects(t)?)
}

/// One step of a decomposed morphism: `x ∈ Aut_T(R)` restricted to
/// `source → target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismFactor {
    pub r: Subgroup,
    pub x: Elem,
    pub source: Subgroup,
    pub target: Subgroup,
}

/// Writes `g ∈ Mor(P, Q)` as a chain of restrictions of automorphisms of
/// `S` and essential subgroups, followed by an inclusion when `P^g < Q`.
pub fn decompose_morphism(t: &TransporterCat, p: &Subgroup, q: &Subgroup, g: Elem) -> Result<Vec<MorphismFactor>> {
    let (i, j) = (t.index_of(p), t.index_of(q));
    let (Some(i), Some(j)) = (i, j) else { return Err(Error::NotAMorphism) };
    if !t.is_morphism(i, j, g) {
        return Err(Error::NotAMorphism);
    }
    let grp = t.group();
    let cert = t.decomposer().decompose(g)?;
    let mut out = Vec::new();
    let mut cur = *p;
    for f in cert.factors.iter().filter(|f| f.x != grp.identity()) {
        let next = grp.conjugate_subgroup(&cur, f.x);
        out.push(MorphismFactor { r: f.q, x: f.x, source: cur, target: next });
        cur = next;
    }
    if out.is_empty() || cur != *q {
        out.push(MorphismFactor { r: *t.locality().s(), x: grp.identity(), source: cur, target: *q });
    }
    Ok(out)
}

/// Checks a decomposition against the category and against the objects of
/// `T^e`.
pub fn verify_morphism_decomposition(
    t: &TransporterCat,
    essential: &[Subgroup],
    (p, q, g): (&Subgroup, &Subgroup, Elem),
    factors: &[MorphismFactor],
) -> Report {
    let grp = t.group();
    let mut r = Report::new(format!("decomposition of {}", grp.label(g)));
    r.check(!factors.is_empty(), "nonempty", String::new);
    r.check(factors.first().map(|f| f.source) == Some(*p), "starts at P", || format!("{p:?}"));
    r.check(factors.last().map(|f| f.target) == Some(*q), "ends at Q", || format!("{q:?}"));
    for w in factors.windows(2) {
        r.check(w[0].target == w[1].source, "chain", || format!("{:?} vs {:?}", w[0].target, w[1].source));
    }
    for f in factors {
        let ri = t.index_of(&f.r);
        r.check(essential.contains(&f.r), "R in T^e", || format!("{:?}", f.r));
        r.check(ri.is_some_and(|ri| t.is_morphism(ri, ri, f.x)), "x in Aut_T(R)", || grp.label(f.x));
        r.check(f.source.is_subgroup_of(&f.r), "restriction", || format!("{:?} in {:?}", f.source, f.r));
        let (si, ti) = (t.index_of(&f.source), t.index_of(&f.target));
        r.check(
            si.zip(ti).is_some_and(|(si, ti)| t.is_morphism(si, ti, f.x)),
            "factor is a morphism",
            || grp.label(f.x),
        );
    }
    let word: Vec<Elem> = factors.iter().map(|f| f.x).collect();
    r.check(t.locality().product(&word).ok() == Some(g), "composite", || {
        word.iter().map(|&x| grp.label(x)).collect::<Vec<_>>().join(" ")
    });
    r
}

/// Integer matrix in row-major nested form.
pub type Matrix = Vec<Vec<i64>>;

/// A contravariant functor from a transporter category to finite abelian
/// `p`-groups: a morphism `P → Q` gives a matrix from the coordinates of
/// `F(Q)` to those of `F(P)`.
#[derive(Clone, Debug)]
pub struct FunctorPres {
    category: TransporterCat,
    values: Vec<AbPres>,
    maps: Vec<Vec<Vec<Matrix>>>,
}

impl FunctorPres {
    /// `maps[i][j][k]` belongs to `hom(i, j)[k]`. Rejects anything that is
    /// not a functor with [`Error::FunctorInconsistent`].
    pub fn new(category: TransporterCat, values: Vec<AbPres>, maps: Vec<Vec<Vec<Matrix>>>) -> Result<Self> {
        let f = FunctorPres { category, values, maps };
        f.check()?;
        Ok(f)
    }

    pub fn category(&self) -> &TransporterCat {
        &self.category
    }

    pub fn value_at(&self, i: usize) -> &AbPres {
        &self.values[i]
    }

    pub fn values(&self) -> &[AbPres] {
        &self.values
    }

    pub fn matrix_of(&self, i: usize, j: usize, g: Elem) -> Option<&Matrix> {
        let k = self.category.hom[i][j].binary_search(&g).ok()?;
        Some(&self.maps[i][j][k])
    }

    fn check(&self) -> Result<()> {
        let t = &self.category;
        let bad = |msg: String| Err(Error::FunctorInconsistent(msg));
        let n = t.objects.len();
        if self.values.len() != n || self.maps.len() != n {
            return bad("one value and one row of maps per object".into());
        }
        let grp = t.group();
        for i in 0..n {
            let p = t.p();
            if self.values[i].cyclic_orders.iter().any(|&o| p_part(o, p) != o) {
                return bad(format!("value at object {i} is not a {p}-group"));
            }
            if self.maps[i].len() != n {
                return bad(format!("maps out of object {i}"));
            }
            for j in 0..n {
                if self.maps[i][j].len() != t.hom[i][j].len() {
                    return bad(format!("one matrix per morphism {i}->{j}"));
                }
                for (k, m) in self.maps[i][j].iter().enumerate() {
                    let (rows, cols) = (&self.values[i].cyclic_orders, &self.values[j].cyclic_orders);
                    if m.len() != rows.len() || m.iter().any(|r| r.len() != cols.len()) {
                        return bad(format!("shape of the matrix for {i}->{j}:{}", grp.label(t.hom[i][j][k])));
                    }
                    for (a, row) in m.iter().enumerate() {
                        for (b, &x) in row.iter().enumerate() {
                            if (x as i128 * cols[b] as i128).rem_euclid(rows[a] as i128) != 0 {
                                return bad(format!("matrix for {i}->{j}:{} is not a homomorphism", grp.label(t.hom[i][j][k])));
                            }
                        }
                    }
                }
            }
            let id = self.matrix_of(i, i, grp.identity()).expect("identity morphism");
            let rows = &self.values[i].cyclic_orders;
            if !same_mod(id, &identity(rows.len()), rows) {
                return bad(format!("identity at object {i}"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for (a, &x) in t.hom[i][j].iter().enumerate() {
                    for k in 0..n {
                        for (b, &y) in t.hom[j][k].iter().enumerate() {
                            let composite = self.matrix_of(i, k, grp.mul(x, y)).expect("closure");
                            let product = mat_mul(&self.maps[i][j][a], &self.maps[j][k][b]);
                            if !same_mod(composite, &product, &self.values[i].cyclic_orders) {
                                return bad(format!("F({} {}) != F({})F({})", grp.label(x), grp.label(y), grp.label(x), grp.label(y)));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The restriction to a full subcategory of the same transporter category.
    pub fn restrict_to(&self, sub: &TransporterCat) -> Result<FunctorPres> {
        let idx: Vec<usize> = sub
            .objects
            .iter()
            .map(|p| self.category.index_of(p).ok_or_else(|| Error::InvalidInput("not a subcategory".into())))
            .collect::<Result<_>>()?;
        let values = idx.iter().map(|&i| self.values[i].clone()).collect();
        let mut maps = Vec::new();
        for (si, &i) in idx.iter().enumerate() {
            let mut row = Vec::new();
            for (sj, &j) in idx.iter().enumerate() {
                let ms: Option<Vec<Matrix>> = sub.hom[si][sj].iter().map(|&g| self.matrix_of(i, j, g).cloned()).collect();
                row.push(ms.ok_or_else(|| Error::InvalidInput("hom-sets differ from the parent category".into()))?);
            }
            maps.push(row);
        }
        FunctorPres::new(sub.clone(), values, maps)
    }
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|row| {
            (0..b.first().map_or(0, Vec::len))
                .map(|j| row.iter().zip(b).map(|(&x, r)| (x as i128 * r[j] as i128) as i64).sum())
                .collect()
        })
        .collect()
}

fn same_mod(a: &Matrix, b: &Matrix, row_orders: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .zip(row_orders)
        .all(|((ra, rb), &o)| ra.iter().zip(rb).all(|(&x, &y)| (x as i128 - y as i128).rem_euclid(o as i128) == 0))
}

/// `lim F` over `t`, which may be `F`'s category or a full subcategory of
/// it. Every morphism contributes its constraints `F(φ)·x_Q = x_P`.
pub fn inverse_limit(t: &TransporterCat, f: &FunctorPres) -> Result<AbPres> {
    let f = if t.objects == f.category.objects { f.clone() } else { f.restrict_to(t)? };
    let p = t.p();
    let orders: Vec<u64> = f.values.iter().flat_map(|v| v.cyclic_orders.iter().copied()).collect();
    let ring = Ring::for_orders(p, &orders)?;
    let offsets: Vec<usize> = f
        .values
        .iter()
        .scan(0, |acc, v| {
            let o = *acc;
            *acc += v.rank();
            Some(o)
        })
        .collect();
    let n = t.objects.len();
    let mut rows: Vec<(SparseRow, u32)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, &g) in t.hom[i][j].iter().enumerate() {
                if i == j && g == t.group().identity() {
                    continue;
                }
                let m = &f.maps[i][j][k];
                for (a, &o) in f.values[i].cyclic_orders.iter().enumerate() {
                    let mut row: SparseRow = vec![(offsets[i] + a, 1)];
                    for (b, &x) in m[a].iter().enumerate() {
                        let c = ring.reduce(-(x as i128));
                        if c != 0 {
                            row.push((offsets[j] + b, c));
                        }
                    }
                    rows.push((row, ring.exponent_of(o)));
                }
            }
        }
    }
    let ker = kernel(ring, orders.len(), rows);
    Ok(subquotient(ring, &orders, &ker, &[])?.invariant_orders())
}

/// `P ↦ M^P`, with `g : P → Q` acting as `m ↦ g·m` from `M^Q` to `M^P`.
pub fn fixed_point_functor(t: &TransporterCat, m: &GModule) -> Result<FunctorPres> {
    if m.group().order() != t.group().order() || m.p() != t.p() {
        return Err(Error::ActionInvalid("module is for a different group or prime".into()));
    }
    let fixed: Vec<_> = t.objects.iter().map(|p| m.fixed_points(p)).collect::<Result<_>>()?;
    let n = t.objects.len();
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let ms = t.hom[i][j]
                .iter()
                .map(|&g| {
                    let cols: Vec<Vec<u64>> =
                        fixed[j].reps.iter().map(|v| fixed[i].project(&m.apply(g, v))).collect::<Result<_>>()?;
                    Ok(transpose(&cols, fixed[i].orders.len()))
                })
                .collect::<Result<Vec<Matrix>>>()?;
            row.push(ms);
        }
        maps.push(row);
    }
    let values = fixed.iter().map(|sq| sq.invariant_orders()).collect();
    FunctorPres::new(t.clone(), values, maps)
}

/// Columns to a row-major matrix with `rows` rows.
pub(crate) fn transpose(cols: &[Vec<u64>], rows: usize) -> Matrix {
    (0..rows).map(|a| cols.iter().map(|c| c[a] as i64).collect()).collect()
}
