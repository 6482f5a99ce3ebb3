//! Finite groups stored as Cayley tables, with subgroups as bitsets.
//!
//! Element `0` is always the identity. Conjugation is on the right:
//! `s^g = g⁻¹ s g`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::arith::{is_p_power, is_prime, p_part};
use crate::bitset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Index of a group element.
pub type Elem = usize;

/// Default bound on the group order for full subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 200;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    labels: Option<Vec<String>>,
    perms: Option<Vec<Perm>>,
}

/// A subgroup of some fixed [`FiniteGroup`], as a set of element indices.
///
/// Subgroups do not carry their parent; every operation takes the group
/// explicitly. Ordering is by `(order, members)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElemSet,
}

impl Subgroup {
    /// Wraps a set without checking closure. See [`FiniteGroup::subgroup_from_set`].
    pub fn from_set_unchecked(members: ElemSet) -> Self {
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: ElemSet::singleton(0) }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { members: self.members.intersection(&other.members) }
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> {
        self.members.iter()
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), self.members).cmp(&(other.order(), other.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

/// A map defined on the members of `source`, into some target group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: Subgroup,
    /// `images[x]` is the image of `x` for `x ∈ source`, `None` elsewhere.
    pub images: Vec<Option<Elem>>,
}

impl GroupHom {
    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.images.get(x).copied().flatten()
    }

    pub fn image_set(&self) -> ElemSet {
        self.source.iter().filter_map(|x| self.apply(x)).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.source.order()
    }

    /// Checks `f(xy) = f(x) f(y)` on all pairs of source members.
    pub fn is_homomorphism(&self, source_group: &FiniteGroup, target_group: &FiniteGroup) -> bool {
        for x in self.source.iter() {
            for y in self.source.iter() {
                let (Some(fx), Some(fy), Some(fxy)) =
                    (self.apply(x), self.apply(y), self.apply(source_group.mul(x, y)))
                else {
                    return false;
                };
                if target_group.mul(fx, fy) != fxy {
                    return false;
                }
            }
        }
        true
    }
}

impl FiniteGroup {
    /// Closes a set of permutations under composition. Elements are numbered
    /// in breadth-first order from the identity.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Perm]) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidInput(format!("generator {g} has the wrong degree")));
            }
        }
        let mut elems = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let y = elems[i].then(g);
                if !index.contains_key(&y) {
                    if elems.len() == MAX_ORDER {
                        return Err(Error::GroupTooLarge { order: elems.len() + 1, bound: MAX_ORDER });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0u16; n * n];
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&elems[a].then(&elems[b])] as u16;
            }
            inverse[a] = index[&elems[a].inverse()] as u16;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            order: n,
            table,
            inverse,
            labels: Some(elems.iter().map(|p| p.to_string()).collect()),
            perms: Some(elems),
        })
    }

    /// Builds a group from a Cayley table, checking the group axioms
    /// exhaustively with `0` as identity.
    pub fn from_table(name: &str, table: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::GroupTooLarge { order: n, bound: MAX_ORDER });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::NotAGroup("table is not square over 0..n".into()));
            }
            flat.extend(row.iter().map(|&x| x as u16));
        }
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            match (0..n).find(|&b| flat[a * n + b] == 0) {
                Some(b) => inverse[a] = b as u16,
                None => return Err(Error::NotAGroup(format!("element {a} has no inverse"))),
            }
        }
        let g = Self::from_parts_unchecked(name, flat, inverse, labels);
        if let Some(w) = g.axiom_violation() {
            return Err(Error::NotAGroup(w));
        }
        Ok(g)
    }

    /// Assembles a group without checking any axiom. `table` is row-major.
    /// Intended for negative controls; most operations assume the axioms hold.
    pub fn from_parts_unchecked(
        name: &str,
        table: Vec<u16>,
        inverse: Vec<u16>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let order = inverse.len();
        assert_eq!(table.len(), order * order);
        FiniteGroup { name: name.to_string(), order, table, inverse, labels, perms: None }
    }

    pub fn trivial() -> Self {
        Self::from_parts_unchecked("1", vec![0], vec![0], Some(vec!["()".into()]))
    }

    /// Returns a copy with the table entries `a·b` and `c·d` exchanged.
    pub fn with_swapped_products(&self, (a, b): (Elem, Elem), (c, d): (Elem, Elem)) -> Self {
        let mut g = self.clone();
        let n = self.order;
        g.table.swap(a * n + b, c * n + d);
        g.name = format!("{} (mutated)", self.name);
        g
    }

    /// First violated group axiom, if any: identity, inverses, associativity.
    pub fn axiom_violation(&self) -> Option<String> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Some(format!("identity law fails at {}", self.label(a)));
            }
            let ai = self.inv(a);
            if self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Some(format!("inverse law fails at {}", self.label(a)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some(format!(
                            "associativity fails at ({}, {}, {})",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn rename(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].degree())
    }

    pub fn perm(&self, x: Elem) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[x])
    }

    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("#{x}"),
        }
    }

    /// Looks up an element by cycle string (permutation groups) or by
    /// `#index`.
    pub fn element(&self, text: &str) -> Result<Elem> {
        let t = text.trim();
        if let Some(idx) = t.strip_prefix('#') {
            let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index {t:?}")))?;
            return self.check(i).map(|_| i);
        }
        let perms = self
            .perms
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("group {} has no permutation labels", self.name)))?;
        let p = Perm::parse(perms[0].degree(), t)?;
        perms
            .iter()
            .position(|q| *q == p)
            .ok_or_else(|| Error::InvalidInput(format!("{t} is not an element of {}", self.name)))
    }

    fn check(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(x, self.order))
        }
    }

    /// Checked product.
    pub fn multiply(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    /// `g⁻¹ s g`.
    #[inline]
    pub fn conj(&self, s: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), s), g)
    }

    /// Checked `g⁻¹ s g`.
    pub fn conjugate(&self, s: Elem, g: Elem) -> Result<Elem> {
        self.check(s)?;
        self.check(g)?;
        Ok(self.conj(s, g))
    }

    /// Left-to-right product of a word; the empty word gives the identity.
    pub fn fold(&self, word: &[Elem]) -> Elem {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: ElemSet::full(self.order) }
    }

    /// Returns the set as a subgroup if it is one.
    pub fn subgroup_from_set(&self, set: ElemSet) -> Result<Subgroup> {
        if !set.contains(0) {
            return Err(Error::InvalidInput("subset does not contain the identity".into()));
        }
        for a in set.iter() {
            self.check(a)?;
            if !set.contains(self.inv(a)) {
                return Err(Error::InvalidInput("subset is not closed under inverses".into()));
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::InvalidInput("subset is not closed under products".into()));
                }
            }
        }
        Ok(Subgroup { members: set })
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure.
    pub fn generated_subgroup(&self, gens: &[Elem]) -> Subgroup {
        self.close_from(ElemSet::singleton(0), gens)
    }

    fn close_from(&self, start: ElemSet, gens: &[Elem]) -> Subgroup {
        let mut members = start;
        let mut queue: VecDeque<Elem> = start.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { members }
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial();
        for x in h.iter() {
            if !current.contains(x) {
                gens.push(x);
                current = self.close_from(current.members, &gens);
            }
        }
        gens
    }

    /// `⟨A, B⟩`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = self.generators(a);
        gens.extend(self.generators(b));
        self.close_from(a.members, &gens)
    }

    fn join_with(&self, a_gens: &[Elem], a: &Subgroup, x: Elem) -> Subgroup {
        let mut gens = a_gens.to_vec();
        gens.push(x);
        self.close_from(a.members, &gens)
    }

    /// `P^g = g⁻¹ P g`.
    pub fn conjugate_subgroup(&self, p: &Subgroup, g: Elem) -> Subgroup {
        Subgroup { members: p.iter().map(|s| self.conj(s, g)).collect() }
    }

    /// `{a ∈ A | P^a = P}`.
    pub fn normalizer(&self, a: &Subgroup, p: &Subgroup) -> Subgroup {
        let gens = self.generators(p);
        Subgroup {
            members: a
                .iter()
                .filter(|&x| gens.iter().all(|&s| p.contains(self.conj(s, x))))
                .collect(),
        }
    }

    /// `{a ∈ A | s^a = s for all s ∈ P}`.
    pub fn centralizer(&self, a: &Subgroup, p: &Subgroup) -> Subgroup {
        let gens = self.generators(p);
        Subgroup {
            members: a.iter().filter(|&x| gens.iter().all(|&s| self.conj(s, x) == s)).collect(),
        }
    }

    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        n.is_subgroup_of(h) && self.normalizer(h, n) == *h
    }

    pub fn is_p_subgroup(&self, h: &Subgroup, p: u64) -> bool {
        is_p_power(h.order() as u64, p)
    }

    /// A Sylow `p`-subgroup of `H`, grown deterministically: starting from the
    /// trivial subgroup, repeatedly adjoin the first element of `N_H(T)` that
    /// enlarges `T` to a bigger `p`-group.
    pub fn sylow(&self, h: &Subgroup, p: u64) -> Subgroup {
        assert!(is_prime(p), "{p} is not prime");
        let target = p_part(h.order() as u64, p) as usize;
        let mut t = Subgroup::trivial();
        while t.order() < target {
            let n = self.normalizer(h, &t);
            let t_gens = self.generators(&t);
            let next = n
                .iter()
                .filter(|&x| !t.contains(x))
                .map(|x| self.join_with(&t_gens, &t, x))
                .find(|j| self.is_p_subgroup(j, p))
                .expect("a p-subgroup below Sylow order has a larger p-overgroup in its normalizer");
            t = next;
        }
        t
    }

    /// First `n ∈ H` (index order) with `P^n ⊆ T`.
    pub fn sylow_conjugator(&self, h: &Subgroup, p: &Subgroup, t: &Subgroup) -> Result<Elem> {
        let gens = self.generators(p);
        let n = h
            .iter()
            .find(|&n| gens.iter().all(|&s| t.contains(self.conj(s, n))))
            .ok_or(Error::NotConjugatable)?;
        debug_assert!(self.conjugate_subgroup(p, n).is_subgroup_of(t));
        Ok(n)
    }

    /// All subgroups, sorted by `(order, members)`.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.subgroups_of(&self.whole(), DEFAULT_SUBGROUP_BOUND)
    }

    /// All subgroups of `H`, seeded by cyclic subgroups and closed under
    /// joins with cyclic subgroups.
    pub fn subgroups_of(&self, h: &Subgroup, bound: usize) -> Result<Vec<Subgroup>> {
        if h.order() > bound {
            return Err(Error::GroupTooLarge { order: h.order(), bound });
        }
        let mut cyclic: Vec<(Elem, Subgroup)> = Vec::new();
        let mut seen = BTreeSet::new();
        for x in h.iter() {
            let c = self.generated_subgroup(&[x]);
            if seen.insert(c) {
                cyclic.push((x, c));
            }
        }
        let mut all: BTreeSet<Subgroup> = seen;
        let mut work: Vec<Subgroup> = all.iter().copied().collect();
        while let Some(a) = work.pop() {
            let a_gens = self.generators(&a);
            for (x, c) in &cyclic {
                if c.is_subgroup_of(&a) {
                    continue;
                }
                let j = self.join_with(&a_gens, &a, *x);
                if all.insert(j) {
                    work.push(j);
                }
            }
        }
        Ok(all.into_iter().collect())
    }

    /// `H/N` as a Cayley-table group, with the projection `H → H/N`.
    /// Cosets are numbered by their first element in index order.
    pub fn quotient(&self, h: &Subgroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_normal_in(n, h) {
            return Err(Error::NotNormal);
        }
        let mut coset_of: Vec<Option<Elem>> = vec![None; self.order];
        let mut reps = Vec::new();
        for x in h.iter() {
            if coset_of[x].is_none() {
                let id = reps.len();
                reps.push(x);
                for m in n.iter() {
                    coset_of[self.mul(m, x)] = Some(id);
                }
            }
        }
        let k = reps.len();
        let mut table = vec![0u16; k * k];
        let mut inverse = vec![0u16; k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = coset_of[self.mul(reps[i], reps[j])].expect("closed") as u16;
            }
            inverse[i] = coset_of[self.inv(reps[i])].expect("closed") as u16;
        }
        let labels = reps.iter().map(|&r| self.label(r)).collect();
        let q = FiniteGroup::from_parts_unchecked(&format!("{}/N", self.name), table, inverse, Some(labels));
        debug_assert!(q.axiom_violation().is_none());
        Ok((q, GroupHom { source: *h, images: coset_of }))
    }

    /// The subgroup `H` as a group in its own right, with the embedding
    /// back into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let elems: Vec<Elem> = h.iter().collect();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let k = elems.len();
        let mut table = vec![0u16; k * k];
        let mut inverse = vec![0u16; k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * k + j] = pos[self.mul(a, b)] as u16;
            }
            inverse[i] = pos[self.inv(a)] as u16;
        }
        let labels = elems.iter().map(|&x| self.label(x)).collect();
        let mut g = FiniteGroup::from_parts_unchecked(&self.name, table, inverse, Some(labels));
        g.perms = self.perms.as_ref().map(|p| elems.iter().map(|&x| p[x].clone()).collect());
        (g, elems)
    }

    /// Labels of a greedy generating set, used to print subgroups.
    pub fn subgroup_labels(&self, h: &Subgroup) -> Vec<String> {
        self.generators(h).into_iter().map(|x| self.label(x)).collect()
    }

    /// Subgroup generated by the elements with the given labels.
    pub fn subgroup_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subgroup> {
        let gens = labels.iter().map(|l| self.element(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Ok(self.generated_subgroup(&gens))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}
