//! Localities derived from finite groups.
//!
//! Given a finite group `M`, a Sylow `p`-subgroup `S` and a collection `Δ` of
//! subgroups of `S`, the locality `L_Δ(M)` consists of the elements `g` with
//! `S_g = {s ∈ S | s^g ∈ S} ∈ Δ`. A word `w` lies in the domain of the partial
//! product exactly when its tracking subgroup `S_w` lies in `Δ`, and its
//! product is the ambient left-to-right product.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::arith::{is_prime, p_part};
use crate::bitset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupHom, Subgroup};
use crate::report::Report;

/// How to seed the object set before closing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaSpec {
    /// Every subgroup of `S`.
    All,
    /// Every nontrivial subgroup of `S`.
    Nontrivial,
    /// The given subgroup of `S`, closed under overgroups and conjugation.
    OvergroupsOf(Subgroup),
    /// An explicit list of subgroups of `S`, closed as above.
    Explicit(Vec<Subgroup>),
}

/// A set of subgroups of `S`, sorted by `(order, members)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaSet {
    members: Vec<Subgroup>,
    index: HashSet<ElemSet>,
}

impl DeltaSet {
    pub fn new(members: impl IntoIterator<Item = Subgroup>) -> Self {
        let sorted: BTreeSet<Subgroup> = members.into_iter().collect();
        let members: Vec<Subgroup> = sorted.into_iter().collect();
        let index = members.iter().map(|p| *p.members()).collect();
        DeltaSet { members, index }
    }

    pub fn contains(&self, p: &Subgroup) -> bool {
        self.index.contains(p.members())
    }

    /// Membership by bitset, for tracking sets that may not be subgroups.
    pub fn contains_set(&self, set: &ElemSet) -> bool {
        self.index.contains(set)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_slice(&self) -> &[Subgroup] {
        &self.members
    }
}

#[derive(Clone, Debug)]
pub struct Locality {
    ambient: Arc<FiniteGroup>,
    p: u64,
    s: Subgroup,
    delta: DeltaSet,
    elements: ElemSet,
    /// `S_g` for every element of the ambient group.
    s_of: Vec<ElemSet>,
}

impl Locality {
    /// Builds `L_Δ(M)` with `S` chosen by [`FiniteGroup::sylow`].
    pub fn build(ambient: Arc<FiniteGroup>, p: u64, spec: &DeltaSpec) -> Result<Self> {
        check_prime(&ambient, p)?;
        let s = ambient.sylow(&ambient.whole(), p);
        Self::build_with_sylow(ambient, p, s, spec)
    }

    /// Builds `L_Δ(M)` over an explicitly chosen Sylow subgroup `S`.
    pub fn build_with_sylow(ambient: Arc<FiniteGroup>, p: u64, s: Subgroup, spec: &DeltaSpec) -> Result<Self> {
        check_prime(&ambient, p)?;
        if s.order() as u64 != p_part(ambient.order() as u64, p) || !ambient.is_p_subgroup(&s, p) {
            return Err(Error::InvalidInput("S is not a Sylow p-subgroup".into()));
        }
        ambient.subgroup_from_set(*s.members())?;
        let subs = ambient.subgroups_of(&s, MAX_ORDER)?;
        let seed: Vec<Subgroup> = match spec {
            DeltaSpec::All => subs.clone(),
            DeltaSpec::Nontrivial => subs.iter().filter(|p| !p.is_trivial()).copied().collect(),
            DeltaSpec::OvergroupsOf(p) => vec![*p],
            DeltaSpec::Explicit(list) => list.clone(),
        };
        if seed.is_empty() {
            return Err(Error::DeltaEmpty);
        }
        for p in &seed {
            if !p.is_subgroup_of(&s) || ambient.subgroup_from_set(*p.members()).is_err() {
                return Err(Error::InvalidInput("object is not a subgroup of S".into()));
            }
        }
        let s_of = tracking_sets(&ambient, &s);
        let mut delta: BTreeSet<Subgroup> = seed.into_iter().collect();
        loop {
            let elements = elements_of(&s_of, &delta);
            let mut next = delta.clone();
            for q in &subs {
                if delta.iter().any(|p| p.is_subgroup_of(q)) {
                    next.insert(*q);
                }
            }
            for p in &delta {
                for g in elements.iter() {
                    if p.members().is_subset(&s_of[g]) {
                        next.insert(ambient.conjugate_subgroup(p, g));
                    }
                }
            }
            if next == delta {
                break;
            }
            delta = next;
        }
        let delta = DeltaSet::new(delta);
        let elements = elements_of(&s_of, delta.iter());
        if elements.is_empty() {
            return Err(Error::DeltaEmpty);
        }
        Ok(Locality { ambient, p, s, delta, elements, s_of })
    }

    /// Assembles a locality from the given data without closing `Δ` or
    /// checking anything. `L` is still computed from its definition.
    /// Use [`Locality::verify_axioms`] to test the result.
    pub fn from_raw_parts(ambient: Arc<FiniteGroup>, p: u64, s: Subgroup, delta: Vec<Subgroup>) -> Self {
        let s_of = tracking_sets(&ambient, &s);
        let delta = DeltaSet::new(delta);
        let elements = elements_of(&s_of, delta.iter());
        Locality { ambient, p, s, delta, elements, s_of }
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The Sylow subgroup `S`.
    pub fn s(&self) -> &Subgroup {
        &self.s
    }

    pub fn delta(&self) -> &DeltaSet {
        &self.delta
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.contains(g)
    }

    /// `S_g` for any element `g` of the ambient group.
    pub fn s_g(&self, g: Elem) -> Subgroup {
        Subgroup::from_set_unchecked(self.s_of[g])
    }

    fn check_word(&self, w: &[Elem]) -> Result<()> {
        for &g in w {
            if g >= self.ambient.order() {
                return Err(Error::IndexOutOfRange(g, self.ambient.order()));
            }
            if !self.contains(g) {
                return Err(Error::NotInLocality);
            }
        }
        Ok(())
    }

    /// `S_w`: the elements of `S` that stay in `S` when conjugated through
    /// each letter of `w` in turn.
    pub fn s_of_word(&self, w: &[Elem]) -> Result<Subgroup> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.check_word(w)?;
        Ok(Subgroup::from_set_unchecked(self.tracking(w)))
    }

    /// Tracking set of a word; the empty word tracks all of `S`.
    pub(crate) fn tracking(&self, w: &[Elem]) -> ElemSet {
        if w.len() == 1 {
            return self.s_of[w[0]];
        }
        let g = &*self.ambient;
        self.s
            .iter()
            .filter(|&s| {
                let mut cur = s;
                w.iter().all(|&x| {
                    cur = g.conj(cur, x);
                    self.s.contains(cur)
                })
            })
            .collect()
    }

    /// `w ∈ D` iff `S_w ∈ Δ`. The empty word is in `D`.
    pub fn in_domain(&self, w: &[Elem]) -> bool {
        self.check_word(w).is_ok() && self.delta.contains_set(&self.tracking(w))
    }

    /// The partial product `Π(w)`; `Π(()) = e`.
    pub fn product(&self, w: &[Elem]) -> Result<Elem> {
        self.check_word(w)?;
        if !self.delta.contains_set(&self.tracking(w)) {
            return Err(Error::NotInDomain);
        }
        Ok(self.ambient.fold(w))
    }

    /// `N_L(P) = {g ∈ L | P ≤ S_g, P^g = P}`, a subgroup of the ambient group.
    pub fn normalizer(&self, p: &Subgroup) -> Result<Subgroup> {
        if !self.delta.contains(p) {
            return Err(Error::PNotInDelta);
        }
        let g = &*self.ambient;
        let gens = g.generators(p);
        let members: ElemSet = self
            .elements
            .iter()
            .filter(|&x| p.members().is_subset(&self.s_of[x]) && gens.iter().all(|&s| p.contains(g.conj(s, x))))
            .collect();
        let n = Subgroup::from_set_unchecked(members);
        debug_assert!(g.subgroup_from_set(members).is_ok());
        Ok(n)
    }

    /// `c_g : N_L(P) → N_L(P^g)`, `h ↦ g⁻¹ h g`.
    pub fn conjugation_isomorphism(&self, g: Elem, p: &Subgroup) -> Result<GroupHom> {
        if !self.contains(g) {
            return Err(Error::NotInLocality);
        }
        if !self.delta.contains(p) {
            return Err(Error::PNotInDelta);
        }
        if !p.members().is_subset(&self.s_of[g]) {
            return Err(Error::PreconditionViolated("P is not contained in S_g".into()));
        }
        let amb = &*self.ambient;
        let pg = amb.conjugate_subgroup(p, g);
        if !self.delta.contains(&pg) {
            return Err(Error::PreconditionViolated("P^g is not an object".into()));
        }
        let source = self.normalizer(p)?;
        let target = self.normalizer(&pg)?;
        let mut images = vec![None; amb.order()];
        for h in source.iter() {
            images[h] = Some(amb.conj(h, g));
        }
        let hom = GroupHom { source, images };
        if hom.image_set() != *target.members() || !hom.is_homomorphism(amb, amb) {
            return Err(Error::InternalInvariantViolation(
                "conjugation is not an isomorphism of normalizers".into(),
            ));
        }
        Ok(hom)
    }

    /// Checks the partial-group and locality axioms on all words of length at
    /// most `max_len`.
    ///
    /// Word-level clauses, for every `w ∈ D`: prefixes and suffixes lie in `D`;
    /// `Π(w) ∈ L`; `S_w ≤ S_Π(w)`; replacing any nonempty contiguous subword by
    /// its product stays in `D` with the same product; `w⁻¹∘w ∈ D` with product
    /// `e`. Single letters must lie in `D` with `Π((g)) = g`. Global clauses:
    /// inversion preserves `L`; `S ⊆ L` with `S_g ∈ Δ` for `g ∈ L`; `Δ` is closed
    /// under overgroups in `S` and under conjugation into `S`; no element of
    /// `L ∖ S` enlarges `S` to a `p`-subgroup of `L`.
    pub fn verify_axioms(&self, max_len: usize) -> Report {
        let max_len = max_len.max(1);
        let g = &*self.ambient;
        let mut report = Report::new(format!("locality over {} (p = {}), words of length ≤ {max_len}", g.name(), self.p));
        let elems: Vec<Elem> = self.elements.iter().collect();
        let show = |w: &[Elem]| -> String {
            let parts: Vec<String> = w.iter().map(|&x| g.label(x)).collect();
            format!("({})", parts.join(", "))
        };

        // global clauses
        for &x in &elems {
            let xi = g.inv(x);
            report.check(self.contains(xi) && g.inv(xi) == x, "inversion", || show(&[x]));
            report.check(self.delta.contains_set(&self.s_of[x]), "S_g in delta", || show(&[x]));
            let back = g.conjugate_subgroup(&self.s_g(x), x);
            report.check(*back.members() == self.s_of[xi], "S_{g^-1} = (S_g)^g", || show(&[x]));
        }
        report.check(self.s.members().is_subset(&self.elements), "S contained in L", || "S".into());
        for a in self.s.iter() {
            for b in self.s.iter() {
                report.check(
                    self.in_domain(&[a, b]) && self.s.contains(g.mul(a, b)),
                    "S is a subgroup of L",
                    || show(&[a, b]),
                );
            }
        }
        let subs = g.subgroups_of(&self.s, MAX_ORDER).unwrap_or_default();
        for p in self.delta.iter() {
            for q in &subs {
                if p.is_subgroup_of(q) {
                    report.check(self.delta.contains(q), "delta overgroup-closed", || {
                        format!("{:?} <= {:?}", g.subgroup_labels(p), g.subgroup_labels(q))
                    });
                }
            }
            for &x in &elems {
                if p.members().is_subset(&self.s_of[x]) {
                    report.check(self.delta.contains(&g.conjugate_subgroup(p, x)), "delta conjugation-closed", || {
                        format!("{:?}^{}", g.subgroup_labels(p), g.label(x))
                    });
                }
            }
        }
        let s_gens = g.generators(&self.s);
        for &x in elems.iter().filter(|&&x| !self.s.contains(x)) {
            let mut gens = s_gens.clone();
            gens.push(x);
            let h = g.generated_subgroup(&gens);
            let inside = h.members().is_subset(&self.elements)
                && h.iter().all(|a| h.iter().all(|b| self.in_domain(&[a, b])));
            report.check(!(inside && g.is_p_subgroup(&h, self.p)), "S maximal p-subgroup", || show(&[x]));
        }

        // word clauses
        let mut word = Vec::with_capacity(max_len);
        self.verify_words(&elems, max_len, &mut word, &mut report, &show);
        report
    }

    fn verify_words(
        &self,
        elems: &[Elem],
        max_len: usize,
        word: &mut Vec<Elem>,
        report: &mut Report,
        show: &dyn Fn(&[Elem]) -> String,
    ) {
        for &x in elems {
            word.push(x);
            self.verify_word(word, report, show);
            if word.len() < max_len {
                self.verify_words(elems, max_len, word, report, show);
            }
            word.pop();
        }
    }

    fn verify_word(&self, w: &[Elem], report: &mut Report, show: &dyn Fn(&[Elem]) -> String) {
        let g = &*self.ambient;
        let sw = self.tracking(w);
        let in_d = self.delta.contains_set(&sw);
        if w.len() == 1 {
            report.check(in_d, "L contained in D", || show(w));
            return;
        }
        if !in_d {
            return;
        }
        let prod = g.fold(w);
        report.check(self.contains(prod), "product lies in L", || show(w));
        report.check(sw.is_subset(&self.s_of[prod]), "S_w <= S_Pi(w)", || show(w));
        for k in 1..w.len() {
            report.check(
                self.delta.contains_set(&self.tracking(&w[..k])) && self.delta.contains_set(&self.tracking(&w[k..])),
                "D closed under subwords",
                || show(w),
            );
        }
        let mut spliced = Vec::with_capacity(w.len());
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                if j - i == 1 {
                    continue;
                }
                spliced.clear();
                spliced.extend_from_slice(&w[..i]);
                spliced.push(g.fold(&w[i..j]));
                spliced.extend_from_slice(&w[j..]);
                let ok = self.delta.contains_set(&self.tracking(&spliced)) && g.fold(&spliced) == prod;
                report.check(ok, "splicing", || format!("{} at [{i}, {j})", show(w)));
            }
        }
        let mut inv_w: Vec<Elem> = w.iter().rev().map(|&x| g.inv(x)).collect();
        inv_w.extend_from_slice(w);
        report.check(
            self.delta.contains_set(&self.tracking(&inv_w)) && g.fold(&inv_w) == 0,
            "inverse word",
            || show(w),
        );
    }
}

fn check_prime(ambient: &FiniteGroup, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ambient.order() as u64 % p != 0 {
        return Err(Error::PNotDividing { p, order: ambient.order() });
    }
    Ok(())
}

fn tracking_sets(g: &FiniteGroup, s: &Subgroup) -> Vec<ElemSet> {
    (0..g.order()).map(|x| s.iter().filter(|&t| s.contains(g.conj(t, x))).collect()).collect()
}

fn elements_of<'a>(s_of: &[ElemSet], delta: impl IntoIterator<Item = &'a Subgroup>) -> ElemSet {
    let keys: HashSet<ElemSet> = delta.into_iter().map(|p| *p.members()).collect();
    (0..s_of.len()).filter(|&g| keys.contains(&s_of[g])).collect()
}
