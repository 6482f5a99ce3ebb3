//! The fusion system of a locality, as far as the decomposition needs it.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::locality::Locality;

/// Default bound on `|S|` for [`hom_f`].
pub const DEFAULT_HOM_BOUND: usize = 64;

/// An injective homomorphism between subgroups of `S` in the fusion system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMorphism {
    pub domain: Subgroup,
    /// `(x, φ(x))` for each `x` in the domain, sorted by `x`.
    pub image_of: Vec<(Elem, Elem)>,
    /// Letters whose successive conjugations realize the map.
    pub witness: Vec<Elem>,
}

impl FusionMorphism {
    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.image_of.binary_search_by_key(&x, |&(a, _)| a).ok().map(|i| self.image_of[i].1)
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_set_unchecked(self.image_of.iter().map(|&(_, y)| y).collect())
    }
}

/// `N_S(P)`.
pub fn n_s(l: &Locality, p: &Subgroup) -> Subgroup {
    l.ambient().normalizer(l.s(), p)
}

fn require_object(l: &Locality, p: &Subgroup) -> Result<()> {
    if l.delta().contains(p) {
        Ok(())
    } else {
        Err(Error::PNotInDelta)
    }
}

/// The `F`-conjugates of `P`, each with the first element `g ∈ L` (index
/// order) such that `P ≤ S_g` and `P^g = Q`. `P` itself comes first.
pub fn delta_conjugates(l: &Locality, p: &Subgroup) -> Result<Vec<(Subgroup, Elem)>> {
    require_object(l, p)?;
    let g = l.ambient();
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for x in l.elements().iter() {
        if !p.is_subgroup_of(&l.s_g(x)) {
            continue;
        }
        let q = g.conjugate_subgroup(p, x);
        if !seen.contains_key(&q) {
            seen.insert(q, x);
            out.push((q, x));
        }
    }
    Ok(out)
}

pub fn is_fully_normalized(l: &Locality, p: &Subgroup) -> Result<bool> {
    let own = n_s(l, p).order();
    Ok(delta_conjugates(l, p)?.iter().all(|(q, _)| n_s(l, q).order() <= own))
}

/// A fully normalized conjugate `Q` of `P` and `h ∈ L` with `P^h = Q` and
/// `N_S(P)^h ≤ N_S(Q)`. Among fully normalized conjugates the smallest
/// bitset is chosen.
pub fn fully_normalized_rep(l: &Locality, p: &Subgroup) -> Result<(Subgroup, Elem)> {
    let orbit = delta_conjugates(l, p)?;
    let best = orbit.iter().map(|(q, _)| n_s(l, q).order()).max().expect("orbit contains P");
    let (q, f) = orbit
        .iter()
        .filter(|(q, _)| n_s(l, q).order() == best)
        .min_by_key(|(q, _)| *q.members())
        .copied()
        .expect("nonempty");
    let h = transporter_into_normalizer(l, p, &q, f)?;
    Ok((q, h))
}

/// Given `f` with `P^f = Q` and `Q` fully normalized, returns `h = f·n` with
/// `n ∈ N_L(Q)` such that additionally `N_S(P)^h ≤ N_S(Q)`.
pub(crate) fn transporter_into_normalizer(l: &Locality, p: &Subgroup, q: &Subgroup, f: Elem) -> Result<Elem> {
    let g = l.ambient();
    let nq = l.normalizer(q)?;
    let moved = g.conjugate_subgroup(&n_s(l, p), f);
    let target = n_s(l, q);
    let n = g.sylow_conjugator(&nq, &moved, &target)?;
    let h = g.mul(f, n);
    if g.conjugate_subgroup(p, h) != *q
        || !g.conjugate_subgroup(&n_s(l, p), h).is_subgroup_of(&target)
        || !l.contains(h)
    {
        return Err(Error::InternalInvariantViolation("normalizing transporter postcondition".into()));
    }
    Ok(h)
}

/// All morphisms `P → Q` that are composites of restrictions of conjugation
/// maps `c_g : S_g → (S_g)^g`, found by breadth-first closure from the
/// identity on `P`.
pub fn hom_f(l: &Locality, p: &Subgroup, q: &Subgroup) -> Result<Vec<FusionMorphism>> {
    hom_f_bounded(l, p, q, DEFAULT_HOM_BOUND)
}

pub fn hom_f_bounded(l: &Locality, p: &Subgroup, q: &Subgroup, bound: usize) -> Result<Vec<FusionMorphism>> {
    if l.s().order() > bound {
        return Err(Error::SBoundExceeded { order: l.s().order(), bound });
    }
    if !p.is_subgroup_of(l.s()) || !q.is_subgroup_of(l.s()) {
        return Err(Error::InvalidInput("P and Q must be subgroups of S".into()));
    }
    let g = l.ambient();
    let domain: Vec<Elem> = p.iter().collect();
    // state: images of the domain elements, in domain order
    let start: Vec<Elem> = domain.clone();
    let mut witness: BTreeMap<Vec<Elem>, Vec<Elem>> = BTreeMap::new();
    witness.insert(start.clone(), Vec::new());
    let mut queue = VecDeque::from([start]);
    while let Some(images) = queue.pop_front() {
        let image_set: crate::bitset::ElemSet = images.iter().copied().collect();
        for x in l.elements().iter() {
            if !image_set.is_subset(l.s_g(x).members()) {
                continue;
            }
            let next: Vec<Elem> = images.iter().map(|&y| g.conj(y, x)).collect();
            if !witness.contains_key(&next) {
                let mut w = witness[&images].clone();
                w.push(x);
                witness.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    Ok(witness
        .into_iter()
        .filter(|(images, _)| images.iter().all(|&y| q.contains(y)))
        .map(|(images, w)| FusionMorphism {
            domain: *p,
            image_of: domain.iter().copied().zip(images).collect(),
            witness: w,
        })
        .collect())
}

/// `P` is centric when `C_S(Q) ≤ Q` for every `F`-conjugate `Q`.
pub fn is_centric(l: &Locality, p: &Subgroup) -> Result<bool> {
    let g = l.ambient();
    Ok(delta_conjugates(l, p)?.iter().all(|(q, _)| g.centralizer(l.s(), q).is_subgroup_of(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::locality::DeltaSpec;
    use std::sync::Arc;

    fn locality(name: &str, p: u64, spec: DeltaSpec) -> Locality {
        Locality::build(Arc::new(library::builtin(name).unwrap()), p, &spec).unwrap()
    }

    #[test]
    fn delta_conjugates_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        assert_eq!(delta_conjugates(&l, &Subgroup::trivial()).unwrap(), vec![(Subgroup::trivial(), 0)]);
        assert_eq!(delta_conjugates(&l, l.s()).unwrap(), vec![(*l.s(), 0)]);

        let l = locality("S4", 2, DeltaSpec::All);
        let g = l.ambient();
        let transpositions: Vec<Subgroup> = l
            .s()
            .iter()
            .filter(|&x| g.perm(x).unwrap().cycles().len() == 1 && g.element_order(x) == 2)
            .map(|x| g.generated_subgroup(&[x]))
            .collect();
        assert_eq!(transpositions.len(), 2);
        let orbit = delta_conjugates(&l, &transpositions[0]).unwrap();
        let mut found: Vec<Subgroup> = orbit.iter().map(|(q, _)| *q).collect();
        found.sort();
        let mut expected = transpositions.clone();
        expected.sort();
        assert_eq!(found, expected);
        for (q, x) in orbit {
            assert_eq!(g.conjugate_subgroup(&transpositions[0], x), q);
        }
    }

    #[test]
    fn full_normalization_examples() {
        let l = locality("S4", 2, DeltaSpec::All);
        let g = l.ambient();
        assert!(is_fully_normalized(&l, l.s()).unwrap());
        let v = g.subgroup_from_labels(&["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        assert!(is_fully_normalized(&l, &v).unwrap());
        // an order-2 subgroup of V that is not central in S has a fully
        // normalized conjugate (the center of S) with a bigger S-normalizer
        let z = *g.subgroups_of(l.s(), 256).unwrap().iter().find(|p| p.order() == 2 && g.is_normal_in(p, l.s())).unwrap();
        let others: Vec<Subgroup> = g
            .subgroups_of(&v, 256)
            .unwrap()
            .into_iter()
            .filter(|p| p.order() == 2 && *p != z)
            .collect();
        assert_eq!(others.len(), 2);
        for p in &others {
            assert!(!is_fully_normalized(&l, p).unwrap());
            let (q, h) = fully_normalized_rep(&l, p).unwrap();
            assert_eq!(q, z);
            assert_eq!(g.conjugate_subgroup(p, h), q);
            assert!(g.conjugate_subgroup(&n_s(&l, p), h).is_subgroup_of(&n_s(&l, &q)));
        }
        let l3 = locality("S3", 2, DeltaSpec::All);
        assert_eq!(fully_normalized_rep(&l3, &Subgroup::trivial()).unwrap(), (Subgroup::trivial(), 0));
    }

    #[test]
    fn hom_f_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        let homs = hom_f(&l, l.s(), l.s()).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].image_of.iter().all(|(a, b)| a == b));

        let l = locality("S4", 2, DeltaSpec::All);
        let g = l.ambient();
        let v = g.subgroup_from_labels(&["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        let homs = hom_f(&l, &v, &v).unwrap();
        // oracle: |N(V)/C(V)| computed independently
        let nv = g.normalizer(&g.whole(), &v).order();
        let cv = g.centralizer(&g.whole(), &v).order();
        assert_eq!(homs.len(), nv / cv);
        assert_eq!(homs.len(), 6);
        for h in &homs {
            let prod = g.fold(&h.witness);
            assert!(l.in_domain(&h.witness));
            for &(x, y) in &h.image_of {
                assert_eq!(g.conj(x, prod), y);
            }
        }
    }

    #[test]
    fn centric_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        assert!(is_centric(&l, l.s()).unwrap());
        assert!(!is_centric(&l, &Subgroup::trivial()).unwrap());
        let l = locality("S3", 2, DeltaSpec::Nontrivial);
        assert_eq!(is_centric(&l, &Subgroup::trivial()), Err(Error::PNotInDelta));
    }
}
