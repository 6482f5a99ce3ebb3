//! Essential subgroups and constructive essential decompositions.
//!
//! An object `P ≠ S` is essential when it is fully normalized and
//! `N_L(P)/P` has a strongly `p`-embedded subgroup. Every `g ∈ L` is the
//! product of a word `(x_1, …, x_n)` with each `x_i ∈ N_L(Q_i)`,
//! `S_{x_i} = Q_i` for `Q_i` essential or `S`, and with `S_w = S_g`.
//! [`Decomposer`] constructs such words by recursion on `|S_g|`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::embedding::{express_word, strongly_p_embedded};
use crate::error::{Error, Result};
use crate::fusion::{delta_conjugates, fully_normalized_rep, is_fully_normalized, n_s, transporter_into_normalizer};
use crate::group::{Elem, Subgroup};
use crate::locality::Locality;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub q: Subgroup,
    pub x: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Elem,
    pub factors: Vec<Factor>,
}

impl Certificate {
    pub fn word(&self) -> Vec<Elem> {
        self.factors.iter().map(|f| f.x).collect()
    }
}

/// Whether `N_L(P)/P` contains a strongly `p`-embedded subgroup.
pub fn quotient_has_spe(l: &Locality, p: &Subgroup) -> Result<bool> {
    let g = l.ambient();
    let n = l.normalizer(p)?;
    let (quotient, _) = g.quotient(&n, p)?;
    Ok(strongly_p_embedded(&quotient, l.p()).exists)
}

pub fn is_essential(l: &Locality, p: &Subgroup) -> Result<bool> {
    if p == l.s() {
        return Ok(false);
    }
    Ok(is_fully_normalized(l, p)? && quotient_has_spe(l, p)?)
}

/// The essential objects, sorted by `(order, members)`. `S` is never listed.
pub fn essentials(l: &Locality) -> Vec<Subgroup> {
    l.delta()
        .iter()
        .filter(|p| is_essential(l, p).expect("objects are in delta"))
        .copied()
        .collect()
}

/// Builds certificates for the elements of one locality, sharing
/// sub-certificates between calls.
pub struct Decomposer {
    locality: Arc<Locality>,
    essentials: Vec<Subgroup>,
    cache: Mutex<HashMap<Elem, Arc<Vec<Factor>>>>,
}

impl Decomposer {
    pub fn new(locality: Arc<Locality>) -> Self {
        let essentials = essentials(&locality);
        Decomposer { locality, essentials, cache: Mutex::new(HashMap::new()) }
    }

    pub fn locality(&self) -> &Locality {
        &self.locality
    }

    pub fn essentials(&self) -> &[Subgroup] {
        &self.essentials
    }

    fn allowed(&self, q: &Subgroup) -> bool {
        q == self.locality.s() || self.essentials.contains(q)
    }

    pub fn decompose(&self, g: Elem) -> Result<Certificate> {
        if g >= self.locality.ambient().order() || !self.locality.contains(g) {
            return Err(Error::NotInLocality);
        }
        let factors = self.factors(g)?;
        Ok(Certificate { target: g, factors: factors.to_vec() })
    }

    fn factors(&self, g: Elem) -> Result<Arc<Vec<Factor>>> {
        if let Some(f) = self.cache.lock().expect("cache lock").get(&g) {
            return Ok(f.clone());
        }
        let factors = Arc::new(self.compute(g)?);
        let l = &*self.locality;
        let word: Vec<Elem> = factors.iter().map(|f| f.x).collect();
        if l.ambient().fold(&word) != g || l.tracking(&word) != *l.s_g(g).members() {
            return Err(Error::InternalInvariantViolation(format!(
                "spliced word for {} does not track S_g",
                l.ambient().label(g)
            )));
        }
        self.cache.lock().expect("cache lock").entry(g).or_insert_with(|| factors.clone());
        Ok(factors)
    }

    fn compute(&self, g: Elem) -> Result<Vec<Factor>> {
        let l = &*self.locality;
        let amb = l.ambient();
        let p = l.s_g(g);
        if p == *l.s() {
            return Ok(vec![Factor { q: p, x: g }]);
        }
        // conjugate S_g and S_g^g onto one fully normalized Q
        let (q, h) = fully_normalized_rep(l, &p)?;
        let p_image = amb.conjugate_subgroup(&p, g);
        let (q2, mut h2) = fully_normalized_rep(l, &p_image)?;
        if q2 != q {
            let f = delta_conjugates(l, &q2)?
                .into_iter()
                .find(|(r, _)| *r == q)
                .map(|(_, f)| f)
                .ok_or_else(|| Error::InternalInvariantViolation("representatives in different orbits".into()))?;
            h2 = amb.mul(h2, transporter_into_normalizer(l, &q2, &q, f)?);
        }
        let g_prime = amb.fold(&[amb.inv(h), g, h2]);
        if !l.in_domain(&[amb.inv(h), g, h2]) || !l.normalizer(&q)?.contains(g_prime) {
            return Err(Error::InternalInvariantViolation("conjugated element does not normalize Q".into()));
        }

        let mut out = Vec::new();
        if h != 0 {
            out.extend(self.factors(h)?.iter().copied());
        }
        let sq = l.s_g(g_prime);
        if sq.order() > q.order() {
            out.extend(self.factors(g_prime)?.iter().copied());
        } else if self.allowed(&q) {
            out.push(Factor { q, x: g_prime });
        } else {
            // N_L(Q)/Q has no strongly p-embedded subgroup, so N_L(Q) is
            // generated by the elements x with N_S(Q) ∩ N_S(Q)^x > Q
            let n = l.normalizer(&q)?;
            let nsq = n_s(l, &q);
            let gens: Vec<Elem> = n
                .iter()
                .filter(|&x| nsq.intersection(&amb.conjugate_subgroup(&nsq, x)).order() > q.order())
                .collect();
            for x in express_word(amb, &gens, g_prime)? {
                out.extend(self.factors(x)?.iter().copied());
            }
        }
        if h2 != 0 {
            out.extend(invert_factors(l, &self.factors(h2)?));
        }
        Ok(out)
    }
}

fn invert_factors(l: &Locality, factors: &[Factor]) -> Vec<Factor> {
    factors.iter().rev().map(|f| Factor { q: f.q, x: l.ambient().inv(f.x) }).collect()
}

/// One-shot decomposition; prefer a shared [`Decomposer`] for many elements.
pub fn decompose(l: &Arc<Locality>, g: Elem) -> Result<Certificate> {
    Decomposer::new(l.clone()).decompose(g)
}

/// Checks every clause of a certificate from scratch.
///
/// Empty factor lists denote the empty word, with `Π = e` and `S_w = S`.
pub fn verify_certificate(l: &Locality, c: &Certificate) -> Report {
    verify_certificate_with(l, &essentials(l), c)
}

pub fn verify_certificate_with(l: &Locality, essentials: &[Subgroup], c: &Certificate) -> Report {
    let g = l.ambient();
    let mut report = Report::new(format!("certificate for {}", label(l, c.target)));
    let target_ok = c.target < g.order() && l.contains(c.target);
    report.check(target_ok, "target in L", || label(l, c.target));
    for (i, f) in c.factors.iter().enumerate() {
        let witness = || format!("factor {i}: {}", label(l, f.x));
        report.check(f.q == *l.s() || essentials.contains(&f.q), "Q essential or S", witness);
        let x_in_l = f.x < g.order() && l.contains(f.x);
        report.check(x_in_l, "x in L", witness);
        if !x_in_l {
            continue;
        }
        let normalizes = l.normalizer(&f.q).map(|n| n.contains(f.x)).unwrap_or(false);
        report.check(normalizes, "x in N_L(Q)", witness);
        report.check(l.s_g(f.x) == f.q, "S_x = Q", witness);
    }
    let word = c.word();
    if !target_ok || word.iter().any(|&x| x >= g.order() || !l.contains(x)) {
        return report;
    }
    let tracking = if word.is_empty() { *l.s().members() } else { l.tracking(&word) };
    report.check(l.delta().contains_set(&tracking), "word in D", || "S_w not an object".into());
    report.check(tracking == *l.s_g(c.target).members(), "S_w = S_g", || format!("|S_w| = {}", tracking.len()));
    report.check(g.fold(&word) == c.target, "Pi(w) = g", || label(l, g.fold(&word)));
    report
}

/// Certificate for `g⁻¹` from one for `g`: factors reversed and inverted.
pub fn invert_certificate(l: &Locality, c: &Certificate) -> Result<Certificate> {
    let report = verify_certificate(l, c);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("certificate does not verify: {report}")));
    }
    Ok(Certificate { target: l.ambient().inv(c.target), factors: invert_factors(l, &c.factors) })
}

fn label(l: &Locality, x: Elem) -> String {
    if x < l.ambient().order() {
        l.ambient().label(x)
    } else {
        format!("#{x}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::locality::DeltaSpec;

    fn locality(name: &str, p: u64, spec: DeltaSpec) -> Arc<Locality> {
        Arc::new(Locality::build(Arc::new(library::builtin(name).unwrap()), p, &spec).unwrap())
    }

    #[test]
    fn essentials_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        assert_eq!(essentials(&l), vec![Subgroup::trivial()]);
        let l = locality("S4", 2, DeltaSpec::All);
        let v = l.ambient().subgroup_from_labels(&["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        assert_eq!(essentials(&l), vec![v]);
        let l = locality("S3", 2, DeltaSpec::Nontrivial);
        assert_eq!(l.delta().len(), 1);
        assert!(essentials(&l).is_empty());
    }

    #[test]
    fn decompose_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        let d = Decomposer::new(l.clone());
        let g = l.ambient();
        let t = g.element("(1 2)").unwrap();
        assert_eq!(d.decompose(t).unwrap().factors, vec![Factor { q: *l.s(), x: t }]);
        let c = g.element("(1 2 3)").unwrap();
        let cert = d.decompose(c).unwrap();
        assert_eq!(cert.factors, vec![Factor { q: Subgroup::trivial(), x: c }]);
        assert!(verify_certificate(&l, &cert).passed());

        let l = locality("S4", 2, DeltaSpec::All);
        let d = Decomposer::new(l.clone());
        let c = l.ambient().element("(1 2 3)").unwrap();
        let cert = d.decompose(c).unwrap();
        let v = d.essentials()[0];
        assert!(cert.factors.iter().all(|f| f.q == v || f.q == *l.s()));
        assert!(verify_certificate(&l, &cert).passed());
    }

    #[test]
    fn certificate_mutation_fails() {
        let l = locality("S4", 2, DeltaSpec::All);
        let d = Decomposer::new(l.clone());
        let g = l.ambient();
        for x in 0..g.order() {
            let cert = d.decompose(x).unwrap();
            for (i, f) in cert.factors.iter().enumerate() {
                for s in l.s().iter().filter(|&s| !f.q.contains(s)) {
                    let mut bad = cert.clone();
                    bad.factors[i].x = g.mul(f.x, s);
                    let r = verify_certificate(&l, &bad);
                    assert!(r.has_clause("Pi(w) = g") || r.has_clause("S_x = Q") || r.has_clause("x in N_L(Q)"));
                }
            }
        }
    }

    #[test]
    fn empty_certificate_for_identity() {
        let l = locality("S3", 2, DeltaSpec::All);
        assert!(verify_certificate(&l, &Certificate { target: 0, factors: vec![] }).passed());
        assert!(!verify_certificate(&l, &Certificate { target: 1, factors: vec![] }).passed());
    }

    #[test]
    fn inversion_examples() {
        let l = locality("S3", 2, DeltaSpec::All);
        let d = Decomposer::new(l.clone());
        let g = l.ambient();
        let t = g.element("(1 2)").unwrap();
        let cert = d.decompose(t).unwrap();
        assert_eq!(invert_certificate(&l, &cert).unwrap().factors, vec![Factor { q: *l.s(), x: g.inv(t) }]);
        let c = g.element("(1 2 3)").unwrap();
        let cert = d.decompose(c).unwrap();
        let inv = invert_certificate(&l, &cert).unwrap();
        assert_eq!(g.label(inv.target), "(1 3 2)");
        assert!(verify_certificate(&l, &inv).passed());
        assert_eq!(invert_certificate(&l, &inv).unwrap(), cert);
        let bad = Certificate { target: c, factors: vec![] };
        assert!(matches!(invert_certificate(&l, &bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn not_in_locality() {
        let l = locality("S3", 2, DeltaSpec::Nontrivial);
        let c = l.ambient().element("(1 2 3)").unwrap();
        assert_eq!(decompose(&l, c), Err(Error::NotInLocality));
    }
}
