//! Strongly `p`-embedded subgroups.
//!
//! `H < G` is strongly `p`-embedded when `p` divides `|H|` and `p` does not
//! divide `|H ∩ H^g|` for any `g ∈ G ∖ H`.

use std::collections::VecDeque;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeResult {
    pub exists: bool,
    pub witness: Option<Subgroup>,
}

impl SpeResult {
    fn none() -> Self {
        SpeResult { exists: false, witness: None }
    }

    fn found(h: Subgroup) -> Self {
        SpeResult { exists: true, witness: Some(h) }
    }
}

/// The literal definition.
pub fn is_strongly_p_embedded(g: &FiniteGroup, h: &Subgroup, p: u64) -> bool {
    if h.order() == g.order() || h.order() as u64 % p != 0 {
        return false;
    }
    (0..g.order())
        .filter(|&x| !h.contains(x))
        .all(|x| h.intersection(&g.conjugate_subgroup(h, x)).order() as u64 % p != 0)
}

/// Order-`p` subgroups of `G`, sorted.
pub fn order_p_subgroups(g: &FiniteGroup, p: u64) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = (1..g.order())
        .filter(|&x| g.element_order(x) as u64 == p)
        .map(|x| g.generated_subgroup(&[x]))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Graph method: order-`p` subgroups joined when they generate a
/// `p`-group. A strongly `p`-embedded subgroup exists iff this graph is
/// disconnected, and the stabilizer of a component is one.
pub fn strongly_p_embedded(g: &FiniteGroup, p: u64) -> SpeResult {
    assert!(is_prime(p), "{p} is not prime");
    let vertices = order_p_subgroups(g, p);
    if vertices.is_empty() {
        return SpeResult::none();
    }
    let n = vertices.len();
    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = count;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if component[j] == usize::MAX && g.is_p_subgroup(&g.join(&vertices[i], &vertices[j]), p) {
                    component[j] = count;
                    queue.push_back(j);
                }
            }
        }
        count += 1;
    }
    if count == 1 {
        return SpeResult::none();
    }
    let first: Vec<&Subgroup> = (0..n).filter(|&i| component[i] == 0).map(|i| &vertices[i]).collect();
    let stabilizer: Subgroup = Subgroup::from_set_unchecked(
        (0..g.order())
            .filter(|&x| {
                let moved = g.conjugate_subgroup(first[0], x);
                first.iter().any(|v| **v == moved)
            })
            .collect(),
    );
    assert!(
        is_strongly_p_embedded(g, &stabilizer, p),
        "component stabilizer failed the strongly p-embedded definition"
    );
    SpeResult::found(stabilizer)
}

/// Scans every proper subgroup against the definition; the first witness in
/// `(order, members)` order is returned.
pub fn strongly_p_embedded_bruteforce(g: &FiniteGroup, p: u64) -> Result<SpeResult> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for h in g.all_subgroups()? {
        if is_strongly_p_embedded(g, &h, p) {
            return Ok(SpeResult::found(h));
        }
    }
    Ok(SpeResult::none())
}

/// `{x ∈ G | S ∩ S^x ≠ 1}`, in index order.
pub fn sylow_intersection_generators(g: &FiniteGroup, s: &Subgroup) -> Vec<Elem> {
    (0..g.order())
        .filter(|&x| !s.intersection(&g.conjugate_subgroup(s, x)).is_trivial())
        .collect()
}

/// A shortest word over `gens` with product `target`, by breadth-first
/// search in the Cayley graph; ties go to the earlier generator.
pub fn express_word(g: &FiniteGroup, gens: &[Elem], target: Elem) -> Result<Vec<Elem>> {
    let mut parent: Vec<Option<(Elem, Elem)>> = vec![None; g.order()];
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        if x == target {
            break;
        }
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, s));
                queue.push_back(y);
            }
        }
    }
    if !seen[target] {
        return Err(Error::NotInSpan);
    }
    let mut word = Vec::new();
    let mut cur = target;
    while let Some((prev, s)) = parent[cur] {
        word.push(s);
        cur = prev;
    }
    word.reverse();
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn graph_method_examples() {
        let s3 = library::symmetric(3).unwrap();
        let r = strongly_p_embedded(&s3, 2);
        assert!(r.exists);
        let h = r.witness.unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.order() as u64, crate::arith::p_part(6, 2));
        assert!(!strongly_p_embedded(&library::symmetric(4).unwrap(), 2).exists);
        let c3 = library::cyclic(3).unwrap();
        assert!(!strongly_p_embedded(&c3, 3).exists);
        assert!(!strongly_p_embedded(&s3, 3).exists);
    }

    #[test]
    fn bruteforce_examples() {
        let s3 = library::symmetric(3).unwrap();
        assert!(strongly_p_embedded_bruteforce(&s3, 2).unwrap().exists);
        assert!(!strongly_p_embedded_bruteforce(&s3, 3).unwrap().exists);
        assert!(!strongly_p_embedded_bruteforce(&FiniteGroup::trivial(), 2).unwrap().exists);
        assert!(!strongly_p_embedded_bruteforce(&FiniteGroup::trivial(), 3).unwrap().exists);
    }

    #[test]
    fn intersection_generators_examples() {
        let s4 = library::symmetric(4).unwrap();
        let s = s4.sylow(&s4.whole(), 2);
        let x = sylow_intersection_generators(&s4, &s);
        assert_eq!(s4.generated_subgroup(&x), s4.whole());
        assert!(x.contains(&0));
        for &a in &x {
            assert!(x.contains(&s4.inv(a)));
        }
        let s3 = library::symmetric(3).unwrap();
        let s = s3.sylow(&s3.whole(), 2);
        let x = sylow_intersection_generators(&s3, &s);
        assert_eq!(x, s.iter().collect::<Vec<_>>());
        assert_eq!(s3.generated_subgroup(&x), s);
    }

    #[test]
    fn express_word_examples() {
        let s4 = library::symmetric(4).unwrap();
        let s = s4.sylow(&s4.whole(), 2);
        let x = sylow_intersection_generators(&s4, &s);
        assert_eq!(express_word(&s4, &x, 0).unwrap(), Vec::<Elem>::new());
        for &a in x.iter().filter(|&&a| a != 0) {
            assert_eq!(express_word(&s4, &x, a).unwrap(), vec![a]);
        }
        let c = s4.element("(1 2 3)").unwrap();
        let w = express_word(&s4, &x, c).unwrap();
        assert!(w.len() <= 3);
        assert_eq!(s4.fold(&w), c);
        let t = s4.element("(1 2)").unwrap();
        assert_eq!(express_word(&s4, &[t], c), Err(Error::NotInSpan));
    }
}
