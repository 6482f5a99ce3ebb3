use std::sync::Arc;

use proptest::prelude::*;

use localities::alperin::{verify_certificate_with, Decomposer};
use localities::arith::{p_part, prime_divisors};
use localities::perm::Perm;
use localities::{library, DeltaSpec, FiniteGroup, Locality};

/// Permutation groups of degree at most 5 from two random generators.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (3usize..=5)
        .prop_flat_map(|n| {
            let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), perm.clone(), perm)
        })
        .prop_map(|(n, a, b)| {
            let gens = [Perm::from_images(a).unwrap(), Perm::from_images(b).unwrap()];
            FiniteGroup::from_permutations("G", n, &gens).unwrap()
        })
}

fn delta_spec() -> impl Strategy<Value = DeltaSpec> {
    prop_oneof![Just(DeltaSpec::All), Just(DeltaSpec::Nontrivial)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn group_invariants(g in small_group()) {
        prop_assert!(g.axiom_violation().is_none());
        for x in 0..g.order() {
            prop_assert_eq!(g.mul(x, g.inv(x)), 0);
            prop_assert_eq!(g.order() % g.element_order(x), 0);
        }
        for p in prime_divisors(g.order() as u64) {
            let s = g.sylow(&g.whole(), p);
            prop_assert_eq!(s.order() as u64, p_part(g.order() as u64, p));
            prop_assert!(g.is_p_subgroup(&s, p));
        }
        if g.order() <= 60 {
            for h in g.all_subgroups().unwrap() {
                prop_assert_eq!(g.order() % h.order(), 0);
                prop_assert!(g.normalizer(&g.whole(), &h).is_subgroup_of(&g.whole()));
                prop_assert!(h.is_subgroup_of(&g.normalizer(&g.whole(), &h)));
            }
        }
    }

    #[test]
    fn locality_invariants(g in small_group(), spec in delta_spec(), pick in 0usize..4) {
        prop_assume!(g.order() > 1 && g.order() <= 60);
        let primes = prime_divisors(g.order() as u64);
        let p = primes[pick % primes.len()];
        let l = Locality::build(Arc::new(g), p, &spec).unwrap();
        let report = l.verify_axioms(3);
        prop_assert!(report.passed(), "{}", report);
        let amb = l.ambient();
        for x in l.elements().iter() {
            // S_{g^-1} = (S_g)^g
            prop_assert_eq!(l.s_g(amb.inv(x)), amb.conjugate_subgroup(&l.s_g(x), x));
        }
    }

    #[test]
    fn decomposition_is_total(g in small_group(), spec in delta_spec(), pick in 0usize..4) {
        prop_assume!(g.order() > 1 && g.order() <= 60);
        let primes = prime_divisors(g.order() as u64);
        let p = primes[pick % primes.len()];
        let l = Arc::new(Locality::build(Arc::new(g), p, &spec).unwrap());
        let d = Decomposer::new(l.clone());
        for x in l.elements().iter() {
            let c = d.decompose(x).unwrap();
            let r = verify_certificate_with(&l, d.essentials(), &c);
            prop_assert!(r.passed(), "{}", r);
        }
    }

    /// Π does not depend on how a word in D is bracketed.
    #[test]
    fn product_is_associative(name in prop::sample::select(vec!["S3", "S4", "D12", "A4"]),
                              spec in delta_spec(),
                              letters in proptest::collection::vec(0usize..24, 1..6),
                              cut in 0usize..6) {
        let g = Arc::new(library::builtin(name).unwrap());
        let l = Locality::build(g, 2, &spec).unwrap();
        let elems: Vec<usize> = l.elements().iter().collect();
        let w: Vec<usize> = letters.iter().map(|&i| elems[i % elems.len()]).collect();
        prop_assume!(l.in_domain(&w));
        let cut = cut % (w.len() + 1);
        let (u, v) = w.split_at(cut);
        let whole = l.product(&w).unwrap();
        let split = l.product(&[l.product(u).unwrap(), l.product(v).unwrap()]).unwrap();
        prop_assert_eq!(whole, split);
        prop_assert!(l.s_of_word(&w).unwrap().is_subgroup_of(&l.s_g(whole)));
    }
}

#[test]
fn non_group_locality_has_undefined_products() {
    let t1 = Perm::parse(6, "(1 2)").unwrap();
    let c1 = Perm::parse(6, "(1 2 3)").unwrap();
    let t2 = Perm::parse(6, "(4 5)").unwrap();
    let c2 = Perm::parse(6, "(4 5 6)").unwrap();
    let g = Arc::new(FiniteGroup::from_permutations("S3xS3", 6, &[t1, c1, t2, c2]).unwrap());
    let l = Locality::build(g.clone(), 2, &DeltaSpec::Nontrivial).unwrap();
    assert_eq!(l.size(), 20);
    let w = [g.element("(4 5 6)").unwrap(), g.element("(1 2 3)").unwrap()];
    assert!(!l.in_domain(&w));
    assert!(l.verify_axioms(3).passed());
}
