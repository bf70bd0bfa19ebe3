mod common;

use std::sync::Arc;

use common::{f2, random_automaton, reduce_pairwise, reductions_bounded, rng, words_up_to};
use proptest::prelude::*;
use regcone::automata::{complement, hom_image, hom_preimage, intersect, prefix_closure, reverse, star, union};
use regcone::conecheck::{ConeCandidate, RefuteConfig};
use regcone::freegroup::{benois_reduce, find_reducing_word};
use regcone::{Alphabet, Automaton, GroupAlphabet, Word};

fn ab() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["a", "b"]).unwrap())
}

/// A random automaton over `a b`, reusing the group generator's shape.
fn random_ab(seed: u64) -> Automaton {
    let g = GroupAlphabet::new(["a"]).unwrap();
    let a = random_automaton(&mut rng(seed), &g, 4, 0.45);
    // relabel a a^ as a b
    hom_image(&a, ab(), &[Word::from(vec![0]), Word::from(vec![1])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boolean_operations_pointwise(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (random_ab(s1), random_ab(s2));
        let and = intersect(&a, &b).unwrap();
        let or = union(&a, &b).unwrap();
        let not_a = complement(&a, None).unwrap();
        for w in words_up_to(2, 6) {
            prop_assert_eq!(and.accepts(&w), a.accepts(&w) && b.accepts(&w));
            prop_assert_eq!(or.accepts(&w), a.accepts(&w) || b.accepts(&w));
            prop_assert_eq!(not_a.accepts(&w), !a.accepts(&w));
        }
        let not_b = complement(&b, None).unwrap();
        let lhs = complement(&and, None).unwrap();
        prop_assert!(lhs.equivalent(&union(&not_a, &not_b).unwrap()).unwrap());
        let lhs = complement(&or, None).unwrap();
        prop_assert!(lhs.equivalent(&intersect(&not_a, &not_b).unwrap()).unwrap());
    }

    #[test]
    fn kleene_laws(s in any::<u64>()) {
        let a = random_ab(s);
        prop_assert!(reverse(&reverse(&a)).equivalent(&a).unwrap());
        prop_assert!(star(&star(&a)).equivalent(&star(&a)).unwrap());
        let p = prefix_closure(&a);
        prop_assert!(prefix_closure(&p).equivalent(&p).unwrap());
        for w in words_up_to(2, 5) {
            let rev: Vec<_> = w.iter().rev().copied().collect();
            prop_assert_eq!(reverse(&a).accepts(&w), a.accepts(&rev));
        }
    }

    #[test]
    fn shortest_word_is_least(s in any::<u64>()) {
        let a = random_ab(s);
        match a.shortest_word() {
            None => prop_assert!(a.is_empty()),
            Some(w) => {
                prop_assert!(a.accepts(&w));
                let first = a.enumerate(w.len()).into_iter().next();
                prop_assert_eq!(first, Some(w));
            }
        }
    }

    #[test]
    fn preimage_undoes_injective_renaming(s in any::<u64>()) {
        let a = random_ab(s);
        let target = Arc::new(Alphabet::new(["p", "q", "r"]).unwrap());
        let f = [Word::from(vec![2]), Word::from(vec![0])];
        let back = hom_preimage(&hom_image(&a, target, &f).unwrap(), ab(), &f).unwrap();
        prop_assert!(back.equivalent(&a).unwrap());
    }

    #[test]
    fn free_reduce_laws(w in proptest::collection::vec(0usize..6, 0..24)) {
        let g = GroupAlphabet::new(["x", "y", "z"]).unwrap();
        let r = g.free_reduce(&w);
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(&g.free_reduce(r.word()), &r);
        prop_assert_eq!(&r.word()[..], &reduce_pairwise(&g, &w)[..]);
        prop_assert!(g.free_reduce(&[&w[..], &g.word_inverse(&w)[..]].concat()).is_identity());
    }

    #[test]
    fn benois_contains_bounded_reductions(s in any::<u64>()) {
        let g = f2();
        let a = random_automaton(&mut rng(s), &g, 5, 0.35);
        let reduced = benois_reduce(&g, &a).unwrap();
        for r in reductions_bounded(&g, &a, 10, 10) {
            prop_assert!(reduced.automaton().accepts(&r));
        }
        // every short reduced word is the reduction of some accepted word;
        // no fixed length bound on that word holds in general
        for w in reduced.automaton().enumerate(4) {
            let v = find_reducing_word(&g, &a, &g.free_reduce(&w)).unwrap().unwrap();
            prop_assert!(a.accepts(&v));
            prop_assert_eq!(reduce_pairwise(&g, &v), w.into_vec());
        }
    }

    #[test]
    fn rational_products_associate(s in any::<u64>()) {
        let g = f2();
        let mut r = rng(s);
        let [a, b, c] = [0, 1, 2].map(|_| benois_reduce(&g, &random_automaton(&mut r, &g, 3, 0.3)).unwrap());
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
    }

    #[test]
    fn pumping_certificates_are_valid(s in any::<u64>()) {
        let g = f2();
        let a = random_automaton(&mut rng(s), &g, 3, 0.5);
        let c = ConeCandidate::new(&g, a).unwrap();
        if let Ok(v) = c.pumping_witness(&RefuteConfig::default()) {
            prop_assert!(c.verify(&v), "{:?}", v);
        }
    }
}

#[test]
fn free_reduce_exhaustive_rank_two() {
    let g = f2();
    for w in words_up_to(4, 8) {
        let inv = g.word_inverse(&w);
        assert!(g.free_reduce(&[&w[..], &inv[..]].concat()).is_identity());
        assert_eq!(&g.free_reduce(&w).word()[..], &reduce_pairwise(&g, &w)[..]);
    }
}

#[test]
fn reduced_universe_counts() {
    let g = f2();
    assert_eq!(g.reduced_universe().count_by_length(4), vec![1, 4, 12, 36, 108]);
}

#[test]
fn rational_lattice_laws() {
    let g = f2();
    let mut r = rng(7);
    for _ in 0..10 {
        let [a, b, c] = [0, 1, 2].map(|_| benois_reduce(&g, &random_automaton(&mut r, &g, 4, 0.35)).unwrap());
        let lhs = a.intersect(&b.union(&c).unwrap()).unwrap();
        let rhs = a.intersect(&b).unwrap().union(&a.intersect(&c).unwrap()).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
        assert!(a.union(&a.intersect(&b).unwrap()).unwrap().equals(&a).unwrap());
        assert!(a.complement().unwrap().complement().unwrap().equals(&a).unwrap());
        let again = benois_reduce(&g, a.automaton()).unwrap();
        assert!(again.equals(&a).unwrap());
    }
}
