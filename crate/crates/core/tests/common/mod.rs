//! Oracles shared by the integration tests. Each one is written from the
//! definitions, without reusing the library's algorithms.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regcone::graphprod::GraphPresentation;
use regcone::{Automaton, GroupAlphabet, Symbol};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(name)
}

pub fn f2() -> GroupAlphabet {
    GroupAlphabet::new(["x", "y"]).unwrap()
}

/// An automaton with `1..=max_states` states, start state 0, each
/// transition present with probability `density` and occasional ε-moves.
pub fn random_automaton(rng: &mut ChaCha8Rng, group: &GroupAlphabet, max_states: usize, density: f64) -> Automaton {
    let n = rng.gen_range(1..=max_states);
    let k = group.alphabet().len();
    let mut a = Automaton::new(group.alphabet().clone(), n);
    a.add_start(0);
    for q in 0..n {
        if rng.gen_bool(0.4) {
            a.add_accept(q);
        }
        for s in 0..k {
            if rng.gen_bool(density) {
                a.add_transition(q, s, rng.gen_range(0..n));
            }
        }
        if rng.gen_bool(0.1) {
            a.add_epsilon(q, rng.gen_range(0..n));
        }
    }
    if a.accepts_set().is_empty() {
        a.add_accept(n - 1);
    }
    a
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
pub fn reduce_pairwise(group: &GroupAlphabet, w: &[Symbol]) -> Vec<Symbol> {
    let mut w = w.to_vec();
    while let Some(i) = (1..w.len()).find(|&i| group.inverse(w[i - 1]) == w[i]) {
        w.drain(i - 1..=i);
    }
    w
}

/// `{ red(w) : w ∈ L, |w| ≤ max_word, |red(w)| ≤ max_red }`.
///
/// Explores pairs (state, reduced prefix) by word length, keeping only
/// prefixes that can still shrink to `max_red` letters in the remaining budget.
pub fn reductions_bounded(
    group: &GroupAlphabet,
    a: &Automaton,
    max_word: usize,
    max_red: usize,
) -> HashSet<Vec<Symbol>> {
    let mut best: HashMap<(usize, Vec<Symbol>), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &q in a.starts() {
        best.insert((q, Vec::new()), 0);
        queue.push_back((q, Vec::new(), 0usize));
    }
    let mut out = HashSet::new();
    while let Some((q, r, len)) = queue.pop_front() {
        if best.get(&(q, r.clone())) != Some(&len) {
            continue;
        }
        if a.is_accepting(q) && r.len() <= max_red {
            out.insert(r.clone());
        }
        for &p in a.eps_out(q) {
            let key = (p, r.clone());
            if best.get(&key).is_none_or(|&l| l > len) {
                best.insert(key, len);
                queue.push_front((p, r.clone(), len));
            }
        }
        if len == max_word {
            continue;
        }
        for &(s, p) in a.out(q) {
            let mut next = r.clone();
            if next.last() == Some(&group.inverse(s)) {
                next.pop();
            } else {
                next.push(s);
            }
            if next.len() > max_red + (max_word - len - 1) {
                continue;
            }
            let key = (p, next.clone());
            if best.get(&key).is_none_or(|&l| l > len + 1) {
                best.insert(key, len + 1);
                queue.push_back((p, next, len + 1));
            }
        }
    }
    out
}

/// All words of length exactly `n` over `k` letters, in lexicographic order.
pub fn words_of_length(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    (0..=n).flat_map(|l| words_of_length(k, l)).collect()
}

/// Brute-force rewriting in a right-angled Artin group: swaps of adjacent
/// letters from adjacent vertices, and deletion of adjacent `s s⁻¹`.
pub struct RaagRewriter<'a> {
    graph: &'a GraphPresentation,
}

impl<'a> RaagRewriter<'a> {
    pub fn new(graph: &'a GraphPresentation) -> Self {
        RaagRewriter { graph }
    }

    fn commute(&self, s: Symbol, t: Symbol) -> bool {
        let (u, v) = (self.graph.owner(s), self.graph.owner(t));
        u != v && self.graph.is_adjacent(u, v)
    }

    /// Some word equal to `w` under swaps that has an adjacent cancelling
    /// pair, with that pair deleted.
    fn shorten(&self, w: &[Symbol]) -> Option<Vec<Symbol>> {
        let g = self.graph.group();
        let mut seen = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(v) = queue.pop_front() {
            for i in 1..v.len() {
                if g.inverse(v[i - 1]) == v[i] {
                    let mut r = v.clone();
                    r.drain(i - 1..=i);
                    return Some(r);
                }
            }
            for i in 1..v.len() {
                if self.commute(v[i - 1], v[i]) {
                    let mut r = v.clone();
                    r.swap(i - 1, i);
                    if seen.insert(r.clone()) {
                        queue.push_back(r);
                    }
                }
            }
        }
        None
    }

    /// Rewrites until no shortening applies; the result has geodesic length.
    pub fn normal_length(&self, w: &[Symbol]) -> usize {
        let mut cur = w.to_vec();
        while let Some(r) = self.shorten(&cur) {
            cur = r;
        }
        cur.len()
    }

    pub fn is_geodesic(&self, w: &[Symbol]) -> bool {
        self.shorten(w).is_none()
    }

    pub fn is_trivial(&self, w: &[Symbol]) -> bool {
        self.normal_length(w) == 0
    }
}

pub fn p4() -> GraphPresentation {
    GraphPresentation::raag(
        &["v1", "v2", "v3", "v4"],
        &["a1", "a2", "a3", "a4"],
        &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")],
    )
    .unwrap()
}

pub fn c5() -> GraphPresentation {
    GraphPresentation::raag(
        &["v1", "v2", "v3", "v4", "v5"],
        &["a1", "a2", "a3", "a4", "a5"],
        &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1")],
    )
    .unwrap()
}

pub fn invert_word(group: &GroupAlphabet, w: &[Symbol]) -> Vec<Symbol> {
    w.iter().rev().map(|&s| group.inverse(s)).collect()
}

/// Re-checks a cone violation from first principles: pairwise cancellation,
/// acceptance by `a`, and membership in the represented subset.
pub fn violation_holds(
    group: &GroupAlphabet,
    a: &Automaton,
    positive: &regcone::ReducedLang,
    v: &regcone::conecheck::Violation,
) -> bool {
    use regcone::conecheck::Violation;
    let member = |w: &[Symbol]| positive.contains(&group.free_reduce(w));
    let in_l = |w: &[Symbol]| w.iter().all(|&s| s < group.alphabet().len()) && a.accepts(w);
    match v {
        Violation::IdentityInCone { word } => in_l(word) && reduce_pairwise(group, word).is_empty(),
        Violation::Disjointness { first, second } => {
            in_l(first)
                && in_l(second)
                && !reduce_pairwise(group, first).is_empty()
                && reduce_pairwise(group, &[&first[..], &second[..]].concat()).is_empty()
        }
        Violation::Totality { element } => {
            let w = element.word();
            reduce_pairwise(group, w) == w.to_vec()
                && !w.is_empty()
                && !member(w)
                && !member(&invert_word(group, w))
        }
        Violation::Semigroup { first, second } => {
            in_l(first) && in_l(second) && !member(&reduce_pairwise(group, &[&first[..], &second[..]].concat()))
        }
    }
}
