//! Benois saturation and witness retrieval.
//!
//! For every ordered pair of states `(p, q)` we compute the length of the
//! shortest path `p → q` whose label freely reduces to the empty word,
//! together with a derivation of such a path. The pairs with a finite
//! length are exactly the ε-edges Benois saturation adds. The lengths are
//! the least solution of
//!
//! ```text
//! d(p, p) = 0,   d(p, q) = 0 for an ε-move p → q,
//! d(p, q) ≤ d(p, m) + d(m, q),
//! d(r, s) ≤ d(p, q) + 2   whenever r →x p and q →x⁻¹ s,
//! ```
//!
//! which is solved exactly with Knuth's generalization of Dijkstra's
//! algorithm (every rule is monotone and never decreases its inputs).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{GroupAlphabet, GroupElement, ReducedLang};
use crate::automata::{concat, intersect, Automaton, StateId, Symbol, Word};
use crate::error::{Error, Result};

/// Witness words longer than this are not materialized.
pub const MAX_WITNESS_LEN: u64 = 1 << 20;

const INF: u64 = u64::MAX;

#[derive(Debug, Clone, Copy)]
enum Derivation {
    None,
    Refl,
    Eps,
    Concat(StateId),
    Wrap { open: Symbol, from: StateId, to: StateId },
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Step {
    Letter(Symbol),
    Jump(StateId),
}

struct Frontier {
    heap: BinaryHeap<Reverse<(u64, StateId, StateId, usize)>>,
    tentative: Vec<u64>,
    cands: Vec<Derivation>,
    n: usize,
}

impl Frontier {
    fn push(&mut self, d: u64, p: StateId, q: StateId, how: Derivation) {
        let slot = p * self.n + q;
        if d < self.tentative[slot] {
            self.tentative[slot] = d;
            self.cands.push(how);
            self.heap.push(Reverse((d, p, q, self.cands.len() - 1)));
        }
    }
}

pub(crate) struct Saturation {
    n: usize,
    dist: Vec<u64>,
    how: Vec<Derivation>,
}

impl Saturation {
    pub(crate) fn compute(a: &Automaton, group: &GroupAlphabet) -> Saturation {
        let n = a.state_count();
        let k = group.alphabet().len();
        let idx = |p: StateId, q: StateId| p * n + q;

        // pred[p][x] = states r with r →x p ; succ[q][x] = states s with q →x s
        let mut pred: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); k]; n];
        let mut succ: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); k]; n];
        for (p, x, q) in a.transitions() {
            pred[q][x].push(p);
            succ[p][x].push(q);
        }

        let mut dist = vec![INF; n * n];
        let mut how = vec![Derivation::None; n * n];
        let mut front = Frontier {
            heap: BinaryHeap::new(),
            tentative: vec![INF; n * n],
            cands: Vec::new(),
            n,
        };
        for p in 0..n {
            front.push(0, p, p, Derivation::Refl);
        }
        for (p, q) in a.epsilons() {
            front.push(0, p, q, Derivation::Eps);
        }

        // finalized pairs, by first and by second component
        let mut row: Vec<Vec<StateId>> = vec![Vec::new(); n];
        let mut col: Vec<Vec<StateId>> = vec![Vec::new(); n];
        while let Some(Reverse((d, p, q, c))) = front.heap.pop() {
            if dist[idx(p, q)] != INF {
                continue;
            }
            dist[idx(p, q)] = d;
            how[idx(p, q)] = front.cands[c];
            row[p].push(q);
            col[q].push(p);

            for &r in &row[q] {
                if dist[idx(p, r)] == INF {
                    front.push(d.saturating_add(dist[idx(q, r)]), p, r, Derivation::Concat(q));
                }
            }
            for &r in &col[p] {
                if dist[idx(r, q)] == INF {
                    front.push(dist[idx(r, p)].saturating_add(d), r, q, Derivation::Concat(p));
                }
            }
            for (x, into_p) in pred[p].iter().enumerate() {
                let xi = group.inverse(x);
                for &r in into_p {
                    for &s in &succ[q][xi] {
                        if dist[idx(r, s)] == INF {
                            let how = Derivation::Wrap { open: x, from: p, to: q };
                            front.push(d.saturating_add(2), r, s, how);
                        }
                    }
                }
            }
        }
        Saturation { n, dist, how }
    }

    pub(crate) fn dist(&self, p: StateId, q: StateId) -> Option<u64> {
        let d = self.dist[p * self.n + q];
        (d != INF).then_some(d)
    }

    /// Appends the steps of the recorded cancelling path `p → q`.
    fn expand(&self, p: StateId, q: StateId, group: &GroupAlphabet, out: &mut Vec<Step>) {
        enum Task {
            Pair(StateId, StateId),
            Emit(Step),
        }
        let mut stack = vec![Task::Pair(p, q)];
        while let Some(task) = stack.pop() {
            match task {
                Task::Emit(step) => out.push(step),
                Task::Pair(p, q) => match self.how[p * self.n + q] {
                    Derivation::None => unreachable!("expanding a pair without a cancelling path"),
                    Derivation::Refl => {}
                    Derivation::Eps => out.push(Step::Jump(q)),
                    Derivation::Concat(m) => {
                        stack.push(Task::Pair(m, q));
                        stack.push(Task::Pair(p, m));
                    }
                    Derivation::Wrap { open, from, to } => {
                        stack.push(Task::Emit(Step::Letter(group.inverse(open))));
                        stack.push(Task::Pair(from, to));
                        stack.push(Task::Emit(Step::Letter(open)));
                    }
                },
            }
        }
    }

    /// Shortest path from a start state to an accept state whose label
    /// freely reduces to `target` (assumed reduced). Returns the steps taken.
    pub(crate) fn retrieve(
        &self,
        a: &Automaton,
        group: &GroupAlphabet,
        target: &[Symbol],
    ) -> Result<Option<Vec<Step>>> {
        let n = self.n;
        let m = target.len();
        let node = |q: StateId, i: usize| i * n + q;
        let mut best = vec![INF; n * (m + 1)];
        // parent: (previous node, Some(letter) or None for a cancelling jump)
        let mut parent: Vec<Option<(usize, Option<Symbol>)>> = vec![None; n * (m + 1)];
        let mut done = vec![false; n * (m + 1)];
        let mut heap = BinaryHeap::new();
        for &s in a.starts() {
            best[node(s, 0)] = 0;
            heap.push(Reverse((0u64, node(s, 0))));
        }
        let mut goal = None;
        while let Some(Reverse((d, v))) = heap.pop() {
            if done[v] {
                continue;
            }
            done[v] = true;
            let (i, q) = (v / n, v % n);
            if i == m && a.is_accepting(q) {
                goal = Some((d, v));
                break;
            }
            let mut relax = |heap: &mut BinaryHeap<_>, w: usize, nd: u64, via| {
                if nd < best[w] {
                    best[w] = nd;
                    parent[w] = Some((v, via));
                    heap.push(Reverse((nd, w)));
                }
            };
            for r in 0..n {
                if r != q {
                    if let Some(c) = self.dist(q, r) {
                        relax(&mut heap, node(r, i), d.saturating_add(c), None);
                    }
                }
            }
            if i < m {
                for &(x, r) in a.out(q) {
                    if x == target[i] {
                        relax(&mut heap, node(r, i + 1), d.saturating_add(1), Some(x));
                    }
                }
            }
        }
        let Some((len, goal)) = goal else {
            return Ok(None);
        };
        if len > MAX_WITNESS_LEN {
            return Err(Error::SearchExhausted(format!(
                "shortest witness has {len} letters (limit {MAX_WITNESS_LEN})"
            )));
        }
        let mut hops = Vec::new();
        let mut cur = goal;
        while let Some((prev, via)) = parent[cur] {
            hops.push((prev % n, cur % n, via));
            cur = prev;
        }
        hops.reverse();
        let mut steps = Vec::new();
        for (p, q, via) in hops {
            match via {
                Some(x) => steps.push(Step::Letter(x)),
                None => self.expand(p, q, group, &mut steps),
            }
        }
        Ok(Some(steps))
    }
}

pub(crate) fn letters(steps: &[Step]) -> Word {
    steps
        .iter()
        .filter_map(|s| match *s {
            Step::Letter(x) => Some(x),
            Step::Jump(_) => None,
        })
        .collect()
}

fn check_alphabet(group: &GroupAlphabet, a: &Automaton) -> Result<()> {
    if a.alphabet().as_ref() == group.alphabet().as_ref() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// The language of free reductions of the words accepted by `a`.
///
/// Saturates `a` with an ε-move for every state pair joined by a cancelling
/// path, then intersects with the reduced-word universe.
pub fn benois_reduce(group: &GroupAlphabet, a: &Automaton) -> Result<ReducedLang> {
    check_alphabet(group, a)?;
    let sat = Saturation::compute(a, group);
    let mut saturated = a.clone();
    for p in 0..a.state_count() {
        for q in 0..a.state_count() {
            if p != q && sat.dist(p, q).is_some() {
                saturated.add_epsilon(p, q);
            }
        }
    }
    let reduced = intersect(&saturated, &group.reduced_universe())?;
    Ok(ReducedLang::from_reduced(group.clone(), reduced.minimized()))
}

/// A shortest word accepted by `a` that freely reduces to `g`, if one exists.
pub fn find_reducing_word(
    group: &GroupAlphabet,
    a: &Automaton,
    g: &GroupElement,
) -> Result<Option<Word>> {
    check_alphabet(group, a)?;
    let sat = Saturation::compute(a, group);
    Ok(sat.retrieve(a, group, g.word())?.map(|steps| letters(&steps)))
}

/// Words `w₁ ∈ L(a)`, `w₂ ∈ L(b)` with `w₁w₂` freely reducing to `g`,
/// minimizing `|w₁| + |w₂|`.
pub fn find_reducing_word_in_product(
    group: &GroupAlphabet,
    a: &Automaton,
    b: &Automaton,
    g: &GroupElement,
) -> Result<Option<(Word, Word)>> {
    check_alphabet(group, a)?;
    check_alphabet(group, b)?;
    let offset = a.state_count();
    let ab = concat(a, b)?;
    let sat = Saturation::compute(&ab, group);
    let Some(steps) = sat.retrieve(&ab, group, g.word())? else {
        return Ok(None);
    };
    // the only moves from the first copy into the second are the bridging ε-moves
    let cut = steps
        .iter()
        .position(|s| matches!(*s, Step::Jump(q) if q >= offset))
        .unwrap_or(steps.len());
    Ok(Some((letters(&steps[..cut]), letters(&steps[cut..]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{star, union};

    fn f2() -> GroupAlphabet {
        GroupAlphabet::new(["x", "y"]).unwrap()
    }

    fn word_aut(g: &GroupAlphabet, s: &str) -> Automaton {
        Automaton::from_word(g.alphabet().clone(), &g.parse_word(s).unwrap())
    }

    #[test]
    fn reduces_single_word() {
        let g = f2();
        let r = benois_reduce(&g, &word_aut(&g, "x x^ y")).unwrap();
        assert!(r.automaton().equivalent(&word_aut(&g, "y")).unwrap());
    }

    #[test]
    fn cancelling_star_reduces_to_identity() {
        let g = f2();
        let r = benois_reduce(&g, &star(&word_aut(&g, "x x^"))).unwrap();
        assert!(r.automaton().equivalent(&word_aut(&g, "")).unwrap());
    }

    #[test]
    fn nested_cancellation() {
        let g = f2();
        let mid = star(&word_aut(&g, "y y^"));
        let a = concat(&concat(&word_aut(&g, "x"), &mid).unwrap(), &word_aut(&g, "x")).unwrap();
        let r = benois_reduce(&g, &a).unwrap();
        assert!(r.automaton().equivalent(&word_aut(&g, "x x")).unwrap());
    }

    #[test]
    fn retrieval_finds_shortest() {
        let g = f2();
        let a = union(&word_aut(&g, "x y y^ x^ y"), &word_aut(&g, "x x^ y")).unwrap();
        let w = find_reducing_word(&g, &a, &g.parse_element("y").unwrap()).unwrap().unwrap();
        assert_eq!(g.format(&w), "x x^ y");
        assert!(find_reducing_word(&g, &a, &g.parse_element("x").unwrap()).unwrap().is_none());
    }

    #[test]
    fn product_retrieval_splits_at_bridge() {
        let g = f2();
        let a = word_aut(&g, "x y");
        let b = word_aut(&g, "y^ x");
        let (u, v) = find_reducing_word_in_product(&g, &a, &b, &g.parse_element("x x").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(g.format(&u), "x y");
        assert_eq!(g.format(&v), "y^ x");
    }

    #[test]
    fn rejects_foreign_alphabet() {
        let g = f2();
        let h = GroupAlphabet::new(["a"]).unwrap();
        assert!(matches!(benois_reduce(&g, &word_aut(&h, "a")), Err(Error::AlphabetMismatch)));
    }
}
