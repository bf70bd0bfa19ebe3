use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{Alphabet, Automaton, StateId, Symbol, Word};

/// Complete deterministic automaton. State 0 is not special; the start
/// state is stored explicitly and a dead state is materialized when needed.
#[derive(Debug, Clone)]
pub struct Dfa {
    alphabet: Arc<Alphabet>,
    start: StateId,
    next: Vec<Vec<StateId>>,
    accept: Vec<bool>,
}

impl Dfa {
    /// Subset construction, exploring subsets breadth-first in symbol order.
    pub fn determinize(a: &Automaton) -> Dfa {
        let k = a.alphabet().len();
        let key = |set: &[bool]| -> Vec<StateId> {
            set.iter().enumerate().filter(|(_, &on)| on).map(|(q, _)| q).collect()
        };
        let init = a.closure_of(a.starts().iter().copied());
        let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut sets: Vec<Vec<bool>> = Vec::new();
        let mut next: Vec<Vec<StateId>> = Vec::new();
        let mut accept = Vec::new();
        ids.insert(key(&init), 0);
        sets.push(init);
        let mut queue = VecDeque::from([0]);
        while let Some(id) = queue.pop_front() {
            let set = sets[id].clone();
            accept.resize(sets.len(), false);
            accept[id] = set
                .iter()
                .enumerate()
                .any(|(q, &on)| on && a.is_accepting(q));
            let mut row = Vec::with_capacity(k);
            for s in 0..k {
                let succ = a.step(&set, s);
                let kk = key(&succ);
                let target = match ids.get(&kk) {
                    Some(&t) => t,
                    None => {
                        let t = sets.len();
                        ids.insert(kk, t);
                        sets.push(succ);
                        queue.push_back(t);
                        t
                    }
                };
                row.push(target);
            }
            if next.len() <= id {
                next.resize(id + 1, Vec::new());
            }
            next[id] = row;
        }
        accept.resize(sets.len(), false);
        Dfa {
            alphabet: a.alphabet().clone(),
            start: 0,
            next,
            accept,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn state_count(&self) -> usize {
        self.next.len()
    }

    pub fn next(&self, q: StateId, s: Symbol) -> StateId {
        self.next[q][s]
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accept[q]
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let q = w.iter().fold(self.start, |q, &s| self.next[q][s]);
        self.accept[q]
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            accept: self.accept.iter().map(|b| !b).collect(),
            ..self.clone()
        }
    }

    /// Moore partition refinement, then renumbering in breadth-first order
    /// from the start state.
    pub fn minimize(&self) -> Dfa {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut class: Vec<usize> = self.accept.iter().map(|&b| b as usize).collect();
        let mut classes = 0;
        loop {
            let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut refined = vec![0; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend(self.next[q].iter().map(|&r| class[r]));
                let fresh = sigs.len();
                refined[q] = *sigs.entry(sig).or_insert(fresh);
            }
            let count = sigs.len();
            class = refined;
            if count == classes {
                break;
            }
            classes = count;
        }

        let mut order: Vec<Option<StateId>> = vec![None; classes];
        let mut reps: Vec<StateId> = Vec::new();
        let mut queue = VecDeque::from([self.start]);
        order[class[self.start]] = Some(0);
        reps.push(self.start);
        while let Some(q) = queue.pop_front() {
            for s in 0..k {
                let r = self.next[q][s];
                if order[class[r]].is_none() {
                    order[class[r]] = Some(reps.len());
                    reps.push(r);
                    queue.push_back(r);
                }
            }
        }
        let next = reps
            .iter()
            .map(|&q| {
                self.next[q]
                    .iter()
                    .map(|&r| order[class[r]].unwrap())
                    .collect()
            })
            .collect();
        let accept = reps.iter().map(|&q| self.accept[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            start: 0,
            next,
            accept,
        }
    }

    /// Shortlex-least word accepted by exactly one of the two automata.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<Word> {
        let k = self.alphabet.len();
        let mut seen: HashMap<(StateId, StateId), Option<(usize, Symbol)>> = HashMap::new();
        let mut nodes: Vec<(StateId, StateId)> = Vec::new();
        let start = (self.start, other.start);
        seen.insert(start, None);
        nodes.push(start);
        let mut head = 0;
        while head < nodes.len() {
            let (p, q) = nodes[head];
            if self.accept[p] != other.accept[q] {
                let mut w = Vec::new();
                let mut cur = head;
                while let Some((prev, s)) = seen[&nodes[cur]] {
                    w.push(s);
                    cur = prev;
                }
                w.reverse();
                return Some(Word::from(w));
            }
            for s in 0..k {
                let pair = (self.next[p][s], other.next[q][s]);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(pair) {
                    e.insert(Some((head, s)));
                    nodes.push(pair);
                }
            }
            head += 1;
        }
        None
    }

    /// Converts back to an [`Automaton`], dropping dead and unreachable states.
    pub fn to_automaton(&self) -> Automaton {
        let mut a = Automaton::new(self.alphabet.clone(), self.state_count());
        a.add_start(self.start);
        for q in 0..self.state_count() {
            if self.accept[q] {
                a.add_accept(q);
            }
            for (s, &r) in self.next[q].iter().enumerate() {
                a.add_transition(q, s, r);
            }
        }
        a.trim()
    }
}
