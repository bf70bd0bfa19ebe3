//! Finite automata over explicitly declared alphabets.
//!
//! An [`Automaton`] is a nondeterministic acceptor with optional ε-moves.
//! Every operation is a pure function that returns a new automaton; nothing
//! here mutates an input once it has been built. Words are ordered
//! shortlex by the alphabet's declared symbol order, and every witness this
//! module produces is the shortlex-least candidate.

mod dfa;
mod ops;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use dfa::Dfa;
pub use ops::{
    complement, concat, hom_image, hom_preimage, intersect, prefix_closure, reverse, star, union,
};
pub use text::{parse_automaton, write_automaton};

/// Index of a symbol in its [`Alphabet`].
pub type Symbol = usize;
/// Index of a state in its [`Automaton`].
pub type StateId = usize;

/// Rendering of the empty word.
pub const EMPTY_WORD: &str = "ε";

/// An ordered, duplicate-free list of symbol names.
///
/// The position of a symbol fixes the tie-breaking order used for
/// shortlex comparisons everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for s in symbols {
            let s = s.into();
            if !is_valid_symbol(&s) {
                return Err(Error::InvalidSymbol(s));
            }
            if index.insert(s.clone(), names.len()).is_some() {
                return Err(Error::DuplicateSymbol(s));
            }
            names.push(s);
        }
        Ok(Alphabet { symbols: names, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s]
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Parses whitespace-separated symbol tokens. A blank string or the lone
    /// token `ε` is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_WORD {
            return Ok(Word::empty());
        }
        text.split_whitespace()
            .map(|tok| self.symbol(tok))
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    pub fn format_word(&self, w: &[Symbol]) -> String {
        if w.is_empty() {
            return EMPTY_WORD.to_string();
        }
        w.iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Symbols are non-empty runs of printable, non-whitespace ASCII other than `#`.
pub fn is_valid_symbol(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_graphic() && b != b'#')
}

/// A finite sequence of symbols. Ordered shortlex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn shortlex_cmp(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Nondeterministic finite automaton with ε-moves.
///
/// The structure stores exactly what was built: no implicit trimming or
/// normalization happens on construction. A zero-state automaton is legal
/// and accepts nothing.
#[derive(Debug, Clone)]
pub struct Automaton {
    alphabet: Arc<Alphabet>,
    starts: BTreeSet<StateId>,
    accepts: BTreeSet<StateId>,
    // per-state sorted, duplicate-free adjacency
    trans: Vec<Vec<(Symbol, StateId)>>,
    eps: Vec<Vec<StateId>>,
}

impl Automaton {
    pub fn new(alphabet: Arc<Alphabet>, states: usize) -> Self {
        Automaton {
            alphabet,
            starts: BTreeSet::new(),
            accepts: BTreeSet::new(),
            trans: vec![Vec::new(); states],
            eps: vec![Vec::new(); states],
        }
    }

    /// The automaton accepting exactly `{w}`.
    pub fn from_word(alphabet: Arc<Alphabet>, w: &[Symbol]) -> Self {
        let mut a = Automaton::new(alphabet, w.len() + 1);
        a.add_start(0);
        a.add_accept(w.len());
        for (i, &s) in w.iter().enumerate() {
            a.add_transition(i, s, i + 1);
        }
        a
    }

    /// The automaton accepting every word over the alphabet.
    pub fn universal(alphabet: Arc<Alphabet>) -> Self {
        let mut a = Automaton::new(alphabet.clone(), 1);
        a.add_start(0);
        a.add_accept(0);
        for s in 0..alphabet.len() {
            a.add_transition(0, s, 0);
        }
        a
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.trans.len()
    }

    pub fn starts(&self) -> &BTreeSet<StateId> {
        &self.starts
    }

    pub fn accepts_set(&self) -> &BTreeSet<StateId> {
        &self.accepts
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepts.contains(&q)
    }

    pub fn out(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.trans[q]
    }

    pub fn eps_out(&self, q: StateId) -> &[StateId] {
        &self.eps[q]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.trans
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().map(move |&(s, q)| (p, s, q)))
    }

    pub fn epsilons(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.eps
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().map(move |&q| (p, q)))
    }

    pub fn has_epsilons(&self) -> bool {
        self.eps.iter().any(|row| !row.is_empty())
    }

    pub fn add_state(&mut self) -> StateId {
        self.trans.push(Vec::new());
        self.eps.push(Vec::new());
        self.trans.len() - 1
    }

    pub fn add_start(&mut self, q: StateId) {
        debug_assert!(q < self.state_count());
        self.starts.insert(q);
    }

    pub fn add_accept(&mut self, q: StateId) {
        debug_assert!(q < self.state_count());
        self.accepts.insert(q);
    }

    pub fn add_transition(&mut self, p: StateId, s: Symbol, q: StateId) {
        debug_assert!(p < self.state_count() && q < self.state_count());
        debug_assert!(s < self.alphabet.len());
        let row = &mut self.trans[p];
        if let Err(pos) = row.binary_search(&(s, q)) {
            row.insert(pos, (s, q));
        }
    }

    pub fn add_epsilon(&mut self, p: StateId, q: StateId) {
        debug_assert!(p < self.state_count() && q < self.state_count());
        if p == q {
            return;
        }
        let row = &mut self.eps[p];
        if let Err(pos) = row.binary_search(&q) {
            row.insert(pos, q);
        }
    }

    pub(crate) fn same_alphabet(&self, other: &Automaton) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Extends `set` (a membership mask) to its ε-closure.
    pub(crate) fn close(&self, set: &mut [bool]) {
        let mut stack: Vec<StateId> = (0..set.len()).filter(|&q| set[q]).collect();
        while let Some(p) = stack.pop() {
            for &q in &self.eps[p] {
                if !set[q] {
                    set[q] = true;
                    stack.push(q);
                }
            }
        }
    }

    pub(crate) fn closure_of<I: IntoIterator<Item = StateId>>(&self, states: I) -> Vec<bool> {
        let mut set = vec![false; self.state_count()];
        for q in states {
            set[q] = true;
        }
        self.close(&mut set);
        set
    }

    pub(crate) fn step(&self, set: &[bool], s: Symbol) -> Vec<bool> {
        let mut next = vec![false; set.len()];
        for p in (0..set.len()).filter(|&p| set[p]) {
            for &(t, q) in &self.trans[p] {
                if t == s {
                    next[q] = true;
                }
            }
        }
        self.close(&mut next);
        next
    }

    /// States reached from the start states after reading `w`.
    pub fn run(&self, w: &[Symbol]) -> Vec<bool> {
        let mut set = self.closure_of(self.starts.iter().copied());
        for &s in w {
            set = self.step(&set, s);
        }
        set
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        self.run(w)
            .iter()
            .enumerate()
            .any(|(q, &on)| on && self.accepts.contains(&q))
    }

    /// Like [`Automaton::accepts`] but validates that every letter belongs
    /// to the alphabet.
    pub fn accepts_checked(&self, w: &[Symbol]) -> Result<bool> {
        if let Some(&s) = w.iter().find(|&&s| s >= self.alphabet.len()) {
            return Err(Error::UnknownSymbol(format!("#{s}")));
        }
        Ok(self.accepts(w))
    }

    pub fn accepts_str(&self, text: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.parse_word(text)?))
    }

    /// Equivalent automaton without ε-moves, on the same state set.
    pub fn remove_epsilons(&self) -> Automaton {
        if !self.has_epsilons() {
            return self.clone();
        }
        let n = self.state_count();
        let mut out = Automaton::new(self.alphabet.clone(), n);
        out.starts = self.starts.clone();
        for p in 0..n {
            let cl = self.closure_of([p]);
            let mut targets: BTreeSet<(Symbol, StateId)> = BTreeSet::new();
            for r in (0..n).filter(|&r| cl[r]) {
                if self.accepts.contains(&r) {
                    out.accepts.insert(p);
                }
                for &(s, q) in &self.trans[r] {
                    targets.insert((s, q));
                }
            }
            let mut row = BTreeSet::new();
            for (s, q) in targets {
                let qcl = self.closure_of([q]);
                for (t, &on) in qcl.iter().enumerate() {
                    if on {
                        row.insert((s, t));
                    }
                }
            }
            out.trans[p] = row.into_iter().collect();
        }
        out
    }

    fn forward_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack: Vec<StateId> = self.starts.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(p) = stack.pop() {
            let succ = self.trans[p].iter().map(|&(_, q)| q).chain(self.eps[p].iter().copied());
            for q in succ {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    }

    pub(crate) fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut pred: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            pred[q].push(p);
        }
        for (p, q) in self.epsilons() {
            pred[q].push(p);
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<StateId> = self.accepts.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Keeps only states that are both accessible and co-accessible,
    /// renumbered in increasing order.
    pub fn trim(&self) -> Automaton {
        let fwd = self.forward_reachable();
        let bwd = self.coreachable();
        let keep: Vec<bool> = fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect();
        self.restrict(&keep)
    }

    pub(crate) fn restrict(&self, keep: &[bool]) -> Automaton {
        let mut map = vec![usize::MAX; self.state_count()];
        let mut n = 0;
        for q in 0..self.state_count() {
            if keep[q] {
                map[q] = n;
                n += 1;
            }
        }
        let mut out = Automaton::new(self.alphabet.clone(), n);
        for &q in &self.starts {
            if keep[q] {
                out.starts.insert(map[q]);
            }
        }
        for &q in &self.accepts {
            if keep[q] {
                out.accepts.insert(map[q]);
            }
        }
        for (p, s, q) in self.transitions() {
            if keep[p] && keep[q] {
                out.trans[map[p]].push((s, map[q]));
            }
        }
        for (p, q) in self.epsilons() {
            if keep[p] && keep[q] {
                out.eps[map[p]].push(map[q]);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.coreachable_start().is_none()
    }

    fn coreachable_start(&self) -> Option<StateId> {
        let co = self.coreachable();
        self.starts.iter().copied().find(|&q| co[q])
    }

    /// The shortlex-least accepted word, if any.
    ///
    /// Breadth-first search over the subset construction, expanding symbols
    /// in alphabet order: subsets are dequeued in shortlex order of the
    /// words that first reached them, so the first accepting subset carries
    /// the least accepted word.
    pub fn shortest_word(&self) -> Option<Word> {
        self.shortest_completion(&self.closure_of(self.starts.iter().copied()))
    }

    /// The shortlex-least word leading from the state set `from` (an
    /// ε-closed membership mask) to an accepting state.
    pub fn shortest_completion(&self, from: &[bool]) -> Option<Word> {
        let accepting = |set: &[bool]| set.iter().enumerate().any(|(q, &on)| on && self.accepts.contains(&q));
        let co = self.coreachable();
        // states that cannot reach acceptance never matter
        let prune = |mut set: Vec<bool>| {
            for (q, on) in set.iter_mut().enumerate() {
                *on &= co[q];
            }
            set
        };
        let init = prune(from.to_vec());
        if !init.iter().any(|&b| b) {
            return None;
        }
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        // each node: subset, and the parent node with the symbol read from it
        type Node = (Vec<bool>, Option<(usize, Symbol)>);
        let mut nodes: Vec<Node> = Vec::new();
        seen.insert(init.clone());
        nodes.push((init, None));
        let mut head = 0;
        while head < nodes.len() {
            if accepting(&nodes[head].0) {
                let mut w = Vec::new();
                let mut cur = head;
                while let Some((prev, s)) = nodes[cur].1 {
                    w.push(s);
                    cur = prev;
                }
                w.reverse();
                return Some(Word(w));
            }
            for s in 0..self.alphabet.len() {
                let succ = prune(self.step(&nodes[head].0, s));
                if succ.iter().any(|&b| b) && !seen.contains(&succ) {
                    seen.insert(succ.clone());
                    nodes.push((succ, Some((head, s))));
                }
            }
            head += 1;
        }
        None
    }

    /// Every accepted word of length at most `max_len`, in shortlex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let a = self.trim();
        let k = a.alphabet.len();
        let mut out = Vec::new();
        if a.state_count() == 0 {
            return out;
        }
        let accepting = |set: &[bool]| set.iter().enumerate().any(|(q, &on)| on && a.accepts.contains(&q));
        let mut level: Vec<(Vec<Symbol>, Vec<bool>)> =
            vec![(Vec::new(), a.closure_of(a.starts.iter().copied()))];
        for len in 0..=max_len {
            for (w, set) in &level {
                if accepting(set) {
                    out.push(Word(w.clone()));
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (w, set) in &level {
                for s in 0..k {
                    let succ = a.step(set, s);
                    if succ.iter().any(|&b| b) {
                        let mut w2 = w.clone();
                        w2.push(s);
                        next.push((w2, succ));
                    }
                }
            }
            level = next;
        }
        out
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn count_by_length(&self, max_len: usize) -> Vec<u64> {
        let dfa = Dfa::determinize(self);
        let mut counts = vec![0u64; dfa.state_count()];
        counts[dfa.start()] = 1;
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push(
                (0..dfa.state_count())
                    .filter(|&q| dfa.is_accepting(q))
                    .map(|q| counts[q])
                    .sum(),
            );
            if len == max_len {
                break;
            }
            let mut next = vec![0u64; dfa.state_count()];
            for (q, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for s in 0..dfa.alphabet().len() {
                    next[dfa.next(q, s)] += c;
                }
            }
            counts = next;
        }
        out
    }

    /// Determinizes and minimizes, dropping the dead state.
    pub fn minimized(&self) -> Automaton {
        Dfa::determinize(self).minimize().to_automaton()
    }

    /// Exact language equivalence.
    pub fn equivalent(&self, other: &Automaton) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// Shortlex-least word in the symmetric difference, if any.
    pub fn distinguishing_word(&self, other: &Automaton) -> Result<Option<Word>> {
        self.same_alphabet(other)?;
        Ok(Dfa::determinize(self).distinguishing_word(&Dfa::determinize(other)))
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_automaton(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    #[test]
    fn alphabet_rejects_bad_symbols() {
        assert!(matches!(Alphabet::new(["x", "x"]), Err(Error::DuplicateSymbol(_))));
        assert!(matches!(Alphabet::new(["a#"]), Err(Error::InvalidSymbol(_))));
        assert!(matches!(Alphabet::new([""]), Err(Error::InvalidSymbol(_))));
        assert!(matches!(Alphabet::new(["a b"]), Err(Error::InvalidSymbol(_))));
    }

    #[test]
    fn trivial_acceptance() {
        let mut a = Automaton::new(xy(), 1);
        a.add_start(0);
        a.add_accept(0);
        assert!(a.accepts(&[]));
        assert!(!a.accepts_str("x").unwrap());
        assert!(matches!(a.accepts_str("z"), Err(Error::UnknownSymbol(_))));
        assert!(a.accepts_checked(&[7]).is_err());
    }

    #[test]
    fn shortest_word_is_shortlex_least() {
        let mut a = Automaton::new(xy(), 2);
        a.add_start(0);
        a.add_accept(1);
        a.add_transition(0, 0, 0);
        a.add_transition(0, 1, 1);
        assert_eq!(a.shortest_word().unwrap(), Word::from(vec![1]));

        let al = xy();
        let u = union(
            &Automaton::from_word(al.clone(), &[1, 0]),
            &Automaton::from_word(al.clone(), &[0, 1]),
        )
        .unwrap();
        assert_eq!(u.shortest_word().unwrap(), Word::from(vec![0, 1]));

        let none = Automaton::new(al, 3);
        assert!(none.is_empty());
        assert!(none.shortest_word().is_none());
    }

    #[test]
    fn enumerate_star() {
        let al = Arc::new(Alphabet::new(["x"]).unwrap());
        let xs = Automaton::universal(al);
        let words = xs.enumerate(2);
        assert_eq!(words, vec![Word::empty(), Word::from(vec![0]), Word::from(vec![0, 0])]);
        assert_eq!(xs.count_by_length(3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn epsilon_removal_preserves_language() {
        let al = xy();
        let mut a = Automaton::new(al, 4);
        a.add_start(0);
        a.add_epsilon(0, 1);
        a.add_transition(1, 0, 2);
        a.add_epsilon(2, 3);
        a.add_transition(3, 1, 1);
        a.add_accept(3);
        let b = a.remove_epsilons();
        assert!(!b.has_epsilons());
        assert!(a.equivalent(&b).unwrap());
        assert!(b.accepts(&[0, 1, 0]));
        assert!(!b.accepts(&[0, 1]));
    }

    #[test]
    fn word_ordering_is_shortlex() {
        let mut ws = vec![Word::from(vec![1, 0]), Word::from(vec![1]), Word::from(vec![0, 1]), Word::empty()];
        ws.sort();
        assert_eq!(
            ws,
            vec![Word::empty(), Word::from(vec![1]), Word::from(vec![0, 1]), Word::from(vec![1, 0])]
        );
    }
}
