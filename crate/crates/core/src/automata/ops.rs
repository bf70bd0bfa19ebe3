use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::{Alphabet, Automaton, Dfa, StateId, Word};
use crate::error::{Error, Result};

fn embed(dst: &mut Automaton, src: &Automaton) -> StateId {
    let offset = dst.state_count();
    for _ in 0..src.state_count() {
        dst.add_state();
    }
    for (p, s, q) in src.transitions() {
        dst.add_transition(p + offset, s, q + offset);
    }
    for (p, q) in src.epsilons() {
        dst.add_epsilon(p + offset, q + offset);
    }
    offset
}

pub fn union(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    a.same_alphabet(b)?;
    let mut out = Automaton::new(a.alphabet().clone(), 0);
    for part in [a, b] {
        let off = embed(&mut out, part);
        for &q in part.starts() {
            out.add_start(q + off);
        }
        for &q in part.accepts_set() {
            out.add_accept(q + off);
        }
    }
    Ok(out)
}

/// Product construction over the reachable pairs of the ε-free inputs.
pub fn intersect(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    a.same_alphabet(b)?;
    let a = a.remove_epsilons();
    let b = b.remove_epsilons();
    let mut out = Automaton::new(a.alphabet().clone(), 0);
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    for &p in a.starts() {
        for &q in b.starts() {
            let id = out.add_state();
            ids.insert((p, q), id);
            out.add_start(id);
            queue.push_back((p, q));
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        let id = ids[&(p, q)];
        if a.is_accepting(p) && b.is_accepting(q) {
            out.add_accept(id);
        }
        for &(s, p2) in a.out(p) {
            for &(t, q2) in b.out(q) {
                if s != t {
                    continue;
                }
                let target = match ids.get(&(p2, q2)) {
                    Some(&t) => t,
                    None => {
                        let t = out.add_state();
                        ids.insert((p2, q2), t);
                        queue.push_back((p2, q2));
                        t
                    }
                };
                out.add_transition(id, s, target);
            }
        }
    }
    Ok(out)
}

/// Complement relative to all words over the alphabet, then intersected
/// with `universe` when one is supplied.
pub fn complement(a: &Automaton, universe: Option<&Automaton>) -> Result<Automaton> {
    let comp = Dfa::determinize(a).complement().to_automaton();
    match universe {
        Some(u) => intersect(&comp, u),
        None => Ok(comp),
    }
}

pub fn concat(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    a.same_alphabet(b)?;
    let mut out = Automaton::new(a.alphabet().clone(), 0);
    let oa = embed(&mut out, a);
    let ob = embed(&mut out, b);
    for &q in a.starts() {
        out.add_start(q + oa);
    }
    for &q in b.accepts_set() {
        out.add_accept(q + ob);
    }
    for &p in a.accepts_set() {
        for &q in b.starts() {
            out.add_epsilon(p + oa, q + ob);
        }
    }
    Ok(out)
}

pub fn star(a: &Automaton) -> Automaton {
    let mut out = Automaton::new(a.alphabet().clone(), 1);
    out.add_start(0);
    out.add_accept(0);
    let off = embed(&mut out, a);
    for &q in a.starts() {
        out.add_epsilon(0, q + off);
    }
    for &q in a.accepts_set() {
        out.add_epsilon(q + off, 0);
    }
    out
}

pub fn reverse(a: &Automaton) -> Automaton {
    let mut out = Automaton::new(a.alphabet().clone(), a.state_count());
    for &q in a.accepts_set() {
        out.add_start(q);
    }
    for &q in a.starts() {
        out.add_accept(q);
    }
    for (p, s, q) in a.transitions() {
        out.add_transition(q, s, p);
    }
    for (p, q) in a.epsilons() {
        out.add_epsilon(q, p);
    }
    out
}

/// Image under the monoid homomorphism sending symbol `s` to `f[s]`.
/// Each transition becomes a chain of fresh states; erased symbols become ε-moves.
pub fn hom_image(a: &Automaton, target: Arc<Alphabet>, f: &[Word]) -> Result<Automaton> {
    if f.len() != a.alphabet().len() {
        return Err(Error::BadMorphism(format!(
            "expected images for {} symbols, got {}",
            a.alphabet().len(),
            f.len()
        )));
    }
    check_words_over(f, &target)?;
    let mut out = Automaton::new(target, a.state_count());
    for &q in a.starts() {
        out.add_start(q);
    }
    for &q in a.accepts_set() {
        out.add_accept(q);
    }
    for (p, q) in a.epsilons() {
        out.add_epsilon(p, q);
    }
    for (p, s, q) in a.transitions() {
        let img = &f[s];
        if img.is_empty() {
            out.add_epsilon(p, q);
            continue;
        }
        let mut cur = p;
        for (i, &t) in img.iter().enumerate() {
            let nxt = if i + 1 == img.len() { q } else { out.add_state() };
            out.add_transition(cur, t, nxt);
            cur = nxt;
        }
    }
    Ok(out)
}

/// Inverse image: accepts the words `w` over `source` whose image under
/// `f` (symbol `s` maps to `f[s]`, a word over `a`'s alphabet) is accepted by `a`.
pub fn hom_preimage(a: &Automaton, source: Arc<Alphabet>, f: &[Word]) -> Result<Automaton> {
    if f.len() != source.len() {
        return Err(Error::BadMorphism(format!(
            "expected images for {} symbols, got {}",
            source.len(),
            f.len()
        )));
    }
    check_words_over(f, a.alphabet())?;
    let a = a.remove_epsilons();
    let n = a.state_count();
    let mut out = Automaton::new(source, n);
    for &q in a.starts() {
        out.add_start(q);
    }
    for &q in a.accepts_set() {
        out.add_accept(q);
    }
    for p in 0..n {
        for (s, img) in f.iter().enumerate() {
            let mut set = vec![false; n];
            set[p] = true;
            for &t in img.iter() {
                set = a.step(&set, t);
            }
            for (q, &on) in set.iter().enumerate() {
                if on {
                    out.add_transition(p, s, q);
                }
            }
        }
    }
    Ok(out)
}

fn check_words_over(f: &[Word], alphabet: &Alphabet) -> Result<()> {
    if let Some(bad) = f.iter().flat_map(|w| w.iter()).find(|&&t| t >= alphabet.len()) {
        return Err(Error::BadMorphism(format!(
            "image symbol #{bad} outside the target alphabet"
        )));
    }
    Ok(())
}

/// Accepts every prefix of every accepted word.
pub fn prefix_closure(a: &Automaton) -> Automaton {
    let mut t = a.trim();
    for q in 0..t.state_count() {
        t.add_accept(q);
    }
    t
}
