//! Free groups over group alphabets `X = Y ⊔ Y⁻¹`.
//!
//! The formal inverse of generator `g` is spelled `g^`. Freely reduced
//! words are the normal forms of free-group elements, so a regular
//! language of reduced words ([`ReducedLang`]) is an exact, effectively
//! closed representation of a rational subset.

mod benois;
mod rational;

use std::fmt;
use std::sync::Arc;

use crate::automata::{hom_image, Alphabet, Automaton, Symbol, Word};
use crate::error::{Error, Result};

pub use benois::{benois_reduce, find_reducing_word, find_reducing_word_in_product};
pub use rational::ReducedLang;

/// Suffix marking the formal inverse of a generator.
pub const INVERSE_SUFFIX: char = '^';

/// A full group alphabet together with its letter involution.
#[derive(Debug, Clone)]
pub struct GroupAlphabet {
    alphabet: Arc<Alphabet>,
    inverse: Vec<Symbol>,
    generators: Vec<Symbol>,
}

impl PartialEq for GroupAlphabet {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
    }
}

impl Eq for GroupAlphabet {}

impl GroupAlphabet {
    /// Builds `g₁ g₁^ g₂ g₂^ …` from generator names.
    pub fn new<I, S>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut symbols = Vec::new();
        for g in generators {
            let g = g.into();
            if g.ends_with(INVERSE_SUFFIX) {
                return Err(Error::NotGroupAlphabet(format!(
                    "generator `{g}` ends in `{INVERSE_SUFFIX}`"
                )));
            }
            symbols.push(format!("{g}{INVERSE_SUFFIX}"));
            symbols.insert(symbols.len() - 1, g);
        }
        Self::from_alphabet(Arc::new(Alphabet::new(symbols)?))
    }

    /// Validates that every symbol is paired with its formal inverse.
    pub fn from_alphabet(alphabet: Arc<Alphabet>) -> Result<Self> {
        let mut inverse = vec![usize::MAX; alphabet.len()];
        let mut generators = Vec::new();
        for (s, name) in alphabet.symbols().iter().enumerate() {
            if let Some(base) = name.strip_suffix(INVERSE_SUFFIX) {
                if base.is_empty() || base.ends_with(INVERSE_SUFFIX) {
                    return Err(Error::NotGroupAlphabet(format!("bad inverse token `{name}`")));
                }
                let g = alphabet.index_of(base).ok_or_else(|| {
                    Error::NotGroupAlphabet(format!("`{name}` has no generator `{base}`"))
                })?;
                inverse[s] = g;
            } else {
                let inv = format!("{name}{INVERSE_SUFFIX}");
                let t = alphabet.index_of(&inv).ok_or_else(|| {
                    Error::NotGroupAlphabet(format!("generator `{name}` has no inverse `{inv}`"))
                })?;
                inverse[s] = t;
                generators.push(s);
            }
        }
        Ok(GroupAlphabet {
            alphabet,
            inverse,
            generators,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Generator symbols (not their inverses), in alphabet order.
    pub fn generators(&self) -> &[Symbol] {
        &self.generators
    }

    pub fn inverse(&self, s: Symbol) -> Symbol {
        self.inverse[s]
    }

    pub fn is_generator(&self, s: Symbol) -> bool {
        !self.alphabet.name(s).ends_with(INVERSE_SUFFIX)
    }

    /// The generator `s` belongs to, whether `s` is it or its inverse.
    pub fn base(&self, s: Symbol) -> Symbol {
        if self.is_generator(s) {
            s
        } else {
            self.inverse[s]
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        Ok(self.free_reduce(&self.parse_word(text)?))
    }

    pub fn format(&self, w: &[Symbol]) -> String {
        self.alphabet.format_word(w)
    }

    pub fn is_reduced(&self, w: &[Symbol]) -> bool {
        w.windows(2).all(|p| p[1] != self.inverse[p[0]])
    }

    /// Stack-based free reduction.
    pub fn free_reduce(&self, w: &[Symbol]) -> GroupElement {
        let mut stack: Vec<Symbol> = Vec::with_capacity(w.len());
        for &s in w {
            if stack.last() == Some(&self.inverse[s]) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        GroupElement(Word::from(stack))
    }

    /// Reverses `w` and inverts every letter.
    pub fn word_inverse(&self, w: &[Symbol]) -> Word {
        w.iter().rev().map(|&s| self.inverse[s]).collect()
    }

    pub fn elem_inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement(self.word_inverse(&g.0))
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.free_reduce(&g.0.concat(&h.0))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(Word::empty())
    }

    /// Letterwise inverse map, suitable for [`hom_image`].
    pub fn involution(&self) -> Vec<Word> {
        self.inverse.iter().map(|&t| Word::from(vec![t])).collect()
    }

    /// Automaton of all freely reduced words. State 0 is initial; state
    /// `1 + s` means "the last letter read was `s`".
    pub fn reduced_universe(&self) -> Automaton {
        let k = self.alphabet.len();
        let mut a = Automaton::new(self.alphabet.clone(), k + 1);
        a.add_start(0);
        for q in 0..=k {
            a.add_accept(q);
        }
        for x in 0..k {
            a.add_transition(0, x, 1 + x);
            for s in 0..k {
                if x != self.inverse[s] {
                    a.add_transition(1 + s, x, 1 + x);
                }
            }
        }
        a
    }

    /// All elements of reduced length at most `radius`, shortlex order.
    pub fn ball(&self, radius: usize) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        let mut frontier = vec![Vec::<Symbol>::new()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..self.alphabet.len() {
                    if w.last().is_some_and(|&l| self.inverse[l] == x) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out.extend(next.iter().map(|v| GroupElement(Word::from(v.clone()))));
            frontier = next;
        }
        out
    }
}

/// The automaton over `target` obtained by substituting each generator
/// of `source` with a word over `target`; inverse letters map to the formal
/// inverse of that word. `assignment[i]` is the image of `source.generators()[i]`.
///
/// The result represents the same subset of the common group only when the
/// assignment is compatible with both evaluation maps; that is the caller's
/// responsibility.
pub fn translate(
    a: &Automaton,
    source: &GroupAlphabet,
    target: &GroupAlphabet,
    assignment: &[Word],
) -> Result<Automaton> {
    if a.alphabet().as_ref() != source.alphabet().as_ref() {
        return Err(Error::AlphabetMismatch);
    }
    if assignment.len() != source.rank() {
        return Err(Error::BadMorphism(format!(
            "expected {} generator images, got {}",
            source.rank(),
            assignment.len()
        )));
    }
    let mut f = vec![Word::empty(); source.alphabet().len()];
    for (&g, w) in source.generators().iter().zip(assignment) {
        f[g] = w.clone();
        f[source.inverse(g)] = target.word_inverse(w);
    }
    hom_image(a, target.alphabet().clone(), &f)
}

/// A freely reduced word; the unique normal form of a free-group element.
/// Equality is word equality and the ordering is shortlex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Word);

impl GroupElement {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn display<'a>(&'a self, group: &'a GroupAlphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GroupElement, &'a GroupAlphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.1.format(self.0.word()))
            }
        }
        D(self, group)
    }
}
