use super::{benois_reduce, GroupAlphabet, GroupElement};
use crate::automata::{self, hom_image, reverse, Automaton, Word};
use crate::error::{Error, Result};

/// A regular language of freely reduced words: an exact representation of
/// a rational subset of the free group.
///
/// Reduced words are unique normal forms, so set operations on subsets are
/// language operations on these automata, with complements taken inside
/// the reduced-word universe.
#[derive(Debug, Clone)]
pub struct ReducedLang {
    group: GroupAlphabet,
    aut: Automaton,
}

impl ReducedLang {
    pub(crate) fn from_reduced(group: GroupAlphabet, aut: Automaton) -> Self {
        debug_assert!(aut.alphabet().as_ref() == group.alphabet().as_ref());
        ReducedLang { group, aut }
    }

    /// Wraps `aut` after checking that it accepts only reduced words.
    pub fn certify(group: &GroupAlphabet, aut: Automaton) -> Result<Self> {
        if aut.alphabet().as_ref() != group.alphabet().as_ref() {
            return Err(Error::AlphabetMismatch);
        }
        let outside = automata::complement(&group.reduced_universe(), None)?;
        if let Some(w) = automata::intersect(&aut, &outside)?.shortest_word() {
            return Err(Error::Precondition(format!(
                "accepts the unreduced word `{}`",
                group.format(&w)
            )));
        }
        Ok(ReducedLang::from_reduced(group.clone(), aut))
    }

    /// The whole group.
    pub fn universe(group: &GroupAlphabet) -> Self {
        ReducedLang::from_reduced(group.clone(), group.reduced_universe().minimized())
    }

    pub fn empty(group: &GroupAlphabet) -> Self {
        ReducedLang::from_reduced(group.clone(), Automaton::new(group.alphabet().clone(), 0))
    }

    pub fn from_elements<'a, I>(group: &GroupAlphabet, elements: I) -> Self
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        let mut aut = Automaton::new(group.alphabet().clone(), 0);
        for g in elements {
            aut = automata::union(&aut, &Automaton::from_word(group.alphabet().clone(), g.word()))
                .expect("same alphabet");
        }
        ReducedLang::from_reduced(group.clone(), aut.minimized())
    }

    pub fn group(&self) -> &GroupAlphabet {
        &self.group
    }

    pub fn automaton(&self) -> &Automaton {
        &self.aut
    }

    pub fn into_automaton(self) -> Automaton {
        self.aut
    }

    /// Membership of a group element.
    pub fn contains(&self, g: &GroupElement) -> bool {
        self.aut.accepts(g.word())
    }

    pub fn is_empty(&self) -> bool {
        self.aut.is_empty()
    }

    /// Shortlex-least element, if any.
    pub fn least(&self) -> Option<GroupElement> {
        self.aut
            .shortest_word()
            .map(|w| self.group.free_reduce(&w))
    }

    /// Elements of length at most `max_len`, shortlex order.
    pub fn elements(&self, max_len: usize) -> Vec<GroupElement> {
        self.aut
            .enumerate(max_len)
            .into_iter()
            .map(|w| self.group.free_reduce(&w))
            .collect()
    }

    fn check(&self, other: &ReducedLang) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    fn wrap(&self, aut: Automaton) -> ReducedLang {
        ReducedLang::from_reduced(self.group.clone(), aut.minimized())
    }

    /// `{ g⁻¹ : g ∈ S }`.
    pub fn inverse(&self) -> Result<ReducedLang> {
        let inv = hom_image(&reverse(&self.aut), self.group.alphabet().clone(), &self.group.involution())?;
        benois_reduce(&self.group, &inv)
    }

    /// `{ gh : g ∈ S, h ∈ T }`.
    pub fn product(&self, other: &ReducedLang) -> Result<ReducedLang> {
        self.check(other)?;
        benois_reduce(&self.group, &automata::concat(&self.aut, &other.aut)?)
    }

    pub fn union(&self, other: &ReducedLang) -> Result<ReducedLang> {
        self.check(other)?;
        Ok(self.wrap(automata::union(&self.aut, &other.aut)?))
    }

    pub fn intersect(&self, other: &ReducedLang) -> Result<ReducedLang> {
        self.check(other)?;
        Ok(self.wrap(automata::intersect(&self.aut, &other.aut)?))
    }

    /// Complement inside the group (relative to the reduced universe).
    pub fn complement(&self) -> Result<ReducedLang> {
        let universe = self.group.reduced_universe();
        Ok(self.wrap(automata::complement(&self.aut, Some(&universe))?))
    }

    pub fn difference(&self, other: &ReducedLang) -> Result<ReducedLang> {
        self.intersect(&other.complement()?)
    }

    pub fn is_subset_of(&self, other: &ReducedLang) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn equals(&self, other: &ReducedLang) -> Result<bool> {
        self.check(other)?;
        self.aut.equivalent(&other.aut)
    }

    /// Shortlex-least element in exactly one of the two subsets.
    pub fn distinguishing_element(&self, other: &ReducedLang) -> Result<Option<GroupElement>> {
        self.check(other)?;
        Ok(self
            .aut
            .distinguishing_word(&other.aut)?
            .map(|w: Word| self.group.free_reduce(&w)))
    }
}
