//! Deciding whether a regular language represents a positive cone of a
//! left order on a free group, with checkable witnesses when it does not.
//!
//! A set `P` is a positive cone iff `e ∉ P`, `P ∩ P⁻¹ = ∅`,
//! `P ∪ P⁻¹ ∪ {e}` is the whole group, and `PP ⊆ P`. Each condition is an
//! exact automaton computation on the Benois reduction of the input, so
//! [`check_cone_axioms`] is a complete decision procedure. For rank at
//! least two it never answers [`ConeVerdict::IsCone`].

mod prefix;
mod refute;

use std::fmt::Write as _;

use crate::automata::{self, hom_image, reverse, Automaton, Word};
use crate::error::{Error, Result};
use crate::freegroup::{
    benois_reduce, find_reducing_word, find_reducing_word_in_product, GroupAlphabet, GroupElement,
    ReducedLang,
};

pub use prefix::{Factor, FreeProductSplit, Syllable, SyllableIndex};
pub use refute::{Cover, RefuteConfig};

/// A violated cone axiom, with words of the input language as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `word ∈ L` reduces to the identity.
    IdentityInCone { word: Word },
    /// `first, second ∈ L` represent mutually inverse elements.
    Disjointness { first: Word, second: Word },
    /// Neither `element` nor its inverse is represented, and it is not `e`.
    Totality { element: GroupElement },
    /// `first, second ∈ L` but `first·second` is not represented.
    Semigroup { first: Word, second: Word },
}

impl Violation {
    pub fn tag(&self) -> &'static str {
        match self {
            Violation::IdentityInCone { .. } => "IdentityInCone",
            Violation::Disjointness { .. } => "DisjointnessFail",
            Violation::Totality { .. } => "TotalityFail",
            Violation::Semigroup { .. } => "SemigroupFail",
        }
    }

    pub fn witnesses(&self) -> Vec<&Word> {
        match self {
            Violation::IdentityInCone { word } => vec![word],
            Violation::Disjointness { first, second } | Violation::Semigroup { first, second } => {
                vec![first, second]
            }
            Violation::Totality { element } => vec![element.word()],
        }
    }

    /// `violation:` line followed by one `witness:` line per word.
    pub fn render(&self, group: &GroupAlphabet) -> String {
        let mut out = format!("violation: {}\n", self.tag());
        for w in self.witnesses() {
            let _ = writeln!(out, "witness: {}", group.format(w));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeVerdict {
    IsCone,
    NotCone(Violation),
}

impl ConeVerdict {
    pub fn is_cone(&self) -> bool {
        matches!(self, ConeVerdict::IsCone)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            ConeVerdict::IsCone => None,
            ConeVerdict::NotCone(v) => Some(v),
        }
    }

    pub fn render(&self, group: &GroupAlphabet) -> String {
        match self {
            ConeVerdict::IsCone => "verdict: IsCone\n".to_string(),
            ConeVerdict::NotCone(v) => format!("verdict: NotCone\n{}", v.render(group)),
        }
    }
}

/// A candidate cone language together with its Benois reduction.
#[derive(Debug, Clone)]
pub struct ConeCandidate {
    group: GroupAlphabet,
    language: Automaton,
    positive: ReducedLang,
}

impl ConeCandidate {
    pub fn new(group: &GroupAlphabet, language: Automaton) -> Result<Self> {
        if language.alphabet().as_ref() != group.alphabet().as_ref() {
            return Err(Error::AlphabetMismatch);
        }
        let positive = benois_reduce(group, &language)?;
        Ok(ConeCandidate {
            group: group.clone(),
            language,
            positive,
        })
    }

    /// Reads the group alphabet off the automaton's own alphabet.
    pub fn from_automaton(language: Automaton) -> Result<Self> {
        let group = GroupAlphabet::from_alphabet(language.alphabet().clone())?;
        ConeCandidate::new(&group, language)
    }

    pub fn group(&self) -> &GroupAlphabet {
        &self.group
    }

    pub fn language(&self) -> &Automaton {
        &self.language
    }

    /// The represented subset `φ(L)`.
    pub fn positive(&self) -> &ReducedLang {
        &self.positive
    }

    pub fn represents(&self, g: &GroupElement) -> bool {
        self.positive.contains(g)
    }

    /// A shortest accepted word representing `g`.
    pub(crate) fn word_for(&self, g: &GroupElement) -> Result<Word> {
        find_reducing_word(&self.group, &self.language, g)?.ok_or_else(|| {
            Error::SearchExhausted(format!(
                "no accepted word reduces to `{}`",
                self.group.format(g.word())
            ))
        })
    }

    pub(crate) fn disjointness(&self, g: &GroupElement) -> Result<Violation> {
        Ok(Violation::Disjointness {
            first: self.word_for(g)?,
            second: self.word_for(&self.group.elem_inverse(g))?,
        })
    }

    /// Runs the four axiom checks in order, stopping at the first failure.
    pub fn check_axioms(&self) -> Result<ConeVerdict> {
        let group = &self.group;
        let p = &self.positive;
        let e = group.identity();

        if p.contains(&e) {
            let word = self.word_for(&e)?;
            return Ok(ConeVerdict::NotCone(Violation::IdentityInCone { word }));
        }

        let inverse = p.inverse()?;
        if let Some(g) = p.intersect(&inverse)?.least() {
            return Ok(ConeVerdict::NotCone(self.disjointness(&g)?));
        }

        let covered = p.union(&inverse)?.union(&ReducedLang::from_elements(group, [&e]))?;
        if let Some(g) = covered.complement()?.least() {
            return Ok(ConeVerdict::NotCone(Violation::Totality { element: g }));
        }

        if let Some(h) = p.product(p)?.difference(p)?.least() {
            let (first, second) =
                find_reducing_word_in_product(group, &self.language, &self.language, &h)?
                    .ok_or_else(|| Error::SearchExhausted("no factorization of a product witness".into()))?;
            return Ok(ConeVerdict::NotCone(Violation::Semigroup { first, second }));
        }

        Ok(ConeVerdict::IsCone)
    }

    /// Re-checks a violation using only free reduction, acceptance by the
    /// input automaton, and membership in `φ(L)`.
    pub fn verify(&self, v: &Violation) -> bool {
        let g = &self.group;
        let in_l = |w: &Word| w.iter().all(|&s| s < g.alphabet().len()) && self.language.accepts(w);
        match v {
            Violation::IdentityInCone { word } => in_l(word) && g.free_reduce(word).is_identity(),
            Violation::Disjointness { first, second } => {
                let a = g.free_reduce(first);
                let b = g.free_reduce(second);
                in_l(first) && in_l(second) && !a.is_identity() && a == g.elem_inverse(&b)
            }
            Violation::Totality { element } => {
                g.is_reduced(element.word())
                    && !element.is_identity()
                    && !self.represents(element)
                    && !self.represents(&g.elem_inverse(element))
            }
            Violation::Semigroup { first, second } => {
                in_l(first) && in_l(second) && !self.represents(&g.free_reduce(&first.concat(second)))
            }
        }
    }
}

/// Decides whether `a` represents a positive cone of the free group on `group`.
pub fn check_cone_axioms(group: &GroupAlphabet, a: &Automaton) -> Result<ConeVerdict> {
    ConeCandidate::new(group, a.clone())?.check_axioms()
}

/// `L ∪ {ε} ∪ L⁻¹`, where `L⁻¹` is the language of formal inverses.
pub fn cone_to_full_language(group: &GroupAlphabet, a: &Automaton) -> Result<Automaton> {
    if a.alphabet().as_ref() != group.alphabet().as_ref() {
        return Err(Error::AlphabetMismatch);
    }
    let inverses = hom_image(&reverse(a), group.alphabet().clone(), &group.involution())?;
    let eps = Automaton::from_word(group.alphabet().clone(), &[]);
    automata::union(&automata::union(a, &eps)?, &inverses)
}
