//! Constructive versions of the prefix-coverage and pumping arguments.
//!
//! [`ConeCandidate::cover_by_prefixes`] shows that an element `g` is
//! represented by a prefix of an accepted word, using the conjugate pair
//! `g x g⁻¹`, `g x⁻¹ g⁻¹`. [`ConeCandidate::pumping_witness`] combines that
//! with a dominating element `t` and a short completion to produce two
//! accepted words representing mutually inverse elements. Whenever the
//! language is inconsistent with being a cone along the way, the
//! inconsistency itself is returned as the certificate.

use super::prefix::FreeProductSplit;
use super::{ConeCandidate, Violation};
use crate::automata::{Symbol, Word};
use crate::error::{Error, Result};
use crate::freegroup::GroupElement;

/// Outcome of [`ConeCandidate::cover_by_prefixes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cover {
    /// A prefix of an accepted word that represents the requested element.
    Prefix(Word),
    /// The conjugate pair already violates a cone axiom.
    Refuted(Violation),
}

/// Search bounds for [`ConeCandidate::pumping_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefuteConfig {
    /// Upper bound on the radius of the ball the dominating element must exceed.
    pub max_ball_radius: usize,
    /// Longest conjugating element tried when searching for a dominating element.
    pub max_t_search_length: usize,
}

impl RefuteConfig {
    pub fn new(max_ball_radius: usize, max_t_search_length: usize) -> Result<Self> {
        if max_ball_radius == 0 || max_t_search_length == 0 {
            return Err(Error::Precondition("search bounds must be at least 1".into()));
        }
        Ok(RefuteConfig {
            max_ball_radius,
            max_t_search_length,
        })
    }
}

impl Default for RefuteConfig {
    fn default() -> Self {
        RefuteConfig {
            max_ball_radius: 3,
            max_t_search_length: 6,
        }
    }
}

enum Conjugate {
    Positive(GroupElement),
    Refuted(Violation),
}

impl ConeCandidate {
    /// The letter used to conjugate `g`: the first letter of the factor
    /// opposite `g`'s last syllable, or the first letter overall for `e`.
    fn conjugating_letter(&self, split: Option<&FreeProductSplit>, g: &GroupElement) -> Result<Symbol> {
        match (g.word().last(), split) {
            (None, _) => Ok(0),
            (Some(&last), Some(split)) => Ok(split.first_letter(split.factor(last).other())),
            (Some(_), None) => Err(Error::Precondition(
                "covering a nontrivial element needs a free product splitting".into(),
            )),
        }
    }

    /// Of `g x g⁻¹` and `g x⁻¹ g⁻¹`, the one represented by the language,
    /// or a violation if both or neither are.
    fn positive_conjugate(&self, g: &GroupElement, x: Symbol) -> Result<Conjugate> {
        let group = &self.group;
        let ginv = group.elem_inverse(g);
        let conj = |letter: Symbol| {
            let mut w = g.word().to_vec();
            w.push(letter);
            w.extend_from_slice(ginv.word());
            group.free_reduce(&w)
        };
        let up = conj(x);
        let down = conj(group.inverse(x));
        Ok(match (self.represents(&up), self.represents(&down)) {
            (true, true) => Conjugate::Refuted(self.disjointness(&up)?),
            (false, false) => Conjugate::Refuted(Violation::Totality { element: up }),
            (true, false) => Conjugate::Positive(up),
            (false, true) => Conjugate::Positive(down),
        })
    }

    /// Finds a prefix of an accepted word representing `g`.
    pub fn cover_by_prefixes(&self, split: Option<&FreeProductSplit>, g: &GroupElement) -> Result<Cover> {
        let x = self.conjugating_letter(split, g)?;
        let positive = match self.positive_conjugate(g, x)? {
            Conjugate::Refuted(v) => return Ok(Cover::Refuted(v)),
            Conjugate::Positive(c) => c,
        };
        let w = self.word_for(&positive)?;
        let Some(split) = split else {
            // only reachable for g = e
            return Ok(Cover::Prefix(Word::empty()));
        };
        let syllables = split.syllables(g.word());
        let Some(at) = split.last_syllable_index(&syllables) else {
            return Ok(Cover::Prefix(Word::empty()));
        };
        let prefix = split.prefix_for_element(&w, at.index, at.include_b)?;
        debug_assert_eq!(&self.group.free_reduce(&prefix), g);
        Ok(Cover::Prefix(prefix))
    }

    /// Runs the pumping argument against the order the language would define.
    ///
    /// Searches conjugates `t` of increasing length for one exceeding every
    /// element of the ball of radius `min(k-1, max_ball_radius)` (`k` the
    /// state count), covers `t⁻¹` by a prefix `w`, completes it with a
    /// shortest `v` such that `wv` is accepted, and returns `wv` together
    /// with an accepted word for the inverse element `φ(v)⁻¹t`.
    ///
    /// Fails with [`Error::Inconclusive`] when the bounds run out.
    pub fn pumping_witness(&self, cfg: &RefuteConfig) -> Result<Violation> {
        let group = &self.group;
        let e = group.identity();
        if self.represents(&e) {
            return Ok(Violation::IdentityInCone { word: self.word_for(&e)? });
        }
        let split = FreeProductSplit::standard(group).ok();
        let states = self.language.state_count();
        let ball = group.ball(states.saturating_sub(1).min(cfg.max_ball_radius));

        for g in group.ball(cfg.max_t_search_length) {
            let x = match self.conjugating_letter(split.as_ref(), &g) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let t = match self.positive_conjugate(&g, x)? {
                Conjugate::Refuted(v) => return Ok(v),
                Conjugate::Positive(t) => t,
            };
            match self.dominates(&t, &ball)? {
                Dominance::Refuted(v) => return Ok(v),
                Dominance::No => continue,
                Dominance::Yes => {}
            }
            let tinv = group.elem_inverse(&t);
            let w = match split.as_ref() {
                Some(split) => match self.cover_by_prefixes(Some(split), &tinv)? {
                    Cover::Refuted(v) => return Ok(v),
                    Cover::Prefix(w) => w,
                },
                None => continue,
            };
            let reached = self.language.run(&w);
            let Some(v) = self.language.shortest_completion(&reached) else {
                continue;
            };
            let wv = w.concat(&v);
            // φ(wv) = t⁻¹φ(v) is positive; dominance makes φ(v)⁻¹t positive too
            let other = group.elem_inverse(&group.free_reduce(&wv));
            if self.represents(&other) {
                return Ok(Violation::Disjointness {
                    first: wv,
                    second: self.word_for(&other)?,
                });
            }
        }
        Err(Error::Inconclusive(format!(
            "no dominating element among conjugates of length up to {}",
            cfg.max_t_search_length
        )))
    }

    fn dominates(&self, t: &GroupElement, ball: &[GroupElement]) -> Result<Dominance> {
        let group = &self.group;
        let tinv = group.elem_inverse(t);
        for b in ball {
            if b == t {
                return Ok(Dominance::No);
            }
            let up = group.multiply(&group.elem_inverse(b), t);
            let down = group.multiply(&tinv, b);
            match (self.represents(&up), self.represents(&down)) {
                (true, false) => {}
                (false, true) => return Ok(Dominance::No),
                (true, true) => return Ok(Dominance::Refuted(self.disjointness(&up)?)),
                (false, false) => return Ok(Dominance::Refuted(Violation::Totality { element: up })),
            }
        }
        Ok(Dominance::Yes)
    }
}

enum Dominance {
    Yes,
    No,
    Refuted(Violation),
}
