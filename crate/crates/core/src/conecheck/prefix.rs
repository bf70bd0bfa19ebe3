//! Free products `A ∗ B` of free groups, realized as a partition of a
//! group alphabet's generators into two factors.

use crate::automata::{Symbol, Word};
use crate::error::{Error, Result};
use crate::freegroup::{GroupAlphabet, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    A,
    B,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::A => Factor::B,
            Factor::B => Factor::A,
        }
    }
}

/// A nontrivial syllable of a reduced factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub factor: Factor,
    pub value: GroupElement,
}

/// Where the `i`-th partial product `a₁b₁⋯aᵢb̂ᵢ` ends inside a syllable list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyllableIndex {
    pub index: usize,
    pub include_b: bool,
}

#[derive(Debug, Clone)]
pub struct FreeProductSplit {
    group: GroupAlphabet,
    in_a: Vec<bool>,
}

impl FreeProductSplit {
    /// `A` is generated by `a_generators` (generator symbols), `B` by the rest.
    pub fn new(group: &GroupAlphabet, a_generators: &[Symbol]) -> Result<Self> {
        let mut in_a = vec![false; group.alphabet().len()];
        for &g in a_generators {
            if g >= in_a.len() || !group.is_generator(g) {
                return Err(Error::Precondition(format!("#{g} is not a generator")));
            }
            in_a[g] = true;
            in_a[group.inverse(g)] = true;
        }
        let a_count = in_a.iter().filter(|&&b| b).count();
        if a_count == 0 || a_count == in_a.len() {
            return Err(Error::Precondition(
                "both free factors need at least one generator".into(),
            ));
        }
        Ok(FreeProductSplit {
            group: group.clone(),
            in_a,
        })
    }

    /// `F_k = ⟨first generator⟩ ∗ ⟨remaining generators⟩`.
    pub fn standard(group: &GroupAlphabet) -> Result<Self> {
        match group.generators().first() {
            Some(&g) if group.rank() >= 2 => FreeProductSplit::new(group, &[g]),
            _ => Err(Error::Precondition(format!(
                "rank {} group is not a nontrivial free product",
                group.rank()
            ))),
        }
    }

    pub fn group(&self) -> &GroupAlphabet {
        &self.group
    }

    pub fn factor(&self, s: Symbol) -> Factor {
        if self.in_a[s] {
            Factor::A
        } else {
            Factor::B
        }
    }

    /// The first letter (in alphabet order) of the given factor.
    pub fn first_letter(&self, f: Factor) -> Symbol {
        (0..self.in_a.len())
            .find(|&s| self.factor(s) == f)
            .expect("both factors are nonempty")
    }

    /// Syllables of the reduced factorization of `φ(w)`: the maximal
    /// single-factor runs of its free reduction.
    pub fn syllables(&self, w: &[Symbol]) -> Vec<Syllable> {
        let red = self.group.free_reduce(w);
        runs(red.word(), |s| self.factor(s))
            .into_iter()
            .map(|(f, lo, hi)| Syllable {
                factor: f,
                value: self.group.free_reduce(&red.word()[lo..hi]),
            })
            .collect()
    }

    /// Number of `aᵢbᵢ` pairs in `a₁b₁⋯aₘbₘ` (with `a₁`, `bₘ` possibly trivial);
    /// zero for the identity.
    pub fn pair_count(&self, syllables: &[Syllable]) -> usize {
        match syllables.first() {
            None => 0,
            Some(s) if s.factor == Factor::A => syllables.len().div_ceil(2),
            Some(_) => (syllables.len() + 1).div_ceil(2),
        }
    }

    /// The pair index and side of the last syllable of a nontrivial element.
    pub fn last_syllable_index(&self, syllables: &[Syllable]) -> Option<SyllableIndex> {
        let first = syllables.first()?;
        // position in the padded sequence a₁ b₁ a₂ b₂ …
        let pos = syllables.len() - 1 + usize::from(first.factor == Factor::B);
        Some(SyllableIndex {
            index: pos / 2 + 1,
            include_b: pos % 2 == 1,
        })
    }

    /// A prefix `w′` of `w` with `φ(w′) = a₁b₁⋯aᵢb̂ᵢ`, where `b̂ᵢ = bᵢ` if
    /// `include_b` and `e` otherwise.
    ///
    /// `w` is cut into maximal single-factor blocks; each block is evaluated
    /// and the blocks are merged left to right (trivial blocks dropped,
    /// adjacent same-factor values multiplied, trivial results removed).
    /// Each surviving syllable remembers the end of the last block merged
    /// into it, and the prefix ending there evaluates to every syllable up
    /// to and including it.
    pub fn prefix_for_element(&self, w: &[Symbol], index: usize, include_b: bool) -> Result<Word> {
        if let Some(&s) = w.iter().find(|&&s| s >= self.in_a.len()) {
            return Err(Error::UnknownSymbol(format!("#{s}")));
        }
        struct Open {
            factor: Factor,
            value: Vec<Symbol>,
            end: usize,
        }
        let mut stack: Vec<Open> = Vec::new();
        for (factor, lo, hi) in runs(w, |s| self.factor(s)) {
            let value = self.group.free_reduce(&w[lo..hi]).into_word();
            if value.is_empty() {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.factor == factor => {
                    let merged = self.group.free_reduce(&[&top.value[..], &value[..]].concat());
                    if merged.is_identity() {
                        stack.pop();
                    } else {
                        top.value = merged.into_word().into_vec();
                        top.end = hi;
                    }
                }
                _ => stack.push(Open {
                    factor,
                    value: value.into_vec(),
                    end: hi,
                }),
            }
        }

        let first_is_b = stack.first().is_some_and(|s| s.factor == Factor::B);
        let pairs = match stack.len() {
            0 => 0,
            n if first_is_b => (n + 1).div_ceil(2),
            n => n.div_ceil(2),
        };
        if index == 0 || index > pairs {
            return Err(Error::SyllableOutOfRange {
                index,
                count: pairs,
            });
        }
        // padded positions: aᵢ ↦ 2(i-1), bᵢ ↦ 2(i-1)+1; stack index = padded - first_is_b
        let slot = |padded: usize| padded.checked_sub(usize::from(first_is_b)).filter(|&k| k < stack.len());
        let a_pos = 2 * (index - 1);
        let last = if include_b {
            slot(a_pos + 1).or_else(|| slot(a_pos))
        } else {
            slot(a_pos)
        };
        let cut = last.map_or(0, |k| stack[k].end);
        Ok(Word::from(&w[..cut]))
    }
}

/// Maximal runs `(factor, start, end)` of consecutive letters from one factor.
fn runs(w: &[Symbol], factor: impl Fn(Symbol) -> Factor) -> Vec<(Factor, usize, usize)> {
    let mut out: Vec<(Factor, usize, usize)> = Vec::new();
    for (i, &s) in w.iter().enumerate() {
        let f = factor(s);
        match out.last_mut() {
            Some(run) if run.0 == f => run.2 = i + 1,
            _ => out.push((f, i, i + 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> FreeProductSplit {
        let g = GroupAlphabet::new(["a", "b"]).unwrap();
        FreeProductSplit::standard(&g).unwrap()
    }

    fn cut(split: &FreeProductSplit, w: &str, i: usize, b: bool) -> String {
        let g = split.group();
        let w = g.parse_word(w).unwrap();
        g.format(&split.prefix_for_element(&w, i, b).unwrap())
    }

    #[test]
    fn aligned_blocks() {
        let s = setup();
        assert_eq!(cut(&s, "a a^ a b b^ b", 1, false), "a a^ a");
        assert_eq!(cut(&s, "a a^ a b b^ b", 1, true), "a a^ a b b^ b");
    }

    #[test]
    fn merged_blocks() {
        let s = setup();
        assert_eq!(cut(&s, "a b b^ a b", 1, false), "a b b^ a");
        assert_eq!(cut(&s, "a b b^ a b", 1, true), "a b b^ a b");
    }

    #[test]
    fn leading_b_syllable() {
        let s = setup();
        // φ = b a : a₁ = e, b₁ = b, a₂ = a
        assert_eq!(cut(&s, "b a", 1, false), "ε");
        assert_eq!(cut(&s, "b a", 1, true), "b");
        assert_eq!(cut(&s, "b a", 2, false), "b a");
        assert_eq!(cut(&s, "b a", 2, true), "b a");
    }

    #[test]
    fn out_of_range() {
        let s = setup();
        let g = s.group().clone();
        let w = g.parse_word("a b").unwrap();
        assert!(matches!(
            s.prefix_for_element(&w, 2, false),
            Err(Error::SyllableOutOfRange { index: 2, count: 1 })
        ));
        assert!(s.prefix_for_element(&w, 0, false).is_err());
        assert!(s.prefix_for_element(&g.parse_word("a a^").unwrap(), 1, false).is_err());
    }

    #[test]
    fn needs_two_factors() {
        let g = GroupAlphabet::new(["x"]).unwrap();
        assert!(FreeProductSplit::standard(&g).is_err());
        let g = GroupAlphabet::new(["x", "y"]).unwrap();
        assert!(FreeProductSplit::new(&g, &[0, 2]).is_err());
        assert!(FreeProductSplit::new(&g, &[1]).is_err());
    }

    #[test]
    fn last_syllable_positions() {
        let s = setup();
        let g = s.group().clone();
        let idx = |w: &str| s.last_syllable_index(&s.syllables(&g.parse_word(w).unwrap()));
        assert_eq!(idx(""), None);
        assert_eq!(idx("a"), Some(SyllableIndex { index: 1, include_b: false }));
        assert_eq!(idx("b"), Some(SyllableIndex { index: 1, include_b: true }));
        assert_eq!(idx("b a"), Some(SyllableIndex { index: 2, include_b: false }));
        assert_eq!(idx("a b a^ b"), Some(SyllableIndex { index: 2, include_b: true }));
    }
}
