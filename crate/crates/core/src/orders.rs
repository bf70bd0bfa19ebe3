//! Order oracles: the lexicographic order on Z² and the relation a claimed
//! cone language induces on a free group.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use crate::automata::Automaton;
use crate::error::{Error, Result};
use crate::freegroup::{GroupAlphabet, GroupElement, ReducedLang};

/// A point of Z², written additively as `(n, m)` = `xⁿyᵐ`.
pub type Z2 = (i64, i64);

/// Result of comparing two elements under an order oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    /// Both or neither of `g⁻¹h`, `h⁻¹g` are positive.
    Inconsistent,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

/// A left-invariant order, given by its comparison procedure.
pub trait OrderOracle {
    type Element;
    fn compare(&self, g: &Self::Element, h: &Self::Element) -> Comparison;
}

/// The lexicographic order on Z²: `(n, m)` is positive iff `n ≥ 1`, or
/// `n = 0` and `m ≥ 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Z2Lex;

impl OrderOracle for Z2Lex {
    type Element = Z2;
    fn compare(&self, g: &Z2, h: &Z2) -> Comparison {
        z2_lex_compare(*g, *h).into()
    }
}

/// The relation `g < h ⟺ g⁻¹h ∈ P` for a claimed positive cone `P`.
#[derive(Debug, Clone)]
pub struct DerivedOrder {
    cone: ReducedLang,
}

impl DerivedOrder {
    pub fn new(cone: ReducedLang) -> Self {
        DerivedOrder { cone }
    }

    pub fn cone(&self) -> &ReducedLang {
        &self.cone
    }
}

impl OrderOracle for DerivedOrder {
    type Element = GroupElement;
    fn compare(&self, g: &GroupElement, h: &GroupElement) -> Comparison {
        derived_compare(&self.cone, g, h)
    }
}

fn z2_positive((n, m): Z2) -> bool {
    n >= 1 || (n == 0 && m >= 1)
}

pub fn z2_lex_compare(g: Z2, h: Z2) -> Ordering {
    let diff = (h.0 - g.0, h.1 - g.1);
    if diff == (0, 0) {
        Ordering::Equal
    } else if z2_positive(diff) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `{xⁿyᵐ : n ≥ 1, m ∈ Z} ∪ {yᵐ : m ≥ 1}` over `x x^ y y^`, with `yᵐ`
/// spelled as a run of `y` or of `y^`.
pub fn z2_cone_language() -> Automaton {
    let group = GroupAlphabet::new(["x", "y"]).expect("valid generators");
    let al = group.alphabet().clone();
    let (x, y, yi) = (0, 2, 3);
    let mut a = Automaton::new(al, 5);
    a.add_start(0);
    for q in 1..5 {
        a.add_accept(q);
    }
    a.add_transition(0, x, 1);
    a.add_transition(1, x, 1);
    a.add_transition(1, y, 2);
    a.add_transition(2, y, 2);
    a.add_transition(1, yi, 3);
    a.add_transition(3, yi, 3);
    a.add_transition(0, y, 4);
    a.add_transition(4, y, 4);
    a
}

/// Outcome of [`z2_bounded_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2Check {
    Pass,
    /// `point` is positive but unrepresented, or represented but not positive.
    Fail { point: Z2, represented: bool },
}

/// Lattice points `(n, m)` reached by accepted words of length at most `max_len`.
pub fn z2_image(group: &GroupAlphabet, a: &Automaton, max_len: usize) -> Result<HashSet<Z2>> {
    if group.rank() != 2 || a.alphabet().as_ref() != group.alphabet().as_ref() {
        return Err(Error::Precondition("expected an automaton over a rank 2 group alphabet".into()));
    }
    let (gx, gy) = (group.generators()[0], group.generators()[1]);
    let delta = |s| {
        let b = group.base(s);
        let sign = if group.is_generator(s) { 1 } else { -1 };
        if b == gx {
            (sign, 0)
        } else if b == gy {
            (0, sign)
        } else {
            unreachable!("rank 2")
        }
    };
    let a = a.remove_epsilons();
    let mut seen: HashSet<(usize, Z2)> = HashSet::new();
    let mut queue = VecDeque::new();
    for &q in a.starts() {
        if seen.insert((q, (0, 0))) {
            queue.push_back((q, (0i64, 0i64), 0usize));
        }
    }
    let mut image = HashSet::new();
    while let Some((q, p, len)) = queue.pop_front() {
        if a.is_accepting(q) {
            image.insert(p);
        }
        if len == max_len {
            continue;
        }
        for &(s, r) in a.out(q) {
            let (dn, dm) = delta(s);
            let next = (p.0 + dn, p.1 + dm);
            if seen.insert((r, next)) {
                queue.push_back((r, next, len + 1));
            }
        }
    }
    Ok(image)
}

/// Checks on the box `|n|, |m| ≤ radius` that `a` represents exactly the
/// positive points, using accepted words of length at most `2·radius + 2`.
///
/// The length bound suffices for languages shaped like [`z2_cone_language`]
/// and is only a heuristic otherwise. Points are checked by increasing
/// `|n| + |m|`, then by decreasing `(n, m)`.
pub fn z2_bounded_verify(a: &Automaton, radius: u32) -> Result<Z2Check> {
    let group = GroupAlphabet::from_alphabet(a.alphabet().clone())?;
    let image = z2_image(&group, a, 2 * radius as usize + 2)?;
    let r = i64::from(radius);
    let mut points: Vec<Z2> = (-r..=r).flat_map(|n| (-r..=r).map(move |m| (n, m))).collect();
    points.sort_by(|p, q| (p.0.abs() + p.1.abs()).cmp(&(q.0.abs() + q.1.abs())).then(q.cmp(p)));
    for point in points {
        let represented = image.contains(&point);
        if represented != z2_positive(point) {
            return Ok(Z2Check::Fail { point, represented });
        }
    }
    Ok(Z2Check::Pass)
}

/// Compares `g` and `h` under the relation induced by `cone`.
pub fn derived_compare(cone: &ReducedLang, g: &GroupElement, h: &GroupElement) -> Comparison {
    if g == h {
        return Comparison::Equal;
    }
    let group = cone.group();
    let up = cone.contains(&group.multiply(&group.elem_inverse(g), h));
    let down = cone.contains(&group.multiply(&group.elem_inverse(h), g));
    match (up, down) {
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        _ => Comparison::Inconsistent,
    }
}
