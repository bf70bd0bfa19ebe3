//! Graph products of groups given by vertex geodesic languages.
//!
//! A [`GraphPresentation`] fixes a finite simple graph and, for each vertex
//! `v`, a group alphabet `Y_v^±` with a prefix-closed automaton `Geo_v` of
//! geodesics. A word over the combined alphabet is geodesic iff every
//! projection `π_v(w)` lies in `Geo_v($ Geo_v)*`, where `π_v` keeps the
//! letters of `v`, erases those of neighbours and turns every other letter
//! into the marker `$`.

mod format;

use std::collections::VecDeque;
use std::sync::Arc;

use crate::automata::{concat, hom_image, hom_preimage, intersect, prefix_closure, star};
use crate::automata::{Alphabet, Automaton, Symbol, Word};
use crate::error::{Error, Result};
use crate::freegroup::GroupAlphabet;

pub use format::parse_graph;

/// The marker letter of projection words.
pub const MARKER: &str = "$";

/// One vertex group: its alphabet and an automaton of its geodesics.
#[derive(Debug, Clone)]
pub struct VertexGroup {
    pub group: GroupAlphabet,
    pub geodesics: Automaton,
}

#[derive(Debug, Clone)]
pub struct GraphPresentation {
    names: Vec<String>,
    adjacent: Vec<Vec<bool>>,
    vertices: Vec<VertexGroup>,
    // vertex geodesics are exactly the reduced words
    free_vertex: Vec<bool>,
    group: GroupAlphabet,
    owner: Vec<usize>,
    local: Vec<Symbol>,
    projection: Vec<Arc<Alphabet>>,
    blocks: Vec<Automaton>,
}

/// Output of [`GraphPresentation::witness_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    /// `w x y x⁻¹ w⁻¹`
    pub first: Word,
    /// `w x y⁻¹ x⁻¹ w⁻¹`
    pub second: Word,
    /// Orientation actually used: `(t, u, x, y)` after any swap.
    pub t: usize,
    pub u: usize,
    pub x: Symbol,
    pub y: Symbol,
    pub swapped: bool,
    pub first_geodesic: bool,
    pub second_geodesic: bool,
}

/// Geodesics of `Z = ⟨a⟩`: runs of `a` or of `a^`.
pub fn raag_vertex_geodesics(generator: &str) -> Result<VertexGroup> {
    let group = GroupAlphabet::new([generator])?;
    let mut a = Automaton::new(group.alphabet().clone(), 3);
    a.add_start(0);
    for q in 0..3 {
        a.add_accept(q);
    }
    let (g, gi) = (0, 1);
    a.add_transition(0, g, 1);
    a.add_transition(1, g, 1);
    a.add_transition(0, gi, 2);
    a.add_transition(2, gi, 2);
    Ok(VertexGroup { group, geodesics: a })
}

impl GraphPresentation {
    /// Validates the graph and vertex data and builds the projection machinery.
    pub fn new(names: Vec<String>, edges: &[(String, String)], vertices: Vec<VertexGroup>) -> Result<Self> {
        let n = names.len();
        if vertices.len() != n {
            return Err(Error::Graph(format!("{} vertices but {} vertex groups", n, vertices.len())));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::Graph(format!("duplicate vertex `{name}`")));
            }
        }
        let index = |v: &str| {
            names
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let mut adjacent = vec![vec![false; n]; n];
        for (s, t) in edges {
            let (i, j) = (index(s)?, index(t)?);
            if i == j {
                return Err(Error::Graph(format!("loop at `{s}`")));
            }
            if adjacent[i][j] {
                return Err(Error::Graph(format!("duplicate edge `{s}`-`{t}`")));
            }
            adjacent[i][j] = true;
            adjacent[j][i] = true;
        }

        let mut symbols = Vec::new();
        let mut owner = Vec::new();
        let mut local = Vec::new();
        let mut projection = Vec::new();
        let mut blocks = Vec::new();
        let mut free_vertex = Vec::new();
        for (v, vg) in vertices.iter().enumerate() {
            let name = &names[v];
            let al = vg.group.alphabet();
            if vg.geodesics.alphabet().as_ref() != al.as_ref() {
                return Err(Error::Graph(format!("geodesics of `{name}` use a different alphabet")));
            }
            for (s, sym) in al.symbols().iter().enumerate() {
                if sym == MARKER {
                    return Err(Error::Graph(format!("`{MARKER}` is reserved (vertex `{name}`)")));
                }
                if symbols.contains(sym) {
                    return Err(Error::Graph(format!("symbol `{sym}` used by two vertices")));
                }
                symbols.push(sym.clone());
                owner.push(v);
                local.push(s);
            }
            let geo = &vg.geodesics;
            if !geo.accepts(&[]) {
                return Err(Error::Graph(format!("geodesics of `{name}` must contain ε")));
            }
            if !prefix_closure(geo).equivalent(geo)? {
                return Err(Error::Graph(format!("geodesics of `{name}` are not prefix-closed")));
            }
            free_vertex.push(geo.equivalent(&vg.group.reduced_universe())?);

            let mut proj_symbols = al.symbols().to_vec();
            proj_symbols.push(MARKER.to_string());
            let proj = Arc::new(Alphabet::new(proj_symbols)?);
            let lift: Vec<Word> = (0..al.len()).map(|s| Word::from(vec![s])).collect();
            let geo_p = hom_image(geo, proj.clone(), &lift)?;
            let marker = Automaton::from_word(proj.clone(), &[al.len()]);
            let block = concat(&geo_p, &star(&concat(&marker, &geo_p)?))?.minimized();
            projection.push(proj);
            blocks.push(block);
        }
        let group = GroupAlphabet::from_alphabet(Arc::new(Alphabet::new(symbols)?))?;
        Ok(GraphPresentation {
            names,
            adjacent,
            vertices,
            free_vertex,
            group,
            owner,
            local,
            projection,
            blocks,
        })
    }

    /// A right-angled Artin group: one infinite cyclic vertex group per vertex,
    /// generated by the given name.
    pub fn raag(names: &[&str], generators: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let vertices = generators
            .iter()
            .map(|g| raag_vertex_geodesics(g))
            .collect::<Result<Vec<_>>>()?;
        let edges: Vec<(String, String)> = edges.iter().map(|(s, t)| (s.to_string(), t.to_string())).collect();
        GraphPresentation::new(names.iter().map(|s| s.to_string()).collect(), &edges, vertices)
    }

    /// The combined group alphabet `⊔_v Y_v^±`.
    pub fn group(&self) -> &GroupAlphabet {
        &self.group
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_group(&self, v: usize) -> &VertexGroup {
        &self.vertices[v]
    }

    pub fn is_adjacent(&self, v: usize, w: usize) -> bool {
        self.adjacent[v][w]
    }

    /// The vertex whose alphabet contains `s`.
    pub fn owner(&self, s: Symbol) -> usize {
        self.owner[s]
    }

    /// `Y_v^± ∪ {$}`, with `$` last.
    pub fn projection_alphabet(&self, v: usize) -> &Arc<Alphabet> {
        &self.projection[v]
    }

    /// Edge-count distance, `None` when disconnected.
    pub fn distance(&self, s: usize, t: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                return Some(dist[v]);
            }
            for w in 0..self.vertex_count() {
                if self.adjacent[v][w] && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn graph_distance(&self, s: &str, t: &str) -> Result<Option<usize>> {
        Ok(self.distance(self.vertex(s)?, self.vertex(t)?))
    }

    /// Largest distance between two vertices; `None` (infinite) when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = 0;
        for s in 0..n {
            for t in s + 1..n {
                best = best.max(self.distance(s, t)?);
            }
        }
        Some(best)
    }

    fn check_word(&self, w: &[Symbol]) -> Result<()> {
        match w.iter().find(|&&s| s >= self.owner.len()) {
            Some(s) => Err(Error::UnknownSymbol(format!("#{s}"))),
            None => Ok(()),
        }
    }

    fn project_letter(&self, v: usize, s: Symbol) -> Option<Symbol> {
        let o = self.owner[s];
        if o == v {
            Some(self.local[s])
        } else if self.adjacent[v][o] {
            None
        } else {
            Some(self.vertices[v].group.alphabet().len())
        }
    }

    /// `π_v(w)` over [`projection_alphabet`](Self::projection_alphabet).
    pub fn pi_projection(&self, v: usize, w: &[Symbol]) -> Result<Word> {
        self.check_word(w)?;
        Ok(w.iter().filter_map(|&s| self.project_letter(v, s)).collect())
    }

    /// Whether every projection of `w` factors as `Geo_v($ Geo_v)*`.
    /// Words with symbols outside the combined alphabet are not geodesic.
    pub fn is_geodesic(&self, w: &[Symbol]) -> bool {
        if self.check_word(w).is_err() {
            return false;
        }
        (0..self.vertex_count()).all(|v| {
            let p: Vec<Symbol> = w.iter().filter_map(|&s| self.project_letter(v, s)).collect();
            self.blocks[v].accepts(&p)
        })
    }

    /// Automaton of all geodesic words: the intersection over `v` of the
    /// preimages of `Geo_v($ Geo_v)*` under `π_v`.
    pub fn geo_automaton(&self) -> Result<Automaton> {
        let al = self.group.alphabet().clone();
        let mut out = Automaton::universal(al.clone());
        for v in 0..self.vertex_count() {
            let f: Vec<Word> = (0..al.len())
                .map(|s| self.project_letter(v, s).into_iter().collect())
                .collect();
            out = intersect(&out, &hom_preimage(&self.blocks[v], al.clone(), &f)?)?.minimized();
        }
        Ok(out)
    }

    /// The pair `w x y x⁻¹ w⁻¹`, `w x y⁻¹ x⁻¹ w⁻¹` for vertices `t`, `u` at
    /// distance at least 3 and letters `x ∈ Y_t^±`, `y ∈ Y_u^±`.
    ///
    /// If `π_t(w)` ends in a letter of `t`, the roles of `(t, x)` and `(u, y)`
    /// are exchanged first, so that `x` cannot interact with the tail of `w`.
    pub fn witness_pair(&self, w: &[Symbol], t: usize, u: usize, x: Symbol, y: Symbol) -> Result<WitnessPair> {
        self.check_word(w)?;
        self.check_word(&[x, y])?;
        if t >= self.vertex_count() || u >= self.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{}", t.max(u))));
        }
        if self.distance(t, u).is_some_and(|d| d < 3) {
            return Err(Error::Precondition(format!(
                "`{}` and `{}` are at distance less than 3",
                self.names[t], self.names[u]
            )));
        }
        for (letter, v) in [(x, t), (y, u)] {
            if self.owner[letter] != v {
                return Err(Error::Precondition(format!(
                    "`{}` is not a letter of `{}`",
                    self.group.alphabet().name(letter),
                    self.names[v]
                )));
            }
            if !self.vertices[v].geodesics.accepts(&[self.local[letter]]) {
                return Err(Error::Precondition(format!(
                    "`{}` is not a nontrivial geodesic letter",
                    self.group.alphabet().name(letter)
                )));
            }
        }
        if !self.is_geodesic(w) {
            return Err(Error::Precondition(format!("`{}` is not geodesic", self.group.format(w))));
        }

        let pt = self.pi_projection(t, w)?;
        let marker = self.vertices[t].group.alphabet().len();
        let swapped = pt.last().is_some_and(|&s| s != marker);
        let (t, u, x, y) = if swapped { (u, t, y, x) } else { (t, u, x, y) };

        let winv = self.group.word_inverse(w);
        let (xi, yi) = (self.group.inverse(x), self.group.inverse(y));
        let build = |mid: Symbol| -> Word {
            let mut out = w.to_vec();
            out.extend([x, mid, xi]);
            out.extend_from_slice(&winv);
            Word::from(out)
        };
        let first = build(y);
        let second = build(yi);
        Ok(WitnessPair {
            first_geodesic: self.is_geodesic(&first),
            second_geodesic: self.is_geodesic(&second),
            first,
            second,
            t,
            u,
            x,
            y,
            swapped,
        })
    }

    /// [`witness_pair`](Self::witness_pair) with vertices and letters given by name.
    pub fn witness_pair_named(&self, w: &[Symbol], t: &str, u: &str, x: &str, y: &str) -> Result<WitnessPair> {
        let al = self.group.alphabet();
        self.witness_pair(w, self.vertex(t)?, self.vertex(u)?, al.symbol(x)?, al.symbol(y)?)
    }

    /// Whether every vertex group is free with its reduced words as geodesics
    /// (right-angled Artin groups, in particular).
    pub fn has_free_vertices(&self) -> bool {
        self.free_vertex.iter().all(|&b| b)
    }

    /// Shortens `w` by cancelling pairs `s … s⁻¹` whose in-between letters all
    /// commute with `s`, until no such pair remains. When every vertex group
    /// is free this solves the word problem: the result is empty iff `w`
    /// represents the identity. `None` otherwise.
    pub fn cancel_commuting(&self, w: &[Symbol]) -> Result<Option<Word>> {
        self.check_word(w)?;
        if !self.has_free_vertices() {
            return Ok(None);
        }
        let mut cur = w.to_vec();
        'outer: loop {
            for j in 0..cur.len() {
                let v = self.owner[cur[j]];
                let want = self.group.inverse(cur[j]);
                for i in (0..j).rev() {
                    if cur[i] == want {
                        cur.remove(j);
                        cur.remove(i);
                        continue 'outer;
                    }
                    if !self.adjacent[v][self.owner[cur[i]]] {
                        break;
                    }
                }
            }
            return Ok(Some(Word::from(cur)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn p4() -> GraphPresentation {
        GraphPresentation::raag(
            &["v1", "v2", "v3", "v4"],
            &["a1", "a2", "a3", "a4"],
            &[("v1", "v2"), ("v2", "v3"), ("v3", "v4")],
        )
        .unwrap()
    }

    fn k3() -> GraphPresentation {
        GraphPresentation::raag(&["u", "v", "w"], &["a", "b", "c"], &[("u", "v"), ("v", "w"), ("u", "w")]).unwrap()
    }

    fn word(g: &GraphPresentation, w: &str) -> Word {
        g.group().parse_word(w).unwrap()
    }

    fn proj(g: &GraphPresentation, v: &str, w: &str) -> String {
        let v = g.vertex(v).unwrap();
        g.projection_alphabet(v).format_word(&g.pi_projection(v, &word(g, w)).unwrap())
    }

    #[test]
    fn distances() {
        let g = p4();
        assert_eq!(g.graph_distance("v1", "v4").unwrap(), Some(3));
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(k3().diameter(), Some(1));
        let two = GraphPresentation::raag(&["s", "t"], &["a", "b"], &[]).unwrap();
        assert_eq!(two.diameter(), None);
        assert!(g.graph_distance("v1", "v9").is_err());
    }

    #[test]
    fn projections() {
        let g = p4();
        assert_eq!(proj(&g, "v1", "a1 a2 a3"), "a1 $");
        assert_eq!(proj(&g, "v2", "a2 a1 a2^"), "a2 a2^");
        assert_eq!(proj(&g, "v4", "a1 a3 a1^"), "$ $");
    }

    #[test]
    fn geodesic_examples() {
        let g = p4();
        assert!(g.is_geodesic(&word(&g, "a1 a3 a1^")));
        assert!(!g.is_geodesic(&word(&g, "a2 a1 a2^")));
        assert!(g.is_geodesic(&[]));
        let geo = g.geo_automaton().unwrap();
        assert!(geo.accepts(&word(&g, "a1 a3 a1^")));
        assert!(!geo.accepts(&word(&g, "a2 a1 a2^")));
        for s in 0..g.group().alphabet().len() {
            assert!(geo.accepts(&[s]));
        }
    }

    #[test]
    fn raag_vertex_language() {
        let vg = raag_vertex_geodesics("a").unwrap();
        for w in ["", "a a a", "a^ a^"] {
            assert!(vg.geodesics.accepts_str(w).unwrap());
        }
        assert!(!vg.geodesics.accepts_str("a a^").unwrap());
        assert!(prefix_closure(&vg.geodesics).equivalent(&vg.geodesics).unwrap());
    }

    #[test]
    fn witness_examples() {
        let g = p4();
        let p = g.witness_pair_named(&word(&g, "a2"), "v1", "v4", "a1", "a4").unwrap();
        assert_eq!(g.group().format(&p.first), "a2 a1 a4 a1^ a2^");
        assert_eq!(g.group().format(&p.second), "a2 a1 a4^ a1^ a2^");
        assert!(p.first_geodesic && p.second_geodesic && !p.swapped);

        let p = g.witness_pair_named(&[], "v1", "v4", "a1", "a4").unwrap();
        assert_eq!(g.group().format(&p.first), "a1 a4 a1^");
        assert_eq!(g.group().format(&p.second), "a1 a4^ a1^");
        assert!(p.first_geodesic && p.second_geodesic);

        let p = g.witness_pair_named(&word(&g, "a1"), "v1", "v4", "a1", "a4").unwrap();
        assert!(p.swapped);
        assert_eq!(g.group().format(&p.first), "a1 a4 a1 a4^ a1^");
        assert!(p.first_geodesic && p.second_geodesic);
    }

    #[test]
    fn witness_preconditions() {
        let g = k3();
        let e = g.witness_pair_named(&[], "u", "w", "a", "c").unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
        let g = p4();
        assert!(g.witness_pair_named(&word(&g, "a2 a2^"), "v1", "v4", "a1", "a4").is_err());
        assert!(g.witness_pair_named(&[], "v1", "v4", "a2", "a4").is_err());
        assert!(g.witness_pair_named(&[], "v1", "v3", "a1", "a3").is_err());
    }

    #[test]
    fn validation() {
        let vg = |n: &str| raag_vertex_geodesics(n).unwrap();
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let e = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert!(GraphPresentation::new(s(&["a", "b"]), &[e("a", "a")], vec![vg("x"), vg("y")]).is_err());
        assert!(GraphPresentation::new(s(&["a", "b"]), &[e("a", "b"), e("b", "a")], vec![vg("x"), vg("y")]).is_err());
        assert!(GraphPresentation::new(s(&["a", "b"]), &[e("a", "c")], vec![vg("x"), vg("y")]).is_err());
        assert!(GraphPresentation::new(s(&["a", "b"]), &[], vec![vg("x"), vg("x")]).is_err());
        assert!(GraphPresentation::new(s(&["a", "b"]), &[], vec![vg("x"), vg("$")]).is_err());

        let mut not_closed = vg("y");
        not_closed.geodesics = Automaton::from_word(not_closed.group.alphabet().clone(), &[0, 0]);
        not_closed.geodesics.add_accept(0);
        assert!(GraphPresentation::new(s(&["a", "b"]), &[], vec![vg("x"), not_closed]).is_err());
        let mut no_empty = vg("y");
        no_empty.geodesics = Automaton::from_word(no_empty.group.alphabet().clone(), &[0]);
        assert!(GraphPresentation::new(s(&["a", "b"]), &[], vec![vg("x"), no_empty]).is_err());
    }

    #[test]
    fn cancellation_in_raags() {
        let g = p4();
        let c = |w: &str| g.group().format(&g.cancel_commuting(&word(&g, w)).unwrap().unwrap());
        assert_eq!(c("a2 a1 a2^"), "a1");
        assert_eq!(c("a1 a3 a1^"), "a1 a3 a1^");
        assert_eq!(c("a1 a4 a1^ a1 a4^ a1^"), "ε");
    }

    /// Re-derives the case analysis behind the witness pair: every projection
    /// of `w x y x⁻¹ w⁻¹` beyond `π_t(w)` and `π_t(w)⁻¹` has a fixed shape.
    #[test]
    fn witness_projection_shapes() {
        let g = p4();
        let geo = g.geo_automaton().unwrap();
        let (v1, v4) = (0, 3);
        let a1 = g.group().alphabet().symbol("a1").unwrap();
        let a4 = g.group().alphabet().symbol("a4").unwrap();
        for w in geo.enumerate(5) {
            let p = g.witness_pair(&w, v1, v4, a1, a4).unwrap();
            let (t, u) = (p.t, p.u);
            let mid_t = g.pi_projection(t, &[p.x, p.y, g.group().inverse(p.x)]).unwrap();
            let mid_u = g.pi_projection(u, &[p.x, p.y, g.group().inverse(p.x)]).unwrap();
            let dollar_t = g.vertex_group(t).group.alphabet().len();
            let dollar_u = g.vertex_group(u).group.alphabet().len();
            assert_eq!(&mid_t[..], &[g.local[p.x], dollar_t, g.local[g.group().inverse(p.x)]]);
            assert_eq!(&mid_u[..], &[dollar_u, g.local[p.y], dollar_u]);
            for v in 0..4 {
                if v != t && v != u {
                    let mid = g.pi_projection(v, &[p.x, p.y, g.group().inverse(p.x)]).unwrap();
                    let dollar = g.vertex_group(v).group.alphabet().len();
                    assert!((1..=3).contains(&mid.len()) && mid.iter().all(|&s| s == dollar), "{mid:?}");
                }
            }
            assert!(p.first_geodesic && p.second_geodesic);
            let prod = [&p.first[..], &g.group().word_inverse(&p.second)[..]].concat();
            assert!(!g.cancel_commuting(&prod).unwrap().unwrap().is_empty());
            let cat = [&p.first[..], &p.second[..]].concat();
            assert!(g.cancel_commuting(&cat).unwrap().unwrap().is_empty());
        }
    }

    proptest! {
        #[test]
        fn projection_is_a_morphism(
            w1 in proptest::collection::vec(0usize..8, 0..8),
            w2 in proptest::collection::vec(0usize..8, 0..8),
            v in 0usize..4,
        ) {
            let g = p4();
            let whole = g.pi_projection(v, &[&w1[..], &w2[..]].concat()).unwrap();
            let parts = g.pi_projection(v, &w1).unwrap().concat(&g.pi_projection(v, &w2).unwrap());
            prop_assert_eq!(whole, parts);
        }
    }
}
