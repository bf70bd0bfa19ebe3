//! Graph files.
//!
//! ```text
//! vertices: v1 v2 v3 v4
//! edges: v1 v2; v2 v3; v3 v4
//! gens v1: a1
//! geo v1: raag
//! geo v2: file geo_v2.aut
//! ```
//!
//! `geo v: raag` takes the reduced words over `v`'s generators, which for a
//! single generator are the geodesics of Z. `geo v: file PATH` loads an
//! automaton over exactly `v`'s generators and their inverses; relative paths
//! are resolved against `base`.

use std::path::Path;
use std::sync::Arc;

use super::{raag_vertex_geodesics, GraphPresentation, VertexGroup};
use crate::automata::{parse_automaton, Alphabet};
use crate::error::{Error, Result};
use crate::freegroup::GroupAlphabet;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

enum Geo {
    Raag,
    File(String),
}

pub fn parse_graph(text: &str, base: Option<&Path>) -> Result<GraphPresentation> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Option<Vec<(String, String)>> = None;
    let mut gens: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut geos: Vec<(usize, String, Geo)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| perr(line_no, format!("expected `key: value`, got `{line}`")))?;
        let key: Vec<&str> = key.split_whitespace().collect();
        let rest = rest.trim();
        match key[..] {
            ["vertices"] => {
                if vertices.is_some() {
                    return Err(perr(line_no, "duplicate `vertices:`"));
                }
                vertices = Some(rest.split_whitespace().map(String::from).collect());
            }
            ["edges"] => {
                if edges.is_some() {
                    return Err(perr(line_no, "duplicate `edges:`"));
                }
                let mut list = Vec::new();
                for e in rest.split(';').map(str::trim).filter(|e| !e.is_empty()) {
                    match e.split_whitespace().collect::<Vec<_>>()[..] {
                        [s, t] => list.push((s.to_string(), t.to_string())),
                        _ => return Err(perr(line_no, format!("edge `{e}` must name two vertices"))),
                    }
                }
                edges = Some(list);
            }
            ["gens", v] => {
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(perr(line_no, format!("no generators for `{v}`")));
                }
                gens.push((line_no, v.to_string(), names));
            }
            ["geo", v] => {
                let geo = match rest.split_once(char::is_whitespace) {
                    None if rest == "raag" => Geo::Raag,
                    Some(("file", path)) => Geo::File(path.trim().to_string()),
                    _ => return Err(perr(line_no, format!("expected `raag` or `file PATH`, got `{rest}`"))),
                };
                geos.push((line_no, v.to_string(), geo));
            }
            _ => return Err(perr(line_no, format!("unknown key `{}`", key.join(" ")))),
        }
    }

    let names = vertices.ok_or_else(|| perr(0, "missing `vertices:`"))?;
    let edges = edges.unwrap_or_default();
    let lookup = |line: usize, v: &str| {
        names
            .iter()
            .position(|n| n == v)
            .ok_or_else(|| perr(line, format!("unknown vertex `{v}`")))
    };
    let mut vertex_gens: Vec<Option<Vec<String>>> = vec![None; names.len()];
    for (line, v, g) in gens {
        let i = lookup(line, &v)?;
        if vertex_gens[i].replace(g).is_some() {
            return Err(perr(line, format!("duplicate `gens {v}:`")));
        }
    }
    let mut vertex_geo: Vec<Option<(usize, Geo)>> = (0..names.len()).map(|_| None).collect();
    for (line, v, g) in geos {
        let i = lookup(line, &v)?;
        if vertex_geo[i].replace((line, g)).is_some() {
            return Err(perr(line, format!("duplicate `geo {v}:`")));
        }
    }

    let mut groups = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let gens = vertex_gens[i]
            .take()
            .ok_or_else(|| perr(0, format!("missing `gens {name}:`")))?;
        let (line, geo) = vertex_geo[i]
            .take()
            .ok_or_else(|| perr(0, format!("missing `geo {name}:`")))?;
        let vg = match geo {
            Geo::Raag if gens.len() == 1 => raag_vertex_geodesics(&gens[0]).map_err(|e| perr(line, e.to_string()))?,
            Geo::Raag => {
                let group = GroupAlphabet::new(gens).map_err(|e| perr(line, e.to_string()))?;
                let geodesics = group.reduced_universe();
                VertexGroup { group, geodesics }
            }
            Geo::File(path) => {
                let full = match base {
                    Some(dir) => dir.join(&path),
                    None => Path::new(&path).to_path_buf(),
                };
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| perr(line, format!("{}: {e}", full.display())))?;
                let aut = parse_automaton(&text).map_err(|e| perr(line, format!("{}: {e}", full.display())))?;
                let group = GroupAlphabet::new(gens).map_err(|e| perr(line, e.to_string()))?;
                let mut want: Vec<&String> = group.alphabet().symbols().iter().collect();
                let mut got: Vec<&String> = aut.alphabet().symbols().iter().collect();
                want.sort();
                got.sort();
                if want != got {
                    return Err(perr(line, format!("alphabet of {} does not match `gens {name}:`", full.display())));
                }
                // keep the file's symbol order
                let group = GroupAlphabet::from_alphabet(Arc::new(Alphabet::clone(aut.alphabet())))
                    .map_err(|e| perr(line, e.to_string()))?;
                VertexGroup { group, geodesics: aut }
            }
        };
        groups.push(vg);
    }
    GraphPresentation::new(names, &edges, groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P4: &str = "vertices: v1 v2 v3 v4
edges: v1 v2; v2 v3; v3 v4
gens v1: a1
gens v2: a2
gens v3: a3
gens v4: a4
geo v1: raag   # geodesics of Z
geo v2: raag
geo v3: raag
geo v4: raag
";

    #[test]
    fn parses_p4() {
        let g = parse_graph(P4, None).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(g.group().alphabet().symbols().join(" "), "a1 a1^ a2 a2^ a3 a3^ a4 a4^");
    }

    #[test]
    fn load_errors() {
        let bad = [
            P4.replace("v3 v4\n", "v3 v9\n"),
            P4.replace("v3 v4\n", "v3 v4; v4 v3\n"),
            P4.replace("v3 v4\n", "v3 v4; v4 v4\n"),
            P4.replace("gens v4: a4", "gens v4: a1"),
            P4.replace("geo v4: raag\n", ""),
            P4.replace("geo v4: raag", "geo v4: magic"),
            P4.replace("geo v4: raag", "geo v4: file /nonexistent/geo.aut"),
            P4.replace("vertices", "verts"),
            format!("{P4}gens v1: b\n"),
        ];
        for text in &bad {
            assert!(parse_graph(text, None).is_err(), "{text}");
        }
    }

    #[test]
    fn geodesics_from_file() {
        let dir = std::env::temp_dir().join(format!("graphprod-format-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("z.aut"),
            "alphabet: b^ b\nstates: 3\nstart: 0\naccept: 0 1 2\ntrans: 0 b 1\ntrans: 1 b 1\ntrans: 0 b^ 2\ntrans: 2 b^ 2\n",
        )
        .unwrap();
        let text = "vertices: u v\nedges:\ngens u: a\ngens v: b\ngeo u: raag\ngeo v: file z.aut\n";
        let g = parse_graph(text, Some(&dir)).unwrap();
        assert!(g.is_geodesic(&g.group().parse_word("a b a^").unwrap()));
        assert!(g.has_free_vertices());
        let wrong = "vertices: u v\nedges:\ngens u: a\ngens v: c\ngeo u: raag\ngeo v: file z.aut\n";
        assert!(parse_graph(wrong, Some(&dir)).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
