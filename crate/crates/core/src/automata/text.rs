//! Line-oriented automaton files.
//!
//! ```text
//! alphabet: x x^ y y^
//! states: 4
//! start: 0
//! accept: 3
//! trans: 0 x 1
//! trans: 1 y 3
//! eps: 1 2
//! ```
//!
//! `#` starts a comment. `start:` and `accept:` take any number of state
//! indices and may repeat.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{Alphabet, Automaton, StateId};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

enum Entry<'a> {
    Start(Vec<&'a str>),
    Accept(Vec<&'a str>),
    Trans(Vec<&'a str>),
    Eps(Vec<&'a str>),
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut entries: Vec<(usize, Entry<'_>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| perr(line_no, format!("expected `key: value`, got `{line}`")))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(perr(line_no, "duplicate `alphabet:`"));
                }
                alphabet = Some(Alphabet::new(fields.iter().copied()).map_err(|e| perr(line_no, e.to_string()))?);
            }
            "states" => {
                if states.is_some() {
                    return Err(perr(line_no, "duplicate `states:`"));
                }
                let [n] = fields[..] else {
                    return Err(perr(line_no, "`states:` takes one count"));
                };
                states = Some(n.parse().map_err(|_| perr(line_no, format!("bad state count `{n}`")))?);
            }
            "start" => entries.push((line_no, Entry::Start(fields))),
            "accept" => entries.push((line_no, Entry::Accept(fields))),
            "trans" => entries.push((line_no, Entry::Trans(fields))),
            "eps" => entries.push((line_no, Entry::Eps(fields))),
            other => return Err(perr(line_no, format!("unknown key `{other}`"))),
        }
    }

    let alphabet = Arc::new(alphabet.ok_or_else(|| perr(0, "missing `alphabet:`"))?);
    let count = states.ok_or_else(|| perr(0, "missing `states:`"))?;
    let state = |line: usize, tok: &str| -> Result<StateId> {
        let q: StateId = tok
            .parse()
            .map_err(|_| perr(line, format!("bad state index `{tok}`")))?;
        if q >= count {
            return Err(perr(line, format!("state {q} out of range (states: {count})")));
        }
        Ok(q)
    };

    let mut a = Automaton::new(alphabet.clone(), count);
    for (line, entry) in entries {
        match entry {
            Entry::Start(qs) => {
                for q in qs {
                    a.add_start(state(line, q)?);
                }
            }
            Entry::Accept(qs) => {
                for q in qs {
                    a.add_accept(state(line, q)?);
                }
            }
            Entry::Trans(f) => {
                let [p, s, q] = f[..] else {
                    return Err(perr(line, "`trans:` takes `from symbol to`"));
                };
                let sym = alphabet
                    .index_of(s)
                    .ok_or_else(|| perr(line, format!("symbol `{s}` not declared in alphabet")))?;
                a.add_transition(state(line, p)?, sym, state(line, q)?);
            }
            Entry::Eps(f) => {
                let [p, q] = f[..] else {
                    return Err(perr(line, "`eps:` takes `from to`"));
                };
                let (p, q) = (state(line, p)?, state(line, q)?);
                if p != q {
                    a.add_epsilon(p, q);
                }
            }
        }
    }
    Ok(a)
}

/// Canonical text form: sorted, one transition per line.
pub fn write_automaton(a: &Automaton) -> String {
    let mut out = String::new();
    let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "alphabet: {}", a.alphabet().symbols().join(" "));
    let _ = writeln!(out, "states: {}", a.state_count());
    let starts = format!("start: {}", join(&mut a.starts().iter().map(|q| q.to_string())));
    let accepts = format!("accept: {}", join(&mut a.accepts_set().iter().map(|q| q.to_string())));
    let _ = writeln!(out, "{}", starts.trim_end());
    let _ = writeln!(out, "{}", accepts.trim_end());
    for (p, s, q) in a.transitions() {
        let _ = writeln!(out, "trans: {p} {} {q}", a.alphabet().name(s));
    }
    for (p, q) in a.epsilons() {
        let _ = writeln!(out, "eps: {p} {q}");
    }
    out
}
