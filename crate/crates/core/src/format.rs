//! Text, JSON and DOT formats for posets and lattices.
//!
//! ```text
//! # the V shape: two minimal points under one maximal point
//! poset 3
//! 0 < 2
//! 1 < 2
//! ```
//!
//! Lattice files use a `lattice <n>` header and may add `bottom <i>` and
//! `top <j>` lines. JSON input is recognised by a leading `{`.

use serde::{Deserialize, Serialize};

use crate::duality::spec_poset;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub size: usize,
    pub less_than: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub kind: String,
    pub size: usize,
    pub less_than: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
}

/// A parsed input file or fixture.
#[derive(Clone, Debug)]
pub enum Input {
    Poset(Poset),
    Lattice(Lattice),
}

impl Input {
    /// The poset itself, or the spectrum of a distributive lattice.
    pub fn into_poset(self) -> Result<Poset> {
        match self {
            Input::Poset(p) => Ok(p),
            Input::Lattice(l) if l.is_distributive() => Ok(spec_poset(&l)?.poset),
            Input::Lattice(_) => Err(Error::Precondition(
                "a non-distributive lattice is not the open-set lattice of any poset".into(),
            )),
        }
    }
}

/// Lines with comments stripped, paired with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
}

fn parse_index(line: usize, token: &str) -> Result<usize> {
    token
        .trim()
        .parse()
        .map_err(|_| Error::malformed_at(line, format!("expected a point index, found `{}`", token.trim())))
}

fn parse_header(lines: &mut dyn Iterator<Item = (usize, &str)>, keyword: &str) -> Result<usize> {
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::malformed_at(1, format!("missing `{keyword} <n>` header")))?;
    let mut words = header.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(Error::malformed_at(line, format!("expected `{keyword} <n>` header")));
    }
    let size = words
        .next()
        .ok_or_else(|| Error::malformed_at(line, "header is missing the size"))
        .and_then(|w| parse_index(line, w))?;
    if let Some(extra) = words.next() {
        return Err(Error::malformed_at(
            line,
            format!("unexpected `{extra}` after the size"),
        ));
    }
    Ok(size)
}

fn parse_relation(line: usize, text: &str, size: usize) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once('<')
        .ok_or_else(|| Error::malformed_at(line, format!("expected `i < j`, found `{text}`")))?;
    let (a, b) = (parse_index(line, a)?, parse_index(line, b)?);
    if a >= size || b >= size {
        return Err(Error::malformed_at(line, format!("point out of range for size {size}")));
    }
    Ok((a, b))
}

/// Reattaches a line number to structural errors found after parsing.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Malformed { line: None, message } => Error::malformed_at(line, message),
        other => other,
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::malformed_at(e.line(), format!("invalid JSON: {e}"))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    if text.trim_start().starts_with('{') {
        let json: PosetJson = serde_json::from_str(text).map_err(json_error)?;
        if json.kind.as_deref().is_some_and(|k| k != "poset") {
            return Err(Error::malformed("expected `\"kind\": \"poset\"`"));
        }
        return Poset::new(json.size, json.less_than);
    }
    let mut lines = content_lines(text);
    let size = parse_header(&mut lines, "poset")?;
    let mut pairs = Vec::new();
    let mut last = 1;
    for (line, body) in lines {
        pairs.push(parse_relation(line, body, size)?);
        last = line;
    }
    Poset::new(size, pairs).map_err(|e| at_line(last, e))
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    if text.trim_start().starts_with('{') {
        let json: LatticeJson = serde_json::from_str(text).map_err(json_error)?;
        if json.kind != "lattice" {
            return Err(Error::malformed("expected `\"kind\": \"lattice\"`"));
        }
        return Lattice::with_bounds(json.size, json.less_than, json.bottom, json.top);
    }
    let mut lines = content_lines(text);
    let size = parse_header(&mut lines, "lattice")?;
    let (mut pairs, mut bottom, mut top) = (Vec::new(), None, None);
    let mut last = 1;
    for (line, body) in lines {
        last = line;
        let mut words = body.split_whitespace();
        let slot = match words.next() {
            Some("bottom") => &mut bottom,
            Some("top") => &mut top,
            _ => {
                pairs.push(parse_relation(line, body, size)?);
                continue;
            }
        };
        let value = match (words.next(), words.next()) {
            (Some(w), None) => parse_index(line, w)?,
            _ => return Err(Error::malformed_at(line, "expected a single element index")),
        };
        if value >= size {
            return Err(Error::malformed_at(
                line,
                format!("element out of range for size {size}"),
            ));
        }
        *slot = Some(value);
    }
    Lattice::with_bounds(size, pairs, bottom, top).map_err(|e| at_line(last, e))
}

/// Parses either kind of file, choosing by header or JSON `kind`.
pub fn parse_input(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    let is_lattice = if trimmed.starts_with('{') {
        serde_json::from_str::<serde_json::Value>(text)
            .map_err(json_error)?
            .get("kind")
            .and_then(|k| k.as_str())
            == Some("lattice")
    } else {
        content_lines(text)
            .next()
            .is_some_and(|(_, header)| header.split_whitespace().next() == Some("lattice"))
    };
    if is_lattice {
        parse_lattice(text).map(Input::Lattice)
    } else {
        parse_poset(text).map(Input::Poset)
    }
}

/// Resolves a built-in fixture name, preferring posets, else reads a file.
pub fn load_input(source: &str) -> Result<Input> {
    if let Some(p) = Poset::fixture(source) {
        return Ok(Input::Poset(p));
    }
    if let Some(l) = Lattice::fixture(source) {
        return Ok(Input::Lattice(l));
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::malformed(format!("cannot read `{source}`: {e}")))?;
    parse_input(&text)
}

pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.size());
    for (a, b) in p.covers() {
        out += &format!("{a} < {b}\n");
    }
    out
}

pub fn write_lattice(l: &Lattice) -> String {
    let mut out = format!("lattice {}\n", l.size());
    for (a, b) in l.covers() {
        out += &format!("{a} < {b}\n");
    }
    out + &format!("bottom {}\ntop {}\n", l.bottom(), l.top())
}

pub fn poset_json(p: &Poset) -> PosetJson {
    PosetJson {
        kind: Some("poset".into()),
        size: p.size(),
        less_than: p.covers(),
    }
}

pub fn lattice_json(l: &Lattice) -> LatticeJson {
    LatticeJson {
        kind: "lattice".into(),
        size: l.size(),
        less_than: l.covers(),
        bottom: Some(l.bottom()),
        top: Some(l.top()),
    }
}

/// A Hasse diagram with edges along covers, drawn bottom to top.
pub fn hasse_dot(name: &str, size: usize, covers: &[(usize, usize)], labels: Option<&[String]>) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..size {
        match labels {
            Some(labels) => out += &format!("  {x} [label=\"{}\"];\n", labels[x].replace('"', "\\\"")),
            None => out += &format!("  {x};\n"),
        }
    }
    for (a, b) in covers {
        out += &format!("  {a} -> {b} [arrowhead=none];\n");
    }
    out + "}\n"
}

pub fn poset_dot(p: &Poset) -> String {
    hasse_dot("poset", p.size(), &p.covers(), None)
}

pub fn lattice_dot(l: &Lattice, labels: Option<&[String]>) -> String {
    hasse_dot("lattice", l.size(), &l.covers(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for p in [Poset::v3(), Poset::l3(), Poset::d4(), Poset::empty()] {
            assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
        }
        let n5 = Lattice::n5();
        let back = parse_lattice(&write_lattice(&n5)).unwrap();
        assert_eq!(back.covers(), n5.covers());
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::d4();
        let text = serde_json::to_string(&poset_json(&p)).unwrap();
        assert_eq!(parse_poset(&text).unwrap(), p);
        assert!(matches!(parse_input(&text).unwrap(), Input::Poset(_)));
        let text = serde_json::to_string(&lattice_json(&Lattice::m3())).unwrap();
        assert!(matches!(parse_input(&text).unwrap(), Input::Lattice(_)));
        let bare = r#"{"size": 3, "less_than": [[0, 2], [1, 2]]}"#;
        assert_eq!(parse_poset(bare).unwrap(), Poset::v3());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# V\n\nposet 3   # three points\n0<2\n 1 < 2 \n";
        assert_eq!(parse_poset(text).unwrap(), Poset::v3());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_poset("").unwrap_err(),
            Error::malformed_at(1, "missing `poset <n>` header")
        );
        let err = parse_poset("poset 2\n\n0 < 5\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: Some(3), .. }), "{err}");
        let err = parse_poset("poset 2\n0 < 1\n1 < 0\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: Some(3), .. }), "{err}");
        let err = parse_lattice("lattice 2\n0 < 1\ntop 0\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { .. }), "{err}");
        assert!(err.to_string().starts_with("line 3: "), "{err}");
        let err = parse_poset("{\"size\": 2,\n \"less\": []}").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: Some(2), .. }), "{err}");
    }

    #[test]
    fn lattice_bounds() {
        let l = parse_lattice("lattice 3\n0 < 1\n1 < 2\nbottom 0\ntop 2\n").unwrap();
        assert_eq!((l.bottom(), l.top()), (0, 2));
        assert!(parse_lattice("lattice 3\n0 < 1\n1 < 2\nbottom 1\n").is_err());
    }

    #[test]
    fn lattices_reduce_to_their_spectrum() {
        let l = Input::Lattice(Lattice::boolean(2).unwrap());
        assert_eq!(l.into_poset().unwrap(), Poset::a2());
        assert!(matches!(
            Input::Lattice(Lattice::m3()).into_poset(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dot_uses_covers_only() {
        let dot = poset_dot(&Poset::chain(3));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("0 -> 1") && dot.contains("1 -> 2") && !dot.contains("0 -> 2"));
    }

    #[test]
    fn fixtures_resolve_without_files() {
        assert!(matches!(load_input("V3").unwrap(), Input::Poset(_)));
        assert!(matches!(load_input("n5").unwrap(), Input::Lattice(_)));
        assert!(matches!(load_input("bool3").unwrap(), Input::Lattice(_)));
        assert!(matches!(
            load_input("/no/such/file").unwrap_err(),
            Error::Malformed { .. }
        ));
    }
}
