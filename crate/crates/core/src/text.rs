//! Text formats: words, endomorphism files, graph files, edge paths.
//!
//! Token and line numbers in error messages are 1-based.

use thiserror::Error;

use crate::endo::{EndoError, FreeEndo};
use crate::pi1::{Edge, GraphComplex, GraphError, Step};
use crate::thompson::FWord;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("zero exponent at token {0}")]
    ZeroExponent(usize),
    #[error("expected generator family '{expected}' at token {token}, found '{found}'")]
    WrongFamily { token: usize, expected: char, found: char },
    #[error("malformed token {token}: `{text}`")]
    Malformed { token: usize, text: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
}

fn line_err(line: usize, message: impl Into<String>) -> TextError {
    TextError::Line { line, message: message.into() }
}

/// Parses one `<family><index>[^<exponent>]` token.
fn parse_token(tok: &str, token: usize, family: char) -> Result<(u64, i64), TextError> {
    let malformed = || TextError::Malformed { token, text: tok.to_string() };
    let mut chars = tok.chars();
    let found = chars.next().ok_or_else(malformed)?;
    if found != family {
        if found.is_ascii_alphabetic() {
            return Err(TextError::WrongFamily { token, expected: family, found });
        }
        return Err(malformed());
    }
    let rest = chars.as_str();
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (rest, None),
    };
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let index: u64 = idx.parse().map_err(|_| malformed())?;
    let exponent: i64 = match exp {
        None => 1,
        Some(e) => {
            let digits = e.strip_prefix(['-', '+']).unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            e.parse().map_err(|_| malformed())?
        }
    };
    if exponent == 0 {
        return Err(TextError::ZeroExponent(token));
    }
    Ok((index, exponent))
}

/// Parses a whitespace-separated word such as `a0 a1^-1 a3^2`. The empty
/// string is the identity.
pub fn parse_word(text: &str, family: char) -> Result<Word, TextError> {
    let mut raw = Vec::new();
    for (n, tok) in text.split_whitespace().enumerate() {
        raw.push(parse_token(tok, n + 1, family)?);
    }
    let letters = raw.into_iter().map(|(i, e)| Letter::new(i, e).expect("nonzero"));
    Ok(Word::from_letters(letters))
}

pub fn parse_fword(text: &str) -> Result<FWord, TextError> {
    parse_word(text, 'a').map(FWord::new)
}

/// Parses an edge path such as `e1 e2^-1`; `e3^2` expands to `e3 e3`.
pub fn parse_path(text: &str) -> Result<Vec<Step>, TextError> {
    let mut steps = Vec::new();
    for (n, tok) in text.split_whitespace().enumerate() {
        let (id, exp) = parse_token(tok, n + 1, 'e')?;
        let step = if exp < 0 { Step::backward(id) } else { Step::forward(id) };
        for _ in 0..exp.unsigned_abs() {
            steps.push(step);
        }
    }
    Ok(steps)
}

/// Meaningful lines: `#` starts a comment, blank lines are skipped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((n + 1, l))
    })
}

fn word_on_line(text: &str, line: usize) -> Result<Word, TextError> {
    parse_word(text, 'x').map_err(|e| line_err(line, e.to_string()))
}

/// An endomorphism file. Returns the endomorphism and the optional `x0`.
///
/// ```text
/// rank 2
/// x0 -> x1^-1 x0 x1
/// x1 -> x1
/// x0 = x1
/// ```
pub fn parse_endo(text: &str) -> Result<(FreeEndo, Option<Word>), TextError> {
    let mut rank: Option<usize> = None;
    let mut images: Vec<Option<Word>> = Vec::new();
    let mut x0 = None;
    for (n, l) in lines(text) {
        if let Some(r) = l.strip_prefix("rank") {
            if rank.is_some() {
                return Err(line_err(n, "duplicate rank line"));
            }
            let r: usize = r.trim().parse().map_err(|_| line_err(n, "bad rank"))?;
            if r == 0 {
                return Err(line_err(n, EndoError::ZeroRank.to_string()));
            }
            rank = Some(r);
            images = vec![None; r];
            continue;
        }
        let r = rank.ok_or_else(|| line_err(n, "expected `rank <r>` first"))?;
        if let Some((lhs, rhs)) = l.split_once("->") {
            let s = lhs
                .trim()
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| line_err(n, format!("bad generator `{}`", lhs.trim())))?;
            if s >= r {
                return Err(line_err(n, format!("generator x{s} is out of range for rank {r}")));
            }
            if images[s].is_some() {
                return Err(line_err(n, format!("duplicate image for x{s}")));
            }
            images[s] = Some(word_on_line(rhs, n)?);
        } else if let Some((lhs, rhs)) = l.split_once('=') {
            if lhs.trim() != "x0" {
                return Err(line_err(n, format!("expected `x0 = <word>`, found `{l}`")));
            }
            if x0.is_some() {
                return Err(line_err(n, "duplicate x0 line"));
            }
            x0 = Some(word_on_line(rhs, n)?);
        } else {
            return Err(line_err(n, format!("unrecognized line `{l}`")));
        }
    }
    let rank = rank.ok_or(TextError::Missing("rank"))?;
    let mut imgs = Vec::with_capacity(rank);
    for (s, img) in images.into_iter().enumerate() {
        imgs.push(img.ok_or_else(|| TextError::Line {
            line: 0,
            message: format!("no image given for x{s}"),
        })?);
    }
    let f = FreeEndo::new(rank, imgs).map_err(|e| line_err(0, e.to_string()))?;
    if let Some(x) = &x0 {
        f.check_word(x).map_err(|e| line_err(0, e.to_string()))?;
    }
    Ok((f, x0))
}

pub fn render_endo(f: &FreeEndo, x0: Option<&Word>) -> String {
    let mut out = format!("rank {}\n", f.rank());
    for (s, img) in f.images().iter().enumerate() {
        out.push_str(&format!("x{s} -> {}\n", img.render('x')));
    }
    if let Some(x) = x0 {
        out.push_str(&format!("x0 = {}\n", x.render('x')));
    }
    out
}

/// A graph file.
///
/// ```text
/// vertices 2
/// edge 0 0 1
/// edge 1 0 1
/// base 0
/// ```
pub fn parse_graph(text: &str) -> Result<GraphComplex, TextError> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut base: Vec<u64> = Vec::new();
    let mut base_vertex = None;
    let num = |s: &str, n: usize, what: &str| -> Result<u64, TextError> {
        s.parse().map_err(|_| line_err(n, format!("bad {what} `{s}`")))
    };
    for (n, l) in lines(text) {
        let mut parts = l.split_whitespace();
        let key = parts.next().expect("nonempty line");
        let args: Vec<&str> = parts.collect();
        match key {
            "vertices" => {
                let [v] = args[..] else {
                    return Err(line_err(n, "expected `vertices <n>`"));
                };
                vertices = Some(num(v, n, "vertex count")? as usize);
            }
            "edge" => {
                let [id, tail, head] = args[..] else {
                    return Err(line_err(n, "expected `edge <id> <tail> <head>`"));
                };
                edges.push(Edge {
                    id: num(id, n, "edge id")?,
                    tail: num(tail, n, "vertex")? as usize,
                    head: num(head, n, "vertex")? as usize,
                });
            }
            "base" => {
                for a in args {
                    base.push(num(a, n, "edge id")?);
                }
            }
            "basevertex" => {
                let [v] = args[..] else {
                    return Err(line_err(n, "expected `basevertex <v>`"));
                };
                base_vertex = Some(num(v, n, "vertex")? as usize);
            }
            _ => return Err(line_err(n, format!("unrecognized line `{l}`"))),
        }
    }
    let vertices = vertices.ok_or(TextError::Missing("vertices"))?;
    GraphComplex::new(vertices, edges, base, base_vertex)
        .map_err(|e: GraphError| line_err(0, e.to_string()))
}

pub fn render_graph(g: &GraphComplex) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.id, e.tail, e.head));
    }
    let base: Vec<String> = g.base_edges().iter().map(u64::to_string).collect();
    out.push_str(format!("base {}\n", base.join(" ")).trim_end());
    out.push('\n');
    if g.base_edges().is_empty() {
        if let Some(v) = g.base_vertices().first() {
            out.push_str(&format!("basevertex {v}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;
    use proptest::prelude::*;

    #[test]
    fn word_examples() {
        assert_eq!(parse_word("a0 a1^-1", 'a').unwrap(), w(&[(0, 1), (1, -1)]));
        assert_eq!(parse_word("", 'a').unwrap(), Word::identity());
        assert_eq!(parse_word("  a3^+2  a3 ", 'a').unwrap(), w(&[(3, 3)]));
        assert_eq!(parse_word("x1 x1^-1", 'x').unwrap(), Word::identity());
    }

    #[test]
    fn word_errors() {
        let e = parse_word("a0^0", 'a').unwrap_err();
        assert_eq!(e.to_string(), "zero exponent at token 1");
        assert_eq!(
            parse_word("a0 x1", 'a').unwrap_err(),
            TextError::WrongFamily { token: 2, expected: 'a', found: 'x' }
        );
        for bad in ["a", "a-1", "a1^", "a1^x", "a1^--2", "1", "a1b", "a1^2^3"] {
            assert!(
                matches!(parse_word(bad, 'a'), Err(TextError::Malformed { token: 1, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn path_examples() {
        assert_eq!(
            parse_path("e1 e2^-1 e0^2").unwrap(),
            vec![Step::forward(1), Step::backward(2), Step::forward(0), Step::forward(0)]
        );
        assert!(parse_path("").unwrap().is_empty());
        assert_eq!(parse_path("e1^0").unwrap_err(), TextError::ZeroExponent(1));
    }

    #[test]
    fn endo_round_trip() {
        let text = "# inner by x1\nrank 2\nx0 -> x1^-1 x0 x1\nx1 -> x1\n\nx0 = x1\n";
        let (f, x0) = parse_endo(text).unwrap();
        assert_eq!(f.image(0), &w(&[(1, -1), (0, 1), (1, 1)]));
        assert_eq!(x0, Some(w(&[(1, 1)])));
        let again = parse_endo(&render_endo(&f, x0.as_ref())).unwrap();
        assert_eq!(again, (f, x0));
    }

    #[test]
    fn endo_errors() {
        assert_eq!(parse_endo("").unwrap_err(), TextError::Missing("rank"));
        assert!(matches!(parse_endo("x0 -> x0"), Err(TextError::Line { line: 1, .. })));
        assert!(matches!(parse_endo("rank 1\nx1 -> x0"), Err(TextError::Line { line: 2, .. })));
        assert!(matches!(parse_endo("rank 2\nx0 -> x0"), Err(TextError::Line { .. })));
        assert!(matches!(parse_endo("rank 1\nx0 -> x1"), Err(TextError::Line { .. })));
        let e = parse_endo("rank 1\nx0 -> x0^0").unwrap_err();
        assert_eq!(e.to_string(), "line 2: zero exponent at token 1");
    }

    #[test]
    fn graph_round_trip() {
        for g in [GraphComplex::theta(), GraphComplex::wedge(2)] {
            assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
        }
        let g = parse_graph("vertices 1\nedge 0 0 0\nedge 1 0 0\nbase\nbasevertex 0\n").unwrap();
        assert_eq!(g, GraphComplex::wedge(2));
    }

    #[test]
    fn graph_errors() {
        assert_eq!(parse_graph("edge 0 0 0").unwrap_err(), TextError::Missing("vertices"));
        assert!(matches!(parse_graph("vertices 1\nedge 0 0"), Err(TextError::Line { line: 2, .. })));
        assert!(matches!(parse_graph("vertices 1\nedge 0 0 4"), Err(TextError::Line { .. })));
        assert!(matches!(parse_graph("vertices 1\nloop 0"), Err(TextError::Line { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn render_reparses(raw in prop::collection::vec((0u64..12, -4i64..=4), 0..20)) {
            let word = Word::reduce(raw.into_iter().filter(|&(_, e)| e != 0)).unwrap();
            prop_assert_eq!(parse_word(&word.render('a'), 'a').unwrap(), word.clone());
            prop_assert_eq!(parse_word(&word.render('x'), 'x').unwrap(), word);
        }
    }
}
