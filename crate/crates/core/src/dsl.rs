//! Line-oriented text format for graph maps.
//!
//! ```text
//! # name: doubling
//! vertex v
//! edge a v v
//! image a a a
//! ```
//!
//! Image tokens are edge names, `~name` for a reversed crossing, or a single
//! uppercase letter `X` standing for `~x`. A token that is none of these but
//! spells a word in single-letter edges (`DEABF`) is expanded letter by
//! letter. Vertex images are inferred from the image endpoints.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgePath, Graph, GraphMap, Sign, Step};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMapDocument {
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub map: GraphMap,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with('~')
        && s.chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

fn resolve_token(graph: &Graph, tok: &str) -> Result<Vec<Step>> {
    if let Some(rest) = tok.strip_prefix('~') {
        return Ok(vec![Step::new(graph.edge_by_name(rest)?, Sign::Neg)]);
    }
    if graph.has_edge(tok) {
        return Ok(vec![Step::new(graph.edge_by_name(tok)?, Sign::Pos)]);
    }
    let letter = |c: char| -> Option<Step> {
        let s = c.to_string();
        if graph.has_edge(&s) {
            return Some(Step::new(graph.edge_by_name(&s).ok()?, Sign::Pos));
        }
        if c.is_uppercase() {
            let lower: String = c.to_lowercase().collect();
            if graph.has_edge(&lower) {
                return Some(Step::new(graph.edge_by_name(&lower).ok()?, Sign::Neg));
            }
        }
        None
    };
    tok.chars()
        .map(letter)
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::UnknownEdge(tok.to_string()))
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<GraphMapDocument> {
    let mut name = None;
    let mut comments = Vec::new();
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let mut images: Vec<(usize, usize, String, Vec<Token>)> = Vec::new();
    let mut declared_image: HashMap<String, usize> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let (body, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(raw[i + 1..].trim())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            match c.strip_prefix("name:") {
                Some(n) if name.is_none() => name = Some(n.trim().to_string()),
                _ => comments.push(c.to_string()),
            }
        }
        let toks = tokenize(body);
        let Some(head) = toks.first() else {
            continue;
        };
        let check_name = |t: &Token| -> Result<String> {
            if valid_name(t.text) {
                Ok(t.text.to_string())
            } else {
                Err(syntax(
                    line_no,
                    t.column,
                    format!("invalid name `{}`", t.text),
                ))
            }
        };
        match head.text {
            "vertex" => {
                if toks.len() < 2 {
                    return Err(syntax(line_no, head.column, "expected `vertex <name>...`"));
                }
                for t in &toks[1..] {
                    vertices.push(check_name(t)?);
                }
            }
            "edge" => {
                if toks.len() != 4 {
                    return Err(syntax(
                        line_no,
                        head.column,
                        "expected `edge <name> <tail> <head>`",
                    ));
                }
                edges.push((
                    check_name(&toks[1])?,
                    check_name(&toks[2])?,
                    check_name(&toks[3])?,
                ));
            }
            "image" => {
                if toks.len() < 3 {
                    return Err(syntax(
                        line_no,
                        head.column,
                        "expected `image <edge> <token>...`",
                    ));
                }
                let e = toks[1].text.to_string();
                if declared_image.insert(e.clone(), line_no).is_some() {
                    return Err(syntax(
                        line_no,
                        toks[1].column,
                        format!("second image for edge `{e}`"),
                    ));
                }
                let col = toks[1].column;
                let rest: Vec<Token> = toks.into_iter().skip(2).collect();
                images.push((line_no, col, e, rest));
            }
            other => {
                return Err(syntax(
                    line_no,
                    head.column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let graph = Graph::new(vertices, edges)?;
    let mut edge_image: Vec<Option<EdgePath>> = vec![None; graph.num_edges()];
    for (line_no, col, e, toks) in images {
        let idx = graph.edge_by_name(&e)?;
        let mut steps = Vec::new();
        for t in &toks {
            steps.extend(resolve_token(&graph, t.text)?);
        }
        let path = EdgePath::new(&graph, steps).map_err(|err| match err {
            Error::InconsistentEndpoints { detail, .. } => Error::InconsistentEndpoints {
                edge: e.clone(),
                detail: format!("line {line_no}, column {col}: {detail}"),
            },
            other => other,
        })?;
        edge_image[idx] = Some(path);
    }
    let edge_image = edge_image
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::MissingImage(graph.edge_name(i).to_string())))
        .collect::<Result<Vec<_>>>()?;
    let map = GraphMap::new(graph, edge_image)?;
    Ok(GraphMapDocument {
        name,
        comments,
        map,
    })
}

/// Canonical text form; reparses to an identical map.
pub fn render(doc: &GraphMapDocument) -> String {
    let g = doc.map.graph();
    let mut out = String::new();
    if let Some(n) = &doc.name {
        out.push_str(&format!("# name: {n}\n"));
    }
    for c in &doc.comments {
        out.push_str(&format!("# {c}\n"));
    }
    for v in g.vertex_names() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            e.name,
            g.vertex_name(e.tail),
            g.vertex_name(e.head)
        ));
    }
    for (e, img) in doc.map.edge_images().iter().enumerate() {
        out.push_str(&format!("image {} {}\n", g.edge_name(e), img.render(g)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_doubling_map() {
        let doc = parse("vertex v\nedge a v v\nimage a a a").unwrap();
        assert_eq!(doc.map.edge_image(0).len(), 2);
        assert_eq!(doc.map.vertex_image(0), 0);
    }

    #[test]
    fn uppercase_sugar_and_compact_words() {
        let doc = parse("vertex v\nedge a v v\nedge b v v\nimage a B A\nimage b baB\n").unwrap();
        let g = doc.map.graph();
        assert_eq!(doc.map.edge_image(0).render(g), "~b ~a");
        assert_eq!(doc.map.edge_image(1).render(g), "b a ~b");
    }

    #[test]
    fn reports_syntax_position() {
        let err = parse("vertex v\nedge a v\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 1,
                message: "expected `edge <name> <tail> <head>`".into()
            }
        );
        let err = parse("vertex v\n  frob x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Syntax {
                line: 2,
                column: 3,
                ..
            }
        ));
    }

    #[test]
    fn rejects_noncomposable_image() {
        let text =
            "vertex v w\nedge a v v\nedge b v w\nedge c w v\nimage a a ~b\nimage b b\nimage c c\n";
        assert!(matches!(
            parse(text),
            Err(Error::InconsistentEndpoints { .. })
        ));
    }

    #[test]
    fn rejects_unknown_edge() {
        let text = "vertex v\nedge a v v\nimage a a x\n";
        assert_eq!(parse(text).unwrap_err(), Error::UnknownEdge("x".into()));
    }

    #[test]
    fn render_round_trips() {
        let text = "# name: demo\n# a comment\nvertex v w\nedge a v w\nedge b w v\nimage a a b a\nimage b ~a\n";
        let doc = parse(text).unwrap();
        let again = parse(&render(&doc)).unwrap();
        assert_eq!(doc, again);
        assert_eq!(again.name.as_deref(), Some("demo"));
    }
}
