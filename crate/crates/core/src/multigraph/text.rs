//! Plain-text graph format:
//!
//! ```text
//! # comment
//! V 2
//! E 0 1
//! E 0 0
//! ```
//!
//! The `V` line comes first; each `E u v` adds one edge (`u = v` is a loop).

use super::Multigraph;
use crate::error::{Error, Result};
use std::fmt::Write;

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Format {
            line: line_no,
            message,
        };
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("expected a nonnegative integer, found `{s}`")))
        };
        match fields.as_slice() {
            ["V", n] => {
                if vertex_count.is_some() {
                    return Err(err("duplicate `V` line".into()));
                }
                vertex_count = Some(number(n)?);
            }
            ["E", u, v] => {
                let n = vertex_count.ok_or_else(|| err("`E` line before `V` line".into()))?;
                let (u, v) = (number(u)?, number(v)?);
                if u >= n || v >= n {
                    return Err(err(format!("endpoint out of range 0..{n}")));
                }
                edges.push((u, v));
            }
            _ => return Err(err(format!("unrecognised line `{line}`"))),
        }
    }
    let n = vertex_count.ok_or_else(|| Error::Format {
        line: 0,
        message: "missing `V` line".into(),
    })?;
    Multigraph::build(n, &edges)
}

pub fn format_graph(g: &Multigraph) -> String {
    let mut out = format!("V {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "E {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_graph("# figure eight\n\nV 1\nE 0 0  # first\nE 0 0\n").unwrap();
        assert_eq!(g, Multigraph::bouquet(2));
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_graph("V 2\nE 0 5\n") {
            Err(Error::Format { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph("E 0 0\n").is_err());
        assert!(parse_graph("# nothing\n").is_err());
        assert!(parse_graph("V 1\nX 0\n").is_err());
    }
}
