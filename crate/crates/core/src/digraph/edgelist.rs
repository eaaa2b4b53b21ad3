//! Plain-text edge lists: a header line `n m` followed by `m` lines `tail head`
//! (0-indexed). Multi-arcs are written as repeated lines.

use std::fmt::Write as _;

use super::Digraph;
use crate::error::{Error, Result};

pub fn write_edge_list(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", d.n(), d.arc_count()).unwrap();
    for (u, v, m) in d.arcs() {
        for _ in 0..m {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line `n m`".into(),
    })?;
    let [n, m] = parse_pair(line_no, header)?;
    let mut d = Digraph::empty(n).map_err(|e| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })?;

    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == m {
            return Err(Error::Parse {
                line: line_no,
                message: format!("more than the declared {m} arcs"),
            });
        }
        let [u, v] = parse_pair(line_no, line)?;
        d.add_arc(u, v).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("declared {m} arcs but found {seen}"),
        });
    }
    Ok(d)
}

fn parse_pair(line: usize, s: &str) -> Result<[usize; 2]> {
    let mut fields = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let pair = [next("first field")?, next("second field")?];
    if let Some(extra) = fields.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing field `{extra}`"),
        });
    }
    Ok(pair)
}
