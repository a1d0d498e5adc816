//! DIMACS `p edge` graph format. External ids are 1-based.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn read_dimacs_graph(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        match parts.next() {
            Some("p") => {
                if builder.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let format = parts.next().ok_or_else(|| err("missing format"))?;
                if format != "edge" && format != "col" {
                    return Err(err("expected `p edge <n> <m>`"));
                }
                let n: usize = parse_num(parts.next(), line_no, "vertex count")?;
                let _m: usize = parse_num(parts.next(), line_no, "edge count")?;
                builder = Some(GraphBuilder::new(n));
            }
            Some("e") => {
                let b = builder.as_mut().ok_or_else(|| err("edge before problem line"))?;
                let u: usize = parse_num(parts.next(), line_no, "endpoint")?;
                let v: usize = parse_num(parts.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > b.n() || v > b.n() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("endpoint out of range 1..={}", b.n()),
                    });
                }
                b.add_edge(u - 1, v - 1).map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
            }
            Some(other) => {
                return Err(Error::Parse { line: line_no, msg: format!("unknown line type `{other}`") })
            }
            None => {}
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or(Error::Parse { line: 0, msg: "missing problem line".into() })
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
}

pub fn write_dimacs_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_single_edge() {
        let g = read_dimacs_graph("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn rejects_self_loop_and_bad_header() {
        assert!(matches!(read_dimacs_graph("p edge 2 1\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(read_dimacs_graph("p graph 2 1\n").is_err());
        assert!(read_dimacs_graph("e 1 2\n").is_err());
        assert!(read_dimacs_graph("p edge 2 1\ne 1 3\n").is_err());
        assert!(read_dimacs_graph("c nothing\n").is_err());
    }

    #[test]
    fn merges_duplicates_and_skips_comments() {
        let g = read_dimacs_graph("c hello\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (3, 2), (0, 1)]).unwrap();
        let text = write_dimacs_graph(&g);
        assert_eq!(read_dimacs_graph(&text).unwrap(), g);
    }
}
