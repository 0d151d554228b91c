//! Line-oriented graph files, 1-indexed:
//!
//! ```text
//! c optional comment
//! p fgf <n> <edge-count>
//! v <id> <g> <f>      (optional; all vertices or none)
//! e <u> <v>
//! ```

use crate::error::{Error, Result};
use crate::funcs::VertexFuncs;
use crate::graph::Graph;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn numbers<const K: usize>(line: usize, fields: &[&str]) -> Result<[u64; K]> {
    if fields.len() != K {
        return parse_err(line, format!("expected {K} numbers, found {}", fields.len()));
    }
    let mut out = [0u64; K];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().or_else(|_| parse_err(line, format!("'{field}' is not a nonnegative integer")))?;
    }
    Ok(out)
}

fn vertex(line: usize, id: u64, order: usize) -> Result<usize> {
    if id == 0 || id > order as u64 {
        return parse_err(line, format!("vertex id {id} out of range 1..={order}"));
    }
    Ok(id as usize - 1)
}

pub fn parse_graph_file(text: &str) -> Result<(Graph, Option<VertexFuncs>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut funcs: Vec<Option<(u32, u32)>> = Vec::new();
    let mut any_funcs = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else {
            continue;
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return parse_err(line, "duplicate header");
                }
                if rest.first() != Some(&"fgf") {
                    return parse_err(line, "header must read 'p fgf <n> <edge-count>'");
                }
                let [n, m] = numbers::<2>(line, &rest[1..])?;
                header = Some((n as usize, m as usize));
                funcs = vec![None; n as usize];
            }
            "v" | "e" => {
                let Some((order, _)) = header else {
                    return parse_err(line, "header 'p fgf' must precede vertex and edge lines");
                };
                let [x, y, z] = if tag == "v" {
                    numbers::<3>(line, rest)?
                } else {
                    let [x, y] = numbers::<2>(line, rest)?;
                    [x, y, 0]
                };
                let u = vertex(line, x, order)?;
                if tag == "v" {
                    let (g, f) = (u32::try_from(y), u32::try_from(z));
                    let (Ok(g), Ok(f)) = (g, f) else {
                        return parse_err(line, "g or f too large");
                    };
                    if g > f {
                        return parse_err(line, format!("g = {g} exceeds f = {f}"));
                    }
                    if funcs[u].replace((g, f)).is_some() {
                        return parse_err(line, format!("duplicate v line for vertex {x}"));
                    }
                    any_funcs = true;
                } else {
                    let v = vertex(line, y, order)?;
                    if u == v {
                        return parse_err(line, format!("self-loop at vertex {x}"));
                    }
                    if !seen_edges.insert((u.min(v), u.max(v))) {
                        return parse_err(line, format!("duplicate edge {x} {y}"));
                    }
                    edges.push((u, v));
                }
            }
            other => return parse_err(line, format!("unknown line type '{other}'")),
        }
    }

    let Some((order, declared)) = header else {
        return parse_err(text.lines().count().max(1), "missing 'p fgf' header");
    };
    if declared != edges.len() {
        return parse_err(
            text.lines().count().max(1),
            format!("header declares {declared} edges, found {}", edges.len()),
        );
    }
    let graph = Graph::from_edges(order, edges)?;
    let funcs = if any_funcs {
        if let Some(missing) = funcs.iter().position(Option::is_none) {
            return parse_err(text.lines().count().max(1), format!("no v line for vertex {}", missing + 1));
        }
        let (g, f) = funcs.into_iter().map(|p| p.expect("checked")).unzip();
        Some(VertexFuncs::new(g, f)?)
    } else {
        None
    };
    Ok((graph, funcs))
}

/// Canonical text: header, `v` lines in vertex order, then sorted `e u v`
/// lines with `u < v`.
pub fn write_graph_file(graph: &Graph, funcs: Option<&VertexFuncs>) -> String {
    let mut out = format!("p fgf {} {}\n", graph.order(), graph.size());
    if let Some(vf) = funcs {
        for x in 0..vf.len() {
            out.push_str(&format!("v {} {} {}\n", x + 1, vf.g(x), vf.f(x)));
        }
    }
    for &(u, v) in graph.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let (g, vf) = parse_graph_file("p fgf 2 1\ne 1 2").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert!(vf.is_none());

        let (g, vf) = parse_graph_file("p fgf 3 0\nv 1 1 1\nv 2 1 1\nv 3 1 1").unwrap();
        assert_eq!(g, Graph::empty(3).unwrap());
        assert_eq!(vf.unwrap(), VertexFuncs::constant(3, 1, 1).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("p fgf 2 1\ne 1 1", 2, "self-loop"),
            ("p fgf 3 2\ne 1 2\ne 2 1", 3, "duplicate edge"),
            ("p fgf 2 1\ne 1 3", 2, "out of range"),
            ("c hi\ne 1 2", 2, "must precede"),
            ("p fgf 2 1\nx 1 2", 2, "unknown line"),
            ("p fgf 2 1\ne 1", 2, "expected 2 numbers"),
            ("p fgf 2 0\nv 1 2 1", 2, "exceeds"),
            ("p fgf 2 0\nv 1 1 1", 2, "no v line for vertex 2"),
            ("p fgf 2 2\ne 1 2", 2, "declares 2 edges"),
        ];
        for (text, line, needle) in cases {
            match parse_graph_file(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(message.contains(needle), "{message} lacks {needle}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_output() {
        let (g, vf) = parse_graph_file("c x\np fgf 3 2\nv 1 0 1\nv 2 1 2\nv 3 0 0\ne 3 2\ne 2 1\n").unwrap();
        let text = write_graph_file(&g, vf.as_ref());
        assert_eq!(text, "p fgf 3 2\nv 1 0 1\nv 2 1 2\nv 3 0 0\ne 1 2\ne 2 3\n");
        let (g2, vf2) = parse_graph_file(&text).unwrap();
        assert_eq!((g2, vf2), (g, vf));
    }
}
