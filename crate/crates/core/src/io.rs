//! Text formats: graph6, the plain edge list (`n` then `u v` per line,
//! 0-indexed, optional trailing `S: i1 i2 ...` terminal line), the named
//! edge list (`a b` per line, a lone name for an isolated vertex, optional
//! `S: a b ...`) and DOT.
//!
//! Indices in the edge list and graph6 refer to the canonical vertex order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::terminal::TerminalGraph;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ascii")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    let bad = |msg: &str| Error::Parse {
        line: 1,
        msg: msg.to_string(),
    };
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("graph6 byte out of range"));
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(bad("empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            if bytes.len() < 8 {
                return Err(bad("truncated graph6 header"));
            }
            let n = bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
            (n, 8)
        }
        Some(126) => {
            if bytes.len() < 4 {
                return Err(bad("truncated graph6 header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != pos + need {
        return Err(bad("graph6 body has the wrong length"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (a, b) in g.edges() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

pub fn terminal_to_edge_list(tg: &TerminalGraph) -> String {
    let mut s = to_edge_list(&tg.graph);
    s.push_str("S:");
    for i in tg.terminal_indices() {
        let _ = write!(s, " {i}");
    }
    s.push('\n');
    s
}

/// Parses the edge-list format. Terminals, when present, come back in the
/// listed order; the caller decides whether that order is prescribed.
pub fn from_edge_list(text: &str) -> Result<(Graph, Option<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| Error::Parse {
        line: ln,
        msg: format!("expected vertex count, got `{first}`"),
    })?;
    let mut edges = Vec::new();
    let mut terminals = None;
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix("S:") {
            let ts = rest
                .split_whitespace()
                .map(|x| {
                    x.parse::<usize>().ok().filter(|&v| v < n).ok_or(Error::Parse {
                        line: ln,
                        msg: format!("bad terminal `{x}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            terminals = Some(ts);
            continue;
        }
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parse = |x: &str| {
            x.parse::<usize>().ok().filter(|&v| v < n).ok_or(Error::Parse {
                line: ln,
                msg: format!("bad vertex `{x}`"),
            })
        };
        if parts.len() != 2 {
            return Err(Error::Parse {
                line: ln,
                msg: "expected `u v`".into(),
            });
        }
        edges.push((parse(parts[0])?, parse(parts[1])?));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    Ok((g, terminals))
}

pub fn to_named_edges(tg: &TerminalGraph) -> String {
    let g = &tg.graph;
    let mut s = String::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            let _ = writeln!(s, "{}", g.name(v));
        }
    }
    for (a, b) in g.edge_names() {
        let _ = writeln!(s, "{a} {b}");
    }
    if !tg.terminals.is_empty() {
        let _ = writeln!(s, "S: {}", tg.terminals.join(" "));
    }
    s
}

pub fn from_named_edges(text: &str) -> Result<(Graph, Vec<String>)> {
    let mut vs: Vec<String> = Vec::new();
    let mut es: Vec<(String, String)> = Vec::new();
    let mut ts = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("S:") {
            ts = rest.split_whitespace().map(String::from).collect();
            continue;
        }
        let parts: Vec<&str> = l.split_whitespace().collect();
        match parts[..] {
            [v] => vs.push(v.to_string()),
            [a, b] => {
                vs.extend([a.to_string(), b.to_string()]);
                es.push((a.to_string(), b.to_string()));
            }
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected `a b` or a single vertex".into(),
                })
            }
        }
    }
    vs.sort();
    vs.dedup();
    let g = Graph::new(vs, &es).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok((g, ts))
}

/// Reads any format: a first line holding a single integer means edge
/// list; otherwise any line with two tokens or an `S:` line means named edge
/// list; otherwise the first line is graph6.
pub fn read_terminal_graph(text: &str, ordered: bool) -> Result<TerminalGraph> {
    let mut content = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = content.clone().next().unwrap_or("");
    let named = content.any(|l| l.starts_with("S:") || l.split_whitespace().count() > 1);
    if first.parse::<usize>().is_err() && named {
        let (g, ts) = from_named_edges(text)?;
        return TerminalGraph::new(g, &ts, ordered);
    }
    let (g, ts) = if first.parse::<usize>().is_ok() {
        from_edge_list(text)?
    } else {
        (from_graph6(first)?, None)
    };
    let names: Vec<String> = ts
        .unwrap_or_default()
        .into_iter()
        .map(|i| g.name(i).to_string())
        .collect();
    TerminalGraph::new(g, &names, ordered)
}

pub fn to_dot(g: &Graph, terminals: &[String]) -> String {
    let mut s = String::from("graph G {\n");
    for v in g.names() {
        if terminals.contains(v) {
            let _ = writeln!(s, "  \"{v}\" [shape=box];");
        } else {
            let _ = writeln!(s, "  \"{v}\";");
        }
    }
    for (a, b) in g.edge_names() {
        let _ = writeln!(s, "  \"{a}\" -- \"{b}\";");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    #[test]
    fn named_edges_round_trip() {
        let text = "# a triangle and a loner\nz\nt1 u\nu v\nv t1\nS: v t1\n";
        let tg = read_terminal_graph(text, true).unwrap();
        assert_eq!(tg.graph.n(), 4);
        assert_eq!(tg.graph.m(), 3);
        assert_eq!(tg.terminals, vec!["v", "t1"]);
        let back = read_terminal_graph(&to_named_edges(&tg), true).unwrap();
        assert_eq!(back, tg);
    }

    #[test]
    fn known_graph6_strings() {
        // values from the nauty documentation conventions
        assert_eq!(to_graph6(&named::complete(5)), "D~{");
        assert_eq!(to_graph6(&named::petersen().relabel(|s| s.to_string()).unwrap()).len(), 9);
        assert_eq!(from_graph6("D~{").unwrap(), named::complete(5));
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), named::path(2));
    }

    #[test]
    fn malformed_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D~").is_err());
        assert!(from_graph6("D~{{").is_err());
    }

    #[test]
    fn edge_list_with_terminals() {
        let text = "4\n0 1\n1 2\n2 3\nS: 3 0\n";
        let tg = read_terminal_graph(text, true).unwrap();
        assert_eq!(tg.terminals, vec!["3", "0"]);
        assert_eq!(terminal_to_edge_list(&tg), text);
        assert!(from_edge_list("3\n0 5\n").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
    }

    #[test]
    fn dot_marks_terminals() {
        let dot = to_dot(&named::path(2), &["0".to_string()]);
        assert!(dot.contains("\"0\" [shape=box]"));
        assert!(dot.contains("\"0\" -- \"1\""));
    }

    proptest! {
        #[test]
        fn graph6_and_edge_list_round_trip(n in 0usize..70, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut e = Vec::new();
            for i in 0..n { for j in i + 1..n { if rng.gen_bool(0.2) { e.push((i, j)); } } }
            let g = Graph::from_edges(n, &e).unwrap();
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap().0, g);
        }
    }
}
