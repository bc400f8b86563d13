//! Local configurations: the planar side of a small separation as it appears
//! in each reduction, with the boundary vertices where the rest of the host
//! graph attaches.
//!
//! Ring configurations share one labeling: the boundary `t1..t5` sits
//! clockwise around an outer cycle and each `ti` sees exactly `vi` and
//! `v(i+1)` on that cycle.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// A local configuration: the graph and the vertices the outside attaches to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Local {
    pub graph: Graph,
    pub boundary: Vec<String>,
}

impl Local {
    /// Non-boundary vertices.
    pub fn interior(&self) -> Vec<String> {
        let b: BTreeSet<&String> = self.boundary.iter().collect();
        self.graph
            .names()
            .iter()
            .filter(|v| !b.contains(v))
            .cloned()
            .collect()
    }
}

/// Builds a graph from adjacency rows `("u", "a b c")`.
pub fn adjacency(rows: &[(&str, &str)]) -> Graph {
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for (v, nbrs) in rows {
        vs.insert(v.to_string());
        for w in nbrs.split_whitespace() {
            vs.insert(w.to_string());
            es.insert(crate::graph::edge_key(v, w));
        }
    }
    let es: Vec<(String, String)> = es.into_iter().collect();
    Graph::new(&vs.into_iter().collect::<Vec<_>>(), &es).expect("configuration tables are simple graphs")
}

fn local(rows: &[(&str, &str)], boundary: &str) -> Local {
    Local {
        graph: adjacency(rows),
        boundary: boundary.split_whitespace().map(String::from).collect(),
    }
}

/// Order-4 cut with two interior vertices `u`, `v`.
pub fn four_cut_two_interior() -> Local {
    local(&[("u", "v1 v2 v3 v"), ("v", "v1 v3 v4")], "v1 v2 v3 v4")
}

/// Triangle `uvw` inside an order-5 cut, two interior vertices covering the
/// whole boundary.
pub fn triangle_covering() -> Local {
    local(
        &[("u", "v w v1 v5"), ("v", "w v1 v2 v3"), ("w", "v3 v4 v5")],
        "v1 v2 v3 v4 v5",
    )
}

/// Triangle `uvw` where every two interior vertices see exactly four
/// boundary vertices.
pub fn triangle_spread() -> Local {
    local(
        &[("u", "v w v1 v5"), ("v", "w v2 v3"), ("w", "v3 v4 v5")],
        "v1 v2 v3 v4 v5",
    )
}

/// Path `uvw` with `v` not adjacent to `t1`.
pub fn path_open() -> Local {
    local(
        &[("u", "v t1 t2 t3"), ("w", "v t4 t5 t1"), ("v", "t3 t4")],
        "t1 t2 t3 t4 t5",
    )
}

/// Path `uvw` with `v` adjacent to `t1`, and `t1` of degree four: its one
/// outside neighbor is `y`.
pub fn path_closed() -> Local {
    local(
        &[("u", "v t1 t2 t3"), ("w", "v t4 t5 t1"), ("v", "t1 t3 t4"), ("y", "t1")],
        "t2 t3 t4 t5 y",
    )
}

/// Order-4 cut whose interior is the 4-cycle `u1u2u3u4`, each `ui` seeing
/// `ti` and `t(i+1)`.
pub fn four_cycle() -> Local {
    local(
        &[
            ("u1", "u2 t1 t2"),
            ("u2", "u3 t2 t3"),
            ("u3", "u4 t3 t4"),
            ("u4", "u1 t4 t1"),
        ],
        "t1 t2 t3 t4",
    )
}

/// [`four_cycle`] plus the chord `u2u4`.
pub fn four_cycle_chord() -> Local {
    let mut l = four_cycle();
    l.graph = l.graph.add::<&str, &str, &str>(&[], &[("u2", "u4")]).unwrap();
    l
}

const RING_TERMINALS: &str = "t1 t2 t3 t4 t5";

/// Outer 7-cycle `v1 v2 v3 x v4 v5 w5` where `x` carries the chords to `v1`
/// and `w5` (and to `v2`), but not to `v5`.
pub fn ring_pendant() -> Local {
    local(
        &[
            ("v1", "v2 w5 t1"),
            ("v2", "v3 t1 t2"),
            ("v3", "x t2 t3"),
            ("x", "v4 v1 w5 v2"),
            ("v4", "v5 t3 t4"),
            ("v5", "w5 t4 t5"),
            ("w5", "t5"),
        ],
        RING_TERMINALS,
    )
}

/// [`ring_pendant`] plus the chord `x v5`.
pub fn ring_apex() -> Local {
    let mut l = ring_pendant();
    l.graph = l.graph.add::<&str, &str, &str>(&[], &[("x", "v5")]).unwrap();
    l
}

fn ring(cycle: &str, chords: &[(&str, &str)]) -> Local {
    let c: Vec<&str> = cycle.split_whitespace().collect();
    let mut rows: Vec<(String, String)> = (0..c.len())
        .map(|i| (c[i].to_string(), c[(i + 1) % c.len()].to_string()))
        .collect();
    for i in 1..=5 {
        let j = i % 5 + 1;
        rows.push((format!("t{i}"), format!("v{i}")));
        rows.push((format!("t{i}"), format!("v{j}")));
    }
    rows.extend(chords.iter().map(|(a, b)| (a.to_string(), b.to_string())));
    let refs: Vec<(&str, &str)> = rows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    local(&refs, RING_TERMINALS)
}

/// Outer 5-cycle `v1..v5`, no chords.
pub fn ring_five() -> Local {
    ring("v1 v2 v3 v4 v5", &[])
}

/// Outer 5-cycle with both chords at `v4`.
pub fn ring_five_chorded() -> Local {
    ring("v1 v2 v3 v4 v5", &[("v4", "v1"), ("v4", "v2")])
}

/// No two consecutive `vi` adjacent: a 10-cycle with one vertex between each
/// pair, triangulated inside.
pub fn ring_independent() -> Local {
    ring(
        "v1 a1 v2 a2 v3 a3 v4 a4 v5 a5",
        &[
            ("a1", "a2"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a4", "a5"),
            ("a5", "a1"),
            ("a1", "a3"),
            ("a1", "a4"),
        ],
    )
}

/// Only `v1v2` present among consecutive pairs.
pub fn ring_one_edge() -> Local {
    ring(
        "v1 v2 a2 v3 a3 v4 a4 v5 a5",
        &[
            ("v2", "a5"),
            ("a2", "a5"),
            ("a2", "a4"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a4", "a5"),
        ],
    )
}

/// `v5v1` and `v1v2` present, `v5v2` absent.
pub fn ring_two_consecutive() -> Local {
    ring(
        "v1 v2 a2 v3 a3 v4 a4 v5",
        &[("a2", "a3"), ("a3", "a4"), ("a2", "a4"), ("v1", "a2")],
    )
}

/// `v3v4`, `v4v5`, `v5v1` present; `a` between `v1`, `v2` and `b` between
/// `v2`, `v3`, with `ab` and `bv4`.
pub fn ring_three_run() -> Local {
    ring(
        "v1 a v2 b v3 v4 v5",
        &[("a", "b"), ("b", "v4"), ("a", "v4"), ("a", "v5")],
    )
}

/// `v4v5`, `v5v1`, `v2v3` present; `a` between `v1`, `v2` and `b` between
/// `v3`, `v4`, with `a` not adjacent to `v3`.
pub fn ring_three_split() -> Local {
    ring(
        "v1 a v2 v3 b v4 v5",
        &[("a", "b"), ("a", "v4"), ("a", "v5")],
    )
}

/// All consecutive pairs but `v1v2`, which has `a` between; `a` sees `v3`
/// and `v5`, and `v3v5` is absent.
pub fn ring_four_open() -> Local {
    ring("v1 a v2 v3 v4 v5", &[("a", "v3"), ("a", "v5")])
}

/// [`ring_four_open`] plus `v3v5`.
pub fn ring_four_closed() -> Local {
    ring("v1 a v2 v3 v4 v5", &[("a", "v3"), ("a", "v5"), ("v3", "v5")])
}

/// Nine-vertex side: boundary `x p r s t`, interior `q u v w z`, where `q`
/// is the only interior neighbor of `x`.
pub fn nine_vertex() -> Local {
    local(
        &[
            ("z", "p q t u v w"),
            ("u", "q r v"),
            ("v", "r s w"),
            ("w", "s t"),
            ("q", "x p"),
        ],
        "x p r s t",
    )
}
