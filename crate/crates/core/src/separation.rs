//! k-separations, vertex connectivity and the three-way verdict on a planar
//! side of an order-4 or order-5 separation.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::catalog::matches_catalog;
use crate::error::{input, Error, Limits, Result};
use crate::graph::{edge_key, Graph};
use crate::terminal::{is_disc_planar, TerminalGraph};
use crate::wheel::{find_s_good_wheel, Wheel};

type Edge = (String, String);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Side {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<Edge>,
}

impl Side {
    pub fn graph(&self) -> Graph {
        let es: Vec<Edge> = self.edges.iter().cloned().collect();
        Graph::new(self.vertices.iter().cloned().collect::<Vec<_>>(), &es).expect("side is a subgraph")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Separation {
    pub side1: Side,
    pub side2: Side,
}

impl Separation {
    pub fn cut(&self) -> BTreeSet<String> {
        self.side1.vertices.intersection(&self.side2.vertices).cloned().collect()
    }

    pub fn order(&self) -> usize {
        self.cut().len()
    }

    pub fn swapped(&self) -> Separation {
        Separation { side1: self.side2.clone(), side2: self.side1.clone() }
    }

    /// Orientation-free key: both sides, smaller first.
    pub fn key(&self) -> (Side, Side) {
        if self.side1 <= self.side2 {
            (self.side1.clone(), self.side2.clone())
        } else {
            (self.side2.clone(), self.side1.clone())
        }
    }
}

/// How edges with both ends in the cut are split between the sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutEdges {
    /// All of them on side 2; side 1 always has an exclusive vertex.
    Canonical,
    /// Every split; yields each separation exactly once up to swapping.
    Exhaustive,
}

/// The defining conditions: edge-disjoint sides that cover the graph, each
/// with an edge or an exclusive vertex.
pub fn validate_separation(g: &Graph, s: &Separation) -> bool {
    let sides = [&s.side1, &s.side2];
    for side in sides {
        if side.vertices.iter().any(|v| !g.contains(v)) {
            return false;
        }
        if side.edges.iter().any(|(a, b)| {
            !g.adjacent(a, b) || !side.vertices.contains(a) || !side.vertices.contains(b) || edge_key(a, b) != (a.clone(), b.clone())
        }) {
            return false;
        }
    }
    if !s.side1.edges.is_disjoint(&s.side2.edges) {
        return false;
    }
    let vs: BTreeSet<&String> = s.side1.vertices.union(&s.side2.vertices).collect();
    if vs.len() != g.n() || s.side1.edges.len() + s.side2.edges.len() != g.m() {
        return false;
    }
    let excl = |a: &Side, b: &Side| !a.edges.is_empty() || a.vertices.iter().any(|v| !b.vertices.contains(v));
    excl(&s.side1, &s.side2) && excl(&s.side2, &s.side1)
}

/// Lazily enumerates the k-separations, one cut at a time in lexicographic
/// order of the cut.
pub fn enumerate_separations(g: &Graph, k: usize, mode: CutEdges) -> Separations<'_> {
    Separations {
        g,
        mode,
        cut: if k <= g.n() { Some((0..k).collect()) } else { None },
        buffer: VecDeque::new(),
    }
}

pub struct Separations<'a> {
    g: &'a Graph,
    mode: CutEdges,
    cut: Option<Vec<usize>>,
    buffer: VecDeque<Separation>,
}

impl Iterator for Separations<'_> {
    type Item = Separation;

    fn next(&mut self) -> Option<Separation> {
        loop {
            if let Some(s) = self.buffer.pop_front() {
                return Some(s);
            }
            let cut = self.cut.take()?;
            self.buffer.extend(separations_at(self.g, &cut, self.mode));
            self.cut = next_combination(cut, self.g.n());
        }
    }
}

fn next_combination(mut c: Vec<usize>, n: usize) -> Option<Vec<usize>> {
    let k = c.len();
    let mut i = k;
    while i > 0 && c[i - 1] == n - k + i - 1 {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    c[i - 1] += 1;
    for j in i..k {
        c[j] = c[j - 1] + 1;
    }
    Some(c)
}

fn separations_at(g: &Graph, cut: &[usize], mode: CutEdges) -> Vec<Separation> {
    let in_cut = |v: usize| cut.contains(&v);
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_cut(v)).collect();
    let comps: Vec<Vec<usize>> = g
        .induced(&rest)
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| rest[i]).collect())
        .collect();
    let inner: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| in_cut(a) && in_cut(b))
        .collect();
    let name = |v: usize| g.name(v).to_string();
    let mut out = Vec::new();
    let splits: u64 = match mode {
        CutEdges::Canonical => 1,
        CutEdges::Exhaustive => 1 << inner.len(),
    };
    for groups in 0u64..1 << comps.len() {
        let mut v1: BTreeSet<String> = cut.iter().map(|&v| name(v)).collect();
        let mut v2 = v1.clone();
        for (i, c) in comps.iter().enumerate() {
            let side = if groups >> i & 1 == 1 { &mut v1 } else { &mut v2 };
            side.extend(c.iter().map(|&v| name(v)));
        }
        for split in 0..splits {
            let mut e1 = BTreeSet::new();
            let mut e2 = BTreeSet::new();
            for (a, b) in g.edge_names() {
                let key = edge_key(&a, &b);
                let (ia, ib) = (g.index_of(&a).unwrap(), g.index_of(&b).unwrap());
                if in_cut(ia) && in_cut(ib) {
                    let j = inner.iter().position(|&e| e == (ia.min(ib), ia.max(ib))).unwrap();
                    if split >> j & 1 == 1 { &mut e1 } else { &mut e2 }.insert(key);
                } else if v1.contains(&a) && v1.contains(&b) {
                    e1.insert(key);
                } else {
                    e2.insert(key);
                }
            }
            let s = Separation {
                side1: Side { vertices: v1.clone(), edges: e1 },
                side2: Side { vertices: v2.clone(), edges: e2 },
            };
            if !validate_separation(g, &s) {
                continue;
            }
            match mode {
                CutEdges::Exhaustive if s.side1 > s.side2 => continue,
                CutEdges::Canonical if s.side1.vertices.len() == cut.len() => continue,
                // with no edges inside the cut the two orientations coincide
                CutEdges::Canonical if inner.is_empty() && s.side2.vertices.len() > cut.len() && s.side1 > s.side2 => continue,
                _ => {}
            }
            out.push(s);
        }
    }
    out
}

/// Vertex connectivity at least `k`; `K_n` counts as `(n-1)`-connected.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    connectivity(g) >= k
}

/// Vertex connectivity via unit-capacity max-flow on the split graph.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// Internally disjoint s-t paths, stopping once `cap` are found.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // v_in = 2v, v_out = 2v + 1
    let n = 2 * g.n();
    let mut cap_m = vec![vec![0i32; n]; n];
    for v in 0..g.n() {
        cap_m[2 * v][2 * v + 1] = if v == s || v == t { i32::MAX / 2 } else { 1 };
        for &w in g.neighbors(v) {
            cap_m[2 * v + 1][2 * w] = 1;
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; n];
        prev[src] = src;
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && cap_m[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap_m[x][y] -= 1;
            cap_m[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    GoodWheel { wheel: Wheel },
    Small,
    Catalog { member: String },
    None,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::GoodWheel { .. } => "GOOD_WHEEL",
            Verdict::Small => "SMALL",
            Verdict::Catalog { .. } => "CATALOG",
            Verdict::None => "NONE",
        }
    }
}

/// Which of the three outcomes holds for side 1: an S-good wheel, a
/// five-vertex side of an order-4 cut, or a catalog member (with the
/// eight-vertex member's special terminal of degree at least 5 in `g`).
/// Checked in that order.
pub fn check_trichotomy(g: &Graph, sep: &Separation, limits: &Limits) -> Result<Verdict> {
    if !validate_separation(g, sep) {
        return input("not a separation of the graph");
    }
    let cut: Vec<String> = sep.cut().into_iter().collect();
    if cut.len() != 4 && cut.len() != 5 {
        return Err(Error::Precondition(format!("separation has order {}, need 4 or 5", cut.len())));
    }
    if sep.side1.vertices.len() == cut.len() {
        return Err(Error::Precondition("side 1 has no vertex outside the cut".into()));
    }
    let tg = TerminalGraph::new(sep.side1.graph(), &cut, false)?;
    if !is_disc_planar(&tg)? {
        return Err(Error::Precondition("side 1 is not disc-planar with the cut on the boundary".into()));
    }
    if let Some(wheel) = find_s_good_wheel(&tg, limits)? {
        return Ok(Verdict::GoodWheel { wheel });
    }
    if cut.len() == 4 && sep.side1.vertices.len() == 5 {
        return Ok(Verdict::Small);
    }
    if cut.len() == 5 {
        if let Some(m) = matches_catalog(&tg) {
            if m.special_vertex.is_some() {
                let g1 = &tg.graph;
                let heavy = cut.iter().find(|t| g1.degree(g1.index_of(t).unwrap()) == 3);
                let ok = heavy.is_some_and(|t| g.degree(g.index_of(t).unwrap()) >= 5);
                if !ok {
                    return Ok(Verdict::None);
                }
            }
            return Ok(Verdict::Catalog { member: m.name.to_string() });
        }
    }
    Ok(Verdict::None)
}

/// The separation whose side 1 is everything reachable from `inside`
/// without crossing `cut`, with edges inside the cut on side 2.
pub fn separation_from_cut<S: AsRef<str>>(g: &Graph, cut: &[S], inside: &[S]) -> Result<Separation> {
    let mut c = BTreeSet::new();
    for v in cut {
        c.insert(g.idx(v.as_ref())?);
    }
    let rest: Vec<usize> = (0..g.n()).filter(|v| !c.contains(v)).collect();
    let h = g.induced(&rest);
    let mut chosen = BTreeSet::new();
    for v in inside {
        let i = g.idx(v.as_ref())?;
        if c.contains(&i) {
            return input(format!("`{}` is in the cut", v.as_ref()));
        }
        chosen.insert(i);
    }
    let mut v1: BTreeSet<String> = c.iter().map(|&v| g.name(v).to_string()).collect();
    let mut v2 = v1.clone();
    for comp in h.components() {
        let comp: Vec<usize> = comp.into_iter().map(|i| rest[i]).collect();
        let side = if comp.iter().any(|v| chosen.contains(v)) { &mut v1 } else { &mut v2 };
        side.extend(comp.iter().map(|&v| g.name(v).to_string()));
    }
    let mut e1 = BTreeSet::new();
    let mut e2 = BTreeSet::new();
    for (a, b) in g.edge_names() {
        let both_cut = c.contains(&g.index_of(&a).unwrap()) && c.contains(&g.index_of(&b).unwrap());
        if !both_cut && v1.contains(&a) && v1.contains(&b) {
            e1.insert((a, b));
        } else {
            e2.insert((a, b));
        }
    }
    let s = Separation {
        side1: Side { vertices: v1, edges: e1 },
        side2: Side { vertices: v2, edges: e2 },
    };
    if !validate_separation(g, &s) {
        return input("cut does not give a separation");
    }
    Ok(s)
}

/// Glues a terminal graph as side 1 onto an outside part sharing exactly
/// its terminals. Returns the host and the separation.
pub fn glue_side(side1: &TerminalGraph, outside: &Graph) -> Result<(Graph, Separation)> {
    let terms = side1.terminal_set();
    for v in outside.names() {
        if side1.graph.contains(v) && !terms.contains(v) {
            return input(format!("outside vertex `{v}` clashes with an interior vertex"));
        }
    }
    let g = side1.graph.union(outside);
    let interior: Vec<String> = side1.interior().iter().map(|&i| side1.graph.name(i).to_string()).collect();
    let cut: Vec<String> = side1.terminals.clone();
    let s = separation_from_cut(&g, &cut, &interior)?;
    Ok((g, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::named;

    #[test]
    fn path_has_one_one_separation() {
        let p = named::path(3);
        let all: Vec<Separation> = enumerate_separations(&p, 1, CutEdges::Exhaustive).collect();
        let middle: Vec<&Separation> = all.iter().filter(|s| s.cut().contains("1")).collect();
        assert_eq!(middle.len(), 1);
        for s in &all {
            assert!(validate_separation(&p, s));
        }
    }

    #[test]
    fn k4_three_separations_isolate_a_vertex() {
        let k4 = named::complete(4);
        let seps: Vec<Separation> = enumerate_separations(&k4, 3, CutEdges::Canonical).collect();
        assert_eq!(seps.len(), 4);
        for s in seps {
            assert_eq!(s.side1.vertices.len(), 4);
            assert_eq!(s.side1.edges.len(), 3);
            assert_eq!(s.side2.edges.len(), 3);
        }
    }

    #[test]
    fn connectivity_values() {
        assert!(is_k_connected(&named::complete(5), 4));
        assert!(!is_k_connected(&named::complete(5), 5));
        assert!(is_k_connected(&named::cycle(5), 2));
        assert!(!is_k_connected(&named::cycle(5), 3));
        assert_eq!(connectivity(&named::icosahedron()), 5);
        assert_eq!(connectivity(&named::petersen()), 3);
        let y = crate::catalog::member_by_name("Y").unwrap();
        assert!(!is_k_connected(&y.tg.graph, 4));
    }

    /// Side 2: the terminals on a cycle plus a hub joined to all of them.
    fn rim_outside(tg: &TerminalGraph) -> Graph {
        let t = &tg.terminals;
        let mut es: Vec<(String, String)> = Vec::new();
        for i in 0..t.len() {
            es.push((t[i].clone(), "hub".into()));
            es.push((t[i].clone(), t[(i + 1) % t.len()].clone()));
        }
        let mut vs = t.clone();
        vs.push("hub".into());
        Graph::new(vs, &es).unwrap()
    }

    #[test]
    fn catalog_members_glue_to_catalog_verdicts() {
        for m in catalog() {
            let (g, s) = glue_side(&m.tg, &rim_outside(&m.tg)).unwrap();
            let v = check_trichotomy(&g, &s, &Limits::default()).unwrap();
            assert_eq!(v, Verdict::Catalog { member: m.name.to_string() });
        }
    }

    #[test]
    fn small_and_wheel_verdicts() {
        let k = TerminalGraph::new(
            Graph::new(["a", "b", "c", "d", "x"], &[("x", "a"), ("x", "b"), ("x", "c"), ("x", "d")]).unwrap(),
            &["a", "b", "c", "d"],
            false,
        )
        .unwrap();
        let (g, s) = glue_side(&k, &rim_outside(&k)).unwrap();
        assert_eq!(check_trichotomy(&g, &s, &Limits::default()).unwrap(), Verdict::Small);
        // interior wheel: a 5-wheel hanging off the terminals
        let w = named::wheel(5).relabel(|s| format!("w{s}")).unwrap();
        let tg = TerminalGraph::new(
            w.add(&["t1", "t2", "t3", "t4", "t5"], &[("t1", "w0"), ("t2", "w1"), ("t3", "w2"), ("t4", "w3"), ("t5", "w4")]).unwrap(),
            &["t1", "t2", "t3", "t4", "t5"],
            false,
        )
        .unwrap();
        let (g, s) = glue_side(&tg, &rim_outside(&tg)).unwrap();
        assert_eq!(check_trichotomy(&g, &s, &Limits::default()).unwrap().label(), "GOOD_WHEEL");
    }

    #[test]
    fn special_vertex_degree_is_enforced() {
        let y = crate::catalog::member_by_name("Y").unwrap();
        // t1 gets only one outside edge: degree 4 in the host
        let out = Graph::new(["t1", "t2", "t3", "t4", "t5"], &[("t1", "t2"), ("t2", "t3"), ("t3", "t4"), ("t4", "t5")]).unwrap();
        let (g, s) = glue_side(&y.tg, &out).unwrap();
        assert_eq!(check_trichotomy(&g, &s, &Limits::default()).unwrap(), Verdict::None);
    }

    #[test]
    fn wrong_order_is_a_precondition_error() {
        let g = named::path(3);
        let s = enumerate_separations(&g, 1, CutEdges::Canonical).next().unwrap();
        assert!(matches!(check_trichotomy(&g, &s, &Limits::default()), Err(Error::Precondition(_))));
    }
}
