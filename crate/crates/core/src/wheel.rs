//! Wheels and the S-good predicate.
//!
//! A wheel is a rim cycle plus a center off the rim with at least three
//! spokes. It is S-good when every terminal on it is a neighbor of the
//! center in the host graph (the spoke edge need not be part of the wheel).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::{input, Limits, Result};
use crate::graph::Graph;
use crate::planarity::biconnected_blocks;
use crate::terminal::TerminalGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wheel {
    pub center: String,
    /// Rim cycle in cyclic order.
    pub rim: Vec<String>,
    /// Rim vertices whose spoke edge belongs to the wheel.
    pub spokes: BTreeSet<String>,
}

impl Wheel {
    pub fn new<S: AsRef<str>>(center: &str, rim: &[S], spokes: &[S]) -> Wheel {
        Wheel {
            center: center.to_string(),
            rim: rim.iter().map(|s| s.as_ref().to_string()).collect(),
            spokes: spokes.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn vertices(&self) -> BTreeSet<String> {
        let mut v: BTreeSet<String> = self.rim.iter().cloned().collect();
        v.insert(self.center.clone());
        v
    }

    /// Spokes listed in rim order.
    pub fn spokes_in_rim_order(&self) -> Vec<String> {
        self.rim
            .iter()
            .filter(|v| self.spokes.contains(*v))
            .cloned()
            .collect()
    }

    /// The wheel's edges: rim edges then spoke edges.
    pub fn edges(&self) -> Vec<(String, String)> {
        let k = self.rim.len();
        let mut e: Vec<(String, String)> = (0..k)
            .map(|i| (self.rim[i].clone(), self.rim[(i + 1) % k].clone()))
            .collect();
        e.extend(self.spokes.iter().map(|s| (self.center.clone(), s.clone())));
        e
    }
}

pub fn is_wheel(g: &Graph, w: &Wheel) -> bool {
    let Some(c) = g.index_of(&w.center) else {
        return false;
    };
    let k = w.rim.len();
    if k < 3 || w.spokes.len() < 3 {
        return false;
    }
    let mut rim = Vec::with_capacity(k);
    for v in &w.rim {
        match g.index_of(v) {
            Some(i) if i != c && !rim.contains(&i) => rim.push(i),
            _ => return false,
        }
    }
    if (0..k).any(|i| !g.has_edge(rim[i], rim[(i + 1) % k])) {
        return false;
    }
    w.spokes
        .iter()
        .all(|s| w.rim.contains(s) && g.adjacent(&w.center, s))
}

/// Whether every terminal on the wheel is a neighbor of its center. The
/// center itself must not be a terminal.
pub fn is_s_good<S: AsRef<str>>(g: &Graph, w: &Wheel, s: &[S]) -> Result<bool> {
    if s.iter().any(|x| x.as_ref() == w.center) {
        return input(format!("wheel center `{}` is a terminal", w.center));
    }
    if !g.contains(&w.center) {
        return input(format!("unknown vertex `{}`", w.center));
    }
    Ok(s
        .iter()
        .map(AsRef::as_ref)
        .filter(|x| w.rim.iter().any(|r| r == x))
        .all(|x| g.adjacent(&w.center, x)))
}

/// An S-good wheel with a non-terminal center, or `None` when there is none.
/// Centers are tried by descending degree, rims by increasing length.
pub fn find_s_good_wheel(tg: &TerminalGraph, limits: &Limits) -> Result<Option<Wheel>> {
    let g = &tg.graph;
    limits.check_search(g.n())?;
    let adj = g.masks();
    let terminals = tg
        .terminal_indices()
        .iter()
        .fold(0u64, |m, &t| m | 1 << t);
    let mut centers: Vec<usize> = (0..g.n())
        .filter(|&c| terminals >> c & 1 == 0 && g.degree(c) >= 3)
        .collect();
    centers.sort_by_key(|&c| (std::cmp::Reverse(g.degree(c)), c));
    for c in centers {
        let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        let allowed = all & !(1 << c) & !(terminals & !adj[c]);
        if !blocks_can_hold(g, allowed, adj[c]) {
            continue;
        }
        if let Some(rim) = shortest_rim(&adj, allowed, adj[c]) {
            let spokes: Vec<String> = rim
                .iter()
                .filter(|&&v| adj[c] >> v & 1 == 1)
                .map(|&v| g.name(v).to_string())
                .collect();
            let rim: Vec<String> = rim.iter().map(|&v| g.name(v).to_string()).collect();
            return Ok(Some(Wheel::new(g.name(c), &rim, &spokes)));
        }
    }
    Ok(None)
}

/// A rim needs three center-neighbors inside one block of the allowed graph.
fn blocks_can_hold(g: &Graph, allowed: u64, nbrs: u64) -> bool {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| allowed >> v & 1 == 1).collect();
    let sub = g.induced(&keep);
    biconnected_blocks(&sub).iter().any(|block| {
        let mut vs = 0u64;
        for &(a, b) in block {
            vs |= 1 << keep[a] | 1 << keep[b];
        }
        (vs & nbrs).count_ones() >= 3
    })
}

/// Shortest cycle inside `allowed` through at least three vertices of
/// `nbrs`, cycles of each length scanned from their smallest vertex.
fn shortest_rim(adj: &[u64], allowed: u64, nbrs: u64) -> Option<Vec<usize>> {
    let size = allowed.count_ones() as usize;
    for len in 3..=size {
        for s in 0..adj.len() {
            if allowed >> s & 1 == 0 {
                continue;
            }
            // vertices above s only, so each cycle is found from its minimum
            let above = allowed & !((2u64 << s) - 1);
            let mut path = vec![s];
            if cycle_dfs(adj, above, nbrs, len, &mut path, 1 << s) {
                return Some(path);
            }
        }
    }
    None
}

fn cycle_dfs(adj: &[u64], above: u64, nbrs: u64, len: usize, path: &mut Vec<usize>, used: u64) -> bool {
    let last = *path.last().unwrap();
    let hits = (used & nbrs).count_ones() as usize;
    if hits + (len - path.len()) < 3 {
        return false;
    }
    if path.len() == len {
        return adj[last] >> path[0] & 1 == 1;
    }
    let mut cand = adj[last] & above & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        if cycle_dfs(adj, above, nbrs, len, path, used | 1 << w) {
            return true;
        }
        path.pop();
    }
    false
}

/// The wheel formed by everything cofacial with `x`, when the faces around
/// `x` close up into a single rim cycle.
pub fn wheel_from_cofacial(emb: &Embedding, x: usize) -> Option<Wheel> {
    let closure = emb.cofacial_closure(x).ok()?;
    let name = emb.graph().name(x);
    let cx = closure.index_of(name)?;
    let rest: Vec<usize> = (0..closure.n()).filter(|&v| v != cx).collect();
    let link = closure.induced(&rest);
    if link.n() < 3 || !link.is_connected() || (0..link.n()).any(|v| link.degree(v) != 2) {
        return None;
    }
    // walk the link cycle from its first vertex
    let mut rim = vec![0usize];
    let mut prev = usize::MAX;
    loop {
        let cur = *rim.last().unwrap();
        let next = link.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        if next == 0 {
            break;
        }
        prev = cur;
        rim.push(next);
    }
    if rim.len() != link.n() {
        return None;
    }
    let rim: Vec<String> = rim.iter().map(|&v| link.name(v).to_string()).collect();
    let spokes: Vec<String> = rim
        .iter()
        .filter(|v| closure.adjacent(name, v))
        .cloned()
        .collect();
    if spokes.len() < 3 {
        return None;
    }
    Some(Wheel::new(name, &rim, &spokes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::planarity::embed;

    fn w4() -> (Graph, Wheel) {
        let g = named::wheel(4);
        let w = Wheel::new("4", &["0", "1", "2", "3"], &["0", "1", "2", "3"]);
        (g, w)
    }

    #[test]
    fn wheel_predicate() {
        let (g, w) = w4();
        assert!(is_wheel(&g, &w));
        let c5_two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap();
        let w2 = Wheel::new("5", &["0", "1", "2", "3", "4"], &["0", "2"]);
        assert!(!is_wheel(&c5_two, &w2));
        let bad_rim = Wheel::new("4", &["0", "2", "1", "3"], &["0", "1", "2"]);
        assert!(!is_wheel(&g, &bad_rim));
    }

    #[test]
    fn s_good_predicate() {
        let (g, w) = w4();
        let none: [&str; 0] = [];
        assert!(is_s_good(&g, &w, &none).unwrap());
        assert!(is_s_good(&g, &w, &["0", "2"]).unwrap());
        assert!(is_s_good(&g, &w, &["4"]).is_err());
        // rim vertex 1 in S but not adjacent to the center
        let g2 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (4, 3)]).unwrap();
        let w2 = Wheel::new("4", &["0", "1", "2", "3"], &["0", "2", "3"]);
        assert!(is_wheel(&g2, &w2));
        assert!(!is_s_good(&g2, &w2, &["1"]).unwrap());
    }

    #[test]
    fn search_examples() {
        let lim = Limits::default();
        let none: [&str; 0] = [];
        let ico = TerminalGraph::new(named::icosahedron(), &none, false).unwrap();
        let w = find_s_good_wheel(&ico, &lim).unwrap().unwrap();
        assert!(is_wheel(&ico.graph, &w));
        assert_eq!(w.rim.len(), 5);
        let c5 = TerminalGraph::new(named::cycle(5), &["0", "1", "2", "3", "4"], true).unwrap();
        assert_eq!(find_s_good_wheel(&c5, &lim).unwrap(), None);
        let big = TerminalGraph::new(named::grid(4, 4), &none, false).unwrap();
        assert!(find_s_good_wheel(&big, &lim).is_err());
    }

    #[test]
    fn terminal_off_center_blocks_rim() {
        // W5 with one rim vertex replaced by a terminal path around it
        let g = Graph::new(
            ["c", "a", "b", "d", "e", "t"],
            &[("c", "a"), ("c", "b"), ("c", "d"), ("c", "e"), ("a", "b"), ("b", "d"), ("d", "e"), ("e", "t"), ("t", "a"), ("a", "e")],
        )
        .unwrap();
        let tg = TerminalGraph::new(g.clone(), &["t"], false).unwrap();
        let w = find_s_good_wheel(&tg, &Limits::default()).unwrap().unwrap();
        assert!(!w.rim.contains(&"t".to_string()));
        assert!(is_s_good(&g, &w, &["t"]).unwrap());
    }

    #[test]
    fn cofacial_wheels() {
        let ico = embed(&named::icosahedron()).unwrap();
        let w = wheel_from_cofacial(&ico, 0).unwrap();
        assert_eq!(w.rim.len(), 5);
        assert_eq!(w.spokes.len(), 5);
        assert!(is_wheel(ico.graph(), &w));
        let c5 = embed(&named::cycle(5)).unwrap();
        assert_eq!(wheel_from_cofacial(&c5, 0), None);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(wheel_from_cofacial(&embed(&bowtie).unwrap(), 2), None);
    }
}
