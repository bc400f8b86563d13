//! Rooted isomorphism via canonical labeling: colour refinement, then
//! individualization of one vertex at a time, keeping the smallest
//! relabeled adjacency matrix. Twins in the same cell are branched on once.

use crate::graph::Graph;
use crate::terminal::TerminalGraph;

/// Canonical certificate of a graph with a vertex colouring. Equal
/// certificates mean an isomorphism exists that preserves colours.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub cell_sizes: Vec<usize>,
    pub rows: Vec<u64>,
}

/// Canonical certificate and the labeling achieving it: `order[i]` is the
/// vertex placed at position `i`.
pub fn canonical_form(g: &Graph, colour: &[usize]) -> (Certificate, Vec<usize>) {
    assert!(g.n() <= 64, "canonical form is limited to 64 vertices");
    let adj = g.masks();
    let mut keys: Vec<usize> = colour.to_vec();
    keys.sort();
    keys.dedup();
    let cells: Vec<Vec<usize>> = keys
        .iter()
        .map(|&k| (0..g.n()).filter(|&v| colour[v] == k).collect())
        .collect();
    let cell_sizes = cells.iter().map(Vec::len).collect();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(&adj, refine(&adj, cells), &mut best);
    let (rows, order) = best.unwrap_or_default();
    (Certificate { cell_sizes, rows }, order)
}

/// Certificate of a terminal graph: terminals form the first colour class.
pub fn terminal_certificate(tg: &TerminalGraph) -> Certificate {
    canonical_form(&tg.graph, &terminal_colours(tg)).0
}

fn terminal_colours(tg: &TerminalGraph) -> Vec<usize> {
    let mut c = vec![1; tg.graph.n()];
    for t in tg.terminal_indices() {
        c[t] = 0;
    }
    c
}

/// An isomorphism mapping terminals onto terminals (setwise) exists.
pub fn rooted_isomorphic(a: &TerminalGraph, b: &TerminalGraph) -> bool {
    a.graph.n() == b.graph.n()
        && a.graph.m() == b.graph.m()
        && a.terminals.len() == b.terminals.len()
        && terminal_certificate(a) == terminal_certificate(b)
}

/// A rooted isomorphism as a vertex-name map from `a` to `b`.
pub fn rooted_isomorphism(a: &TerminalGraph, b: &TerminalGraph) -> Option<Vec<(String, String)>> {
    if !rooted_isomorphic(a, b) {
        return None;
    }
    let (_, oa) = canonical_form(&a.graph, &terminal_colours(a));
    let (_, ob) = canonical_form(&b.graph, &terminal_colours(b));
    Some(
        oa.iter()
            .zip(&ob)
            .map(|(&x, &y)| (a.graph.name(x).to_string(), b.graph.name(y).to_string()))
            .collect(),
    )
}

fn refine(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let sig = |v: usize| -> Vec<u32> { masks.iter().map(|m| (adj[v] & m).count_ones()).collect() };
            let mut tagged: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (sig(v), v)).collect();
            tagged.sort();
            let mut start = 0;
            for i in 1..=tagged.len() {
                if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                    next.push(tagged[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(k) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = relabel_rows(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[k] {
        // swapping twins is an automorphism fixing everything individualized
        let twin = tried.iter().any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<usize> = cells[k].iter().copied().filter(|&w| w != v).collect();
        split.splice(k..=k, [vec![v], rest]);
        search(adj, refine(adj, split), best);
    }
}

fn relabel_rows(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut m = adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                row |= 1 << pos[w];
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    fn tg(g: Graph, s: &[&str]) -> TerminalGraph {
        TerminalGraph::new(g, s, false).unwrap()
    }

    #[test]
    fn terminals_matter() {
        let p = named::path(3);
        assert!(rooted_isomorphic(&tg(p.clone(), &["0"]), &tg(p.clone(), &["2"])));
        assert!(!rooted_isomorphic(&tg(p.clone(), &["0"]), &tg(p, &["1"])));
    }

    #[test]
    fn petersen_relabeled() {
        let g = named::petersen();
        let h = g.relabel(|s| format!("x{}", (s.parse::<usize>().unwrap() * 3) % 10)).unwrap();
        assert!(rooted_isomorphic(&tg(g.clone(), &["0"]), &tg(h.clone(), &["x0"])));
        let map = rooted_isomorphism(&tg(g.clone(), &["0"]), &tg(h.clone(), &["x0"])).unwrap();
        let f = |s: &str| map.iter().find(|(a, _)| a == s).unwrap().1.clone();
        for (a, b) in g.edge_names() {
            assert!(h.adjacent(&f(&a), &f(&b)));
        }
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C6 against two triangles
        let c6 = named::cycle(6);
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let none: [&str; 0] = [];
        assert!(!rooted_isomorphic(&tg(c6, &none), &tg(two, &none)));
    }

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let es: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges(g.n(), &es).unwrap()
    }

    proptest! {
        #[test]
        fn certificate_is_invariant_under_relabeling(
            edges in proptest::collection::vec((0usize..8, 0usize..8), 0..20),
            perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
            t in 0usize..8,
        ) {
            let es: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a != b).collect();
            let mut seen = std::collections::BTreeSet::new();
            let es: Vec<(usize, usize)> = es.into_iter().filter(|&(a, b)| seen.insert((a.min(b), a.max(b)))).collect();
            let g = Graph::from_edges(8, &es).unwrap();
            let h = permuted(&g, &perm);
            let a = tg(g, &[&t.to_string()]);
            let b = tg(h, &[&perm[t].to_string()]);
            prop_assert!(rooted_isomorphic(&a, &b));
        }
    }
}
