//! Graphs with a distinguished terminal sequence and their disc embeddings.
//!
//! Unordered disc-planarity reduces to planarity of the graph plus one apex
//! joined to every terminal. Ordered disc-planarity adds a fence instead:
//! fresh vertices `f1..fk` where `fi` is joined to `ti`, `t(i+1)` and
//! `f(i+1)`, plus a hub joined to every `fi`. The fence with its hub is a
//! wheel, so it has a unique drawing and pins the terminals to one face in
//! the prescribed cyclic order.

use std::collections::BTreeSet;

use crate::embedding::Embedding;
use crate::error::{input, Error, Result};
use crate::graph::{CycleArc, Graph};
use crate::planarity::planar_rotation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TerminalGraph {
    pub graph: Graph,
    pub terminals: Vec<String>,
    /// Whether the terminal sequence is a prescribed cyclic boundary order.
    pub ordered: bool,
}

impl TerminalGraph {
    pub fn new<S: AsRef<str>>(graph: Graph, terminals: &[S], ordered: bool) -> Result<Self> {
        let terminals: Vec<String> = terminals.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = BTreeSet::new();
        for t in &terminals {
            if !graph.contains(t) {
                return input(format!("terminal `{t}` is not a vertex"));
            }
            if !seen.insert(t) {
                return input(format!("terminal `{t}` repeated"));
            }
        }
        Ok(TerminalGraph {
            graph,
            terminals,
            ordered,
        })
    }

    pub fn terminal_set(&self) -> BTreeSet<String> {
        self.terminals.iter().cloned().collect()
    }

    pub fn terminal_indices(&self) -> Vec<usize> {
        self.terminals
            .iter()
            .map(|t| self.graph.index_of(t).unwrap())
            .collect()
    }

    pub fn is_terminal(&self, v: &str) -> bool {
        self.terminals.iter().any(|t| t == v)
    }

    /// Non-terminal vertex indices.
    pub fn interior(&self) -> Vec<usize> {
        let t = self.terminal_indices();
        (0..self.graph.n()).filter(|v| !t.contains(v)).collect()
    }

    pub fn with_order(&self, ordered: bool) -> TerminalGraph {
        TerminalGraph {
            ordered,
            ..self.clone()
        }
    }

    /// True when no two terminals are adjacent.
    pub fn terminals_independent(&self) -> bool {
        let t = self.terminal_indices();
        t.iter()
            .all(|&a| t.iter().all(|&b| a == b || !self.graph.has_edge(a, b)))
    }
}

/// Graph plus augmentation; vertices `0..n` are the original graph's indices.
struct Augmented {
    graph: Graph,
    n: usize,
}

fn augment(tg: &TerminalGraph) -> Result<Augmented> {
    let g = &tg.graph;
    let n = g.n();
    let t = tg.terminal_indices();
    if t.is_empty() {
        return input("disc-planarity needs at least one terminal");
    }
    let mut edges = g.edges();
    let total = if !tg.ordered || t.len() <= 2 {
        if t.len() >= 2 || !tg.ordered {
            edges.extend(t.iter().map(|&x| (x, n)));
            n + 1
        } else {
            n
        }
    } else {
        let k = t.len();
        let hub = n + k;
        for i in 0..k {
            let f = n + i;
            edges.push((f, t[i]));
            edges.push((f, t[(i + 1) % k]));
            edges.push((f, n + (i + 1) % k));
            edges.push((f, hub));
        }
        n + k + 1
    };
    Ok(Augmented {
        graph: Graph::from_edges(total, &edges)?,
        n,
    })
}

/// Whether `tg` can be drawn in a closed disc with every terminal on the
/// boundary (in the given cyclic order when `tg.ordered`).
pub fn is_disc_planar(tg: &TerminalGraph) -> Result<bool> {
    let aug = augment(tg)?;
    Ok(planar_rotation(&aug.graph).is_some())
}

/// A disc embedding of `tg`: an embedding of the graph whose outer face is
/// the face that touches the disc boundary.
pub fn embed_disc(tg: &TerminalGraph) -> Result<Embedding> {
    let aug = augment(tg)?;
    let rotation = planar_rotation(&aug.graph)
        .ok_or_else(|| Error::Precondition("terminal graph is not disc-planar".into()))?;
    let full = Embedding::from_rotation(aug.graph.clone(), rotation)?;
    let keep: Vec<usize> = (0..aug.n).collect();
    let (mut emb, back) = full.restrict(&keep);
    // the relabelled graph uses decimal ids; rebuild on the original ids
    let rotation: Vec<Vec<usize>> = (0..aug.n).map(|v| emb.rotation(v).to_vec()).collect();
    let outer = outer_face_of(&full, &emb, &back, aug.n)?;
    emb = Embedding::from_rotation(tg.graph.clone(), rotation)?;
    emb.set_outer_face(outer);
    Ok(emb)
}

/// Face of `restricted` (graph on `back`) containing the augmentation
/// vertices `n..` of `full`.
fn outer_face_of(
    full: &Embedding,
    restricted: &Embedding,
    back: &[usize],
    n: usize,
) -> Result<Option<usize>> {
    let fg = full.graph();
    let kept = |x: usize| back.contains(&x);
    // vertices of full outside `back` reachable from an augmentation vertex
    let mut region = BTreeSet::new();
    let mut stack: Vec<usize> = (n..fg.n()).filter(|&x| !kept(x)).collect();
    if stack.is_empty() {
        return Ok(None);
    }
    while let Some(v) = stack.pop() {
        if region.insert(v) {
            for &w in fg.neighbors(v) {
                if !kept(w) {
                    stack.push(w);
                }
            }
        }
    }
    for &r in &region {
        for &y in fg.neighbors(r) {
            if kept(y) && restricted.graph().degree(back.iter().position(|&b| b == y).unwrap()) > 0 {
                return full.face_around_corner(restricted, back, y, r);
            }
        }
    }
    Ok(None)
}

/// The facial cycle of the subgraph induced on `d` that bounds the face
/// containing the disc boundary, in tracing (clockwise) order.
pub fn outer_cycle<S: AsRef<str>>(tg: &TerminalGraph, d: &[S]) -> Result<CycleArc> {
    let g = &tg.graph;
    let mut idx = Vec::new();
    for v in d {
        idx.push(g.idx(v.as_ref())?);
    }
    idx.sort_unstable();
    idx.dedup();
    let sub = g.induced(&idx);
    if !is_two_connected(&sub) {
        return Err(Error::Hypothesis(
            "vertex set does not induce a 2-connected subgraph".into(),
        ));
    }
    let aug = augment(tg)?;
    let rotation = planar_rotation(&aug.graph)
        .ok_or_else(|| Error::Precondition("terminal graph is not disc-planar".into()))?;
    let full = Embedding::from_rotation(aug.graph.clone(), rotation)?;
    let (restricted, back) = full.restrict(&idx);
    let face = outer_face_of(&full, &restricted, &back, aug.n)?
        .ok_or_else(|| Error::Hypothesis("no boundary face around the vertex set".into()))?;
    let walk = &restricted.faces()[face];
    let cycle: Vec<String> = walk.iter().map(|&v| g.name(back[v]).to_string()).collect();
    let first = cycle[0].clone();
    CycleArc::new(g, cycle, &first, &first)
}

/// 2-connected: at least three vertices, connected, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    crate::planarity::biconnected_blocks(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn tg(g: Graph, t: &[&str], ordered: bool) -> TerminalGraph {
        TerminalGraph::new(g, t, ordered).unwrap()
    }

    #[test]
    fn c5_with_all_vertices_in_cycle_order() {
        let c5 = named::cycle(5);
        assert!(is_disc_planar(&tg(c5.clone(), &["0", "1", "2", "3", "4"], true)).unwrap());
        // crossing order is impossible on a cycle
        assert!(!is_disc_planar(&tg(c5, &["0", "2", "1", "3", "4"], true)).unwrap());
    }

    #[test]
    fn k4_all_terminals_is_not_disc_planar() {
        let k4 = named::complete(4);
        assert!(!is_disc_planar(&tg(k4, &["0", "1", "2", "3"], false)).unwrap());
    }

    #[test]
    fn needs_a_terminal() {
        let none: [&str; 0] = [];
        assert!(is_disc_planar(&tg(named::cycle(3), &none, false)).is_err());
    }

    #[test]
    fn four_cycle_orders() {
        // C4 with a chord 0-2: terminals 1, 3 on opposite sides of the chord
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_disc_planar(&tg(g.clone(), &["0", "1", "2", "3"], true)).unwrap());
        assert!(!is_disc_planar(&tg(g.clone(), &["0", "2", "1", "3"], true)).unwrap());
        assert!(is_disc_planar(&tg(g, &["0", "1", "2", "3"], false)).unwrap());
    }

    #[test]
    fn outer_cycle_of_wheel_rim() {
        let w = named::wheel(4);
        let t = tg(w, &["0", "1", "2", "3"], true);
        let arc = outer_cycle(&t, &["0", "1", "2", "3"]).unwrap();
        let set: BTreeSet<String> = arc.cycle.iter().cloned().collect();
        assert_eq!(set.len(), 4);
        assert!(!set.contains("4"));
    }

    #[test]
    fn outer_cycle_rejects_trees() {
        let t = tg(named::path(4), &["0", "3"], false);
        assert!(matches!(outer_cycle(&t, &["0", "1", "2"]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn disc_embedding_outer_face_contains_terminals() {
        let w = named::wheel(5);
        let t = tg(w, &["0", "2", "4"], true);
        let emb = embed_disc(&t).unwrap();
        let outer = &emb.faces()[emb.outer_face().unwrap()];
        for x in [0, 2, 4] {
            assert!(outer.contains(&x));
        }
        assert!(emb.euler_holds());
    }
}
