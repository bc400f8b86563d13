//! The six small terminal graphs with five terminals and no S-good wheel.
//!
//! Terminals are `t1..t5` in clockwise order around the disc.

use serde::Serialize;

use crate::config::adjacency;
use crate::iso::rooted_isomorphic;
use crate::terminal::TerminalGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogMember {
    pub name: &'static str,
    #[serde(skip)]
    pub tg: TerminalGraph,
    /// The terminal with three interior neighbors, when the member has one.
    pub special_vertex: Option<String>,
}

const T: [&str; 5] = ["t1", "t2", "t3", "t4", "t5"];

fn member(name: &'static str, rows: &[(&str, &str)], special: Option<&str>) -> CatalogMember {
    let mut g = adjacency(rows);
    // terminals with no interior neighbor still belong to the graph
    let missing: Vec<&str> = T.iter().copied().filter(|t| !g.contains(t)).collect();
    if !missing.is_empty() {
        g = g.add::<&str, &str, &str>(&missing, &[]).unwrap();
    }
    CatalogMember {
        name,
        tg: TerminalGraph::new(g, &T, true).expect("catalog terminals exist"),
        special_vertex: special.map(String::from),
    }
}

/// W1, W2, X1, X2, Y, Z in that order.
pub fn catalog() -> Vec<CatalogMember> {
    vec![
        member("W1", &[("u", "t1 t2 t3 t4")], None),
        member("W2", &[("u", "t1 t2 t3 t4 t5")], None),
        member("X1", &[("u", "v t1 t2 t3"), ("v", "t3 t4 t5 t1")], None),
        member("X2", &[("u", "v t1 t2 t3"), ("v", "t3 t4 t5")], None),
        member(
            "Y",
            &[("u", "v t1 t2 t3"), ("v", "w t1 t3 t4"), ("w", "t1 t4 t5")],
            Some("t1"),
        ),
        // terminals x q r s t in that order around the disc
        member(
            "Z",
            &[
                ("z", "t1 t2 t5 u v w"),
                ("u", "t2 t3 v"),
                ("v", "t3 t4 w"),
                ("w", "t4 t5"),
            ],
            None,
        ),
    ]
}

pub fn member_by_name(name: &str) -> Option<CatalogMember> {
    catalog().into_iter().find(|m| m.name.eq_ignore_ascii_case(name))
}

/// The member rooted-isomorphic to `tg`, if any.
pub fn matches_catalog(tg: &TerminalGraph) -> Option<CatalogMember> {
    catalog().into_iter().find(|m| rooted_isomorphic(&m.tg, tg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, VertexEdgeSet};
    use crate::terminal::is_disc_planar;
    use crate::wheel::find_s_good_wheel;
    use crate::Limits;

    #[test]
    fn sizes() {
        let n: Vec<usize> = catalog().iter().map(|m| m.tg.graph.n()).collect();
        assert_eq!(n, vec![6, 6, 7, 7, 8, 9]);
    }

    #[test]
    fn invariants_hold() {
        for m in catalog() {
            assert!(is_disc_planar(&m.tg).unwrap(), "{}", m.name);
            assert!(m.tg.terminals_independent(), "{}", m.name);
            assert_eq!(find_s_good_wheel(&m.tg, &Limits::default()).unwrap(), None, "{}", m.name);
        }
    }

    #[test]
    fn pairwise_distinct() {
        let c = catalog();
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(rooted_isomorphic(&c[i].tg, &c[j].tg), i == j);
            }
        }
    }

    #[test]
    fn y_has_one_terminal_with_three_interior_neighbors() {
        let y = member_by_name("Y").unwrap();
        let g = &y.tg.graph;
        let heavy: Vec<&String> = y
            .tg
            .terminals
            .iter()
            .filter(|t| g.degree(g.index_of(t).unwrap()) == 3)
            .collect();
        assert_eq!(heavy, vec!["t1"]);
        assert_eq!(y.special_vertex.as_deref(), Some("t1"));
    }

    #[test]
    fn matching() {
        for m in catalog() {
            let rotated = m.tg.graph.relabel(|s| match s.strip_prefix('t') {
                Some(i) => format!("t{}", i.parse::<usize>().unwrap() % 5 + 1),
                None => format!("i{s}"),
            });
            let tg = TerminalGraph::new(rotated.unwrap(), &T, true).unwrap();
            assert_eq!(matches_catalog(&tg).unwrap().name, m.name);
        }
        let w2 = member_by_name("W2").unwrap();
        let less = w2.tg.graph.remove(&VertexEdgeSet::new::<&str, _, _>(&[], &[("u", "t5")]).unwrap()).unwrap();
        let tg = TerminalGraph::new(less, &T, true).unwrap();
        assert_eq!(matches_catalog(&tg).unwrap().name, "W1");
        let c5 = TerminalGraph::new(named::cycle(5), &["0", "1", "2", "3", "4"], true).unwrap();
        assert!(matches_catalog(&c5).is_none());
    }
}
