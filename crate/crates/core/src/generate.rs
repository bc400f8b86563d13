//! Instance generation: every disc-planar terminal graph up to rooted
//! isomorphism, and seeded random planar graphs.
//!
//! Terminal graphs are grown one edge at a time from the edgeless graph.
//! Disc-planarity survives edge deletion, so every graph in the class is
//! reached this way; each level keeps one graph per canonical certificate.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{input, Limits, Result};
use crate::graph::Graph;
use crate::iso::{terminal_certificate, Certificate};
use crate::terminal::{is_disc_planar, TerminalGraph};
use crate::wheel::{find_s_good_wheel, Wheel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    /// No edge between two terminals. Applied while growing.
    TerminalsIndependent,
    /// Every terminal has at least two non-terminal neighbors.
    TerminalsSeeTwoInterior,
    Connected,
    /// No S-good wheel with a non-terminal center.
    NoGoodWheel,
    /// Rejects everything.
    Nothing,
}

impl Filter {
    pub fn parse(s: &str) -> Result<Filter> {
        Ok(match s {
            "independent" => Filter::TerminalsIndependent,
            "two-interior" => Filter::TerminalsSeeTwoInterior,
            "connected" => Filter::Connected,
            "no-good-wheel" => Filter::NoGoodWheel,
            "none" => Filter::Nothing,
            _ => return Err(crate::Error::Unknown { kind: "filter", name: s.to_string() }),
        })
    }

    fn accepts(self, tg: &TerminalGraph) -> bool {
        let g = &tg.graph;
        match self {
            Filter::TerminalsIndependent => tg.terminals_independent(),
            Filter::TerminalsSeeTwoInterior => tg.terminal_indices().iter().all(|&t| {
                g.neighbors(t).iter().filter(|&&w| !tg.is_terminal(g.name(w))).count() >= 2
            }),
            Filter::Connected => g.is_connected(),
            Filter::NoGoodWheel => {
                matches!(find_s_good_wheel(tg, &Limits::with_search(g.n())), Ok(None))
            }
            Filter::Nothing => false,
        }
    }
}

fn names(n: usize, s: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i < s { format!("t{}", i + 1) } else { format!("i{}", i - s + 1) })
        .collect()
}

fn build(adj: &[u64], s: usize) -> TerminalGraph {
    let n = adj.len();
    let vs = names(n, s);
    let mut es = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] >> b & 1 == 1 {
                es.push((vs[a].clone(), vs[b].clone()));
            }
        }
    }
    let g = Graph::new(vs.clone(), &es).expect("generated graph is simple");
    TerminalGraph::new(g, &vs[..s], false).expect("terminals exist")
}

/// All disc-planar terminal graphs on exactly `n` vertices with `s`
/// terminals, one per rooted isomorphism class, in generation order.
pub fn terminal_planar_exact(n: usize, s: usize, independent: bool) -> Vec<TerminalGraph> {
    let cert = |adj: &[u64]| -> Certificate { terminal_certificate(&build(adj, s)) };
    let mut level: BTreeMap<Certificate, Vec<u64>> = BTreeMap::new();
    let empty = vec![0u64; n];
    level.insert(cert(&empty), empty);
    let mut out = Vec::new();
    while !level.is_empty() {
        let mut next: BTreeMap<Certificate, Vec<u64>> = BTreeMap::new();
        for adj in level.values() {
            for a in 0..n {
                for b in a + 1..n {
                    if adj[a] >> b & 1 == 1 || (independent && b < s) {
                        continue;
                    }
                    let mut h = adj.clone();
                    h[a] |= 1 << b;
                    h[b] |= 1 << a;
                    let c = cert(&h);
                    if next.contains_key(&c) {
                        continue;
                    }
                    if is_disc_planar(&build(&h, s)).unwrap_or(false) {
                        next.insert(c, h);
                    }
                }
            }
        }
        out.extend(level.into_values().map(|adj| build(&adj, s)));
        level = next;
    }
    out
}

/// Streams the classes with `s` terminals and at most `n_max` vertices that
/// pass every filter, smallest graphs first.
pub fn generate_terminal_planar(
    n_max: usize,
    s: usize,
    filters: &[Filter],
    limits: &Limits,
) -> Result<impl Iterator<Item = TerminalGraph>> {
    limits.check_generate(n_max)?;
    if s == 0 {
        return input("need at least one terminal");
    }
    let independent = filters.contains(&Filter::TerminalsIndependent);
    let filters = filters.to_vec();
    Ok((s..=n_max)
        .flat_map(move |n| terminal_planar_exact(n, s, independent))
        .filter(move |tg| filters.iter().all(|f| f.accepts(tg))))
}

/// A random planar graph: a stacked triangulation on `n` vertices, shuffled
/// by random edge flips, then each edge dropped with probability `p_drop`.
pub fn random_planar<R: Rng>(n: usize, p_drop: f64, rng: &mut R) -> Graph {
    if n < 3 {
        let es: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        return Graph::from_edges(n, &es).unwrap();
    }
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges: BTreeSet<(usize, usize)> = [(0, 1), (1, 2), (0, 2)].into_iter().collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([key(a, v), key(b, v), key(c, v)]);
    }
    for _ in 0..2 * n {
        let fi = rng.gen_range(0..faces.len());
        let r = rng.gen_range(0..3);
        let f = faces[fi];
        let (a, b, c) = (f[r], f[(r + 1) % 3], f[(r + 2) % 3]);
        let Some(gi) = faces.iter().position(|g| (0..3).any(|i| g[i] == b && g[(i + 1) % 3] == a)) else {
            continue;
        };
        let g = faces[gi];
        let d = g.iter().copied().find(|&x| x != a && x != b).unwrap();
        if c == d || edges.contains(&key(c, d)) {
            continue;
        }
        edges.remove(&key(a, b));
        edges.insert(key(c, d));
        faces[fi] = [a, d, c];
        faces[gi] = [d, b, c];
    }
    let mut kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| !rng.gen_bool(p_drop)).collect();
    kept.shuffle(rng);
    Graph::from_edges(n, &kept).unwrap()
}

/// A host graph around a wheel, with four spokes in rim order that can be
/// cross-linked outside the wheel.
#[derive(Debug, Clone)]
pub struct WheelHost {
    pub graph: Graph,
    pub wheel: Wheel,
    pub spokes: [String; 4],
}

/// Rim of 5 to 7 vertices, at least four spokes, and two to four outside
/// vertices. `o0` sees `w1, w3` and `o1` sees `w2, w4`; every other
/// outside edge is random.
pub fn random_wheel_host<R: Rng>(rng: &mut R) -> WheelHost {
    let r = rng.gen_range(5..=7);
    let rim: Vec<String> = (0..r).map(|i| format!("r{i}")).collect();
    let mut spoke_pos: Vec<usize> = (0..r).filter(|_| rng.gen_bool(0.6)).collect();
    while spoke_pos.len() < 4 {
        let p = rng.gen_range(0..r);
        if !spoke_pos.contains(&p) {
            spoke_pos.push(p);
        }
    }
    spoke_pos.sort();
    let mut four: Vec<usize> = spoke_pos.clone();
    four.shuffle(rng);
    four.truncate(4);
    four.sort();
    let w: Vec<String> = four.iter().map(|&p| rim[p].clone()).collect();
    let o = rng.gen_range(2..=4);
    let outside: Vec<String> = (0..o).map(|i| format!("o{i}")).collect();
    let mut es: BTreeSet<(String, String)> = BTreeSet::new();
    let mut add = |a: &str, b: &str| {
        es.insert(crate::graph::edge_key(a, b));
    };
    for i in 0..r {
        add(&rim[i], &rim[(i + 1) % r]);
    }
    for &p in &spoke_pos {
        add("c", &rim[p]);
    }
    add("o0", &w[0]);
    add("o0", &w[2]);
    add("o1", &w[1]);
    add("o1", &w[3]);
    for i in 0..o {
        for j in i + 1..o {
            if rng.gen_bool(0.5) {
                add(&outside[i], &outside[j]);
            }
        }
        for v in &rim {
            if rng.gen_bool(0.2) {
                add(&outside[i], v);
            }
        }
    }
    let mut vs = vec!["c".to_string()];
    vs.extend(rim.iter().cloned());
    vs.extend(outside);
    let es: Vec<(String, String)> = es.into_iter().collect();
    let graph = Graph::new(vs, &es).expect("host is simple");
    let spokes: Vec<String> = spoke_pos.iter().map(|&p| rim[p].clone()).collect();
    WheelHost {
        graph,
        wheel: Wheel::new("c", &rim, &spokes),
        spokes: [w[0].clone(), w[1].clone(), w[2].clone(), w[3].clone()],
    }
}

/// A wheel with every spoke, and terminals `t1..t5` hanging off the rim in
/// order, each seeing one rim vertex or the two ends of a rim edge no later
/// terminal needs.
pub fn random_wheel_side<R: Rng>(rng: &mut R) -> TerminalGraph {
    let k = rng.gen_range(3..=6);
    let rim: Vec<String> = (0..k).map(|i| format!("r{i}")).collect();
    let mut es: Vec<(String, String)> = Vec::new();
    for i in 0..k {
        es.push((rim[i].clone(), rim[(i + 1) % k].clone()));
        es.push(("c".into(), rim[i].clone()));
    }
    let ts: Vec<String> = (1..=5).map(|i| format!("t{i}")).collect();
    for (i, t) in ts.iter().enumerate() {
        let p = i * k / 5;
        let next = if i == 4 { k } else { (i + 1) * k / 5 };
        es.push((t.clone(), rim[p].clone()));
        if next > p && rng.gen_bool(0.5) {
            es.push((t.clone(), rim[(p + 1) % k].clone()));
        }
    }
    let mut vs = vec!["c".to_string()];
    vs.extend(rim);
    vs.extend(ts.iter().cloned());
    TerminalGraph::new(Graph::new(vs, &es).expect("side is simple"), &ts, true).expect("terminals exist")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::iso::rooted_isomorphic;
    use crate::planarity::is_planar;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn six_vertex_independent_classes_include_the_six_vertex_members() {
        let all: Vec<TerminalGraph> = generate_terminal_planar(6, 5, &[Filter::TerminalsIndependent], &Limits::default())
            .unwrap()
            .collect();
        for m in catalog().iter().filter(|m| m.tg.graph.n() == 6) {
            assert!(all.iter().any(|tg| rooted_isomorphic(tg, &m.tg)), "{}", m.name);
        }
    }

    #[test]
    fn five_terminals_alone() {
        let ind: Vec<TerminalGraph> = generate_terminal_planar(5, 5, &[Filter::TerminalsIndependent], &Limits::default())
            .unwrap()
            .collect();
        assert_eq!(ind.len(), 1);
        assert_eq!(ind[0].graph.m(), 0);
    }

    #[test]
    fn reject_all_is_empty() {
        assert_eq!(generate_terminal_planar(6, 4, &[Filter::Nothing], &Limits::default()).unwrap().count(), 0);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(generate_terminal_planar(10, 5, &[], &Limits::default()).is_err());
    }

    #[test]
    fn classes_are_pairwise_distinct() {
        let all = terminal_planar_exact(6, 3, false);
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert!(!rooted_isomorphic(&all[i], &all[j]));
            }
        }
    }

    #[test]
    fn interior_names_sorting_first_do_not_confuse_terminals() {
        // i1 sorts before t1 in the graph's vertex order
        assert_eq!(terminal_planar_exact(3, 2, true).len(), 3);
    }

    #[test]
    fn wheel_hosts_carry_their_wheel() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let h = random_wheel_host(&mut rng);
            assert!(crate::wheel::is_wheel(&h.graph, &h.wheel));
            let side = random_wheel_side(&mut rng);
            assert!(is_disc_planar(&side).unwrap());
            assert!(side.terminals_independent());
        }
    }

    #[test]
    fn random_graphs_are_planar_and_seeded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(3);
        let mut r2 = ChaCha8Rng::seed_from_u64(3);
        for n in [1, 2, 3, 5, 9, 12] {
            let g = random_planar(n, 0.2, &mut r1);
            assert_eq!(g.n(), n);
            assert!(is_planar(&g));
            assert_eq!(g, random_planar(n, 0.2, &mut r2));
        }
        let full = random_planar(12, 0.0, &mut r1);
        assert_eq!(full.m(), 3 * 12 - 6);
    }
}
