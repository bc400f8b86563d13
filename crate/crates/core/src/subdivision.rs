//! K5-subdivisions: the witness type, an independent validator, exact search
//! and the wheel-plus-two-paths construction.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::graph::Graph;
use crate::linkage::{link, PathSystem};
use crate::wheel::{is_wheel, Wheel};

/// The ten K5 edges in the order paths are stored.
pub const K5_PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub branch: Vec<String>,
    /// `paths[k]` joins `branch[K5_PAIRS[k].0]` to `branch[K5_PAIRS[k].1]`.
    pub paths: Vec<Vec<String>>,
}

impl Subdivision {
    /// Vertex set of the subdivision.
    pub fn vertices(&self) -> BTreeSet<String> {
        self.paths.iter().flatten().cloned().collect()
    }

    /// Edge set as sorted name pairs.
    pub fn edges(&self) -> BTreeSet<(String, String)> {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| crate::graph::edge_key(&w[0], &w[1])))
            .collect()
    }

    /// Builds the witness from a subgraph given as an edge list when that
    /// subgraph is exactly a subdivided K5 (five degree-4 vertices, all others
    /// of degree 2, ten threads).
    pub fn from_edges(edges: &BTreeSet<(String, String)>) -> Option<Subdivision> {
        let mut verts: Vec<String> = edges.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        verts.sort();
        verts.dedup();
        let h = Graph::new(&verts, &edges.iter().cloned().collect::<Vec<_>>()).ok()?;
        let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 4).collect();
        if branch.len() != 5 || (0..h.n()).any(|v| h.degree(v) != 4 && h.degree(v) != 2) {
            return None;
        }
        let mut paths: Vec<Option<Vec<String>>> = vec![None; 10];
        for (bi, &b) in branch.iter().enumerate() {
            for &first in h.neighbors(b) {
                let mut p = vec![b, first];
                let mut prev = b;
                let mut cur = first;
                while h.degree(cur) == 2 {
                    let nxt = *h.neighbors(cur).iter().find(|&&x| x != prev)?;
                    prev = cur;
                    cur = nxt;
                    p.push(cur);
                }
                let bj = branch.iter().position(|&x| x == cur)?;
                if bj <= bi {
                    continue;
                }
                let k = K5_PAIRS.iter().position(|&pr| pr == (bi, bj))?;
                if paths[k].is_some() {
                    return None;
                }
                paths[k] = Some(p.iter().map(|&v| h.name(v).to_string()).collect());
            }
        }
        let s = Subdivision {
            branch: branch.iter().map(|&v| h.name(v).to_string()).collect(),
            paths: paths.into_iter().collect::<Option<Vec<_>>>()?,
        };
        validate_subdivision(&h, &s).ok()?;
        Some(s)
    }
}

/// Independent check of the subdivision invariants inside `g`.
pub fn validate_subdivision(g: &Graph, s: &Subdivision) -> Result<()> {
    let fail = |m: String| Err(Error::Construction(m));
    if s.branch.len() != 5 {
        return fail(format!("{} branch vertices", s.branch.len()));
    }
    let branch: BTreeSet<&String> = s.branch.iter().collect();
    if branch.len() != 5 {
        return fail("branch vertices repeat".into());
    }
    for b in &s.branch {
        if !g.contains(b) {
            return fail(format!("branch vertex `{b}` not in graph"));
        }
    }
    if s.paths.len() != 10 {
        return fail(format!("{} paths", s.paths.len()));
    }
    let mut interior = BTreeSet::new();
    for (k, p) in s.paths.iter().enumerate() {
        let (i, j) = K5_PAIRS[k];
        if p.len() < 2 || p[0] != s.branch[i] || *p.last().unwrap() != s.branch[j] {
            return fail(format!("path {k} does not join its branch pair"));
        }
        for w in p.windows(2) {
            if !g.adjacent(&w[0], &w[1]) {
                return fail(format!("path {k} uses non-edge {}-{}", w[0], w[1]));
            }
        }
        for v in &p[1..p.len() - 1] {
            if branch.contains(v) {
                return fail(format!("path {k} passes through branch vertex `{v}`"));
            }
            if !interior.insert(v.clone()) {
                return fail(format!("vertex `{v}` is used twice"));
            }
        }
    }
    Ok(())
}

/// Exact search: every 5-set of vertices of degree at least 4, in canonical
/// order, then a ten-pair linkage between them.
pub fn find_k5_subdivision(g: &Graph, limits: &Limits) -> Result<Option<Subdivision>> {
    limits.check_search(g.n())?;
    Ok(k5_in(g, None))
}

/// Same search, restricted to branch sets drawn from `candidates`.
pub(crate) fn k5_in(g: &Graph, candidates: Option<&[usize]>) -> Option<Subdivision> {
    let adj = g.masks();
    let pool: Vec<usize> = match candidates {
        Some(c) => c.iter().copied().filter(|&v| g.degree(v) >= 4).collect(),
        None => (0..g.n()).filter(|&v| g.degree(v) >= 4).collect(),
    };
    if pool.len() < 5 {
        return None;
    }
    let sets = five_subsets(&pool);
    sets.par_iter()
        .find_map_first(|b| {
            let missing = K5_PAIRS
                .iter()
                .filter(|&&(i, j)| adj[b[i]] >> b[j] & 1 == 0)
                .count();
            if missing > g.n() - 5 {
                return None;
            }
            let pairs: Vec<(usize, usize)> = K5_PAIRS.iter().map(|&(i, j)| (b[i], b[j])).collect();
            link(&adj, &pairs, 0).map(|paths| Subdivision {
                branch: b.iter().map(|&v| g.name(v).to_string()).collect(),
                paths: paths
                    .into_iter()
                    .map(|p| p.into_iter().map(|v| g.name(v).to_string()).collect())
                    .collect(),
            })
        })
}

fn five_subsets(pool: &[usize]) -> Vec<[usize; 5]> {
    let k = pool.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    for e in d + 1..k {
                        out.push([pool[a], pool[b], pool[c], pool[d], pool[e]]);
                    }
                }
            }
        }
    }
    out
}

/// A wheel with spokes `w1..w4` in rim order plus disjoint paths joining
/// `w1` to `w3` and `w2` to `w4` outside the wheel form a K5-subdivision:
/// spokes, the four rim arcs and the two paths.
pub fn wheel_plus_paths_to_k5(g: &Graph, w: &Wheel, ws: [&str; 4], p: &PathSystem) -> Result<Subdivision> {
    if w.spokes.len() < 4 {
        return Err(Error::Precondition(format!(
            "wheel has {} spokes, need 4",
            w.spokes.len()
        )));
    }
    if !is_wheel(g, w) {
        return Err(Error::Precondition("not a wheel of the graph".into()));
    }
    let mut pos = Vec::new();
    for x in ws {
        if !w.spokes.contains(x) {
            return Err(Error::Precondition(format!("`{x}` is not a spoke")));
        }
        pos.push(w.rim.iter().position(|r| r == x).unwrap());
    }
    if pos.iter().collect::<BTreeSet<_>>().len() != 4 {
        return Err(Error::Precondition("spokes are not distinct".into()));
    }
    let k = w.rim.len();
    let increasing = |d: &dyn Fn(usize) -> usize| (0..3).all(|j| d(pos[j]) < d(pos[j + 1]));
    let forward = increasing(&|x| (x + k - pos[0]) % k);
    let backward = increasing(&|x| (pos[0] + k - x) % k);
    if !forward && !backward {
        return Err(Error::Precondition("spokes are not in cyclic rim order".into()));
    }
    let arc = |a: usize, b: usize| -> Vec<String> {
        let mut out = Vec::new();
        let mut i = a;
        loop {
            out.push(w.rim[i].clone());
            if i == b {
                break;
            }
            i = if forward { (i + 1) % k } else { (i + k - 1) % k };
        }
        out
    };
    if p.paths.len() != 2 {
        return Err(Error::Precondition("need exactly two linkage paths".into()));
    }
    let oriented = |path: &Vec<String>, a: &str, b: &str| -> Result<Vec<String>> {
        if path.first().map(String::as_str) == Some(a) && path.last().map(String::as_str) == Some(b) {
            Ok(path.clone())
        } else if path.first().map(String::as_str) == Some(b) && path.last().map(String::as_str) == Some(a) {
            Ok(path.iter().rev().cloned().collect())
        } else {
            Err(Error::Precondition(format!("no path joins `{a}` and `{b}`")))
        }
    };
    let p13 = oriented(&p.paths[0], ws[0], ws[2]).or_else(|_| oriented(&p.paths[1], ws[0], ws[2]))?;
    let p24 = oriented(&p.paths[1], ws[1], ws[3]).or_else(|_| oriented(&p.paths[0], ws[1], ws[3]))?;
    let wheel_vs = w.vertices();
    let mut seen = BTreeSet::new();
    for (name, path) in [("first", &p13), ("second", &p24)] {
        for v in &path[1..path.len() - 1] {
            if wheel_vs.contains(v) {
                return Err(Error::Construction(format!(
                    "{name} path meets the wheel at `{v}`"
                )));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Construction(format!("the paths share `{v}`")));
            }
        }
    }
    let c = w.center.clone();
    let s = |x: &str| x.to_string();
    // branch order: center, w1, w2, w3, w4
    let paths = vec![
        vec![c.clone(), s(ws[0])],
        vec![c.clone(), s(ws[1])],
        vec![c.clone(), s(ws[2])],
        vec![c.clone(), s(ws[3])],
        arc(pos[0], pos[1]),
        p13,
        arc(pos[3], pos[0]).into_iter().rev().collect(),
        arc(pos[1], pos[2]),
        p24,
        arc(pos[2], pos[3]),
    ];
    let sub = Subdivision {
        branch: vec![c, s(ws[0]), s(ws[1]), s(ws[2]), s(ws[3])],
        paths,
    };
    validate_subdivision(g, &sub)?;
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k5_is_its_own_subdivision() {
        let s = find_k5_subdivision(&named::complete(5), &Limits::default()).unwrap().unwrap();
        assert!(s.paths.iter().all(|p| p.len() == 2));
        validate_subdivision(&named::complete(5), &s).unwrap();
    }

    #[test]
    fn petersen_and_planar_graphs_have_none() {
        let lim = Limits::default();
        assert_eq!(find_k5_subdivision(&named::petersen(), &lim).unwrap(), None);
        assert_eq!(find_k5_subdivision(&named::icosahedron(), &lim).unwrap(), None);
        assert_eq!(find_k5_subdivision(&named::octahedron(), &lim).unwrap(), None);
    }

    #[test]
    fn subdivided_k5_found() {
        let g = Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (5, 2), (1, 3), (1, 6), (6, 4), (2, 3), (2, 7), (7, 4), (3, 4)],
        )
        .unwrap();
        let s = find_k5_subdivision(&g, &Limits::default()).unwrap().unwrap();
        validate_subdivision(&g, &s).unwrap();
        assert_eq!(Subdivision::from_edges(&s.edges()).unwrap().branch, s.branch);
    }

    fn wheel_host() -> (Graph, Wheel) {
        // W4 on rim 0..3 with center 4, x=5 on 0,2 and y=6 on 1,3
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 2), (6, 1), (6, 3)],
        )
        .unwrap();
        (g, Wheel::new("4", &["0", "1", "2", "3"], &["0", "1", "2", "3"]))
    }

    #[test]
    fn wheel_and_cross_paths() {
        let (g, w) = wheel_host();
        let p = PathSystem {
            pairs: vec![("0".into(), "2".into()), ("1".into(), "3".into())],
            paths: vec![vec!["0".into(), "5".into(), "2".into()], vec!["1".into(), "6".into(), "3".into()]],
        };
        let s = wheel_plus_paths_to_k5(&g, &w, ["0", "1", "2", "3"], &p).unwrap();
        validate_subdivision(&g, &s).unwrap();
        // the reverse rim order works too
        wheel_plus_paths_to_k5(&g, &w, ["3", "2", "1", "0"], &p).unwrap();
        assert!(find_k5_subdivision(&g, &Limits::default()).unwrap().is_some());
        assert!(wheel_plus_paths_to_k5(&g, &w, ["0", "2", "1", "3"], &p).is_err());
    }

    #[test]
    fn shared_interior_is_a_construction_error() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 1), (5, 2), (5, 3)],
        )
        .unwrap();
        let w = Wheel::new("4", &["0", "1", "2", "3"], &["0", "1", "2", "3"]);
        let p = PathSystem {
            pairs: vec![("0".into(), "2".into()), ("1".into(), "3".into())],
            paths: vec![vec!["0".into(), "5".into(), "2".into()], vec!["1".into(), "5".into(), "3".into()]],
        };
        assert!(matches!(
            wheel_plus_paths_to_k5(&g, &w, ["0", "1", "2", "3"], &p),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn three_spokes_is_a_precondition_error() {
        let (g, _) = wheel_host();
        let w = Wheel::new("4", &["0", "1", "2", "3"], &["0", "1", "2"]);
        let p = PathSystem { pairs: vec![], paths: vec![] };
        assert!(matches!(
            wheel_plus_paths_to_k5(&g, &w, ["0", "1", "2", "3"], &p),
            Err(Error::Precondition(_))
        ));
    }
}
