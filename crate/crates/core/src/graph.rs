//! Simple undirected graphs with opaque string vertex ids, plus the surgery
//! operations used throughout the crate.
//!
//! Vertices are kept in a canonical order (numeric ids first, by value, then
//! everything else lexicographically) so every derived structure and every
//! serialization is deterministic. Algorithms work on the canonical indices;
//! names only matter at the edges of the API.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{input, Error, Result};

/// Canonical ordering of vertex ids.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

fn sort_labels(labels: &mut [String]) {
    labels.sort_by(|a, b| label_cmp(a, b));
}

/// An unordered pair of vertex ids, stored with its ends in canonical order.
pub fn edge_key(a: &str, b: &str) -> (String, String) {
    if label_cmp(a, b) == Ordering::Greater {
        (b.to_string(), a.to_string())
    } else {
        (a.to_string(), b.to_string())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E=[", self.names)?;
        for (k, (a, b)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", self.names[a], self.names[b])?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn empty() -> Graph {
        Graph {
            names: Vec::new(),
            index: BTreeMap::new(),
            adj: Vec::new(),
        }
    }

    /// Builds a graph from vertex ids and edges given by id.
    ///
    /// Rejects self-loops, repeated edges, repeated vertex ids and edges
    /// whose endpoints are not listed.
    pub fn new<V, A, B>(vertices: V, edges: &[(A, B)]) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(|v| v.as_ref().to_string()).collect();
        sort_labels(&mut names);
        for w in names.windows(2) {
            if w[0] == w[1] {
                return input(format!("vertex `{}` listed twice", w[0]));
            }
        }
        let index: BTreeMap<String, usize> =
            names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut adj = vec![Vec::new(); names.len()];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| Error::Input(format!("edge endpoint `{a}` is not a vertex")))?;
            let j = *index
                .get(b)
                .ok_or_else(|| Error::Input(format!("edge endpoint `{b}` is not a vertex")))?;
            if i == j {
                return input(format!("self-loop at `{a}`"));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return input(format!("duplicate edge `{a}`-`{b}`"));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { names, index, adj })
    }

    /// Graph on vertices `0..n` (ids are the decimal indices).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(a, b)| {
                if a >= n || b >= n {
                    Err(Error::Input(format!("edge {a}-{b} out of range for n={n}")))
                } else {
                    Ok((a.to_string(), b.to_string()))
                }
            })
            .collect::<Result<_>>()?;
        Graph::new(names, &named)
    }

    /// Like [`Graph::new`] but silently merges duplicate edges and drops loops.
    pub(crate) fn new_merging(vertices: Vec<String>, edges: Vec<(String, String)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a != b {
                set.insert(edge_key(&a, &b));
            }
        }
        let edges: Vec<(String, String)> = set.into_iter().collect();
        Graph::new(vertices, &edges)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn idx(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::Input(format!("unknown vertex `{name}`")))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn adjacent(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.names[i].clone(), self.names[j].clone()))
            .collect()
    }

    /// Neighborhood bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask kernels need n <= 64");
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &j| m | (1u64 << j)))
            .collect()
    }

    /// Subgraph induced on the given indices (ids preserved).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let set: BTreeSet<usize> = keep.iter().copied().collect();
        let names: Vec<String> = set.iter().map(|&i| self.names[i].clone()).collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| set.contains(a) && set.contains(b))
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect();
        Graph::new(names, &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `G - (S ∪ T)`: delete the vertex set S, then the edges in T.
    pub fn remove(&self, arg: &VertexEdgeSet) -> Result<Graph> {
        for v in &arg.vertices {
            if !self.contains(v) {
                return input(format!("cannot remove unknown vertex `{v}`"));
            }
        }
        for (a, b) in &arg.edges {
            for x in [a, b] {
                if !self.contains(x) {
                    return input(format!("edge `{a}`-`{b}` names unknown vertex `{x}`"));
                }
                if arg.vertices.contains(x) {
                    return input(format!("edge `{a}`-`{b}` touches removed vertex `{x}`"));
                }
            }
        }
        let names: Vec<String> = self
            .names
            .iter()
            .filter(|v| !arg.vertices.contains(*v))
            .cloned()
            .collect();
        let edges: Vec<(String, String)> = self
            .edge_names()
            .into_iter()
            .filter(|(a, b)| {
                !arg.vertices.contains(a)
                    && !arg.vertices.contains(b)
                    && !arg.edges.contains(&edge_key(a, b))
            })
            .collect();
        Graph::new(names, &edges)
    }

    /// `G + (S ∪ T)`: add fresh vertices and new edges.
    pub fn add<A: AsRef<str>, B: AsRef<str>, V: AsRef<str>>(
        &self,
        new_vertices: &[V],
        new_edges: &[(A, B)],
    ) -> Result<Graph> {
        let mut names = self.names.clone();
        for v in new_vertices {
            let v = v.as_ref();
            if self.contains(v) {
                return input(format!("new vertex `{v}` clashes with an existing vertex"));
            }
            names.push(v.to_string());
        }
        let mut edges = self.edge_names();
        for (a, b) in new_edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            if self.adjacent(a, b) {
                return input(format!("edge `{a}`-`{b}` already present"));
            }
            edges.push((a.to_string(), b.to_string()));
        }
        Graph::new(names, &edges)
    }

    /// Merges `u` and `w` into a single vertex `name` adjacent to
    /// `N(u) ∪ N(w) \ {u, w}`; parallel edges collapse.
    pub fn identify(&self, u: &str, w: &str, name: &str) -> Result<Graph> {
        if u == w {
            return input(format!("cannot identify `{u}` with itself"));
        }
        let iu = self.idx(u)?;
        let iw = self.idx(w)?;
        if name != u && name != w && self.contains(name) {
            return input(format!("identified vertex `{name}` clashes with an existing vertex"));
        }
        let rename = |i: usize| -> String {
            if i == iu || i == iw {
                name.to_string()
            } else {
                self.names[i].clone()
            }
        };
        let mut names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != iu && i != iw)
            .map(|(_, s)| s.clone())
            .collect();
        names.push(name.to_string());
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (rename(a), rename(b)))
            .collect();
        Graph::new_merging(names, edges)
    }

    /// Union of two graphs on shared ids.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut names: BTreeSet<String> = self.names.iter().cloned().collect();
        names.extend(other.names.iter().cloned());
        let mut edges = self.edge_names();
        edges.extend(other.edge_names());
        Graph::new_merging(names.into_iter().collect(), edges).expect("union of simple graphs")
    }

    /// The same graph with every id passed through `f` (must stay injective).
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Graph> {
        let names: Vec<String> = self.names.iter().map(|s| f(s)).collect();
        let edges: Vec<(String, String)> = self
            .edge_names()
            .into_iter()
            .map(|(a, b)| (f(&a), f(&b)))
            .collect();
        Graph::new(names, &edges)
    }
}

/// The `(S, T)` argument of the surgery operations: a vertex set and a set of
/// vertex pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexEdgeSet {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl VertexEdgeSet {
    pub fn new<V: AsRef<str>, A: AsRef<str>, B: AsRef<str>>(
        vertices: &[V],
        edges: &[(A, B)],
    ) -> Result<Self> {
        let mut out = VertexEdgeSet::default();
        for v in vertices {
            out.vertices.insert(v.as_ref().to_string());
        }
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return input(format!("pair `{a}`-`{b}` is not a 2-element set"));
            }
            out.edges.insert(edge_key(a, b));
        }
        Ok(out)
    }

    pub fn vertices<V: AsRef<str>>(vertices: &[V]) -> Self {
        VertexEdgeSet {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }
}

/// A cycle of a plane graph with a fixed (declared clockwise) orientation and
/// two marked vertices `u`, `v` on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleArc {
    pub cycle: Vec<String>,
    pub u: String,
    pub v: String,
}

impl CycleArc {
    /// Checks that `cycle` is a cycle of `g` (length at least 3, consecutive
    /// vertices adjacent, no repeats) before storing it.
    pub fn new(g: &Graph, cycle: Vec<String>, u: &str, v: &str) -> Result<CycleArc> {
        if cycle.len() < 3 {
            return input("a cycle needs at least three vertices");
        }
        let distinct: BTreeSet<&String> = cycle.iter().collect();
        if distinct.len() != cycle.len() {
            return input("cycle repeats a vertex");
        }
        for k in 0..cycle.len() {
            let a = &cycle[k];
            let b = &cycle[(k + 1) % cycle.len()];
            if !g.adjacent(a, b) {
                return input(format!("cycle step `{a}`-`{b}` is not an edge"));
            }
        }
        Ok(CycleArc {
            cycle,
            u: u.to_string(),
            v: v.to_string(),
        })
    }

    /// The subpath from `u` to `v` following the stored orientation; a single
    /// vertex when `u = v`.
    pub fn arc(&self) -> Result<Vec<String>> {
        let pos = |x: &str| {
            self.cycle
                .iter()
                .position(|c| c == x)
                .ok_or_else(|| Error::Input(format!("vertex `{x}` is not on the cycle")))
        };
        let i = pos(&self.u)?;
        let j = pos(&self.v)?;
        let len = self.cycle.len();
        let steps = (j + len - i) % len;
        Ok((0..=steps).map(|k| self.cycle[(i + k) % len].clone()).collect())
    }
}

/// Small named graphs used by tests, examples and experiments.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    /// Rim `0..n`, center `n`.
    pub fn wheel(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.extend((0..n).map(|i| (i, n)));
        Graph::from_edges(n + 1, &e).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &e).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    pub fn octahedron() -> Graph {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    e.push((i, j));
                }
            }
        }
        Graph::from_edges(6, &e).unwrap()
    }

    pub fn icosahedron() -> Graph {
        // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
        let mut e = Vec::new();
        for i in 0..5 {
            let u = 1 + i;
            let u1 = 1 + (i + 1) % 5;
            let l = 6 + i;
            let l1 = 6 + (i + 1) % 5;
            e.push((0, u));
            e.push((u, u1));
            e.push((u, l));
            e.push((u, l1));
            e.push((l, l1));
            e.push((l, 11));
        }
        Graph::from_edges(12, &e).unwrap()
    }

    pub fn grid(rows: usize, cols: usize) -> Graph {
        let id = |r: usize, c: usize| r * cols + c;
        let mut e = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    e.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    e.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        Graph::from_edges(rows * cols, &e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[&str], e: &[(&str, &str)]) -> Graph {
        Graph::new(v.iter().copied(), e).unwrap()
    }

    #[test]
    fn canonical_order_is_numeric_then_lexicographic() {
        let x = g(&["b", "10", "2", "a"], &[]);
        assert_eq!(x.names(), &["2", "10", "a", "b"]);
    }

    #[test]
    fn rejects_loops_duplicates_and_unknown_ends() {
        assert!(Graph::new(["a"], &[("a", "a")]).is_err());
        assert!(Graph::new(["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(Graph::new(["a"], &[("a", "b")]).is_err());
        assert!(Graph::new(["a", "a"], &[] as &[(&str, &str)]).is_err());
    }

    #[test]
    fn remove_vertex_from_k4_gives_triangle() {
        let k4 = g(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        let t = k4.remove(&VertexEdgeSet::vertices(&["d"])).unwrap();
        assert_eq!(t, g(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]));
        assert_eq!(k4.n(), 4);
    }

    #[test]
    fn remove_single_edge_from_c5() {
        let c5 = named::cycle(5);
        let p = c5
            .remove(&VertexEdgeSet::new::<&str, _, _>(&[], &[("0", "1")]).unwrap())
            .unwrap();
        assert_eq!(p, Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 0)]).unwrap());
    }

    #[test]
    fn remove_rejects_unknown_and_overlapping_arguments() {
        let c5 = named::cycle(5);
        assert!(c5.remove(&VertexEdgeSet::vertices(&["9"])).is_err());
        let bad = VertexEdgeSet::new(&["0"], &[("0", "1")]).unwrap();
        assert!(matches!(c5.remove(&bad), Err(Error::Input(_))));
    }

    #[test]
    fn add_duplicate_edge_errors() {
        let p = g(&["a", "b"], &[("a", "b")]);
        assert!(p.add::<_, _, &str>(&[], &[("a", "b")]).is_err());
        assert!(p.add(&["a"], &[] as &[(&str, &str)]).is_err());
    }

    #[test]
    fn add_apex_to_c4_gives_wheel() {
        let c4 = named::cycle(4);
        let w = c4
            .add(&["4"], &[("4", "0"), ("4", "1"), ("4", "2"), ("4", "3")])
            .unwrap();
        assert_eq!(w, named::wheel(4));
    }

    #[test]
    fn identify_merges_parallel_edges() {
        let p = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(p.identify("a", "c", "x").unwrap(), g(&["x", "b"], &[("x", "b")]));
        let c4 = g(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        let m = c4.identify("a", "c", "x").unwrap();
        assert_eq!(m, g(&["x", "b", "d"], &[("x", "b"), ("x", "d")]));
        assert!(c4.identify("a", "a", "x").is_err());
        assert!(c4.identify("a", "c", "b").is_err());
    }

    #[test]
    fn arc_follows_stored_orientation() {
        let c5 = g(
            &["v1", "v2", "v3", "v4", "v5"],
            &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1")],
        );
        let cyc: Vec<String> = ["v1", "v2", "v3", "v4", "v5"].iter().map(|s| s.to_string()).collect();
        let arc = |u: &str, v: &str| CycleArc::new(&c5, cyc.clone(), u, v).unwrap().arc().unwrap();
        assert_eq!(arc("v1", "v1"), vec!["v1"]);
        assert_eq!(arc("v1", "v3"), vec!["v1", "v2", "v3"]);
        assert_eq!(arc("v3", "v1"), vec!["v3", "v4", "v5", "v1"]);
        let off = CycleArc::new(&c5, cyc.clone(), "v1", "zz").unwrap();
        assert!(off.arc().is_err());
        assert!(CycleArc::new(&c5, vec!["v1".into(), "v3".into(), "v2".into()], "v1", "v1").is_err());
    }
}
