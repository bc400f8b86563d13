//! Combinatorial embeddings: rotation systems, face tracing and cofacial
//! neighborhoods.
//!
//! Face tracing convention: the dart following `u -> v` is `v -> w` where `w`
//! is the successor of `u` in the rotation at `v`. Every traced face walk is
//! reported in that direction, and that direction is what this crate calls
//! clockwise.

use std::collections::{BTreeSet, HashMap};

use crate::error::{input, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer_face: Option<usize>,
}

impl Embedding {
    /// Wraps a rotation system; every vertex's list must be a permutation of
    /// its neighbors. Planarity is not checked here (see [`Embedding::euler_holds`]).
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Embedding> {
        if rotation.len() != graph.n() {
            return input("rotation system size does not match the graph");
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return input(format!(
                    "rotation at `{}` is not a permutation of its neighbors",
                    graph.name(v)
                ));
            }
        }
        let mut emb = Embedding {
            graph,
            rotation,
            outer_face: None,
        };
        if !emb.faces().is_empty() {
            emb.outer_face = Some(0);
        }
        Ok(emb)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    pub(crate) fn set_outer_face(&mut self, f: Option<usize>) {
        self.outer_face = f;
    }

    fn successor(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u).expect("dart in rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Traced faces as vertex walks: consecutive entries (cyclically) are the
    /// darts of the face. Faces are listed in order of their first dart
    /// `(u, v)` with `u` ascending, then `v` ascending.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.graph.n();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut out = Vec::new();
        for u in 0..n {
            for &v in self.graph.neighbors(u) {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a, b), ());
                    walk.push(a);
                    let c = self.successor(b, a);
                    a = b;
                    b = c;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                out.push(walk);
            }
        }
        out
    }

    /// Face walks using vertex ids.
    pub fn faces_named(&self) -> Vec<Vec<String>> {
        self.faces()
            .into_iter()
            .map(|f| f.into_iter().map(|v| self.graph.name(v).to_string()).collect())
            .collect()
    }

    /// Index of the traced face containing dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.faces().iter().position(|f| {
            let len = f.len();
            (0..len).any(|k| f[k] == u && f[(k + 1) % len] == v)
        })
    }

    /// Number of faces of the drawing in the plane: traced faces, plus one per
    /// isolated vertex, with the outer faces of all components merged into one.
    pub fn face_count(&self) -> usize {
        let g = &self.graph;
        if g.n() == 0 {
            return 1;
        }
        let comps = g.components().len();
        let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
        self.faces().len() + isolated + 1 - comps
    }

    /// Euler's formula `|V| - |E| + |F| = 1 + #components` for this embedding.
    pub fn euler_holds(&self) -> bool {
        let g = &self.graph;
        let comps = g.components().len();
        g.n() + self.face_count() == g.m() + 1 + comps
    }

    /// Union of all faces incident with `x` (their vertices and edges) as a
    /// subgraph; an isolated `x` gives the single vertex.
    pub fn cofacial_closure(&self, x: usize) -> Result<Graph> {
        if x >= self.graph.n() {
            return input("vertex index out of range");
        }
        let mut verts = BTreeSet::from([x]);
        let mut edges = BTreeSet::new();
        for face in self.faces() {
            if !face.contains(&x) {
                continue;
            }
            let len = face.len();
            for k in 0..len {
                let a = face[k];
                let b = face[(k + 1) % len];
                verts.insert(a);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let names: Vec<&str> = verts.iter().map(|&v| self.graph.name(v)).collect();
        let edges: Vec<(&str, &str)> = edges
            .iter()
            .map(|&(a, b)| (self.graph.name(a), self.graph.name(b)))
            .collect();
        Graph::new(names, &edges)
    }

    /// The embedding restricted to the subgraph induced on `keep` (indices of
    /// this embedding's graph). Returns the restricted embedding and the map
    /// from its indices back to ours.
    pub fn restrict(&self, keep: &[usize]) -> (Embedding, Vec<usize>) {
        let sub = self.graph.induced(keep);
        let back: Vec<usize> = sub
            .names()
            .iter()
            .map(|s| self.graph.index_of(s).unwrap())
            .collect();
        let fwd: HashMap<usize, usize> = back.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let rotation: Vec<Vec<usize>> = back
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter_map(|w| fwd.get(w).copied())
                    .collect()
            })
            .collect();
        let emb = Embedding::from_rotation(sub, rotation).expect("restriction keeps permutations");
        (emb, back)
    }

    /// Traced face of the sub-embedding on `keep` that contains the corner
    /// where edge `y -> k` leaves `y` (`y` kept, `k` not kept). Returned as the
    /// face index in `restricted.faces()`.
    pub(crate) fn face_around_corner(
        &self,
        restricted: &Embedding,
        back: &[usize],
        y: usize,
        k: usize,
    ) -> Result<Option<usize>> {
        let rot = &self.rotation[y];
        let pos = rot
            .iter()
            .position(|&x| x == k)
            .ok_or_else(|| Error::Input("corner edge is not in the rotation".into()))?;
        let kept = |x: usize| back.contains(&x);
        // nearest kept neighbor before k in the rotation at y
        let len = rot.len();
        let prev = (1..=len).map(|s| rot[(pos + len - s) % len]).find(|&x| kept(x));
        let Some(p) = prev else {
            return Ok(None);
        };
        let ly = back.iter().position(|&x| x == y).unwrap();
        let lp = back.iter().position(|&x| x == p).unwrap();
        Ok(restricted.face_of_dart(lp, ly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::planarity::embed;

    #[test]
    fn face_tracing_partitions_darts() {
        for g in [named::complete(4), named::octahedron(), named::grid(3, 3), named::wheel(6)] {
            let emb = embed(&g).unwrap();
            let darts: usize = emb.faces().iter().map(Vec::len).sum();
            assert_eq!(darts, 2 * g.m());
            assert!(emb.euler_holds());
        }
    }

    #[test]
    fn disconnected_and_isolated_vertices() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let emb = embed(&g).unwrap();
        // triangle inside + outside, one edge, one isolated vertex
        assert_eq!(emb.face_count(), 2);
        assert!(emb.euler_holds());
    }

    #[test]
    fn cofacial_closure_examples() {
        let ico = embed(&named::icosahedron()).unwrap();
        let link = ico.cofacial_closure(0).unwrap();
        assert_eq!(link.n(), 6);
        assert_eq!(link.m(), 10);
        let k4 = embed(&named::complete(4)).unwrap();
        assert_eq!(k4.cofacial_closure(2).unwrap(), named::complete(4));
        let c5 = embed(&named::cycle(5)).unwrap();
        assert_eq!(c5.cofacial_closure(3).unwrap(), named::cycle(5));
    }

    #[test]
    fn rejects_bad_rotation() {
        let g = named::cycle(3);
        assert!(Embedding::from_rotation(g.clone(), vec![vec![1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(Embedding::from_rotation(g, vec![]).is_err());
    }
}
