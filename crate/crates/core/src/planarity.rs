//! Planarity testing and planar embedding.
//!
//! Each biconnected block is embedded by path addition: start from a cycle,
//! repeatedly pick the fragment (a chord, or a component of the rest of the
//! block with its attachment edges) that fits into the fewest faces, and draw
//! one of its attachment-to-attachment paths into such a face. A fragment with
//! no admissible face proves the block non-planar. Block rotations are then
//! concatenated at cut vertices, which keeps the embedding spherical.

use std::collections::HashSet;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}

/// A planar embedding of `g`; errors when `g` is not planar.
pub fn embed(g: &Graph) -> Result<Embedding> {
    let rotation = planar_rotation(g)
        .ok_or_else(|| Error::Precondition("graph is not planar".into()))?;
    Embedding::from_rotation(g.clone(), rotation)
}

/// Rotation system (cyclic neighbor order per vertex) of a planar embedding,
/// or `None` when the graph is not planar.
pub(crate) fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    // Euler bound: cheap rejection of dense graphs.
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let mut verts: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |v: usize| verts.binary_search(&v).unwrap();
        let mut adj = vec![Vec::new(); verts.len()];
        for &(a, b) in &block {
            adj[local(a)].push(local(b));
            adj[local(b)].push(local(a));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let rot = embed_block(&adj)?;
        for (lv, order) in rot.into_iter().enumerate() {
            rotation[verts[lv]].extend(order.into_iter().map(|x| verts[x]));
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected blocks, in discovery order.
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(st: &mut State, v: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        for &w in st.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if st.disc[w] == 0 {
                st.stack.push((v, w));
                dfs(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if st.disc[w] < st.disc[v] {
                st.stack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }

    let n = g.n();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.blocks
}

/// Embeds a biconnected block given as local adjacency lists.
fn embed_block(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    if n == 2 {
        return Some(vec![vec![1], vec![0]]);
    }
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let cycle = find_cycle(adj)?;

    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for k in 0..cycle.len() {
        in_h[cycle[k]] = true;
        h_edges.insert(key(cycle[k], cycle[(k + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    while h_edges.len() < m {
        let fragments = fragments(adj, &in_h, &h_edges);
        let mut best: Option<(usize, usize, usize)> = None; // (count, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first = usize::MAX;
            for (k, face) in faces.iter().enumerate() {
                if frag.attachments.iter().all(|a| face.contains(a)) {
                    if count == 0 {
                        first = k;
                    }
                    count += 1;
                }
            }
            if count == 0 {
                return None;
            }
            if best.map_or(true, |(c, _, _)| count < c) {
                best = Some((count, fi, first));
            }
        }
        let (_, fi, face_idx) = best?;
        let path = &fragments[fi].path;
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in path {
            in_h[v] = true;
        }
    }
    rotation_from_faces(adj, &faces)
}

struct Fragment {
    attachments: Vec<usize>,
    path: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for a in 0..n {
        if !in_h[a] {
            continue;
        }
        for &b in &adj[a] {
            if a < b && in_h[b] && !h_edges.contains(&(a, b)) {
                out.push(Fragment {
                    attachments: vec![a, b],
                    path: vec![a, b],
                });
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = s;
        comp[s] = id;
        let mut members = vec![s];
        let mut k = 0;
        let mut attach = Vec::new();
        while k < members.len() {
            let v = members[k];
            k += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    attach.push(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        // BFS from the first attachment through the component to another one.
        let a = attach[0];
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &w in &adj[a] {
            if !in_h[w] && comp[w] == id && prev[w] == usize::MAX {
                prev[w] = a;
                queue.push_back(w);
            }
        }
        let mut end = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if in_h[w] && w != a {
                    end = Some((v, w));
                    break 'bfs;
                }
                if !in_h[w] && comp[w] == id && prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let (last, b) = end.expect("blocks give every fragment two attachments");
        let mut path = vec![b, last];
        let mut cur = last;
        while prev[cur] != a {
            cur = prev[cur];
            path.push(cur);
        }
        path.push(a);
        path.reverse();
        out.push(Fragment {
            attachments: attach,
            path,
        });
    }
    out
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i < adj[v].len() {
            stack.push((v, i + 1));
            let w = adj[v][i];
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cyc = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cyc.push(cur);
                }
                return Some(cyc);
            }
        }
    }
    None
}

/// Splits the dart-cycle `face` along `path` (whose ends lie on the face).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let walk = |from: usize, to: usize| {
        let steps = (to + len - from) % len;
        (0..=steps).map(|k| face[(from + k) % len]).collect::<Vec<_>>()
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Reads the rotation system off a set of oriented facial cycles: a face
/// stepping `u -> v -> w` means `w` follows `u` in the rotation at `v`.
fn rotation_from_faces(adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in faces {
        let len = face.len();
        for k in 0..len {
            let u = face[k];
            let v = face[(k + 1) % len];
            let w = face[(k + 2) % len];
            succ[v].push((u, w));
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let next = |u: usize| succ[v].iter().find(|(x, _)| *x == u).map(|&(_, w)| w);
        let start = adj[v][0];
        let mut order = vec![start];
        let mut cur = next(start)?;
        while cur != start {
            order.push(cur);
            if order.len() > adj[v].len() {
                return None;
            }
            cur = next(cur)?;
        }
        if order.len() != adj[v].len() {
            return None;
        }
        rotation.push(order);
    }
    Some(rotation)
}
