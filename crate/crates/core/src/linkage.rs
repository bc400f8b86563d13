//! Exact vertex-disjoint path search.
//!
//! Paths may share endpoints when the same vertex is named in several pairs
//! (as branch vertices do); interiors avoid every endpoint, every forbidden
//! vertex and each other.

use serde::Serialize;

use crate::error::{input, Limits, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub pairs: Vec<(String, String)>,
    pub paths: Vec<Vec<String>>,
}

pub fn find_disjoint_paths<A, B, F>(
    g: &Graph,
    pairs: &[(A, B)],
    forbidden: &[F],
    limits: &Limits,
) -> Result<Option<PathSystem>>
where
    A: AsRef<str>,
    B: AsRef<str>,
    F: AsRef<str>,
{
    limits.check_search(g.n())?;
    let mut ip = Vec::new();
    for (a, b) in pairs {
        ip.push((g.idx(a.as_ref())?, g.idx(b.as_ref())?));
    }
    let mut forb = 0u64;
    for f in forbidden {
        forb |= 1 << g.idx(f.as_ref())?;
    }
    for (i, &(a, b)) in ip.iter().enumerate() {
        if a == b {
            return input(format!("pair {i} has equal endpoints"));
        }
        if forb >> a & 1 == 1 || forb >> b & 1 == 1 {
            return input(format!("pair {i} has a forbidden endpoint"));
        }
        if ip[..i].iter().any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a)) {
            return input(format!("pair {i} is repeated"));
        }
    }
    Ok(link(&g.masks(), &ip, forb).map(|paths| PathSystem {
        pairs: pairs
            .iter()
            .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
            .collect(),
        paths: paths
            .into_iter()
            .map(|p| p.into_iter().map(|v| g.name(v).to_string()).collect())
            .collect(),
    }))
}

/// Core search on adjacency masks. Pairs must be valid (distinct endpoints,
/// no repeats, endpoints not forbidden).
pub(crate) fn link(adj: &[u64], pairs: &[(usize, usize)], forbidden: u64) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let terminals = pairs.iter().fold(0u64, |m, &(a, b)| m | 1 << a | 1 << b);
    let free = all & !terminals & !forbidden;
    let mut paths: Vec<Option<Vec<usize>>> = vec![None; pairs.len()];
    let mut pending = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if adj[a] >> b & 1 == 1 {
            paths[i] = Some(vec![a, b]);
        } else {
            pending.push(i);
        }
    }
    let dist: Vec<Vec<usize>> = pending
        .iter()
        .map(|&i| distances(adj, pairs[i].1, free | 1 << pairs[i].0 | 1 << pairs[i].1))
        .collect();
    let mut order: Vec<usize> = (0..pending.len()).collect();
    order.sort_by_key(|&k| (dist[k][pairs[pending[k]].0], pending[k]));
    let mut search = Search {
        adj,
        pairs,
        pending: order.iter().map(|&k| pending[k]).collect(),
        dist: order.iter().map(|&k| dist[k].clone()).collect(),
        paths: &mut paths,
    };
    if !search.feasible(0, free) || !search.solve(0, free) {
        return None;
    }
    Some(paths.into_iter().map(Option::unwrap).collect())
}

struct Search<'a> {
    adj: &'a [u64],
    pairs: &'a [(usize, usize)],
    pending: Vec<usize>,
    dist: Vec<Vec<usize>>,
    paths: &'a mut Vec<Option<Vec<usize>>>,
}

impl Search<'_> {
    fn solve(&mut self, k: usize, free: u64) -> bool {
        if k == self.pending.len() {
            return true;
        }
        let (s, _) = self.pairs[self.pending[k]];
        let mut path = vec![s];
        self.extend(k, free, &mut path, 1 << s)
    }

    fn extend(&mut self, k: usize, free: u64, path: &mut Vec<usize>, on_path: u64) -> bool {
        let (_, t) = self.pairs[self.pending[k]];
        let a = *path.last().unwrap();
        if self.adj[a] >> t & 1 == 1 {
            // an induced path must close as soon as it can
            let rest = free & !on_path;
            if !self.feasible(k + 1, rest) {
                return false;
            }
            path.push(t);
            self.paths[self.pending[k]] = Some(path.clone());
            if self.solve(k + 1, rest) {
                return true;
            }
            self.paths[self.pending[k]] = None;
            path.pop();
            return false;
        }
        let earlier = on_path & !(1 << a);
        let mut cand: Vec<usize> = bits(self.adj[a] & free & !on_path)
            .filter(|&w| self.adj[w] & earlier == 0)
            .collect();
        cand.sort_by_key(|&w| (self.dist[k][w], w));
        for w in cand {
            let next = on_path | 1 << w;
            if reach(self.adj, w, free & !next | 1 << t) >> t & 1 == 0 {
                continue;
            }
            path.push(w);
            if self.extend(k, free, path, next) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Every pair from `k` on must still be joinable, and every endpoint
    /// needs a free neighbor per path it still has to start.
    fn feasible(&self, k: usize, free: u64) -> bool {
        let mut need = [0u8; 64];
        for &i in &self.pending[k..] {
            let (s, t) = self.pairs[i];
            if reach(self.adj, s, free | 1 << t) >> t & 1 == 0 {
                return false;
            }
            need[s] += 1;
            need[t] += 1;
        }
        need.iter()
            .enumerate()
            .all(|(v, &c)| c == 0 || (self.adj[v] & free).count_ones() >= c as u32)
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

/// Vertices reachable from `src` moving through `allowed`.
pub(crate) fn reach(adj: &[u64], src: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn distances(adj: &[u64], src: usize, allowed: u64) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[src] = 0;
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        for v in bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Checks a path system against its pairs: edges exist, each path is
/// simple, interiors avoid endpoints, forbidden vertices and other paths.
pub fn validate_paths<F: AsRef<str>>(g: &Graph, ps: &PathSystem, forbidden: &[F]) -> bool {
    if ps.pairs.len() != ps.paths.len() {
        return false;
    }
    let ends: Vec<&str> = ps
        .pairs
        .iter()
        .flat_map(|(a, b)| [a.as_str(), b.as_str()])
        .collect();
    let mut used = std::collections::BTreeSet::new();
    for ((a, b), p) in ps.pairs.iter().zip(&ps.paths) {
        if p.len() < 2 || &p[0] != a || p.last().unwrap() != b {
            return false;
        }
        if p.windows(2).any(|w| !g.adjacent(&w[0], &w[1])) {
            return false;
        }
        for v in &p[1..p.len() - 1] {
            if ends.contains(&v.as_str())
                || forbidden.iter().any(|f| f.as_ref() == v)
                || !used.insert(v.clone())
            {
                return false;
            }
        }
    }
    true
}
