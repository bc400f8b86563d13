//! Brute-force reference implementations. Each one enumerates the objects in
//! the definition directly and shares no search code with the library
//! routines it is compared against.

use std::collections::BTreeSet;

use crate::coloring::Coloring;
use crate::error::{input, Error, Limits, Result};
use crate::graph::{edge_key, Graph};
use crate::separation::{Separation, Side};
use crate::subdivision::K5_PAIRS;
use crate::terminal::TerminalGraph;

/// First proper 4-coloring in lexicographic order of `4^n` assignments.
pub fn four_color_brute(g: &Graph, limits: &Limits) -> Result<Option<Coloring>> {
    limits.check_oracle(g.n())?;
    let n = g.n();
    let edges = g.edges();
    let mut c = vec![0u8; n];
    loop {
        if edges.iter().all(|&(a, b)| c[a] != c[b]) {
            return Ok(Some((0..n).map(|v| (g.name(v).to_string(), c[v] + 1)).collect()));
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(None);
            }
            c[i] += 1;
            if c[i] < 4 {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every simple path from `s` to `t` whose interior lies in `free`, as
/// interior bitmasks.
fn all_paths(adj: &[u64], s: usize, t: usize, free: u64) -> Vec<u64> {
    fn go(adj: &[u64], cur: usize, t: usize, free: u64, used: u64, out: &mut Vec<u64>) {
        if adj[cur] >> t & 1 == 1 {
            out.push(used);
        }
        for w in 0..adj.len() {
            if adj[cur] >> w & 1 == 1 && free >> w & 1 == 1 && used >> w & 1 == 0 {
                go(adj, w, t, free, used | 1 << w, out);
            }
        }
    }
    let mut out = Vec::new();
    go(adj, s, t, free, 0, &mut out);
    out
}

fn choose_disjoint(options: &[Vec<u64>], k: usize, used: u64) -> bool {
    if k == options.len() {
        return true;
    }
    options[k]
        .iter()
        .any(|&m| m & used == 0 && choose_disjoint(options, k + 1, used | m))
}

fn linkable(adj: &[u64], pairs: &[(usize, usize)], forbidden: u64) -> bool {
    let n = adj.len();
    let ends = pairs.iter().fold(0u64, |m, &(a, b)| m | 1 << a | 1 << b);
    let free = ((1u64 << n) - 1) & !ends & !forbidden;
    let options: Vec<Vec<u64>> = pairs.iter().map(|&(a, b)| all_paths(adj, a, b, free)).collect();
    choose_disjoint(&options, 0, 0)
}

/// Whether the pairs can be joined by paths with pairwise disjoint interiors
/// avoiding all endpoints and `forbidden`.
pub fn disjoint_paths_brute<A: AsRef<str>, B: AsRef<str>, F: AsRef<str>>(
    g: &Graph,
    pairs: &[(A, B)],
    forbidden: &[F],
    limits: &Limits,
) -> Result<bool> {
    limits.check_oracle(g.n())?;
    let mut ps = Vec::new();
    for (a, b) in pairs {
        ps.push((g.idx(a.as_ref())?, g.idx(b.as_ref())?));
    }
    let mut forb = 0u64;
    for f in forbidden {
        forb |= 1 << g.idx(f.as_ref())?;
    }
    Ok(linkable(&g.masks(), &ps, forb))
}

/// Any 5-set of vertices, any ten internally disjoint paths.
pub fn k5_brute(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_oracle(g.n())?;
    Ok(has_k5(&g.masks(), 0))
}

fn has_k5(adj: &[u64], min_degree: u32) -> bool {
    let pool: Vec<usize> = (0..adj.len()).filter(|&v| adj[v].count_ones() >= min_degree).collect();
    subsets(&pool, 5).into_iter().any(|b| {
        let pairs: Vec<(usize, usize)> = K5_PAIRS.iter().map(|&(i, j)| (b[i], b[j])).collect();
        linkable(adj, &pairs, 0)
    })
}

fn has_k33(adj: &[u64]) -> bool {
    let pool: Vec<usize> = (0..adj.len()).filter(|&v| adj[v].count_ones() >= 3).collect();
    subsets(&pool, 6).into_iter().any(|six| {
        // the side holding six[0], then its two partners
        subsets(&six[1..], 2).into_iter().any(|two| {
            let left = [six[0], two[0], two[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).collect();
            linkable(adj, &pairs, 0)
        })
    })
}

fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if pool.len() < k {
        return vec![];
    }
    let mut out: Vec<Vec<usize>> = subsets(&pool[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, pool[0]);
            s
        })
        .collect();
    out.extend(subsets(&pool[1..], k));
    out
}

/// Planarity by Kuratowski: no subdivision of K5 or K3,3.
pub fn planar_brute(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_oracle(g.n().saturating_sub(1))?;
    let adj = g.masks();
    Ok(!has_k5(&adj, 4) && !has_k33(&adj))
}

/// Disc-planarity as planarity of the graph plus one vertex joined to every
/// terminal. Exact for the unordered question, and for the ordered one up to
/// three terminals (three points on a circle have a single cyclic order up to
/// reflection).
pub fn disc_planar_brute(tg: &TerminalGraph, limits: &Limits) -> Result<bool> {
    if tg.terminals.is_empty() {
        return input("disc-planarity needs at least one terminal");
    }
    if tg.ordered && tg.terminals.len() > 3 {
        return Err(Error::Precondition("ordered oracle covers at most three terminals".into()));
    }
    let mut name = String::from("h");
    while tg.graph.contains(&name) {
        name.push('_');
    }
    let es: Vec<(String, String)> = tg.terminals.iter().map(|t| (name.clone(), t.clone())).collect();
    let h = tg.graph.add(&[name.as_str()], &es)?;
    planar_brute(&h, limits)
}

/// Most rotation systems [`disc_planar_rotations`] will enumerate.
pub const ROTATION_BUDGET: u64 = 200_000;

/// Disc-planarity by enumerating rotation systems of the graph plus an apex
/// joined to the terminals, looking for one with genus 0. In ordered mode
/// the apex rotation is the terminal order, which covers any number of
/// terminals.
///
/// Interior vertices of degree at most 1 are dropped and those of degree 2
/// suppressed first. Errors when more than [`ROTATION_BUDGET`] systems
/// remain.
pub fn disc_planar_rotations(tg: &TerminalGraph, limits: &Limits) -> Result<bool> {
    if tg.terminals.is_empty() {
        return input("disc-planarity needs at least one terminal");
    }
    let g = &tg.graph;
    limits.check_oracle(g.n())?;
    let h = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let ts = tg.terminal_indices();
    for &t in &ts {
        adj[t].insert(h);
    }
    adj.push(BTreeSet::new());
    let reducible = |v: usize| v != h && !ts.contains(&v);
    loop {
        let Some(v) = (0..h).find(|&v| reducible(v) && !adj[v].is_empty() && adj[v].len() <= 2) else {
            break;
        };
        let ns: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &ns {
            adj[w].remove(&v);
        }
        if let [a, b] = ns[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    let mut nbrs: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
    nbrs[h] = ts;
    let active: Vec<usize> = (0..=h).filter(|&v| !nbrs[v].is_empty()).collect();
    let m = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
    if active.len() >= 3 && m > 3 * active.len() - 6 {
        return Ok(false);
    }
    let fixed = |v: usize| nbrs[v].len() <= 2 || (v == h && tg.ordered);
    let count = (0..=h)
        .filter(|&v| !fixed(v))
        .map(|v| (1..nbrs[v].len() as u64).product::<u64>())
        .fold(1u64, u64::saturating_mul);
    if count > ROTATION_BUDGET {
        return Err(Error::ResourceLimit {
            what: "rotation systems",
            limit: ROTATION_BUDGET as usize,
            actual: count as usize,
        });
    }
    // one cyclic order per permutation of all neighbors but the first
    let options: Vec<Vec<Vec<usize>>> = nbrs
        .iter()
        .enumerate()
        .map(|(v, ns)| {
            if fixed(v) {
                return vec![ns.clone()];
            }
            permutations(&ns[1..])
                .into_iter()
                .map(|mut p| {
                    p.insert(0, ns[0]);
                    p
                })
                .collect()
        })
        .collect();
    let n = h + 1;
    let comps = {
        let mut seen = vec![false; n];
        let mut c = 0;
        for &s in &active {
            if seen[s] {
                continue;
            }
            c += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in &nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        c
    };
    let mut pick = vec![0usize; n];
    // succ[v][u]: the neighbor after u around v
    let mut succ = vec![[usize::MAX; 64]; n];
    let mut used = vec![0u64; n];
    loop {
        for v in 0..n {
            let rot = &options[v][pick[v]];
            for i in 0..rot.len() {
                succ[v][rot[i]] = rot[(i + 1) % rot.len()];
            }
        }
        used.fill(0);
        let mut faces = 0;
        for &u in &active {
            for &v in &nbrs[u] {
                if used[u] >> v & 1 == 1 {
                    continue;
                }
                faces += 1;
                let (mut a, mut b) = (u, v);
                while used[a] >> b & 1 == 0 {
                    used[a] |= 1 << b;
                    let c = succ[b][a];
                    a = b;
                    b = c;
                }
            }
        }
        if active.len() + faces == m + 2 * comps {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Every cycle, every center: is there an S-good wheel with a non-terminal
/// center?
pub fn good_wheel_brute(tg: &TerminalGraph, limits: &Limits) -> Result<bool> {
    let g = &tg.graph;
    limits.check_oracle(g.n())?;
    let adj = g.masks();
    let terms = tg.terminal_indices().iter().fold(0u64, |m, &t| m | 1 << t);
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        cycles_from(&adj, s, s, 1 << s, &mut cycles);
    }
    Ok(cycles.iter().any(|&cyc| {
        (0..g.n()).any(|c| {
            cyc >> c & 1 == 0
                && terms >> c & 1 == 0
                && (adj[c] & cyc).count_ones() >= 3
                && cyc & terms & !adj[c] == 0
        })
    }))
}

/// Vertex sets of cycles whose smallest vertex is `s`.
fn cycles_from(adj: &[u64], s: usize, cur: usize, used: u64, out: &mut Vec<u64>) {
    if used.count_ones() >= 3 && adj[cur] >> s & 1 == 1 {
        out.push(used);
    }
    for w in s + 1..adj.len() {
        if adj[cur] >> w & 1 == 1 && used >> w & 1 == 0 {
            cycles_from(adj, s, w, used | 1 << w, out);
        }
    }
}

/// All k-separations up to swapping, from every assignment of vertices to
/// side 1 only, side 2 only, or both, and of shared edges to either side.
pub fn separations_brute(g: &Graph, k: usize, limits: &Limits) -> Result<BTreeSet<(Side, Side)>> {
    limits.check_oracle(g.n())?;
    let n = g.n();
    let edges = g.edge_names();
    let mut out = BTreeSet::new();
    let mut place = vec![0u8; n]; // 0 both, 1 side 1 only, 2 side 2 only
    'outer: loop {
        if place.iter().filter(|&&p| p == 0).count() == k {
            let at = |v: &str| place[g.index_of(v).unwrap()];
            let ok = edges.iter().all(|(a, b)| at(a) * at(b) != 2);
            if ok {
                let shared: Vec<&(String, String)> = edges.iter().filter(|(a, b)| at(a) == 0 && at(b) == 0).collect();
                for split in 0u64..1 << shared.len() {
                    let mut s1 = Side { vertices: BTreeSet::new(), edges: BTreeSet::new() };
                    let mut s2 = s1.clone();
                    for v in 0..n {
                        if place[v] != 2 {
                            s1.vertices.insert(g.name(v).to_string());
                        }
                        if place[v] != 1 {
                            s2.vertices.insert(g.name(v).to_string());
                        }
                    }
                    for (a, b) in &edges {
                        let side = if at(a) == 1 || at(b) == 1 {
                            &mut s1
                        } else if at(a) == 2 || at(b) == 2 {
                            &mut s2
                        } else {
                            let j = shared.iter().position(|e| *e == &(a.clone(), b.clone())).unwrap();
                            if split >> j & 1 == 1 { &mut s1 } else { &mut s2 }
                        };
                        side.edges.insert(edge_key(a, b));
                    }
                    let has_own = |side: &Side, code: u8| !side.edges.is_empty() || place.contains(&code);
                    if has_own(&s1, 1) && has_own(&s2, 2) {
                        let sep = Separation { side1: s1, side2: s2 };
                        out.insert(sep.key());
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            place[i] += 1;
            if place[i] < 3 {
                break;
            }
            place[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

/// Number of rooted isomorphism classes of disc-planar terminal graphs on
/// `n` vertices whose first `s` vertices are the terminals, by listing every
/// labeled graph and every terminal-preserving permutation.
pub fn terminal_classes_brute(n: usize, s: usize, independent: bool, limits: &Limits) -> Result<usize> {
    limits.check_oracle(n)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms: Vec<Vec<usize>> = permutations(&(0..s).collect::<Vec<_>>())
        .into_iter()
        .flat_map(|p| {
            permutations(&(s..n).collect::<Vec<_>>()).into_iter().map(move |q| {
                let mut full = p.clone();
                full.extend(q);
                full
            })
        })
        .collect();
    let names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let es: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if independent && es.iter().any(|&(a, b)| a < s && b < s) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut img: Vec<(usize, usize)> = es.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                img.sort();
                img
            })
            .min()
            .unwrap();
        if seen.contains(&canon) {
            continue;
        }
        let g = Graph::from_edges(n, &es)?;
        let tg = TerminalGraph::new(g, &names[..s], false)?;
        if disc_planar_brute(&tg, &Limits { oracle_vertices: n + 1, ..*limits })? {
            seen.insert(canon);
        }
    }
    Ok(seen.len())
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn colorings() {
        assert!(four_color_brute(&named::complete(4), &lim()).unwrap().is_some());
        assert!(four_color_brute(&named::complete(5), &lim()).unwrap().is_none());
        assert!(four_color_brute(&named::complete(9), &lim()).is_err());
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(k5_brute(&named::complete(5), &lim()).unwrap());
        assert!(!k5_brute(&named::complete_bipartite(3, 3), &lim()).unwrap());
        assert!(!planar_brute(&named::complete_bipartite(3, 3), &lim()).unwrap());
        assert!(planar_brute(&named::octahedron(), &lim()).unwrap());
        assert!(!planar_brute(&named::complete(5), &lim()).unwrap());
    }

    #[test]
    fn c6_two_separations() {
        let seps = separations_brute(&named::cycle(6), 2, &lim()).unwrap();
        // 9 non-adjacent pairs, 6 adjacent pairs (one arc is a single edge)
        assert_eq!(seps.len(), 15);
    }

    #[test]
    fn wheels_in_small_graphs() {
        let none: [&str; 0] = [];
        let w = TerminalGraph::new(named::wheel(4), &none, false).unwrap();
        assert!(good_wheel_brute(&w, &lim()).unwrap());
        let c = TerminalGraph::new(named::cycle(6), &none, false).unwrap();
        assert!(!good_wheel_brute(&c, &lim()).unwrap());
    }

    #[test]
    fn rotation_oracle_sees_terminal_order() {
        let chorded = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        for (order, ordered, want) in [
            (["0", "1", "3", "4"], true, true),
            (["0", "3", "1", "4"], true, false),
            (["0", "3", "1", "4"], false, true),
        ] {
            let tg = TerminalGraph::new(chorded.clone(), &order, ordered).unwrap();
            assert_eq!(disc_planar_rotations(&tg, &lim()).unwrap(), want, "{order:?} {ordered}");
        }
        let k4 = TerminalGraph::new(named::complete(4), &["0", "1", "2", "3"], false).unwrap();
        assert!(!disc_planar_rotations(&k4, &lim()).unwrap());
        let k4 = TerminalGraph::new(named::complete(4), &["0", "1", "2"], false).unwrap();
        assert!(disc_planar_rotations(&k4, &lim()).unwrap());
    }

    #[test]
    fn small_class_counts() {
        // five isolated terminals only
        assert_eq!(terminal_classes_brute(5, 5, true, &lim()).unwrap(), 1);
        // two terminals plus one vertex: edge present or not for three pairs
        assert_eq!(terminal_classes_brute(3, 2, false, &lim()).unwrap(), 6);
    }
}
