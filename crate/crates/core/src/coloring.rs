//! Exact 4-coloring and precolored extensions. Colors are `1..=4`.

use std::collections::BTreeMap;

use crate::error::{input, Limits, Result};
use crate::graph::Graph;

/// Partial map from vertex id to color.
pub type Coloring = BTreeMap<String, u8>;

pub const COLORS: [u8; 4] = [1, 2, 3, 4];

/// No edge inside the colored part has equal colors, and every color is in
/// `1..=4`.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.values().all(|x| COLORS.contains(x))
        && g.edge_names().iter().all(|(a, b)| match (c.get(a), c.get(b)) {
            (Some(x), Some(y)) => x != y,
            _ => true,
        })
}

pub fn is_total(g: &Graph, c: &Coloring) -> bool {
    g.names().iter().all(|v| c.contains_key(v))
}

/// Least color absent from the colored neighbors of `v`.
pub(crate) fn least_free(g: &Graph, c: &Coloring, v: usize) -> Option<u8> {
    let used: Vec<u8> = g
        .neighbors(v)
        .iter()
        .filter_map(|&w| c.get(g.name(w)).copied())
        .collect();
    COLORS.into_iter().find(|x| !used.contains(x))
}

/// A proper 4-coloring, or `None` when the graph needs five colors.
/// Backtracking on the vertex with the fewest remaining colors.
pub fn four_color(g: &Graph, limits: &Limits) -> Result<Option<Coloring>> {
    limits.check_search(g.n())?;
    let none = vec![None; g.n()];
    Ok(color_with(g, none, &(0..g.n()).collect::<Vec<_>>(), 0b1111)
        .map(|cols| to_coloring(g, &cols)))
}

/// Colors `todo` from the palette mask (bit `c-1` for color `c`) extending
/// the fixed entries of `cols`.
fn color_with(g: &Graph, mut cols: Vec<Option<u8>>, todo: &[usize], palette: u8) -> Option<Vec<Option<u8>>> {
    let mut left: Vec<usize> = todo.iter().copied().filter(|&v| cols[v].is_none()).collect();
    if solve(g, &mut cols, &mut left, palette) {
        Some(cols)
    } else {
        None
    }
}

fn options(g: &Graph, cols: &[Option<u8>], v: usize, palette: u8) -> u8 {
    let mut m = palette;
    for &w in g.neighbors(v) {
        if let Some(c) = cols[w] {
            m &= !(1 << (c - 1));
        }
    }
    m
}

fn solve(g: &Graph, cols: &mut [Option<u8>], left: &mut Vec<usize>, palette: u8) -> bool {
    if left.is_empty() {
        return true;
    }
    // most constrained vertex first; a vertex with one option is forced
    let (k, _) = left
        .iter()
        .enumerate()
        .map(|(k, &v)| (k, (options(g, cols, v, palette).count_ones(), std::cmp::Reverse(g.degree(v)))))
        .min_by_key(|&(_, key)| key)
        .unwrap();
    let v = left.swap_remove(k);
    let mut opts = options(g, cols, v, palette);
    while opts != 0 {
        let c = opts.trailing_zeros() as u8 + 1;
        opts &= opts - 1;
        cols[v] = Some(c);
        if solve(g, cols, left, palette) {
            return true;
        }
    }
    cols[v] = None;
    left.push(v);
    let last = left.len() - 1;
    left.swap(k.min(last), last);
    false
}

fn to_coloring(g: &Graph, cols: &[Option<u8>]) -> Coloring {
    cols.iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|c| (g.name(v).to_string(), c)))
        .collect()
}

fn check_base(g: &Graph, base: &Coloring) -> Result<()> {
    for v in base.keys() {
        if !g.contains(v) {
            return input(format!("colored vertex `{v}` is not in the graph"));
        }
    }
    if !is_proper(g, base) {
        return input("base coloring is not proper");
    }
    Ok(())
}

/// Colors `order` one at a time with the least color missing from the
/// already-colored neighbors; `None` if some vertex sees all four colors.
/// `order` must list exactly the uncolored vertices.
pub fn extend_greedy<S: AsRef<str>>(g: &Graph, base: &Coloring, order: &[S]) -> Result<Option<Coloring>> {
    check_base(g, base)?;
    let mut seen = std::collections::BTreeSet::new();
    for v in order {
        let v = v.as_ref();
        g.idx(v)?;
        if base.contains_key(v) {
            return input(format!("`{v}` is already colored"));
        }
        if !seen.insert(v) {
            return input(format!("`{v}` repeated in the order"));
        }
    }
    if seen.len() + base.len() != g.n() {
        return input("order does not cover the uncolored vertices");
    }
    let mut c = base.clone();
    for v in order {
        let i = g.idx(v.as_ref())?;
        match least_free(g, &c, i) {
            Some(x) => {
                c.insert(v.as_ref().to_string(), x);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(c))
}

/// Applies the forced colors, then [`extend_greedy`] on `order`.
pub fn assign_then_extend<S: AsRef<str>>(
    g: &Graph,
    base: &Coloring,
    forced: &Coloring,
    order: &[S],
) -> Result<Option<Coloring>> {
    check_base(g, base)?;
    let mut c = base.clone();
    for (v, &x) in forced {
        if base.contains_key(v) {
            return input(format!("`{v}` is already colored"));
        }
        c.insert(v.clone(), x);
    }
    if !is_proper(g, &c) {
        return input("forced colors clash with the base coloring");
    }
    let out = extend_greedy(g, &c, order)?;
    debug_assert!(out.as_ref().is_none_or(|c| is_proper(g, c)));
    Ok(out)
}

/// Exact extension: colors `vertices` from `palette` so the result stays
/// proper with the colored part of `base`.
pub fn extend_exact<S: AsRef<str>>(g: &Graph, base: &Coloring, vertices: &[S], palette: &[u8]) -> Result<Option<Coloring>> {
    check_base(g, base)?;
    let mut cols = vec![None; g.n()];
    for (v, &x) in base {
        cols[g.idx(v)?] = Some(x);
    }
    let mut todo = Vec::new();
    for v in vertices {
        todo.push(g.idx(v.as_ref())?);
    }
    let mask = palette
        .iter()
        .filter(|x| COLORS.contains(x))
        .fold(0u8, |m, &x| m | 1 << (x - 1));
    Ok(color_with(g, cols, &todo, mask).map(|cols| to_coloring(g, &cols)))
}
