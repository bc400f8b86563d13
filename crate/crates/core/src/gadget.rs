//! Reduction gadgets: delete part of a local configuration, optionally merge
//! two vertices, add shortcut edges or an apex, and lift a K5-subdivision of
//! the reduced graph back to the original.
//!
//! Lifting tries, in order, the subdivision as found and then variants where
//! a branch-to-branch path is swapped for an unused inserted edge. For each,
//! the identity option comes first and then every rewrite; leftover edges
//! that are not in the original graph are replaced from `lift_map`,
//! backtracking over the listed alternatives.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{self, Local};
use crate::error::{Error, Result};
use crate::graph::{edge_key, Graph, VertexEdgeSet};
use crate::subdivision::{k5_in, validate_subdivision, Subdivision, K5_PAIRS};

type Edge = (String, String);

/// A whole-subdivision rewrite: drop vertices and edges of the reduced
/// subdivision, then add paths of the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rewrite {
    pub remove_vertices: Vec<String>,
    pub remove_edges: Vec<Edge>,
    pub add_paths: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetRule {
    pub name: String,
    pub delete: Vec<String>,
    /// `(u, w, merged)`: applied after deletion.
    pub identify: Option<(String, String, String)>,
    pub insert_vertices: Vec<String>,
    pub insert_edges: Vec<Edge>,
    /// Per inserted edge, replacement paths tried in order.
    pub lift_map: BTreeMap<Edge, Vec<Vec<String>>>,
    pub rewrites: Vec<Rewrite>,
}

impl GadgetRule {
    /// A rule that changes nothing.
    pub fn empty(name: &str) -> GadgetRule {
        GadgetRule {
            name: name.to_string(),
            delete: Vec::new(),
            identify: None,
            insert_vertices: Vec::new(),
            insert_edges: Vec::new(),
            lift_map: BTreeMap::new(),
            rewrites: Vec::new(),
        }
    }
}

/// `G' = add(identify(remove(G, delete)), insert)`.
pub fn apply_gadget(g: &Graph, r: &GadgetRule) -> Result<Graph> {
    let mut h = g.remove(&VertexEdgeSet::vertices(&r.delete))?;
    if let Some((u, w, name)) = &r.identify {
        h = h.identify(u, w, name)?;
    }
    h.add(&r.insert_vertices, &r.insert_edges)
}

/// Turns a K5-subdivision of `apply_gadget(g, r)` into one of `g`.
pub fn lift_subdivision(g: &Graph, r: &GadgetRule, tp: &Subdivision) -> Result<Subdivision> {
    let gp = apply_gadget(g, r)?;
    validate_subdivision(&gp, tp)
        .map_err(|e| Error::Precondition(format!("subdivision is not valid in the reduced graph: {e}")))?;
    let inserted: BTreeSet<Edge> = r.insert_edges.iter().map(|(a, b)| edge_key(a, b)).collect();
    let options: Vec<Option<&Rewrite>> = std::iter::once(None).chain(r.rewrites.iter().map(Some)).collect();
    for variant in shortcut_variants(tp, &inserted) {
        let edges = variant.edges();
        for opt in &options {
            if let Some(s) = lift_with(g, r, &edges, *opt) {
                validate_subdivision(g, &s)?;
                return Ok(s);
            }
        }
    }
    Err(Error::LiftingFailure {
        rule: r.name.clone(),
        reason: format!("no replacement choice works for branch set {:?}", tp.branch),
    })
}

fn lift_with(g: &Graph, r: &GadgetRule, edges: &BTreeSet<Edge>, opt: Option<&Rewrite>) -> Option<Subdivision> {
    let mut base: BTreeSet<Edge> = edges.clone();
    if let Some(rw) = opt {
        let gone: BTreeSet<Edge> = rw.remove_edges.iter().map(|(a, b)| edge_key(a, b)).collect();
        base.retain(|(a, b)| !gone.contains(&edge_key(a, b)) && !rw.remove_vertices.contains(a) && !rw.remove_vertices.contains(b));
        for p in &rw.add_paths {
            base.extend(p.windows(2).map(|w| edge_key(&w[0], &w[1])));
        }
    }
    let pending: Vec<Edge> = base.iter().filter(|(a, b)| !g.adjacent(a, b)).cloned().collect();
    let mut choices = Vec::with_capacity(pending.len());
    for e in &pending {
        base.remove(e);
        choices.push(r.lift_map.get(e)?);
    }
    let mut pick = vec![0usize; pending.len()];
    loop {
        let mut h = base.clone();
        for (k, &i) in pick.iter().enumerate() {
            h.extend(choices[k][i].windows(2).map(|w| edge_key(&w[0], &w[1])));
        }
        if h.iter().all(|(a, b)| g.adjacent(a, b)) {
            if let Some(s) = extract(&h) {
                return Some(s);
            }
        }
        // next combination, first pending edge varying fastest
        let mut k = 0;
        loop {
            if k == pick.len() {
                return None;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// The subgraph itself when it is a subdivided K5, otherwise a search inside.
fn extract(h: &BTreeSet<Edge>) -> Option<Subdivision> {
    if let Some(s) = Subdivision::from_edges(h) {
        return Some(s);
    }
    let vs: BTreeSet<&String> = h.iter().flat_map(|(a, b)| [a, b]).collect();
    if vs.len() > 64 {
        return None;
    }
    let es: Vec<Edge> = h.iter().cloned().collect();
    let hg = Graph::new(vs.into_iter().cloned().collect::<Vec<_>>(), &es).ok()?;
    k5_in(&hg, None)
}

/// The subdivision, then each single shortcut, then all shortcuts at once.
fn shortcut_variants(tp: &Subdivision, inserted: &BTreeSet<Edge>) -> Vec<Subdivision> {
    let used = tp.edges();
    let mut singles = Vec::new();
    for (k, &(i, j)) in K5_PAIRS.iter().enumerate() {
        let (a, b) = (&tp.branch[i], &tp.branch[j]);
        let e = edge_key(a, b);
        if tp.paths[k].len() > 2 && inserted.contains(&e) && !used.contains(&e) {
            singles.push(k);
        }
    }
    let with = |ks: &[usize]| {
        let mut s = tp.clone();
        for &k in ks {
            let p = &s.paths[k];
            s.paths[k] = vec![p[0].clone(), p[p.len() - 1].clone()];
        }
        s
    };
    let mut out = vec![tp.clone()];
    out.extend(singles.iter().map(|&k| with(&[k])));
    if singles.len() > 1 {
        out.push(with(&singles));
    }
    out
}

fn path(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn words(s: &str) -> Vec<String> {
    path(s)
}

/// Inserted edges with their replacement alternatives, `"a b": ["a x b", ...]`.
fn rule(name: &str, delete: &str, lifts: &[(&str, &[&str])]) -> GadgetRule {
    let mut r = GadgetRule::empty(name);
    r.delete = words(delete);
    for (e, alts) in lifts {
        let ab = path(e);
        let key = edge_key(&ab[0], &ab[1]);
        r.insert_edges.push((ab[0].clone(), ab[1].clone()));
        if !alts.is_empty() {
            r.lift_map.insert(key, alts.iter().map(|p| path(p)).collect());
        }
    }
    r
}

fn rewrite(remove_vertices: &str, remove_edges: &[&str], add: &[&str]) -> Rewrite {
    Rewrite {
        remove_vertices: words(remove_vertices),
        remove_edges: remove_edges
            .iter()
            .map(|e| {
                let p = path(e);
                (p[0].clone(), p[1].clone())
            })
            .collect(),
        add_paths: add.iter().map(|p| path(p)).collect(),
    }
}

/// A rule together with the local configuration it reduces.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub rule: GadgetRule,
    pub local: Local,
}

fn four_cut_two_interior() -> Gadget {
    Gadget {
        rule: rule("four_cut_two_interior", "u v", &[("v2 v4", &["v2 u v v4"])]),
        local: config::four_cut_two_interior(),
    }
}

fn triangle_three_edges() -> Gadget {
    let mut r = rule(
        "triangle_three_edges",
        "u v w",
        &[
            ("v5 v1", &["v5 u v1"]),
            ("v5 v2", &["v5 w v v2", "v5 u v v2"]),
            ("v5 v3", &["v5 w v3"]),
        ],
    );
    r.rewrites.push(rewrite("", &["v5 v1", "v5 v2", "v5 v3"], &["w v5", "w u v1", "w v v2", "w v3"]));
    Gadget { rule: r, local: config::triangle_covering() }
}

fn triangle_two_edges() -> Gadget {
    Gadget {
        rule: rule(
            "triangle_two_edges",
            "u v w",
            &[("v5 v2", &["v5 u v v2"]), ("v5 v3", &["v5 w v3"])],
        ),
        local: config::triangle_spread(),
    }
}

fn path_two_chords() -> Gadget {
    Gadget {
        rule: rule(
            "path_two_chords",
            "u v w",
            &[("t1 t3", &["t1 u t3"]), ("t1 t4", &["t1 w t4"])],
        ),
        local: config::path_open(),
    }
}

fn path_identify() -> Gadget {
    let mut r = GadgetRule::empty("path_identify");
    r.delete = words("t1 v");
    r.identify = Some(("u".into(), "w".into(), "vm".into()));
    r.rewrites.push(rewrite("vm", &[], &["v t3", "v t4", "v u t2", "v w t5"]));
    Gadget { rule: r, local: config::path_closed() }
}

fn four_cycle_triangle() -> Gadget {
    Gadget {
        rule: rule(
            "four_cycle_triangle",
            "u1 u2 u3 u4",
            &[
                ("t1 t2", &["t1 u1 t2"]),
                ("t2 t3", &["t2 u2 t3"]),
                ("t3 t1", &["t3 u3 u4 t1"]),
            ],
        ),
        local: config::four_cycle_chord(),
    }
}

fn ring_pendant() -> Gadget {
    Gadget {
        rule: rule(
            "ring_pendant",
            "v4 v5 w5",
            &[("x t4", &["x v4 t4"]), ("x t5", &["x w5 t5"])],
        ),
        local: config::ring_pendant(),
    }
}

fn ring_apex() -> Gadget {
    let mut r = rule(
        "ring_apex",
        "v1 v2 v3 x v4 v5 w5",
        &[
            ("t1 t5", &["t5 w5 v1 t1"]),
            ("v t1", &[]),
            ("v t2", &[]),
            ("v t4", &[]),
            ("v t5", &[]),
        ],
    );
    r.insert_vertices.push("v".into());
    r.rewrites.push(rewrite(
        "v",
        &["t1 t5"],
        &["t5 w5 v1 t1", "x v2 t1", "x v3 t2", "x v4 t4", "x v5 t5"],
    ));
    Gadget { rule: r, local: config::ring_apex() }
}

fn ring_apex_five() -> Gadget {
    let mut r = rule(
        "ring_apex_five",
        "v1 v2 v3 v4 v5",
        &[("v t1", &[]), ("v t2", &[]), ("v t3", &[]), ("v t4", &[]), ("v t5", &[])],
    );
    r.insert_vertices.push("v".into());
    let at = |i: usize| (i - 1) % 5 + 1;
    for k in 1..=5 {
        let c = format!("v{}", at(k + 3));
        r.rewrites.push(Rewrite {
            remove_vertices: vec!["v".into()],
            remove_edges: Vec::new(),
            add_paths: vec![
                vec![c.clone(), format!("v{}", at(k + 2)), format!("t{}", at(k + 1))],
                vec![c.clone(), format!("t{}", at(k + 2))],
                vec![c.clone(), format!("t{}", at(k + 3))],
                vec![c, format!("v{}", at(k + 4)), format!("t{}", at(k + 4))],
            ],
        });
    }
    Gadget { rule: r, local: config::ring_five() }
}

fn ring_two_shortcuts() -> Gadget {
    Gadget {
        rule: rule(
            "ring_two_shortcuts",
            "a v1 v2",
            &[("t1 v3", &["t1 v2 v3"]), ("t1 v5", &["t1 v1 v5"])],
        ),
        local: config::ring_four_closed(),
    }
}

fn ring_triangle() -> Gadget {
    Gadget {
        rule: rule(
            "ring_triangle",
            "v1 v2 v3 v4 v5",
            &[
                ("t1 t3", &["t1 v2 v3 t3"]),
                ("t3 t4", &["t3 v4 t4"]),
                ("t4 t1", &["t4 v5 v1 t1"]),
            ],
        ),
        local: config::ring_five_chorded(),
    }
}

fn nine_vertex() -> Gadget {
    let mut r = rule(
        "nine_vertex",
        "q u v w z",
        &[
            ("r p", &["r u z p", "r v z p", "r u q p"]),
            ("r t", &["r v w t", "r u z t", "r v z t"]),
            ("p t", &["p z t"]),
            ("p x", &["p q x"]),
            ("t s", &["t w s"]),
        ],
    );
    let all = ["r p", "r t", "p t", "p x", "t s"];
    let sets: [&[&str]; 15] = [
        &["w t", "w s", "w v r", "w z", "z p", "z q x", "z u r"],
        &["w t", "w s", "w v r", "w z p", "p q u r"],
        &["z p", "z t", "z q x", "z u r", "t w v r"],
        &["t z p q u r v w t"],
        &["t w s", "t z v r", "r u q x"],
        &["t w s", "t z v r", "r u q p"],
        &["t w s", "t z v r", "p q x"],
        &["p q x", "p z u r", "r v s"],
        &["p q x", "p z u r", "r v w t"],
        &["p q x", "p z u r", "t w s"],
        &["w t", "w s", "w z p", "w v r", "p q x"],
        &["z p", "z t", "z q x", "z u r", "t w s"],
        &["s w t z p q x"],
        &["s w t z p q u r"],
        &["r v w t z p q x"],
    ];
    for s in sets {
        r.rewrites.push(rewrite("", &all, s));
    }
    Gadget { rule: r, local: config::nine_vertex() }
}

/// Every shipped gadget, in a fixed order.
pub fn library() -> Vec<Gadget> {
    vec![
        four_cut_two_interior(),
        triangle_three_edges(),
        triangle_two_edges(),
        path_two_chords(),
        path_identify(),
        four_cycle_triangle(),
        ring_pendant(),
        ring_apex(),
        ring_apex_five(),
        ring_two_shortcuts(),
        ring_triangle(),
        nine_vertex(),
    ]
}

pub fn by_name(name: &str) -> Result<Gadget> {
    library()
        .into_iter()
        .find(|g| g.rule.name == name)
        .ok_or_else(|| Error::Unknown { kind: "rule", name: name.to_string() })
}

/// Boundary pairs a host must leave non-adjacent so the inserted edges are new.
fn reserved(gadget: &Gadget) -> BTreeSet<Edge> {
    gadget
        .rule
        .insert_edges
        .iter()
        .map(|(a, b)| edge_key(a, b))
        .collect()
}

/// Glues an outside part onto the configuration's boundary: `extra` new
/// vertices `o0, o1, ...` and the given edges among boundary and new
/// vertices. Edges between boundary vertices reserved by the rule are
/// dropped.
pub fn glue(gadget: &Gadget, extra: usize, outside: &[(String, String)]) -> Graph {
    let res = reserved(gadget);
    let names: Vec<String> = (0..extra).map(|i| format!("o{i}")).collect();
    let keep: Vec<Edge> = outside
        .iter()
        .filter(|(a, b)| a != b && !res.contains(&edge_key(a, b)) && !gadget.local.graph.adjacent(a, b))
        .cloned()
        .collect();
    let part = Graph::new_merging(
        gadget.local.boundary.iter().cloned().chain(names).collect(),
        keep,
    )
    .expect("outside part is simple");
    gadget.local.graph.union(&part)
}

/// Host with the boundary made complete (bar reserved pairs) and one outside
/// vertex joined to every boundary vertex.
pub fn clique_host(gadget: &Gadget) -> Graph {
    let b = &gadget.local.boundary;
    let mut es = Vec::new();
    for i in 0..b.len() {
        es.push((b[i].clone(), "o0".to_string()));
        for j in i + 1..b.len() {
            es.push((b[i].clone(), b[j].clone()));
        }
    }
    glue(gadget, 1, &es)
}

/// Seeded random host: `extra` outside vertices, every outside/boundary pair
/// joined with probability `p`.
pub fn random_host(gadget: &Gadget, extra: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vs: Vec<String> = gadget.local.boundary.clone();
    vs.extend((0..extra).map(|i| format!("o{i}")));
    let mut es = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if rng.gen_bool(p) {
                es.push((vs[i].clone(), vs[j].clone()));
            }
        }
    }
    glue(gadget, extra, &es)
}

/// The host corpus for one gadget: the clique host, then `count` random hosts.
pub fn corpus(gadget: &Gadget, count: usize, seed: u64) -> Vec<Graph> {
    let mut out = vec![clique_host(gadget)];
    for i in 0..count {
        let extra = 1 + i % 4;
        let p = [0.5, 0.7, 0.9][i % 3];
        out.push(random_host(gadget, extra, p, seed.wrapping_add(i as u64)));
    }
    out
}

/// Outcome of lifting every K5-subdivision found in one reduced host.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub hosts: usize,
    pub hosts_with_k5: usize,
    pub lifted: usize,
    pub failures: Vec<String>,
}

/// For each host, reduce, find a K5-subdivision per branch set of the
/// reduced graph, and lift each one.
pub fn check_rule(gadget: &Gadget, hosts: &[Graph]) -> Result<LiftReport> {
    let mut rep = LiftReport { hosts: hosts.len(), ..LiftReport::default() };
    for g in hosts {
        let gp = apply_gadget(g, &gadget.rule)?;
        let witnesses = witnesses_per_branch_set(&gp);
        if !witnesses.is_empty() {
            rep.hosts_with_k5 += 1;
        }
        for t in witnesses {
            match lift_subdivision(g, &gadget.rule, &t) {
                Ok(_) => rep.lifted += 1,
                Err(e) => rep.failures.push(format!("{}: {e}", crate::io::to_graph6(g))),
            }
        }
    }
    Ok(rep)
}

/// One K5-subdivision for every 5-set of branch vertices that admits one.
pub fn witnesses_per_branch_set(g: &Graph) -> Vec<Subdivision> {
    let pool: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    let mut out = Vec::new();
    let k = pool.len();
    if k < 5 {
        return out;
    }
    let mut idx = [0, 1, 2, 3, 4];
    loop {
        let set: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
        if let Some(s) = k5_in(g, Some(&set)) {
            out.push(s);
        }
        // next 5-combination
        let mut i = 5;
        while i > 0 && idx[i - 1] == k - 5 + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..5 {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
