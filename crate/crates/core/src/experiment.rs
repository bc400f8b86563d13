//! Batch experiments over generated or exhaustive instance sets, each
//! comparing a library routine against an independent check.
//!
//! Instances are built up front from the seed, checked on the rayon pool and
//! merged in instance order, so a report depends only on its config.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::catalog;
use crate::coloring::{four_color, is_proper, is_total};
use crate::error::{Error, Limits, Result};
use crate::gadget::{check_rule, corpus, library as gadgets};
use crate::generate::{random_planar, random_wheel_host, random_wheel_side, terminal_planar_exact};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::iso::canonical_form;
use crate::linkage::{find_disjoint_paths, validate_paths};
use crate::oracle::{
    disjoint_paths_brute, disc_planar_brute, disc_planar_rotations, four_color_brute, k5_brute, separations_brute, terminal_classes_brute,
};
use crate::planarity::{embed, is_planar};
use crate::recipe::{library as recipes, verify_recipe};
use crate::separation::{check_trichotomy, enumerate_separations, glue_side, CutEdges, Verdict};
use crate::subdivision::{find_k5_subdivision, validate_subdivision, wheel_plus_paths_to_k5};
use crate::terminal::{is_disc_planar, TerminalGraph};
use crate::wheel::find_s_good_wheel;

/// Experiment settings, read from `key = value` lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub seed: u64,
    /// Overrides the experiment's default instance count where it has one.
    pub instances: Option<usize>,
    /// Random hosts per gadget, on top of the clique host.
    pub hosts: usize,
    /// Overrides the largest random instance.
    pub max_vertices: Option<usize>,
    pub limits: Limits,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 1,
            instances: None,
            hosts: 40,
            max_vertices: None,
            limits: Limits::default(),
        }
    }
}

impl Config {
    pub const KEYS: [&'static str; 7] = [
        "seed",
        "instances",
        "hosts",
        "max_vertices",
        "search_vertices",
        "oracle_vertices",
        "generate_vertices",
    ];

    /// Blank lines and `#` comments are skipped; later keys win.
    pub fn parse(text: &str) -> Result<Config> {
        let mut c = Config::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(Error::Parse {
                line: i + 1,
                msg: "expected `key = value`".into(),
            })?;
            c.set(k.trim(), v.trim()).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
        }
        Ok(c)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = || {
            value
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("`{key}` needs a non-negative integer, got `{value}`")))
        };
        match key {
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| Error::Input(format!("`seed` needs an integer, got `{value}`")))?
            }
            "instances" => self.instances = Some(num()?),
            "hosts" => self.hosts = num()?,
            "max_vertices" => self.max_vertices = Some(num()?),
            "search_vertices" => self.limits.search_vertices = num()?,
            "oracle_vertices" => self.limits.oracle_vertices = num()?,
            "generate_vertices" => self.limits.generate_vertices = num()?,
            _ => {
                return Err(Error::Unknown {
                    kind: "config key",
                    name: key.to_string(),
                })
            }
        }
        Ok(())
    }

    /// Every effective setting, unset overrides shown as `default`.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let opt = |o: Option<usize>| o.map_or("default".to_string(), |v| v.to_string());
        [
            ("seed", self.seed.to_string()),
            ("instances", opt(self.instances)),
            ("hosts", self.hosts.to_string()),
            ("max_vertices", opt(self.max_vertices)),
            ("search_vertices", self.limits.search_vertices.to_string()),
            ("oracle_vertices", self.limits.oracle_vertices.to_string()),
            ("generate_vertices", self.limits.generate_vertices.to_string()),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// graph6 of the offending graph.
    pub graph: String,
    pub note: String,
}

impl Counterexample {
    fn new(g: &Graph, note: impl Into<String>) -> Self {
        Counterexample {
            graph: to_graph6(g),
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: u64,
    pub config: BTreeMap<String, String>,
    pub pass: bool,
}

impl ExperimentReport {
    /// Equal in everything but wall time.
    pub fn same_outcome(&self, other: &ExperimentReport) -> bool {
        ExperimentReport { wall_time_ms: 0, ..self.clone() } == ExperimentReport { wall_time_ms: 0, ..other.clone() }
    }
}

/// Registered experiments and what each one checks.
pub const EXPERIMENTS: [(&str, &str); 14] = [
    ("catalog-no-good-wheel", "catalog members are ordered disc-planar, S-independent and wheel-free"),
    ("wheel-to-k5", "a wheel plus a cross linkage gives a valid K5-subdivision"),
    ("lift-all-gadgets", "every K5-subdivision of a reduced host lifts to the host"),
    ("coloring-recipes", "every recipe colors every admissible boundary coloring"),
    ("oracle-four-color", "four_color against 4^n enumeration"),
    ("oracle-disjoint-paths", "find_disjoint_paths against all-paths enumeration"),
    ("oracle-k5", "find_k5_subdivision against all-5-sets enumeration"),
    ("oracle-separations", "enumerate_separations against placement enumeration"),
    ("oracle-generation", "generator class counts against labeled enumeration"),
    ("oracle-good-wheel", "find_s_good_wheel against cycle-and-center enumeration"),
    ("planar-no-k5", "random planar graphs have no K5-subdivision and satisfy Euler"),
    ("disc-planar-fence", "ordered disc-planarity against rotation enumeration and the apex Kuratowski check"),
    ("trichotomy", "glued catalog, small and wheel sides get the expected verdict"),
    ("all", "every experiment above"),
];

/// Runs a registered experiment. Unknown names are an error.
pub fn run_experiment(name: &str, config: &Config) -> Result<ExperimentReport> {
    let start = Instant::now();
    let (instances, counterexamples) = match name {
        "catalog-no-good-wheel" => catalog_no_good_wheel(config),
        "wheel-to-k5" => wheel_to_k5(config),
        "lift-all-gadgets" => lift_all_gadgets(config)?,
        "coloring-recipes" => coloring_recipes(),
        "oracle-four-color" => oracle_four_color(config),
        "oracle-disjoint-paths" => oracle_disjoint_paths(config),
        "oracle-k5" => oracle_k5(config),
        "oracle-separations" => oracle_separations(config),
        "oracle-generation" => oracle_generation(config),
        "oracle-good-wheel" => oracle_good_wheel(config),
        "planar-no-k5" => planar_no_k5(config),
        "disc-planar-fence" => disc_planar_fence(config),
        "trichotomy" => trichotomy(config),
        "all" => {
            let mut n = 0;
            let mut bad = Vec::new();
            for (e, _) in &EXPERIMENTS[..EXPERIMENTS.len() - 1] {
                let r = run_experiment(e, config)?;
                n += r.instances;
                bad.extend(r.counterexamples.into_iter().map(|c| Counterexample {
                    note: format!("{e}: {}", c.note),
                    ..c
                }));
            }
            (n, bad)
        }
        _ => {
            return Err(Error::Unknown {
                kind: "experiment",
                name: name.to_string(),
            })
        }
    };
    Ok(ExperimentReport {
        experiment: name.to_string(),
        instances,
        pass: counterexamples.is_empty(),
        counterexamples,
        wall_time_ms: start.elapsed().as_millis() as u64,
        config: config.echo(),
    })
}

type Outcome = (usize, Vec<Counterexample>);

/// Checks every instance on the pool; results stay in instance order.
fn fan_out<T: Sync>(items: &[T], check: impl Fn(&T) -> Vec<Counterexample> + Sync + Send) -> Outcome {
    let found: Vec<Vec<Counterexample>> = items.par_iter().map(check).collect();
    (items.len(), found.into_iter().flatten().collect())
}

fn rng_for(config: &Config, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64))
}

/// G(n, p) with `n` in `lo..=hi` and `p` in `p_lo..p_hi`.
fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize, p_lo: f64, p_hi: f64) -> Graph {
    let n = rng.gen_range(lo..=hi.max(lo));
    let p = rng.gen_range(p_lo..p_hi);
    let mut es = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                es.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &es).expect("simple by construction")
}

fn oracle_graphs(config: &Config, default: usize, lo: usize, p_lo: f64, p_hi: f64) -> Vec<(usize, Graph)> {
    let hi = config.max_vertices.unwrap_or(config.limits.oracle_vertices);
    (0..config.instances.unwrap_or(default))
        .map(|i| {
            let mut rng = rng_for(config, i);
            (i, random_graph(&mut rng, lo, hi, p_lo, p_hi))
        })
        .collect()
}

fn catalog_no_good_wheel(config: &Config) -> Outcome {
    let members = catalog();
    fan_out(&members, |m| {
        let g = &m.tg.graph;
        let mut bad = Vec::new();
        if !is_disc_planar(&m.tg).unwrap_or(false) {
            bad.push(Counterexample::new(g, format!("{} is not ordered disc-planar", m.name)));
        }
        if !m.tg.terminals_independent() {
            bad.push(Counterexample::new(g, format!("{} has a terminal edge", m.name)));
        }
        match find_s_good_wheel(&m.tg, &config.limits) {
            Ok(None) => {}
            Ok(Some(w)) => bad.push(Counterexample::new(g, format!("{} has a good wheel at {}", m.name, w.center))),
            Err(e) => bad.push(Counterexample::new(g, format!("{}: {e}", m.name))),
        }
        bad
    })
}

fn wheel_to_k5(config: &Config) -> Outcome {
    let idx: Vec<usize> = (0..config.instances.unwrap_or(100)).collect();
    fan_out(&idx, |&i| {
        let h = random_wheel_host(&mut rng_for(config, i));
        let g = &h.graph;
        let [w1, w2, w3, w4] = &h.spokes;
        let on_wheel: Vec<String> = h
            .wheel
            .vertices()
            .into_iter()
            .filter(|v| !h.spokes.contains(v))
            .collect();
        let run = || -> Result<Option<String>> {
            let Some(ps) = find_disjoint_paths(g, &[(w1, w3), (w2, w4)], &on_wheel, &config.limits)? else {
                return Ok(Some("no cross linkage found".into()));
            };
            let t = wheel_plus_paths_to_k5(g, &h.wheel, [w1, w2, w3, w4], &ps)?;
            validate_subdivision(g, &t)?;
            Ok(None)
        };
        match run() {
            Ok(None) => vec![],
            Ok(Some(note)) => vec![Counterexample::new(g, note)],
            Err(e) => vec![Counterexample::new(g, e.to_string())],
        }
    })
}

fn lift_all_gadgets(config: &Config) -> Result<Outcome> {
    let mut jobs = Vec::new();
    for (k, gd) in gadgets().into_iter().enumerate() {
        let seed = config.seed.wrapping_add(1000 * k as u64);
        for h in corpus(&gd, config.hosts, seed) {
            jobs.push((gd.clone(), h));
        }
    }
    let errors: Vec<Result<Vec<Counterexample>>> = jobs
        .par_iter()
        .map(|(gd, h)| {
            let rep = check_rule(gd, std::slice::from_ref(h))?;
            Ok(rep
                .failures
                .into_iter()
                .map(|f| Counterexample::new(h, format!("{}: {f}", gd.rule.name)))
                .collect())
        })
        .collect();
    let mut bad = Vec::new();
    for e in errors {
        bad.extend(e?);
    }
    Ok((jobs.len(), bad))
}

fn coloring_recipes() -> Outcome {
    let rs = recipes();
    fan_out(&rs, |r| match verify_recipe(r) {
        Ok(rep) => rep
            .failures
            .iter()
            .map(|c| Counterexample::new(&r.local.graph, format!("{}: {c:?}", r.name)))
            .collect(),
        Err(e) => vec![Counterexample::new(&r.local.graph, format!("{}: {e}", r.name))],
    })
}

fn oracle_four_color(config: &Config) -> Outcome {
    let gs = oracle_graphs(config, 200, 1, 0.3, 0.95);
    fan_out(&gs, |(_, g)| {
        let lib = four_color(g, &config.limits);
        let brute = four_color_brute(g, &config.limits);
        match (lib, brute) {
            (Ok(a), Ok(b)) => {
                if a.is_some() != b.is_some() {
                    vec![Counterexample::new(g, format!("library {} brute {}", a.is_some(), b.is_some()))]
                } else if a.is_some_and(|c| !is_proper(g, &c) || !is_total(g, &c)) {
                    vec![Counterexample::new(g, "improper coloring")]
                } else {
                    vec![]
                }
            }
            (a, b) => vec![Counterexample::new(g, format!("{:?} / {:?}", a.err(), b.err()))],
        }
    })
}

fn oracle_disjoint_paths(config: &Config) -> Outcome {
    let gs = oracle_graphs(config, 200, 4, 0.2, 0.7);
    fan_out(&gs, |(i, g)| {
        let mut rng = rng_for(config, i + 1_000_000);
        let mut vs: Vec<String> = g.names().to_vec();
        rand::seq::SliceRandom::shuffle(vs.as_mut_slice(), &mut rng);
        let k = rng.gen_range(1..=(g.n() / 2).min(3));
        let pairs: Vec<(String, String)> = (0..k).map(|j| (vs[2 * j].clone(), vs[2 * j + 1].clone())).collect();
        let forbidden: Vec<String> = vs[2 * k..].iter().filter(|_| rng.gen_bool(0.2)).cloned().collect();
        let lib = find_disjoint_paths(g, &pairs, &forbidden, &config.limits);
        let brute = disjoint_paths_brute(g, &pairs, &forbidden, &config.limits);
        let note = || format!("pairs {pairs:?} forbidden {forbidden:?}");
        match (lib, brute) {
            (Ok(a), Ok(b)) if a.is_some() != b => vec![Counterexample::new(g, format!("{}: library {} brute {b}", note(), a.is_some()))],
            (Ok(Some(ps)), Ok(_)) if !validate_paths(g, &ps, &forbidden) => {
                vec![Counterexample::new(g, format!("{}: invalid paths", note()))]
            }
            (Ok(_), Ok(_)) => vec![],
            (a, b) => vec![Counterexample::new(g, format!("{}: {:?} / {:?}", note(), a.err(), b.err()))],
        }
    })
}

fn oracle_k5(config: &Config) -> Outcome {
    let gs = oracle_graphs(config, 200, 5, 0.5, 1.0);
    fan_out(&gs, |(_, g)| match (find_k5_subdivision(g, &config.limits), k5_brute(g, &config.limits)) {
        (Ok(a), Ok(b)) if a.is_some() != b => vec![Counterexample::new(g, format!("library {} brute {b}", a.is_some()))],
        (Ok(Some(t)), Ok(_)) => match validate_subdivision(g, &t) {
            Ok(()) => vec![],
            Err(e) => vec![Counterexample::new(g, e.to_string())],
        },
        (Ok(None), Ok(_)) => vec![],
        (a, b) => vec![Counterexample::new(g, format!("{:?} / {:?}", a.err(), b.err()))],
    })
}

fn oracle_separations(config: &Config) -> Outcome {
    let gs = oracle_graphs(config, 200, 2, 0.2, 0.8);
    fan_out(&gs, |(i, g)| {
        let k = rng_for(config, i + 2_000_000).gen_range(0..=g.n().min(4));
        let lib: BTreeSet<_> = enumerate_separations(g, k, CutEdges::Exhaustive).map(|s| s.key()).collect();
        match separations_brute(g, k, &config.limits) {
            Ok(b) if b == lib => vec![],
            Ok(b) => vec![Counterexample::new(g, format!("k={k}: library {} brute {}", lib.len(), b.len()))],
            Err(e) => vec![Counterexample::new(g, e.to_string())],
        }
    })
}

fn oracle_generation(config: &Config) -> Outcome {
    let mut cases = Vec::new();
    for n in 1..=5 {
        for s in 1..=n {
            cases.push((n, s, false));
            cases.push((n, s, true));
        }
    }
    cases.extend([(6, 4, true), (6, 5, true), (6, 5, false)]);
    fan_out(&cases, |&(n, s, ind)| {
        let lib = terminal_planar_exact(n, s, ind).len();
        let empty = Graph::from_edges(n, &[]).expect("edgeless");
        match terminal_classes_brute(n, s, ind, &config.limits) {
            Ok(b) if b == lib => vec![],
            Ok(b) => vec![Counterexample::new(&empty, format!("n={n} s={s} independent={ind}: {lib} vs {b}"))],
            Err(e) => vec![Counterexample::new(&empty, e.to_string())],
        }
    })
}

fn oracle_good_wheel(config: &Config) -> Outcome {
    let gs = oracle_graphs(config, 200, 4, 0.3, 0.9);
    fan_out(&gs, |(i, g)| {
        let mut rng = rng_for(config, i + 3_000_000);
        let ts: Vec<String> = g.names().iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        let tg = TerminalGraph::new(g.clone(), &ts, false).expect("terminals exist");
        match (find_s_good_wheel(&tg, &config.limits), crate::oracle::good_wheel_brute(&tg, &config.limits)) {
            (Ok(a), Ok(b)) if a.is_some() != b => {
                vec![Counterexample::new(g, format!("S={ts:?}: library {} brute {b}", a.is_some()))]
            }
            (Ok(_), Ok(_)) => vec![],
            (a, b) => vec![Counterexample::new(g, format!("S={ts:?}: {:?} / {:?}", a.err(), b.err()))],
        }
    })
}

fn planar_no_k5(config: &Config) -> Outcome {
    let hi = config.max_vertices.unwrap_or(config.limits.search_vertices);
    let idx: Vec<usize> = (0..config.instances.unwrap_or(200)).collect();
    fan_out(&idx, |&i| {
        let mut rng = rng_for(config, i);
        let n = rng.gen_range(3.min(hi)..=hi);
        let p = rng.gen_range(0.0..0.4);
        let g = random_planar(n, p, &mut rng);
        let mut bad = Vec::new();
        if !is_planar(&g) {
            bad.push(Counterexample::new(&g, "is_planar rejected a planar graph"));
        }
        match embed(&g) {
            Ok(e) if e.euler_holds() => {}
            Ok(e) => bad.push(Counterexample::new(&g, format!("{} faces break Euler", e.face_count()))),
            Err(err) => bad.push(Counterexample::new(&g, err.to_string())),
        }
        match find_k5_subdivision(&g, &config.limits) {
            Ok(None) => {}
            Ok(Some(_)) => bad.push(Counterexample::new(&g, "K5-subdivision in a planar graph")),
            Err(e) => bad.push(Counterexample::new(&g, e.to_string())),
        }
        bad
    })
}

/// One graph per isomorphism class on `n` vertices.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let colour = vec![0; n];
    let mut seen = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let es: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::from_edges(n, &es).expect("simple");
        seen.entry(canonical_form(&g, &colour).0).or_insert(g);
    }
    seen.into_values().collect()
}

/// Every terminal sequence of length one to three on every graph with at
/// most six vertices, ordered mode against both oracles.
fn disc_planar_fence(config: &Config) -> Outcome {
    let mut cases = Vec::new();
    for n in 1..=6 {
        for g in all_graphs(n) {
            for a in 0..n {
                cases.push((g.clone(), vec![a]));
                for b in (0..n).filter(|&b| b != a) {
                    cases.push((g.clone(), vec![a, b]));
                    for c in (0..n).filter(|&c| c != a && c != b) {
                        cases.push((g.clone(), vec![a, b, c]));
                    }
                }
            }
        }
    }
    fan_out(&cases, |(g, ts)| {
        let names: Vec<&str> = ts.iter().map(|&t| g.name(t)).collect();
        let tg = TerminalGraph::new(g.clone(), &names, true).expect("terminals exist");
        let lib = is_disc_planar(&tg);
        let kur = disc_planar_brute(&tg, &config.limits);
        // over-budget rotation counts leave the Kuratowski check alone
        let rot = match disc_planar_rotations(&tg, &config.limits) {
            Err(Error::ResourceLimit { .. }) => kur.clone(),
            r => r,
        };
        match (&lib, &rot, &kur) {
            (Ok(a), Ok(b), Ok(c)) if a == b && b == c => vec![],
            _ => vec![Counterexample::new(
                g,
                format!("S={names:?}: library {lib:?} rotations {rot:?} kuratowski {kur:?}"),
            )],
        }
    })
}

/// An outside part on the cut: the cycle through the terminals in order
/// plus `hubs` vertices adjacent to all of them and to each other.
fn outside(terminals: &[String], hubs: usize) -> Graph {
    let k = terminals.len();
    let hs: Vec<String> = (0..hubs).map(|i| format!("o{i}")).collect();
    let mut es: Vec<(String, String)> = (0..k).map(|i| (terminals[i].clone(), terminals[(i + 1) % k].clone())).collect();
    for (j, h) in hs.iter().enumerate() {
        es.extend(terminals.iter().map(|t| (h.clone(), t.clone())));
        es.extend(hs[..j].iter().map(|o| (o.clone(), h.clone())));
    }
    let mut vs = terminals.to_vec();
    vs.extend(hs);
    Graph::new(vs, &es).expect("outside is simple")
}

fn trichotomy(config: &Config) -> Outcome {
    let mut cases: Vec<(TerminalGraph, usize, &'static str, Option<String>)> = Vec::new();
    for m in catalog() {
        for hubs in 1..=2 {
            cases.push((m.tg.clone(), hubs, "CATALOG", Some(m.name.to_string())));
        }
    }
    for tg in terminal_planar_exact(5, 4, true) {
        cases.push((tg, 1, "SMALL", None));
    }
    for i in 0..config.instances.unwrap_or(50) {
        cases.push((random_wheel_side(&mut rng_for(config, i)), 1, "GOOD_WHEEL", None));
    }
    fan_out(&cases, |(tg, hubs, want, member)| {
        let out = outside(&tg.terminals, *hubs);
        let run = || -> Result<(Graph, Verdict)> {
            let (g, sep) = glue_side(tg, &out)?;
            let v = check_trichotomy(&g, &sep, &config.limits)?;
            Ok((g, v))
        };
        match run() {
            Ok((g, v)) => {
                let got = match &v {
                    Verdict::Catalog { member } => Some(member.clone()),
                    _ => None,
                };
                if v.label() != *want || got != *member {
                    vec![Counterexample::new(&g, format!("expected {want}, got {}", v.label()))]
                } else {
                    vec![]
                }
            }
            Err(e) => vec![Counterexample::new(&tg.graph, e.to_string())],
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let c = Config::parse("# comment\nseed = 9\ninstances=12\n\noracle_vertices = 7 # trailing\n").unwrap();
        assert_eq!(c.seed, 9);
        assert_eq!(c.instances, Some(12));
        assert_eq!(c.limits.oracle_vertices, 7);
        assert_eq!(c.echo()["max_vertices"], "default");
        assert!(matches!(Config::parse("seed 9"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Config::parse("colour = 3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_experiment() {
        assert!(matches!(
            run_experiment("nope", &Config::default()),
            Err(Error::Unknown { kind: "experiment", .. })
        ));
    }

    #[test]
    fn catalog_experiment_passes_on_six() {
        let r = run_experiment("catalog-no-good-wheel", &Config::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.instances, 6);
    }

    #[test]
    fn reports_repeat_under_a_seed() {
        let c = Config { instances: Some(30), ..Config::default() };
        let a = run_experiment("oracle-k5", &c).unwrap();
        let b = run_experiment("oracle-k5", &c).unwrap();
        assert!(a.same_outcome(&b));
        assert!(a.pass, "{:?}", a.counterexamples);
    }

    #[test]
    fn outside_part_shape() {
        let ts: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let g = outside(&ts, 2);
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 3 + 6 + 1);
    }
}
