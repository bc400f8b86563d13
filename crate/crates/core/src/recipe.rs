//! Coloring recipes: given a 4-coloring of the reduced graph, color the
//! removed part of the original by a fixed schedule of forced and greedy
//! steps.
//!
//! A recipe is checked by brute force. The domain is every surviving
//! vertex next to the removed part plus any vertex the gadget creates. Each
//! coloring of the domain that is proper on the reduced configuration and
//! matches the recipe's pattern is run through the schedule. The result
//! must be total on the removed part and proper on the original
//! configuration.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coloring::{extend_exact, is_proper, least_free, Coloring, COLORS};
use crate::config::{self, Local};
use crate::error::Result;
use crate::gadget::{self, apply_gadget, GadgetRule};
use crate::graph::Graph;

/// A predicate on the colors seen so far (the working coloring, falling
/// back to the reduced graph's coloring for vertices the original lacks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Pattern {
    Any,
    Same(String, String),
    Differ(String, String),
    /// Color of the first vertex appears among the others.
    Among(String, Vec<String>),
    NotAmong(String, Vec<String>),
    /// The vertices carry exactly this many distinct colors.
    DistinctColors(Vec<String>, usize),
    AtMostColors(Vec<String>, usize),
    /// Every listed vertex is colored from the palette.
    Palette(Vec<String>, Vec<u8>),
    All(Vec<Pattern>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Step {
    /// Give each target the color of `source`.
    Assign { targets: Vec<String>, source: String },
    Fixed { targets: Vec<String>, color: u8 },
    /// Give each target the least color missing from `avoid`.
    Missing { targets: Vec<String>, avoid: Vec<String> },
    /// Least available color, one vertex at a time.
    Greedy(Vec<String>),
    /// Exhaustive extension to `vertices` from `palette`.
    Exact { vertices: Vec<String>, palette: Vec<u8> },
    Branch { when: Pattern, then: Vec<Step>, otherwise: Vec<Step> },
}

#[derive(Debug, Clone)]
pub struct Recipe {
    pub name: String,
    pub local: Local,
    /// Reduction producing the colored graph; `None` colors the original
    /// configuration minus the removed set directly.
    pub rule: Option<GadgetRule>,
    /// Removed vertices when there is no rule.
    pub removed: Vec<String>,
    pub pattern: Pattern,
    pub schedule: Vec<Step>,
}

struct View<'a> {
    work: &'a Coloring,
    reduced: &'a Coloring,
}

impl View<'_> {
    fn get(&self, v: &str) -> Option<u8> {
        self.work.get(v).or_else(|| self.reduced.get(v)).copied()
    }

    fn holds(&self, p: &Pattern) -> bool {
        let set = |vs: &[String]| vs.iter().filter_map(|v| self.get(v)).collect::<BTreeSet<u8>>();
        match p {
            Pattern::Any => true,
            Pattern::Same(a, b) => self.get(a).is_some() && self.get(a) == self.get(b),
            Pattern::Differ(a, b) => self.get(a) != self.get(b),
            Pattern::Among(a, vs) => self.get(a).is_some_and(|c| set(vs).contains(&c)),
            Pattern::NotAmong(a, vs) => self.get(a).is_some_and(|c| !set(vs).contains(&c)),
            Pattern::DistinctColors(vs, k) => set(vs).len() == *k,
            Pattern::AtMostColors(vs, k) => set(vs).len() <= *k,
            Pattern::Palette(vs, pal) => vs.iter().all(|v| self.get(v).is_some_and(|c| pal.contains(&c))),
            Pattern::All(ps) => ps.iter().all(|p| self.holds(p)),
        }
    }
}

impl Recipe {
    /// Vertices of the original configuration the recipe has to color.
    pub fn removed(&self) -> Vec<String> {
        match &self.rule {
            None => self.removed.clone(),
            Some(r) => {
                let mut out = r.delete.clone();
                if let Some((u, w, _)) = &r.identify {
                    out.push(u.clone());
                    out.push(w.clone());
                }
                out
            }
        }
    }

    /// The reduced configuration whose colorings feed the recipe.
    pub fn reduced(&self) -> Result<Graph> {
        match &self.rule {
            Some(r) => apply_gadget(&self.local.graph, r),
            None => self.local.graph.remove(&crate::graph::VertexEdgeSet::vertices(&self.removed)),
        }
    }

    /// Neighbors of the removed part that survive, then vertices the
    /// reduction creates.
    pub fn domain(&self) -> Result<Vec<String>> {
        let g = &self.local.graph;
        let removed: BTreeSet<String> = self.removed().into_iter().collect();
        let mut dom = BTreeSet::new();
        for v in &removed {
            for &w in g.neighbors(g.idx(v)?) {
                let w = g.name(w);
                if !removed.contains(w) {
                    dom.insert(w.to_string());
                }
            }
        }
        let mut out: Vec<String> = dom.into_iter().collect();
        if let Some(r) = &self.rule {
            out.extend(r.insert_vertices.iter().cloned());
            if let Some((_, _, m)) = &r.identify {
                out.push(m.clone());
            }
        }
        Ok(out)
    }

    /// Runs the schedule from one coloring of the domain. `None` when a
    /// step cannot proceed.
    pub fn run(&self, reduced: &Coloring) -> Option<Coloring> {
        let g = &self.local.graph;
        let mut work: Coloring = reduced
            .iter()
            .filter(|(v, _)| g.contains(v))
            .map(|(v, &c)| (v.clone(), c))
            .collect();
        run_steps(g, &self.schedule, &mut work, reduced)?;
        Some(work)
    }
}

fn run_steps(g: &Graph, steps: &[Step], work: &mut Coloring, reduced: &Coloring) -> Option<()> {
    for s in steps {
        match s {
            Step::Assign { targets, source } => {
                let c = View { work, reduced }.get(source)?;
                for t in targets {
                    work.insert(t.clone(), c);
                }
            }
            Step::Fixed { targets, color } => {
                for t in targets {
                    work.insert(t.clone(), *color);
                }
            }
            Step::Missing { targets, avoid } => {
                let view = View { work, reduced };
                let seen: BTreeSet<u8> = avoid.iter().filter_map(|v| view.get(v)).collect();
                let c = COLORS.into_iter().find(|c| !seen.contains(c))?;
                for t in targets {
                    work.insert(t.clone(), c);
                }
            }
            Step::Greedy(order) => {
                for v in order {
                    let c = least_free(g, work, g.index_of(v)?)?;
                    work.insert(v.clone(), c);
                }
            }
            Step::Exact { vertices, palette } => {
                if !is_proper(g, work) {
                    return None;
                }
                *work = extend_exact(g, work, vertices, palette).ok()??;
            }
            Step::Branch { when, then, otherwise } => {
                let go = View { work, reduced }.holds(when);
                run_steps(g, if go { then } else { otherwise }, work, reduced)?;
            }
        }
    }
    Some(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecipeReport {
    pub name: String,
    pub domain: Vec<String>,
    /// Domain colorings that satisfied the pattern.
    pub cases: usize,
    /// Domain colorings on which the schedule failed.
    pub failures: Vec<Coloring>,
}

/// Enumerates every domain coloring, proper on the reduced configuration
/// and matching the pattern, and runs the recipe on each.
pub fn verify_recipe(r: &Recipe) -> Result<RecipeReport> {
    let reduced = r.reduced()?;
    let domain = r.domain()?;
    let removed: BTreeSet<String> = r.removed().into_iter().collect();
    let keep: Vec<usize> = (0..r.local.graph.n())
        .filter(|&v| {
            let name = r.local.graph.name(v);
            removed.contains(name) || domain.iter().any(|d| d == name)
        })
        .collect();
    let check = r.local.graph.induced(&keep);
    let mut rep = RecipeReport {
        name: r.name.clone(),
        domain: domain.clone(),
        cases: 0,
        failures: Vec::new(),
    };
    let k = domain.len();
    let mut digits = vec![0usize; k];
    loop {
        let sigma: Coloring = domain
            .iter()
            .zip(&digits)
            .map(|(v, &d)| (v.clone(), COLORS[d]))
            .collect();
        let empty = Coloring::new();
        if is_proper(&reduced, &sigma) && (View { work: &empty, reduced: &sigma }).holds(&r.pattern) {
            rep.cases += 1;
            let ok = r.run(&sigma).is_some_and(|c| {
                removed.iter().all(|v| c.contains_key(v)) && is_proper(&check, &c)
            });
            if !ok {
                rep.failures.push(sigma);
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(rep);
            }
            digits[i] += 1;
            if digits[i] < 4 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn vs(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn v(s: &str) -> String {
    s.to_string()
}

fn assign(targets: &str, source: &str) -> Step {
    Step::Assign { targets: vs(targets), source: v(source) }
}

fn greedy(order: &str) -> Step {
    Step::Greedy(vs(order))
}

fn fixed(targets: &str, color: u8) -> Step {
    Step::Fixed { targets: vs(targets), color }
}

fn with_rule(name: &str, rule: &str, pattern: Pattern, schedule: Vec<Step>) -> Recipe {
    let g = gadget::by_name(rule).expect("rule is in the library");
    Recipe {
        name: name.to_string(),
        local: g.local,
        rule: Some(g.rule),
        removed: Vec::new(),
        pattern,
        schedule,
    }
}

fn direct(name: &str, local: Local, removed: &str, pattern: Pattern, schedule: Vec<Step>) -> Recipe {
    Recipe {
        name: name.to_string(),
        local,
        rule: None,
        removed: vs(removed),
        pattern,
        schedule,
    }
}

const RING_T: &str = "t1 t2 t3 t4 t5";

fn three_colors_on_ring() -> Pattern {
    Pattern::Palette(vs(RING_T), vec![1, 2, 3])
}

/// Cycle interior colored diagonally from the four distinct boundary colors.
fn diagonal() -> Vec<Step> {
    vec![assign("u1", "t4"), assign("u2", "t1"), assign("u3", "t2"), assign("u4", "t3")]
}

/// Every shipped recipe, in a fixed order.
pub fn library() -> Vec<Recipe> {
    vec![
        with_rule(
            "four_cut_two_interior",
            "four_cut_two_interior",
            Pattern::Any,
            vec![Step::Branch {
                when: Pattern::Among(v("v2"), vs("v1 v3")),
                then: vec![greedy("v u")],
                otherwise: vec![assign("v", "v2"), greedy("u")],
            }],
        ),
        with_rule(
            "triangle_three_edges",
            "triangle_three_edges",
            Pattern::Any,
            vec![assign("v", "v5"), greedy("w u")],
        ),
        with_rule(
            "triangle_two_edges",
            "triangle_two_edges",
            Pattern::Any,
            vec![assign("v", "v5"), greedy("w u")],
        ),
        with_rule(
            "path_two_chords",
            "path_two_chords",
            Pattern::Any,
            vec![assign("v", "t1"), greedy("u w")],
        ),
        with_rule(
            "path_identify",
            "path_identify",
            Pattern::Any,
            vec![assign("u w", "vm"), greedy("v t1")],
        ),
        direct(
            "four_cycle",
            config::four_cycle(),
            "u1 u2 u3 u4",
            Pattern::Any,
            vec![Step::Branch {
                when: Pattern::DistinctColors(vs("t1 t2 t3 t4"), 4),
                then: diagonal(),
                otherwise: vec![
                    Step::Missing { targets: vs("u1 u3"), avoid: vs("t1 t2 t3 t4") },
                    greedy("u2 u4"),
                ],
            }],
        ),
        with_rule(
            "four_cycle_triangle",
            "four_cycle_triangle",
            Pattern::Any,
            vec![Step::Branch {
                when: Pattern::DistinctColors(vs("t1 t2 t3 t4"), 4),
                then: diagonal(),
                otherwise: vec![Step::Branch {
                    when: Pattern::Among(v("t4"), vs("t1 t2")),
                    then: vec![assign("u2", "t1"), assign("u4", "t3"), greedy("u1 u3")],
                    otherwise: vec![assign("u2", "t1"), assign("u4", "t2"), greedy("u1 u3")],
                }],
            }],
        ),
        with_rule(
            "ring_pendant",
            "ring_pendant",
            Pattern::Any,
            vec![assign("v5", "x"), greedy("v4 w5")],
        ),
        with_rule(
            "ring_apex",
            "ring_apex",
            Pattern::Any,
            vec![
                assign("v2 v5", "v"),
                greedy("v3 v4 x"),
                Step::Branch {
                    when: Pattern::Same(v("x"), v("t5")),
                    then: vec![greedy("v1 w5")],
                    otherwise: vec![assign("v1", "t5"), greedy("w5")],
                },
            ],
        ),
        with_rule(
            "ring_apex_five",
            "ring_apex_five",
            Pattern::Any,
            vec![Step::Exact { vertices: vs("v1 v2 v3 v4 v5"), palette: COLORS.to_vec() }],
        ),
        direct(
            "ring_independent",
            config::ring_independent(),
            "v1 v2 v3 v4 v5 a1 a2 a3 a4 a5",
            three_colors_on_ring(),
            vec![
                fixed("v1 v2 v3 v4 v5", 4),
                Step::Exact { vertices: vs("a1 a2 a3 a4 a5"), palette: vec![1, 2, 3] },
            ],
        ),
        direct(
            "ring_one_edge",
            config::ring_one_edge(),
            "v1 v2 v3 v4 v5 a2 a3 a4 a5",
            three_colors_on_ring(),
            vec![
                fixed("v2 v3 v4 v5", 4),
                Step::Exact { vertices: vs("v1 a2 a3 a4 a5"), palette: vec![1, 2, 3] },
            ],
        ),
        direct(
            "ring_two_consecutive",
            config::ring_two_consecutive(),
            "v1 v2 v3 v4 v5 a2 a3 a4",
            three_colors_on_ring(),
            vec![
                fixed("v2 v3 v4 v5", 4),
                Step::Exact { vertices: vs("v1 a2 a3 a4"), palette: vec![1, 2, 3] },
            ],
        ),
        direct(
            "ring_three_run",
            config::ring_three_run(),
            "v1 v2 v3 v4 v5 a b",
            three_colors_on_ring(),
            vec![assign("a", "t4"), fixed("v1 v2 v4", 4), greedy("v5 v3 b")],
        ),
        direct(
            "ring_three_split",
            config::ring_three_split(),
            "v1 v2 v3 v4 v5 a b",
            three_colors_on_ring(),
            vec![fixed("v1 v2 v4", 4), greedy("v5 v3 b a")],
        ),
        direct(
            "ring_four_open",
            config::ring_four_open(),
            "v1 v2 v3 v4 v5 a",
            three_colors_on_ring(),
            vec![fixed("v1 v2 v4", 4), greedy("v3 v5 a")],
        ),
        with_rule(
            "ring_two_shortcuts",
            "ring_two_shortcuts",
            Pattern::Any,
            vec![assign("a", "t1"), greedy("v1 v2")],
        ),
        with_rule(
            "ring_triangle",
            "ring_triangle",
            Pattern::Any,
            vec![Step::Branch {
                when: Pattern::Same(v("t2"), v("t3")),
                then: vec![assign("v4", "t1"), greedy("v5 v1 v2 v3")],
                otherwise: vec![Step::Branch {
                    when: Pattern::Same(v("t4"), v("t5")),
                    then: vec![assign("v4", "t1"), greedy("v3 v2 v1 v5")],
                    otherwise: vec![
                        assign("v4", "t1"),
                        assign("v2", "t3"),
                        assign("v1", "t4"),
                        greedy("v3 v5"),
                    ],
                }],
            }],
        ),
        with_rule(
            "nine_vertex",
            "nine_vertex",
            Pattern::Any,
            vec![assign("z", "r"), assign("u", "p"), assign("v", "t"), greedy("q w")],
        ),
    ]
}

pub fn by_name(name: &str) -> Result<Recipe> {
    library()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| crate::Error::Unknown { kind: "recipe", name: name.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_recipe_covers_all_cases() {
        for r in library() {
            let rep = verify_recipe(&r).unwrap();
            assert!(rep.cases > 0, "{}", r.name);
            assert!(rep.domain.len() <= 6, "{}", r.name);
            assert!(rep.failures.is_empty(), "{}: {} of {} fail, first {:?}", r.name, rep.failures.len(), rep.cases, rep.failures[0]);
        }
    }

    #[test]
    fn four_cut_domain_and_case_count() {
        let r = by_name("four_cut_two_interior").unwrap();
        let rep = verify_recipe(&r).unwrap();
        assert_eq!(rep.domain, vs("v1 v2 v3 v4"));
        // v2 and v4 differ, the rest free
        assert_eq!(rep.cases, 4 * 4 * 4 * 3);
    }

    #[test]
    fn plain_four_cycle_with_three_colors_uses_the_missing_color() {
        let r = by_name("four_cycle").unwrap();
        let sigma: Coloring = [("t1", 1), ("t2", 2), ("t3", 1), ("t4", 3)].iter().map(|&(a, c)| (a.to_string(), c)).collect();
        let c = r.run(&sigma).unwrap();
        assert_eq!(c["u1"], 4);
        assert_eq!(c["u3"], 4);
    }

    #[test]
    fn a_broken_schedule_is_caught() {
        let mut r = by_name("triangle_three_edges").unwrap();
        r.schedule = vec![greedy("u v w")];
        assert!(!verify_recipe(&r).unwrap().failures.is_empty());
    }
}
