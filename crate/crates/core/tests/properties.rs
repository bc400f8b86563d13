use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wheelkit::coloring::{four_color, is_proper, is_total};
use wheelkit::generate::{random_planar, terminal_planar_exact};
use wheelkit::iso::rooted_isomorphic;
use wheelkit::oracle::{disc_planar_rotations, four_color_brute, good_wheel_brute, k5_brute, separations_brute};
use wheelkit::planarity::embed;
use wheelkit::separation::{enumerate_separations, validate_separation, CutEdges};
use wheelkit::subdivision::{find_k5_subdivision, validate_subdivision};
use wheelkit::terminal::is_disc_planar;
use wheelkit::wheel::{find_s_good_wheel, is_s_good, is_wheel, wheel_from_cofacial};
use wheelkit::{Error, Graph, Limits, TerminalGraph, VertexEdgeSet};

fn graph(n: usize, mask: u64) -> Graph {
    let mut es = Vec::new();
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> i & 1 == 1 {
                es.push((a, b));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &es).unwrap()
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, m)| graph(n, m))
}

fn subset(g: &Graph, mask: u64) -> Vec<String> {
    (0..g.n()).filter(|i| mask >> i & 1 == 1).map(|i| g.name(i).to_string()).collect()
}

fn planar(n: usize, drop: f64, seed: u64) -> Graph {
    random_planar(n, drop, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn remove_then_add_restores(g in any_graph(8), vmask in any::<u64>(), emask in any::<u64>()) {
        let s = subset(&g, vmask);
        let sset: BTreeSet<&String> = s.iter().collect();
        let t: Vec<(String, String)> = g
            .edge_names()
            .into_iter()
            .enumerate()
            .filter(|(i, (a, b))| emask >> (i % 64) & 1 == 1 && !sset.contains(a) && !sset.contains(b))
            .map(|(_, e)| e)
            .collect();
        let h = g.remove(&VertexEdgeSet::new(&s, &t).unwrap()).unwrap();
        let incident: Vec<(String, String)> = g
            .edge_names()
            .into_iter()
            .filter(|(a, b)| sset.contains(a) || sset.contains(b))
            .chain(t.iter().cloned())
            .collect();
        prop_assert_eq!(h.add(&s, &incident).unwrap(), g);
    }

    #[test]
    fn identify_edge_count(g in any_graph(8), u in 0usize..8, w in 0usize..8) {
        prop_assume!(u < g.n() && w < g.n() && u != w);
        let common = g.neighbors(u).iter().filter(|x| g.neighbors(w).contains(x)).count();
        let h = g.identify(g.name(u), g.name(w), "merged").unwrap();
        prop_assert_eq!(h.m(), g.m() - common - usize::from(g.has_edge(u, w)));
    }

    #[test]
    fn operations_are_pure(g in any_graph(7)) {
        let before = g.clone();
        let a = find_k5_subdivision(&g, &Limits::default()).unwrap();
        let b = find_k5_subdivision(&g, &Limits::default()).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(four_color(&g, &Limits::default()).unwrap(), four_color(&g, &Limits::default()).unwrap());
        prop_assert_eq!(g, before);
    }

    #[test]
    fn faces_partition_darts_and_euler_holds(n in 3usize..=12, drop in 0.0f64..0.5, seed in any::<u64>()) {
        let g = planar(n, drop, seed);
        let e = embed(&g).unwrap();
        let mut darts = BTreeSet::new();
        for f in e.faces() {
            for i in 0..f.len() {
                // a face walk of an isolated vertex has no darts
                if f.len() > 1 || g.degree(f[0]) > 0 {
                    prop_assert!(darts.insert((f[i], f[(i + 1) % f.len()])));
                }
            }
        }
        prop_assert_eq!(darts.len(), 2 * g.m());
        prop_assert!(e.euler_holds());
    }

    #[test]
    fn unordered_disc_planarity_survives_edge_deletion(g in any_graph(7), tmask in 1u64..128, k in 0usize..21) {
        let ts = subset(&g, tmask);
        prop_assume!(!ts.is_empty() && g.m() > 0);
        let tg = TerminalGraph::new(g.clone(), &ts, false).unwrap();
        let (a, b) = g.edge_names()[k % g.m()].clone();
        let h = g.remove(&VertexEdgeSet::new::<&str, _, _>(&[], &[(a, b)]).unwrap()).unwrap();
        let th = TerminalGraph::new(h, &ts, false).unwrap();
        if is_disc_planar(&tg).unwrap() {
            prop_assert!(is_disc_planar(&th).unwrap());
        }
    }

    #[test]
    fn ordered_disc_planarity_ignores_rotation_and_reflection(g in any_graph(7), tmask in 1u64..128, r in 0usize..5) {
        let ts = subset(&g, tmask);
        prop_assume!(!ts.is_empty());
        let base = is_disc_planar(&TerminalGraph::new(g.clone(), &ts, true).unwrap()).unwrap();
        let mut rotated = ts.clone();
        rotated.rotate_left(r % ts.len());
        let mut reflected = rotated.clone();
        reflected.reverse();
        for order in [rotated, reflected] {
            prop_assert_eq!(is_disc_planar(&TerminalGraph::new(g.clone(), &order, true).unwrap()).unwrap(), base);
        }
    }

    #[test]
    fn ordered_disc_planarity_matches_rotation_systems(g in any_graph(5), tmask in 1u64..32, perm in Just(vec![0usize, 1, 2, 3, 4]).prop_shuffle()) {
        let mut ts = subset(&g, tmask);
        prop_assume!(!ts.is_empty());
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < ts.len()).collect();
        ts = order.iter().map(|&i| ts[i].clone()).collect();
        for ordered in [true, false] {
            let tg = TerminalGraph::new(g.clone(), &ts, ordered).unwrap();
            match disc_planar_rotations(&tg, &Limits::default()) {
                Ok(want) => prop_assert_eq!(is_disc_planar(&tg).unwrap(), want),
                Err(Error::ResourceLimit { .. }) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }

    #[test]
    fn good_wheel_search_is_sound_and_complete(g in any_graph(8), tmask in any::<u64>()) {
        let ts = subset(&g, tmask);
        let tg = TerminalGraph::new(g.clone(), &ts, false).unwrap();
        let found = find_s_good_wheel(&tg, &Limits::default()).unwrap();
        prop_assert_eq!(found.is_some(), good_wheel_brute(&tg, &Limits::default()).unwrap());
        if let Some(w) = found {
            prop_assert!(is_wheel(&g, &w));
            prop_assert!(is_s_good(&g, &w, &ts).unwrap());
        }
    }

    #[test]
    fn cofacial_wheel_is_good_when_the_faces_only_meet_s_at_neighbors(
        n in 4usize..=10, seed in any::<u64>(), x in 0usize..10, tmask in any::<u64>(),
    ) {
        let g = planar(n, 0.1, seed);
        let x = x % g.n();
        let e = embed(&g).unwrap();
        if let Some(w) = wheel_from_cofacial(&e, x) {
            prop_assert!(is_wheel(&g, &w));
            let around: BTreeSet<usize> = e.faces().into_iter().filter(|f| f.contains(&x)).flatten().collect();
            let ts = subset(&g, tmask);
            let ok = ts.iter().all(|t| {
                let i = g.index_of(t).unwrap();
                !around.contains(&i) || g.has_edge(x, i)
            });
            if ok {
                prop_assert!(is_s_good(&g, &w, &ts).unwrap());
            }
        }
    }

    #[test]
    fn k5_search_agrees_with_brute_force(n in 5usize..=8, mask in any::<u64>(), dense in 0u64..3) {
        // OR-ing masks pushes toward dense graphs where K5 shows up
        let mut m = mask;
        for i in 0..dense {
            m |= mask.rotate_left(7 * (i as u32 + 1));
        }
        let g = graph(n, m);
        let t = find_k5_subdivision(&g, &Limits::default()).unwrap();
        prop_assert_eq!(t.is_some(), k5_brute(&g, &Limits::default()).unwrap());
        if let Some(t) = t {
            prop_assert!(validate_subdivision(&g, &t).is_ok());
        }
    }

    #[test]
    fn four_color_agrees_with_enumeration(g in any_graph(8)) {
        let c = four_color(&g, &Limits::default()).unwrap();
        prop_assert_eq!(c.is_some(), four_color_brute(&g, &Limits::default()).unwrap().is_some());
        if let Some(c) = c {
            prop_assert!(is_proper(&g, &c) && is_total(&g, &c));
        }
    }

    #[test]
    fn emitted_separations_validate(g in any_graph(7), k in 0usize..5) {
        for mode in [CutEdges::Canonical, CutEdges::Exhaustive] {
            for s in enumerate_separations(&g, k, mode) {
                prop_assert!(validate_separation(&g, &s));
                prop_assert_eq!(s.order(), k);
            }
        }
    }

    #[test]
    fn rooted_isomorphism_is_an_equivalence(g in any_graph(6), tmask in any::<u64>(), p1 in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(), p2 in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let relabel = |h: &Graph, p: &[usize]| h.relabel(|s| format!("v{}", p[s.trim_start_matches('v').parse::<usize>().unwrap()])).unwrap();
        let ts = subset(&g, tmask);
        let a = TerminalGraph::new(g.clone(), &ts, false).unwrap();
        let mapped = |h: &Graph, p: &[usize], ts: &[String]| {
            let ts: Vec<String> = ts.iter().map(|t| format!("v{}", p[t.trim_start_matches('v').parse::<usize>().unwrap()])).collect();
            TerminalGraph::new(relabel(h, p), &ts, false).unwrap()
        };
        let b = mapped(&g, &p1, &ts);
        let c = mapped(&b.graph, &p2, &b.terminals);
        prop_assert!(rooted_isomorphic(&a, &a));
        prop_assert_eq!(rooted_isomorphic(&a, &b), rooted_isomorphic(&b, &a));
        prop_assert!(rooted_isomorphic(&a, &b) && rooted_isomorphic(&b, &c) && rooted_isomorphic(&a, &c));
    }
}

#[test]
fn separations_match_brute_force_on_nine_vertices() {
    let limits = Limits {
        oracle_vertices: 9,
        ..Limits::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..12 {
        let g = random_planar(9, 0.3, &mut rng);
        for k in [2, 3] {
            let lib: BTreeSet<_> = enumerate_separations(&g, k, CutEdges::Exhaustive).map(|s| s.key()).collect();
            assert_eq!(lib, separations_brute(&g, k, &limits).unwrap());
        }
    }
}

#[test]
fn generated_classes_are_pairwise_distinct() {
    for (n, s) in [(6, 3), (6, 5), (7, 5)] {
        let all = terminal_planar_exact(n, s, true);
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert!(!rooted_isomorphic(&all[i], &all[j]), "n={n} s={s}: {i} and {j}");
            }
        }
    }
}

#[test]
fn reports_repeat_under_a_fixed_seed() {
    use wheelkit::experiment::{run_experiment, Config};
    let c = Config {
        seed: 77,
        instances: Some(25),
        hosts: 3,
        ..Config::default()
    };
    for name in ["wheel-to-k5", "lift-all-gadgets", "oracle-separations", "planar-no-k5", "trichotomy"] {
        let a = run_experiment(name, &c).unwrap();
        let b = run_experiment(name, &c).unwrap();
        assert!(a.same_outcome(&b), "{name}");
        let strip = |r: &wheelkit::experiment::ExperimentReport| {
            let mut v = serde_json::to_value(r).unwrap();
            v.as_object_mut().unwrap().remove("wall_time_ms");
            v.to_string()
        };
        assert_eq!(strip(&a), strip(&b), "{name}");
    }
}

#[test]
fn four_spoke_wheel_with_two_crossing_paths() {
    use wheelkit::graph::named;
    use wheelkit::linkage::find_disjoint_paths;
    use wheelkit::subdivision::wheel_plus_paths_to_k5;
    use wheelkit::wheel::Wheel;
    // W4 has center "4" and rim 0 1 2 3; x sees 0 and 2, y sees 1 and 3
    let g = named::wheel(4).add(&["x", "y"], &[("x", "0"), ("x", "2"), ("y", "1"), ("y", "3")]).unwrap();
    let w = Wheel::new("4", &["0", "1", "2", "3"], &["0", "1", "2", "3"]);
    let ps = find_disjoint_paths(&g, &[("0", "2"), ("1", "3")], &["4"], &Limits::default())
        .unwrap()
        .unwrap();
    let t = wheel_plus_paths_to_k5(&g, &w, ["0", "1", "2", "3"], &ps).unwrap();
    assert!(validate_subdivision(&g, &t).is_ok());
    assert_eq!(t.vertices().len(), 7);
}
