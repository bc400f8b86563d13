//! Acceptance suite: one line per criterion, then a nonzero exit if any
//! criterion failed. Seeds, sizes and time limits are pinned here.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use wheelkit::catalog::catalog;
use wheelkit::experiment::{run_experiment, Config, ExperimentReport};
use wheelkit::recipe::{library as recipes, verify_recipe};
use wheelkit::Limits;

const SEED: u64 = 20_240_917;

struct Outcome {
    pass: bool,
    detail: String,
}

fn config(instances: Option<usize>) -> Config {
    Config {
        seed: SEED,
        instances,
        hosts: 40,
        max_vertices: None,
        limits: Limits::default(),
    }
}

fn run(name: &str, c: &Config) -> ExperimentReport {
    run_experiment(name, c).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn summary(r: &ExperimentReport) -> String {
    let mut s = format!("{} instances, {} counterexamples", r.instances, r.counterexamples.len());
    if let Some(c) = r.counterexamples.first() {
        s += &format!(" (first: {} {})", c.graph, c.note);
    }
    s
}

fn catalog_certification() -> Outcome {
    let r = run("catalog-no-good-wheel", &config(None));
    Outcome {
        pass: r.pass && r.instances == 6 && catalog().len() == 6,
        detail: summary(&r),
    }
}

fn wheel_to_k5() -> Outcome {
    let r = run("wheel-to-k5", &config(Some(100)));
    Outcome {
        pass: r.pass && r.instances == 100,
        detail: summary(&r),
    }
}

fn gadget_lifting() -> Outcome {
    let r = run("lift-all-gadgets", &config(None));
    Outcome {
        pass: r.pass && r.instances == 12 * 41,
        detail: summary(&r),
    }
}

fn coloring_recipes() -> Outcome {
    let r = run("coloring-recipes", &config(None));
    let cases: usize = recipes().iter().map(|x| verify_recipe(x).map_or(0, |rep| rep.cases)).sum();
    Outcome {
        pass: r.pass && r.instances == 19,
        detail: format!("{}, {cases} boundary colorings", summary(&r)),
    }
}

fn oracle_equivalence() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for name in ["oracle-four-color", "oracle-disjoint-paths", "oracle-k5", "oracle-separations"] {
        let r = run(name, &config(Some(200)));
        pass &= r.pass && r.instances >= 200 && r.config["oracle_vertices"] == "8";
        parts.push(format!("{name}: {}", summary(&r)));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn planarity_consistency() -> Outcome {
    let r = run("planar-no-k5", &config(Some(200)));
    Outcome {
        pass: r.pass && r.instances == 200 && r.config["search_vertices"] == "12",
        detail: summary(&r),
    }
}

fn disc_planarity_fence() -> Outcome {
    let r = run("disc-planar-fence", &config(None));
    Outcome {
        pass: r.pass && r.instances > 0,
        detail: summary(&r),
    }
}

fn trichotomy() -> Outcome {
    let r = run("trichotomy", &config(Some(50)));
    Outcome {
        pass: r.pass && r.instances == 12 + 5 + 50,
        detail: summary(&r),
    }
}

fn main() -> ExitCode {
    let criteria: [(u8, &str, Duration, fn() -> Outcome); 8] = [
        (1, "catalog certification", Duration::from_secs(1), catalog_certification),
        (2, "wheel to K5 construction", Duration::from_secs(30), wheel_to_k5),
        (3, "gadget lifting", Duration::from_secs(300), gadget_lifting),
        (4, "coloring recipes", Duration::from_secs(60), coloring_recipes),
        (5, "oracle equivalence", Duration::from_secs(600), oracle_equivalence),
        (6, "planarity consistency", Duration::from_secs(60), planarity_consistency),
        (7, "ordered disc-planarity", Duration::from_secs(300), disc_planarity_fence),
        (8, "trichotomy regression", Duration::from_secs(60), trichotomy),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let ok = out.pass && took < limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id} {name}: {} in {:.2}s (limit {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs(),
            out.detail
        );
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
