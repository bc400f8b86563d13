//! Runs the registered experiments at their default sizes, or the ones
//! named on the command line.

use wheelkit::experiment::{run_experiment, Config, EXPERIMENTS};

fn main() -> wheelkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        EXPERIMENTS.iter().map(|(n, _)| *n).filter(|n| *n != "all").collect()
    } else {
        args.iter().map(String::as_str).collect()
    };
    let config = Config::default();
    for name in names {
        let r = run_experiment(name, &config)?;
        println!(
            "{:<22} {} instances {:>6} counterexamples {} {} ms",
            r.experiment,
            if r.pass { "PASS" } else { "FAIL" },
            r.instances,
            r.counterexamples.len(),
            r.wall_time_ms
        );
    }
    Ok(())
}
