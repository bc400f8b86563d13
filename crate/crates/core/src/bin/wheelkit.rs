use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wheelkit::catalog::{catalog, matches_catalog};
use wheelkit::coloring::four_color;
use wheelkit::experiment::{run_experiment, Config, EXPERIMENTS};
use wheelkit::gadget::{apply_gadget, by_name, lift_subdivision, library};
use wheelkit::generate::{generate_terminal_planar, Filter};
use wheelkit::io::{read_terminal_graph, to_dot, to_graph6, to_named_edges};
use wheelkit::planarity::{embed, is_planar};
use wheelkit::separation::{
    check_trichotomy, enumerate_separations, separation_from_cut, CutEdges, Separation, Verdict,
};
use wheelkit::subdivision::find_k5_subdivision;
use wheelkit::terminal::is_disc_planar;
use wheelkit::wheel::find_s_good_wheel;
use wheelkit::{Error, TerminalGraph};

/// Graph files are graph6, a numbered edge list (`n`, then `u v` lines,
/// optional `S: i j ...`) or a named edge list (`a b` lines, optional
/// `S: a b ...`).
#[derive(Parser)]
#[command(name = "wheelkit", version)]
struct Cli {
    /// `key = value` settings: seed, instances, hosts, max_vertices and the
    /// three vertex limits.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Planarity, with the faces of an embedding when planar.
    Planar { file: PathBuf },
    /// Embeddable in a disc with the terminals on the boundary.
    DiscPlanar {
        file: PathBuf,
        /// Terminals in this order around the boundary (default).
        #[arg(long, conflicts_with = "unordered")]
        ordered: bool,
        /// Any boundary order.
        #[arg(long)]
        unordered: bool,
        /// Comma-separated terminals, overriding the file's `S:` line.
        #[arg(long, value_delimiter = ',')]
        terminals: Option<Vec<String>>,
    },
    /// Faces of a planar embedding.
    Faces { file: PathBuf },
    /// An S-good wheel of a terminal graph.
    GoodWheel {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        terminals: Option<Vec<String>>,
    },
    /// A K5-subdivision.
    K5 { file: PathBuf },
    /// A proper 4-coloring.
    Color { file: PathBuf },
    /// Separations of order k.
    Separations {
        #[arg(short, value_parser = clap::value_parser!(u8).range(4..=5))]
        k: u8,
        file: PathBuf,
        /// Keep only separations whose side 1 is disc-planar with the cut on the boundary.
        #[arg(long)]
        planar_side: bool,
        /// Every split of the edges inside the cut, instead of all on side 2.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Verdict for the planar side of the separation at a cut.
    Trichotomy {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        cut: Vec<String>,
        /// A vertex on the planar side; default tries each component.
        #[arg(long)]
        inside: Option<String>,
    },
    /// The six wheel-free terminal graphs.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Reduce a host by a rule and lift a K5-subdivision of the result.
    Lift {
        #[arg(long)]
        rule: Option<String>,
        file: Option<PathBuf>,
        /// List the rules.
        #[arg(long)]
        list: bool,
    },
    /// Disc-planar terminal graphs up to rooted isomorphism.
    Gen {
        #[arg(short, long, default_value_t = 6)]
        n: usize,
        #[arg(short, long, default_value_t = 5)]
        s: usize,
        /// independent, two-interior, connected, no-good-wheel, none.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Run a registered experiment; exit 1 on a counterexample.
    Verify {
        experiment: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Dump {
        #[arg(long, value_enum, default_value_t = DumpFormat::Graph6)]
        format: DumpFormat,
    },
    Match { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpFormat {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Graph6,
    Edges,
}

enum Output {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            let text = match out {
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("json") + "\n",
                Output::Text(t) => t,
            };
            let written = match &cli.out {
                Some(p) => std::fs::write(p, text).map_err(|e| e.to_string()),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                Ok(()) if pass => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(file: &PathBuf, ordered: bool) -> wheelkit::Result<TerminalGraph> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Input(format!("{}: {e}", file.display())))?;
    read_terminal_graph(&text, ordered)
}

fn with_terminals(tg: TerminalGraph, ts: &Option<Vec<String>>, ordered: bool) -> wheelkit::Result<TerminalGraph> {
    match ts {
        Some(ts) => TerminalGraph::new(tg.graph, ts, ordered),
        None => Ok(tg),
    }
}

fn separation_json(s: &Separation) -> Value {
    json!({ "cut": s.cut(), "side1": s.side1, "side2": s.side2 })
}

fn run(cli: &Cli) -> wheelkit::Result<(Output, bool)> {
    let mut config = match &cli.config {
        Some(p) => Config::parse(
            &std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?,
        )?,
        None => Config::default(),
    };
    let limits = config.limits;
    let ok = |v: Value| Ok((Output::Json(v), true));
    match &cli.cmd {
        Cmd::Planar { file } | Cmd::Faces { file } => {
            let g = read(file, false)?.graph;
            let faces = if is_planar(&g) { Some(embed(&g)?.faces_named()) } else { None };
            ok(json!({ "planar": faces.is_some(), "faces": faces }))
        }
        Cmd::DiscPlanar { file, unordered, terminals, .. } => {
            let tg = with_terminals(read(file, !unordered)?, terminals, !unordered)?;
            ok(json!({ "disc_planar": is_disc_planar(&tg)?, "ordered": tg.ordered, "terminals": tg.terminals }))
        }
        Cmd::GoodWheel { file, terminals } => {
            let tg = with_terminals(read(file, false)?, terminals, false)?;
            match find_s_good_wheel(&tg, &limits)? {
                Some(w) => ok(json!({ "found": true, "center": w.center, "rim": w.rim, "spokes": w.spokes })),
                None => ok(json!({ "found": false })),
            }
        }
        Cmd::K5 { file } => {
            let g = read(file, false)?.graph;
            match find_k5_subdivision(&g, &limits)? {
                Some(t) => ok(json!({ "found": true, "branch": t.branch, "paths": t.paths })),
                None => ok(json!({ "found": false })),
            }
        }
        Cmd::Color { file } => {
            let g = read(file, false)?.graph;
            let c = four_color(&g, &limits)?;
            ok(json!({ "colorable": c.is_some(), "assignment": c }))
        }
        Cmd::Separations { k, file, planar_side, exhaustive } => {
            let g = read(file, false)?.graph;
            let mode = if *exhaustive { CutEdges::Exhaustive } else { CutEdges::Canonical };
            let mut out = Vec::new();
            for s in enumerate_separations(&g, *k as usize, mode) {
                if *planar_side {
                    let tg = TerminalGraph::new(s.side1.graph(), &s.cut().into_iter().collect::<Vec<_>>(), false)?;
                    if !is_disc_planar(&tg)? {
                        continue;
                    }
                }
                out.push(separation_json(&s));
            }
            ok(json!({ "k": k, "count": out.len(), "separations": out }))
        }
        Cmd::Trichotomy { file, cut, inside } => {
            let g = read(file, false)?.graph;
            let candidates: Vec<String> = match inside {
                Some(v) => vec![v.clone()],
                None => {
                    let rest: Vec<usize> = (0..g.n()).filter(|&v| !cut.iter().any(|c| c == g.name(v))).collect();
                    let h = g.induced(&rest);
                    h.components().iter().map(|c| g.name(rest[c[0]]).to_string()).collect()
                }
            };
            let mut last = Error::Input("the cut leaves nothing outside it".into());
            for v in candidates {
                let sep = separation_from_cut(&g, cut, std::slice::from_ref(&v))?;
                match check_trichotomy(&g, &sep, &limits) {
                    Ok(verdict) => {
                        let pass = verdict != Verdict::None;
                        let v = json!({ "separation": separation_json(&sep), "verdict": verdict });
                        return Ok((Output::Json(v), pass));
                    }
                    Err(e) => last = e,
                }
            }
            Err(last)
        }
        Cmd::Catalog { cmd } => match cmd {
            CatalogCmd::List => ok(Value::Array(
                catalog()
                    .iter()
                    .map(|m| {
                        json!({
                            "name": m.name,
                            "vertices": m.tg.graph.names(),
                            "edges": m.tg.graph.edge_names(),
                            "terminals": m.tg.terminals,
                            "special_vertex": m.special_vertex,
                        })
                    })
                    .collect(),
            )),
            CatalogCmd::Dump { format } => {
                let mut s = String::new();
                for m in catalog() {
                    match format {
                        DumpFormat::Graph6 => s += &format!("{}\n", to_graph6(&m.tg.graph)),
                        DumpFormat::Dot => {
                            s += &format!("// {}\n", m.name);
                            s += &to_dot(&m.tg.graph, &m.tg.terminals);
                        }
                    }
                }
                Ok((Output::Text(s), true))
            }
            CatalogCmd::Match { file } => {
                let tg = read(file, true)?;
                ok(json!({ "member": matches_catalog(&tg).map(|m| m.name) }))
            }
        },
        Cmd::Lift { rule, file, list } => {
            if *list {
                return ok(json!(library().iter().map(|g| g.rule.name.clone()).collect::<Vec<_>>()));
            }
            let (Some(rule), Some(file)) = (rule, file) else {
                return Err(Error::Input("lift needs --rule and a host file, or --list".into()));
            };
            let gadget = by_name(rule)?;
            let g = read(file, false)?.graph;
            let reduced = apply_gadget(&g, &gadget.rule)?;
            let Some(tp) = find_k5_subdivision(&reduced, &limits)? else {
                return ok(json!({ "rule": rule, "reduced_has_k5": false }));
            };
            match lift_subdivision(&g, &gadget.rule, &tp) {
                Ok(t) => ok(json!({
                    "rule": rule,
                    "reduced_has_k5": true,
                    "reduced": { "branch": tp.branch, "paths": tp.paths },
                    "lifted": { "branch": t.branch, "paths": t.paths },
                })),
                Err(e @ Error::LiftingFailure { .. }) => Ok((
                    Output::Json(json!({ "rule": rule, "reduced_has_k5": true, "failure": e.to_string() })),
                    false,
                )),
                Err(e) => Err(e),
            }
        }
        Cmd::Gen { n, s, filter, format, count } => {
            let filters = filter.iter().map(|f| Filter::parse(f)).collect::<wheelkit::Result<Vec<_>>>()?;
            let stream = generate_terminal_planar(*n, *s, &filters, &limits)?;
            if *count {
                return ok(json!({ "n_max": n, "s": s, "count": stream.count() }));
            }
            let mut out = String::new();
            for tg in stream {
                match format {
                    GenFormat::Graph6 => out += &format!("{}\n", to_graph6(&tg.graph)),
                    GenFormat::Edges => out += &format!("{}\n", to_named_edges(&tg)),
                }
            }
            Ok((Output::Text(out), true))
        }
        Cmd::Verify { experiment, seed, instances, list } => {
            if *list {
                return ok(json!(EXPERIMENTS.iter().map(|(n, d)| json!({ "name": n, "checks": d })).collect::<Vec<_>>()));
            }
            let Some(name) = experiment else {
                return Err(Error::Input("verify needs an experiment name, or --list".into()));
            };
            if let Some(s) = seed {
                config.seed = *s;
            }
            if let Some(i) = instances {
                config.instances = Some(*i);
            }
            let r = run_experiment(name, &config)?;
            let pass = r.pass;
            Ok((Output::Json(serde_json::to_value(&r).expect("json")), pass))
        }
    }
}
