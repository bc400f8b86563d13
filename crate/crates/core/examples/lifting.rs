//! Reduce a host by a rule, find a K5-subdivision of the reduced graph and
//! lift it back. With a path argument, also writes the clique host of the
//! first rule as a named edge list for `wheelkit lift`.

use wheelkit::gadget::{apply_gadget, check_rule, clique_host, corpus, library, lift_subdivision};
use wheelkit::io::to_named_edges;
use wheelkit::subdivision::{find_k5_subdivision, validate_subdivision};
use wheelkit::{Limits, TerminalGraph};

fn main() -> wheelkit::Result<()> {
    let gadgets = library();
    let first = &gadgets[0];
    let host = clique_host(first);
    let reduced = apply_gadget(&host, &first.rule)?;
    if let Some(tp) = find_k5_subdivision(&reduced, &Limits::default())? {
        let t = lift_subdivision(&host, &first.rule, &tp)?;
        validate_subdivision(&host, &t)?;
        println!("{}: reduced branch {:?} lifted branch {:?}", first.rule.name, tp.branch, t.branch);
    }
    if let Some(path) = std::env::args().nth(1) {
        let tg = TerminalGraph::new(host, &first.local.boundary, false)?;
        std::fs::write(&path, to_named_edges(&tg)).map_err(|e| wheelkit::Error::Input(e.to_string()))?;
        println!("wrote {path}");
    }

    for gd in &gadgets {
        let rep = check_rule(gd, &corpus(gd, 8, 3))?;
        println!(
            "{:<22} hosts {} with K5 {} lifted {} failures {}",
            gd.rule.name,
            rep.hosts,
            rep.hosts_with_k5,
            rep.lifted,
            rep.failures.len()
        );
    }
    Ok(())
}
