use std::collections::BTreeMap;

use wheelkit::catalog::matches_catalog;
use wheelkit::generate::{generate_terminal_planar, Filter};
use wheelkit::Limits;

fn main() -> wheelkit::Result<()> {
    let filters = [Filter::TerminalsIndependent, Filter::Connected, Filter::NoGoodWheel];
    let mut by_size: BTreeMap<usize, (usize, Vec<&str>)> = BTreeMap::new();
    for tg in generate_terminal_planar(8, 5, &filters, &Limits::default())? {
        let e = by_size.entry(tg.graph.n()).or_default();
        e.0 += 1;
        if let Some(m) = matches_catalog(&tg) {
            e.1.push(m.name);
        }
    }
    for (n, (count, members)) in by_size {
        println!("n={n}: {count} wheel-free classes, catalog members {members:?}");
    }
    let none = generate_terminal_planar(6, 4, &[Filter::Nothing], &Limits::default())?.count();
    println!("reject-all filter: {none}");
    Ok(())
}
