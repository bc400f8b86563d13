use wheelkit::graph::named;
use wheelkit::iso::{rooted_isomorphic, rooted_isomorphism};
use wheelkit::TerminalGraph;

fn main() -> wheelkit::Result<()> {
    let p = named::path(4);
    let ends = TerminalGraph::new(p.clone(), &["0", "3"], false)?;
    let other_ends = TerminalGraph::new(p.relabel(|s| format!("v{s}"))?, &["v3", "v0"], false)?;
    let inner = TerminalGraph::new(p, &["0", "1"], false)?;
    println!("ends vs relabeled ends: {:?}", rooted_isomorphism(&ends, &other_ends));
    println!("ends vs an end and its neighbor: {}", rooted_isomorphic(&ends, &inner));
    Ok(())
}
