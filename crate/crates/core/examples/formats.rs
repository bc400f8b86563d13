use wheelkit::graph::named;
use wheelkit::io::{from_graph6, read_terminal_graph, terminal_to_edge_list, to_dot, to_graph6, to_named_edges};
use wheelkit::TerminalGraph;

fn main() -> wheelkit::Result<()> {
    let g = named::petersen();
    let s = to_graph6(&g);
    println!("Petersen graph6: {s}");
    assert_eq!(from_graph6(&s)?.m(), 15);

    let tg = TerminalGraph::new(named::cycle(4), &["0", "2"], true)?;
    print!("numbered:\n{}", terminal_to_edge_list(&tg));
    print!("named:\n{}", to_named_edges(&tg));
    let back = read_terminal_graph(&to_named_edges(&tg), true)?;
    assert_eq!(back, tg);
    print!("{}", to_dot(&tg.graph, &tg.terminals));
    Ok(())
}
