use wheelkit::catalog::{catalog, matches_catalog};
use wheelkit::io::{to_dot, to_graph6};
use wheelkit::terminal::is_disc_planar;
use wheelkit::wheel::find_s_good_wheel;
use wheelkit::Limits;

fn main() -> wheelkit::Result<()> {
    for m in catalog() {
        let g = &m.tg.graph;
        println!(
            "{:<3} {} n={} m={} disc-planar={} independent={} wheel-free={} special={:?}",
            m.name,
            to_graph6(g),
            g.n(),
            g.m(),
            is_disc_planar(&m.tg)?,
            m.tg.terminals_independent(),
            find_s_good_wheel(&m.tg, &Limits::default())?.is_none(),
            m.special_vertex
        );
    }
    let x2 = &catalog()[3];
    println!("{}", to_dot(&x2.tg.graph, &x2.tg.terminals));
    println!("X2 matches {:?}", matches_catalog(&x2.tg).map(|m| m.name));
    Ok(())
}
