use wheelkit::coloring::{extend_exact, extend_greedy, four_color, is_proper, Coloring};
use wheelkit::graph::named;
use wheelkit::Limits;

fn main() -> wheelkit::Result<()> {
    let limits = Limits::default();
    for (name, g) in [("K4", named::complete(4)), ("K5", named::complete(5)), ("W5", named::wheel(5))] {
        let c = four_color(&g, &limits)?;
        println!("{name}: {c:?}");
    }

    // precolor two rim vertices of W5, extend the rest
    let w5 = named::wheel(5);
    let base: Coloring = [("0".to_string(), 1), ("2".to_string(), 2)].into_iter().collect();
    let greedy = extend_greedy(&w5, &base, &["5", "1", "3", "4"])?;
    println!("greedy from {base:?}: {greedy:?}");
    let exact = extend_exact(&w5, &base, &["1", "3", "4", "5"], &[1, 2, 3])?;
    println!("three colors only: {exact:?}");
    if let Some(c) = greedy {
        println!("proper: {}", is_proper(&w5, &c));
    }
    Ok(())
}
