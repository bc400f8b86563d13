use wheelkit::graph::named;
use wheelkit::linkage::{find_disjoint_paths, validate_paths};
use wheelkit::Limits;

fn main() -> wheelkit::Result<()> {
    let limits = Limits::default();
    let none: [&str; 0] = [];
    let g = named::grid(3, 3);
    // corners of the 3x3 grid are 0, 2, 6, 8
    for pairs in [[("0", "8"), ("2", "6")], [("0", "2"), ("6", "8")]] {
        match find_disjoint_paths(&g, &pairs, &none, &limits)? {
            Some(ps) => println!("{pairs:?}: {:?} valid={}", ps.paths, validate_paths(&g, &ps, &none)),
            None => println!("{pairs:?}: not linkable"),
        }
    }

    let c = named::cycle(6);
    let blocked = find_disjoint_paths(&c, &[("0", "3")], &["1", "5"], &limits)?;
    println!("C6, 0 to 3 avoiding 1 and 5: {blocked:?}");
    Ok(())
}
