//! Exact K5-subdivision search and the independent validator.

use wheelkit::graph::named;
use wheelkit::subdivision::{find_k5_subdivision, validate_subdivision};
use wheelkit::{Graph, Limits};

fn main() -> wheelkit::Result<()> {
    let limits = Limits::default();
    let mut subdivided: Vec<(usize, usize)> = Vec::new();
    // K5 with every edge split once: 15 vertices is over the default bound
    let mut next = 5;
    for a in 0..5 {
        for b in a + 1..5 {
            subdivided.extend([(a, next), (next, b)]);
            next += 1;
        }
    }
    let big = Graph::from_edges(next, &subdivided)?;
    for (name, g, l) in [
        ("K5", named::complete(5), limits),
        ("K6", named::complete(6), limits),
        ("Petersen", named::petersen(), limits),
        ("K3,3", named::complete_bipartite(3, 3), limits),
        ("icosahedron", named::icosahedron(), limits),
        ("subdivided K5", big.clone(), Limits::with_search(16)),
    ] {
        match find_k5_subdivision(&g, &l)? {
            Some(t) => {
                validate_subdivision(&g, &t)?;
                println!("{name}: branch {:?}, longest path {}", t.branch, t.paths.iter().map(Vec::len).max().unwrap_or(0));
            }
            None => println!("{name}: none"),
        }
    }
    println!("default bound on 15 vertices: {:?}", find_k5_subdivision(&big, &limits).err());
    Ok(())
}
