use wheelkit::graph::named;
use wheelkit::separation::{connectivity, enumerate_separations, CutEdges};

fn main() {
    let g = named::octahedron();
    println!("octahedron connectivity {}", connectivity(&g));
    for k in 3..=5 {
        let canonical = enumerate_separations(&g, k, CutEdges::Canonical).count();
        let all = enumerate_separations(&g, k, CutEdges::Exhaustive).count();
        println!("k={k}: {canonical} with cut edges on side 2, {all} over every split");
    }
    let c = named::cycle(6);
    for s in enumerate_separations(&c, 2, CutEdges::Canonical).take(3) {
        println!("C6 cut {:?}: side 1 {:?}", s.cut(), s.side1.vertices);
    }
}
