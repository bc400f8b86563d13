//! Planarity, face tracing, and disc-planarity with ordered and unordered
//! terminals.

use wheelkit::graph::named;
use wheelkit::planarity::{embed, is_planar};
use wheelkit::terminal::{embed_disc, is_disc_planar};
use wheelkit::{Graph, TerminalGraph};

fn main() -> wheelkit::Result<()> {
    for (name, g) in [
        ("octahedron", named::octahedron()),
        ("grid 3x3", named::grid(3, 3)),
        ("K5", named::complete(5)),
        ("K3,3", named::complete_bipartite(3, 3)),
        ("Petersen", named::petersen()),
    ] {
        if is_planar(&g) {
            let e = embed(&g)?;
            println!(
                "{name}: planar, n={} m={} faces={} euler={}",
                g.n(),
                g.m(),
                e.face_count(),
                e.euler_holds()
            );
        } else {
            println!("{name}: not planar");
        }
    }

    // the chord 03 fixes the boundary cycle, so only its own order fits
    let c6 = named::cycle(6);
    let tg = TerminalGraph::new(c6.clone(), &["0", "2", "4"], true)?;
    println!("C6 with 0 2 4 ordered: {}", is_disc_planar(&tg)?);
    let chorded = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])?;
    for ordered in [true, false] {
        let tg = TerminalGraph::new(chorded.clone(), &["0", "1", "3", "4"], ordered)?;
        println!("C6 + chord 03, S = 0 1 3 4, ordered={ordered}: {}", is_disc_planar(&tg)?);
        let tg = TerminalGraph::new(chorded.clone(), &["0", "3", "1", "4"], ordered)?;
        println!("C6 + chord 03, S = 0 3 1 4, ordered={ordered}: {}", is_disc_planar(&tg)?);
    }

    let e = embed_disc(&tg)?;
    println!("disc embedding faces of C6: {:?}", e.faces_named());
    Ok(())
}
