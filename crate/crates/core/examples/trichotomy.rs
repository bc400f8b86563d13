//! The three verdicts on the planar side of a small separation: an S-good
//! wheel, a five-vertex side of an order-4 cut, or a catalog member.

use wheelkit::catalog::member_by_name;
use wheelkit::config::adjacency;
use wheelkit::separation::{check_trichotomy, glue_side};
use wheelkit::{Limits, TerminalGraph};

fn main() -> wheelkit::Result<()> {
    let limits = Limits::default();
    let ring = |ts: &[&str]| {
        let mut rows: Vec<(String, String)> = Vec::new();
        for i in 0..ts.len() {
            rows.push((ts[i].to_string(), ts[(i + 1) % ts.len()].to_string()));
        }
        rows.push(("o".to_string(), ts.join(" ")));
        let r: Vec<(&str, &str)> = rows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        adjacency(&r)
    };
    let five = ["t1", "t2", "t3", "t4", "t5"];

    let y = member_by_name("Y").expect("Y is in the catalog");
    let (g, sep) = glue_side(&y.tg, &ring(&five))?;
    println!("Y glued: {:?}", check_trichotomy(&g, &sep, &limits)?);

    let small = TerminalGraph::new(adjacency(&[("x", "t1 t2 t3 t4")]), &five[..4], false)?;
    let (g, sep) = glue_side(&small, &ring(&five[..4]))?;
    println!("one vertex inside a 4-cut: {:?}", check_trichotomy(&g, &sep, &limits)?);

    let wheel = adjacency(&[("c", "a b d e"), ("a", "b t1 t2"), ("b", "d t3"), ("d", "e t4"), ("e", "a t5")]);
    let tg = TerminalGraph::new(wheel, &five, false)?;
    let (g, sep) = glue_side(&tg, &ring(&five))?;
    println!("wheel inside: {}", check_trichotomy(&g, &sep, &limits)?.label());
    Ok(())
}
