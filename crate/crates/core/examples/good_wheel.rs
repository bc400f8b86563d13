use wheelkit::graph::named;
use wheelkit::wheel::{find_s_good_wheel, is_s_good};
use wheelkit::{Limits, TerminalGraph};

fn main() -> wheelkit::Result<()> {
    let limits = Limits::default();
    // W5: center "5", rim 0..4
    let w5 = named::wheel(5);
    for s in [vec![], vec!["0", "2"], vec!["5"]] {
        let tg = TerminalGraph::new(w5.clone(), &s, false)?;
        match find_s_good_wheel(&tg, &limits)? {
            Some(w) => println!(
                "S={s:?}: center {} rim {:?} spokes {:?} good={}",
                w.center,
                w.rim,
                w.spokes,
                is_s_good(&w5, &w, &s)?
            ),
            None => println!("S={s:?}: no S-good wheel"),
        }
    }

    let ico = named::icosahedron();
    let s: Vec<String> = (0..6).map(|i| i.to_string()).collect();
    let tg = TerminalGraph::new(ico, &s, false)?;
    let w = find_s_good_wheel(&tg, &limits)?.expect("icosahedron has many wheels");
    println!("icosahedron, S = 0..5: center {} with {} spokes", w.center, w.spokes.len());
    Ok(())
}
