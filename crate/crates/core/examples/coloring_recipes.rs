//! Every shipped recipe, checked on every boundary coloring it admits.

use wheelkit::recipe::{library, verify_recipe};

fn main() -> wheelkit::Result<()> {
    let mut total = 0;
    for r in library() {
        let rep = verify_recipe(&r)?;
        total += rep.cases;
        println!(
            "{:<24} domain {} cases {:>5} failures {}",
            rep.name,
            rep.domain.len(),
            rep.cases,
            rep.failures.len()
        );
    }
    println!("{total} cases");
    Ok(())
}
