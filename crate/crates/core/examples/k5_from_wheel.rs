//! A wheel with four spokes w1..w4 in rim order, plus a w1-w3 path and a
//! w2-w4 path outside the wheel, contains a K5-subdivision.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wheelkit::generate::random_wheel_host;
use wheelkit::linkage::find_disjoint_paths;
use wheelkit::subdivision::{validate_subdivision, wheel_plus_paths_to_k5};
use wheelkit::Limits;

fn main() -> wheelkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let h = random_wheel_host(&mut rng);
        let [w1, w2, w3, w4] = &h.spokes;
        let avoid: Vec<String> = h.wheel.vertices().into_iter().filter(|v| !h.spokes.contains(v)).collect();
        let ps = find_disjoint_paths(&h.graph, &[(w1, w3), (w2, w4)], &avoid, &Limits::default())?
            .expect("hosts are built with a cross linkage");
        let t = wheel_plus_paths_to_k5(&h.graph, &h.wheel, [w1, w2, w3, w4], &ps)?;
        validate_subdivision(&h.graph, &t)?;
        println!("rim {:?}", h.wheel.rim);
        println!("  cross paths {:?}", ps.paths);
        println!("  K5 branch {:?}", t.branch);
    }
    Ok(())
}
