// The regression suite against a deliberately wrong cohomology oracle.

use std::sync::Arc;

use azstab::picard::DivisorClass;
use azstab::regression::{render, run, Catalog, Family};
use azstab::surface::ShiftedOracle;

fn main() {
    let mut catalog = Catalog::default();
    let clean = run(&catalog, Some(Family::Quadric));
    println!(
        "clean quadric run: {} checks, all pass: {}",
        clean.len(),
        clean.iter().all(|o| o.passed())
    );

    let inner = catalog.p1xp1.oracle();
    catalog.p1xp1 = catalog.p1xp1.clone().with_oracle(Arc::new(ShiftedOracle {
        inner,
        target: DivisorClass::new(vec![1, -3]),
        h1_shift: 1,
    }));
    let broken = run(&catalog, Some(Family::Quadric));
    let text = render(&broken);
    for line in text.lines().take(12) {
        println!("{line}");
    }
}
