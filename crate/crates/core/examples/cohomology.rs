// Line-bundle cohomology on the three catalog surfaces.

use azstab::picard::DivisorClass;
use azstab::surface::Surface;

fn show(s: &Surface, coeffs: &[i64]) {
    let b = DivisorClass::new(coeffs.to_vec());
    let t = s.line_bundle_cohomology(&b).unwrap();
    let dual = s
        .line_bundle_cohomology(&s.serre_dual(&b).unwrap())
        .unwrap();
    println!(
        "{:<6} O({}): h = ({t}), chi = {}, dual h = ({dual})",
        s.name(),
        s.format_class(&b),
        t.euler()
    );
}

fn main() {
    let p2 = Surface::p2();
    for k in [-5, -3, -1, 0, 2] {
        show(&p2, &[k]);
    }
    let q = Surface::p1xp1();
    for b in [[2, -3], [1, -2], [-2, -2], [3, 3]] {
        show(&q, &b);
    }
    let bl = Surface::blowup_p2();
    for b in [[1, -4], [1, -5], [-2, 1], [-4, 3], [-3, 1], [2, 3]] {
        show(&bl, &b);
    }
}
