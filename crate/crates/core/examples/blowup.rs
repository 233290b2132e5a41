// Regions and certificates on the blow-up of the plane at a point.

use azstab::certify::{certify_construction, enumerate_region};
use azstab::picard::DivisorClass;
use azstab::sheaf::{ideal_h0_bound, PointScheme};
use azstab::surface::Surface;

fn main() {
    let s = Surface::blowup_p2();
    let cases = [([-1, 4], [1, 0], [1, 0]), ([-1, 5], [2, 0], [2, -2])];
    for (d, c1, c2) in cases {
        let d = DivisorClass::new(d.to_vec());
        let z = PointScheme::generic(
            DivisorClass::new(c1.to_vec()),
            DivisorClass::new(c2.to_vec()),
        );
        let region = enumerate_region(&s, &d).unwrap();
        println!(
            "D = {}, Z = {} ∩ {}",
            s.format_class(&d),
            s.format_class(&z.c1_first),
            s.format_class(&z.c1_second)
        );
        for b in &region {
            println!(
                "  h0(I_Z({})) in {}",
                s.format_class(b),
                ideal_h0_bound(&s, &z, b).unwrap()
            );
        }
        let cert = certify_construction(&s, &d, &z).unwrap();
        let h1 = cert.conditions.d.evidence_value("h1(O(-D))").unwrap();
        println!("  h1(O(-D)) = {h1}, verdict {}", cert.verdict);
    }
}
