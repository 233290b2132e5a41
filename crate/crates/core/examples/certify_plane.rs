// The five-condition certificate for D = H on the plane.

use azstab::certify::certify_construction;
use azstab::picard::DivisorClass;
use azstab::sheaf::PointScheme;
use azstab::surface::Surface;

fn main() {
    let s = Surface::p2();
    let d = DivisorClass::new(vec![1]);
    for (d1, d2) in [(2, 2), (2, 5), (4, 6)] {
        let z = PointScheme::generic(DivisorClass::new(vec![d1]), DivisorClass::new(vec![d2]));
        let cert = certify_construction(&s, &d, &z).unwrap();
        println!(
            "C1 = {d1}H, C2 = {d2}H, l(Z) = {}: {}",
            cert.length, cert.verdict
        );
        for (name, cond) in cert.conditions.iter() {
            let evidence: Vec<String> = cond
                .evidence
                .iter()
                .map(|e| format!("{} = {}", e.label, e.value))
                .collect();
            println!("  ({name}) {:<8} {}", cond.status, evidence.join(", "));
        }
    }
    let z = PointScheme::generic(DivisorClass::new(vec![3]), DivisorClass::new(vec![3]));
    let cert = certify_construction(&s, &DivisorClass::new(vec![2]), &z).unwrap();
    println!("D = 2H: {} (e) {}", cert.verdict, cert.conditions.e.status);
}
