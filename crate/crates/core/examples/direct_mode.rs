// Deciding the extension from slope stability of E when h2(O(-2D)) != 0.

use azstab::certify::{
    certify_construction, certify_direct_auto, enumerate_region, generic_local_freeness_alt,
};
use azstab::picard::DivisorClass;
use azstab::sheaf::PointScheme;
use azstab::stability::hs_mu_stability;
use azstab::surface::Surface;

fn main() {
    let s = Surface::p2();
    let d = DivisorClass::new(vec![2]);
    let z = PointScheme::generic(DivisorClass::new(vec![3]), DivisorClass::new(vec![3]));

    let full = certify_construction(&s, &d, &z).unwrap();
    println!(
        "five conditions: {} (e is {})",
        full.verdict, full.conditions.e.status
    );

    let region = enumerate_region(&s, &d).unwrap();
    println!(
        "slope stability of E: {:?}",
        hs_mu_stability(&s, &z, &d, &region).unwrap()
    );
    println!(
        "local freeness: {:?}",
        generic_local_freeness_alt(&s, &d, &z).unwrap()
    );
    let direct = certify_direct_auto(&s, &d, &z).unwrap();
    println!("direct: {}", direct.verdict);
    for a in &direct.assumptions {
        println!("  assuming {a}");
    }
}
