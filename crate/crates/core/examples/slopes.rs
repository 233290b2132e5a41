// Asymptotic k-slope comparisons and the per-subobject stability tests.

use azstab::picard::{ratio, rational, DivisorClass};
use azstab::sheaf::{ch_line_bundle, ChernCharacter};
use azstab::stability::{
    az_subobject_test, central_charge, compare_k_slopes, gieseker_subobject_test, k_slope_at,
};
use azstab::surface::Surface;

fn main() {
    let p2 = Surface::p2();
    let e = ChernCharacter::new(3, DivisorClass::new(vec![3]), ratio(-3, 2));
    let f = ChernCharacter::new(2, DivisorClass::new(vec![2]), rational(-2));
    let z = central_charge(&p2, &e).unwrap();
    println!("Z_k(E) = ({}) + i({})", z.real_part, z.imag_part);

    let cmp = compare_k_slopes(&p2, &e, &f).unwrap();
    println!(
        "F = {f} inside E = {e}: {:?} for k > {} (cross = {})",
        cmp.verdict, cmp.witness_k0, cmp.cross
    );
    let k = &cmp.witness_k0 + rational(1);
    println!(
        "  at k = {k}: mu_k(F) = {}, mu_k(E) = {}",
        k_slope_at(&p2, &f, &k).unwrap().unwrap(),
        k_slope_at(&p2, &e, &k).unwrap().unwrap()
    );

    let sub = ch_line_bundle(&p2, &DivisorClass::new(vec![2])).unwrap();
    println!(
        "O(2) inside E: {:?}",
        compare_k_slopes(&p2, &e, &sub).unwrap().verdict
    );

    let anti = Surface::p2().anticanonical().unwrap();
    println!(
        "L = -K: az {:?}, Gieseker {:?}",
        az_subobject_test(&anti, &e, &f).unwrap(),
        gieseker_subobject_test(&anti, &e, &f).unwrap()
    );
}
