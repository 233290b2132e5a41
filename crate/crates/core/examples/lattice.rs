// Intersection numbers and exact polynomial sign tests.

use azstab::picard::{rational, DivisorClass, IntersectionForm, RationalPolynomial};

fn main() {
    let form = IntersectionForm::diagonal(&[1, -1]);
    let d = DivisorClass::new(vec![-1, 4]);
    let l = DivisorClass::new(vec![3, -1]);
    println!("D = {d}, L = {l}");
    println!("D.L = {}", form.intersect(&d, &l).unwrap());
    println!("D^2 = {}", form.square(&d).unwrap());

    // 2k^3 - 7k + 1
    let p = RationalPolynomial::new(vec![rational(1), rational(-7), rational(0), rational(2)]);
    let bound = p.root_bound().unwrap();
    println!("p(k) = {p}");
    println!("sign at infinity: {:?}", p.sign_at_infinity());
    println!(
        "every real root lies below {bound}; p({}) = {}",
        &bound + rational(1),
        p.eval(&(&bound + rational(1)))
    );
}
