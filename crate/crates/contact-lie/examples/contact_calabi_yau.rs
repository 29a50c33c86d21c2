//! Verify the contact Calabi-Yau identity `eps ^ conj(eps) = (d eta)^2 / 2`
//! on the Sasakian Heisenberg algebra, with `eps = -Phi_1 - i Phi_2`.
//!
//! ```text
//! cargo run --example contact_calabi_yau
//! ```

use contact_lie::catalog::{instantiate, params};
use contact_lie::forms::ComplexTwoForm;
use contact_lie::sc;
use contact_lie::structures::check_contact_calabi_yau;

fn main() {
    let structure = |i: i64| {
        instantiate("h5_double_aqs", &params(&[("i", sc!(i)), ("c", sc!(1))]))
            .expect("catalog fixture")
            .output
            .as_acm()
            .expect("acm fixture")
            .clone()
    };
    let s1 = structure(1);
    let s2 = structure(2);
    let s3 = structure(3);

    let eps = ComplexTwoForm::new(
        s1.fundamental_form().scale(&sc!(-1)),
        s2.fundamental_form().scale(&sc!(-1)),
    );
    let lhs = eps.wedge_with_conjugate().expect("degree 4 fits in dim 5");
    let deta = s3.d_eta();
    let rhs = deta
        .wedge(&deta)
        .expect("degree 4 fits in dim 5")
        .scale(&sc!(1, 2));

    println!("eps ^ conj(eps) components:");
    for (idx, c) in lhs.terms().filter(|(_, c)| !c.is_zero()) {
        println!("  e^{:?} -> {c}", idx);
    }
    println!("(d eta)^2 / 2 components:");
    for (idx, c) in rhs.terms().filter(|(_, c)| !c.is_zero()) {
        println!("  e^{:?} -> {c}", idx);
    }
    println!(
        "contact Calabi-Yau: {}",
        check_contact_calabi_yau(&s3, &eps).expect("Sasakian base")
    );
}
