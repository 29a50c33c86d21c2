//! The trivial-center normal-form families: always alpha-Sasakian, with the
//! kernel/image splitting of ad_xi and an explicit change of basis landing
//! on the semidirect-product constants.
//!
//! ```text
//! cargo run --example trivial_center_families
//! ```

use contact_lie::catalog::{instantiate, params, samples};
use contact_lie::linalg::Matrix;
use contact_lie::sc;
use contact_lie::structures::{classify, decompose_ad_xi};

fn main() {
    for name in ["thm13_A1", "thm13_A2", "thm13_A3", "thm13_A4", "thm13_B1", "thm13_B2", "thm13_B3", "thm13_B4"] {
        let p = &samples(name).expect("known family")[0];
        let f = instantiate(name, p).expect("documented sample");
        let s = f.output.as_acm().expect("acm family");
        let r = classify(s);
        let center = s.metric_algebra().algebra().center().dim();
        println!(
            "{name}: center {center}-dim, alpha-Sasakian with alpha = {}",
            r.alpha.expect("always alpha-Sasakian")
        );
    }

    // ker ad_xi (+) Im ad_xi for the A1 family
    let f = instantiate("thm13_A1", &samples("thm13_A1").unwrap()[0]).unwrap();
    let s = f.output.as_acm().unwrap();
    let (ker, im) = decompose_ad_xi(s).expect("transversely Kahler");
    println!("\nA1 splitting: ker ad_xi is {}-dim, Im ad_xi is {}-dim", ker.dim(), im.dim());

    // normalize the A3 family at k1 = 1, a1 = 1, f4 = 0 onto R^2 |x h3:
    // new basis E1 = a1 e1 + k1 e5, E2 = e2 / a1, E_j = e_j
    let p = params(&[("k1", sc!(1)), ("a1", sc!(1)), ("f4", sc!(0))]);
    let f = instantiate("thm13_A3", &p).unwrap();
    let alg = f.output.as_acm().unwrap().metric_algebra().algebra().clone();
    let mut basis = Matrix::identity(5);
    basis[(0, 0)] = sc!(1);
    basis[(4, 0)] = sc!(1);
    println!("\nA3 constants in the normalizing basis:");
    let normalized = alg.change_basis(&basis).expect("invertible");
    for i in 1..=5 {
        for j in (i + 1)..=5 {
            let v = normalized.bracket_basis(i, j);
            if !v.is_zero() {
                println!("  [E{i}, E{j}] = {v:?}");
            }
        }
    }
}
