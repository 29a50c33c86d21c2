//! Extend a Kahler Lie algebra by a symplectic form and recover it back.
//!
//! The base is rr'_{3,0} (a flat Kahler algebra); extending by a multiple of
//! its Kahler form produces an alpha-Sasakian algebra with Reeb center, and
//! the Kahler quotient inverts the construction exactly.
//!
//! ```text
//! cargo run --example central_extension
//! ```

use contact_lie::catalog::{instantiate, params, samples};
use contact_lie::extension::{central_extend, kahler_quotient};
use contact_lie::sc;
use contact_lie::structures::classify;

fn main() {
    let data = instantiate("table2_rrp30", &params(&[
        ("a", sc!(1)),
        ("b", sc!(1)),
        ("a12", sc!(0)),
        ("a13", sc!(0)),
        ("a14", sc!(2)),
        ("a23", sc!(2)),
    ]))
    .expect("symplectic data")
    .output
    .as_symplectic()
    .expect("symplectic fixture")
    .clone();

    let ext = central_extend(&data).expect("closed nondegenerate omega");
    println!("extension dimension: {}", ext.structure.dim());
    println!("Reeb index:          e_{}", ext.xi_index);
    let center = ext.structure.metric_algebra().algebra().center();
    println!("center:              {}-dimensional", center.dim());

    let report = classify(&ext.structure);
    println!("quasi-Sasakian:      {}", report.quasi_sasakian);
    match &report.alpha {
        Some(alpha) => println!("alpha-Sasakian:      yes, alpha = {alpha}"),
        None => println!("alpha-Sasakian:      no"),
    }

    let back = kahler_quotient(&ext.structure).expect("nontrivial center");
    println!("round trip exact:    {}", back == data);

    // the same construction over every documented catalog sample
    let mut count = 0;
    for info in contact_lie::catalog::list_fixtures() {
        if !info.name.starts_with("table2_") {
            continue;
        }
        for p in samples(info.name).expect("known fixture") {
            let d = instantiate(info.name, &p)
                .expect("sample")
                .output
                .as_symplectic()
                .expect("symplectic")
                .clone();
            let e = central_extend(&d).expect("extension");
            assert_eq!(kahler_quotient(&e.structure).expect("quotient"), d);
            count += 1;
        }
    }
    println!("round-tripped {count} catalog extension samples");
}
