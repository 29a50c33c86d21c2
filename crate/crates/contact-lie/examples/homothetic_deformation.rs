//! The aqS operators and the homothetic deformation that normalizes an
//! anti-quasi-Sasakian structure onto the standard Heisenberg picture.
//!
//! ```text
//! cargo run --example homothetic_deformation
//! ```

use contact_lie::catalog::{instantiate, params};
use contact_lie::sc;
use contact_lie::structures::{aqs_operators, classify, homothetic_deform};

fn main() {
    // brackets [e1,e4] = [e2,e3] = 2c xi with c = 3
    let s = instantiate("h5_double_aqs", &params(&[("i", sc!(1)), ("c", sc!(3))]))
        .expect("catalog fixture")
        .output
        .as_acm()
        .expect("acm fixture")
        .clone();

    let ops = aqs_operators(&s).expect("anti-quasi-Sasakian");
    println!("psi^2 = lambda^2 (-I + eta (x) xi) with lambda^2 = {}", ops.lambda_square);

    // deform by lambda and re-express in the rescaled basis: the bracket
    // coefficients land back on the standard h5
    let lam = ops.lambda_square.sqrt_exact().expect("square sample");
    let normalized = homothetic_deform(&s, &lam, true).expect("lambda != 0");
    println!(
        "normalized bracket [e1, e4] = {:?}",
        normalized.metric_algebra().algebra().bracket_basis(1, 4)
    );
    let ops2 = aqs_operators(&normalized).expect("still aqS");
    println!("after deformation lambda^2 = {}", ops2.lambda_square);

    // a tensor-level deformation of the Sasakian partner rescales alpha
    let s3 = instantiate("h5_double_aqs", &params(&[("i", sc!(3)), ("c", sc!(1))]))
        .expect("catalog fixture")
        .output
        .as_acm()
        .expect("acm fixture")
        .clone();
    let deformed = homothetic_deform(&s3, &sc!(2), false).expect("lambda != 0");
    let report = classify(&deformed);
    println!(
        "Sasakian structure deformed by lambda = 2: alpha = {}",
        report.alpha.expect("alpha-Sasakian")
    );
}
