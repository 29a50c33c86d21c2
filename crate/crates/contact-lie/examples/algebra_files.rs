//! The JSON algebra-file format: emit a catalog fixture, parse it back,
//! and drive the same classification the CLI performs.
//!
//! ```text
//! cargo run --example algebra_files
//! ```

use contact_lie::catalog::{instantiate, params};
use contact_lie::fileio::AlgebraFile;
use contact_lie::sc;
use contact_lie::structures::classify;

fn main() {
    let fixture = instantiate("eta_g3", &params(&[
        ("a", sc!(1)),
        ("b", sc!(1)),
        ("lam", sc!(2)),
        ("sign", sc!(1)),
    ]))
    .expect("catalog fixture");
    let doc = AlgebraFile::from_acm(fixture.output.as_acm().expect("acm fixture"));

    let text = doc.to_json();
    println!("{text}");

    let parsed = AlgebraFile::from_json(&text).expect("canonical emission parses");
    assert_eq!(parsed.to_json(), text, "parse -> emit is byte-stable");

    let s = parsed.to_acm().expect("validates");
    let report = classify(&s);
    println!("parsed back and classified:");
    println!("  Sasakian:      {}", report.sasakian);
    println!("  quasi-Sasakian {}", report.quasi_sasakian);
    if let Some((lam, mu)) = report.eta_einstein_lambda_mu {
        println!("  eta-Einstein   Ric = {lam} g + {mu} eta(x)eta");
    }
}
