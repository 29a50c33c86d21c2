//! Classify the three almost contact metric structures of the Heisenberg
//! algebra h5 and verify that together they form a double aqS-Sasakian triple.
//!
//! ```text
//! cargo run --example classify_heisenberg
//! ```

use contact_lie::catalog::{instantiate, params};
use contact_lie::sc;
use contact_lie::structures::{classify, verify_double_aqs};

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

    for (i, s) in [(1, &s1), (2, &s2), (3, &s3)] {
        let r = classify(s);
        println!("phi_{i}:");
        println!("  contact             {}", r.contact);
        println!("  normal              {}", r.normal);
        println!("  Sasakian            {}", r.sasakian);
        println!("  anti-quasi-Sasakian {}", r.anti_quasi_sasakian);
        println!("  transversely Kahler {}", r.transversely_kahler);
        if let Some((lam, mu)) = &r.eta_einstein_lambda_mu {
            println!("  eta-Einstein        Ric = {lam} g + {mu} eta(x)eta");
        }
    }

    match verify_double_aqs(&s1, &s2, &s3) {
        Some(_) => println!("\n(phi_1, phi_2, phi_3) is a double aqS-Sasakian triple"),
        None => println!("\ntriple verification failed"),
    }
}
