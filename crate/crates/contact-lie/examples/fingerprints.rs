//! Invariant fingerprints: a sound-but-incomplete isomorphism distinguisher.
//! Different fingerprints prove two algebras non-isomorphic; equal ones
//! prove nothing.
//!
//! ```text
//! cargo run --example fingerprints
//! ```

use contact_lie::catalog::{instantiate, params, Params};
use contact_lie::sc;

fn main() {
    let algebra = |name: &str, p: &Params| {
        instantiate(name, p)
            .expect("catalog fixture")
            .output
            .as_algebra()
            .clone()
    };

    let pairs = [
        ("sl2_aff", Params::new()),
        ("su2_aff", Params::new()),
        ("h5", params(&[("c", sc!(1))])),
        ("thm12_g5", Params::new()),
        ("thm12_g7 (delta=1)", params(&[("delta", sc!(1))])),
        ("thm12_g7 (delta=2)", params(&[("delta", sc!(2))])),
        ("g0_trivial_center", Params::new()),
    ];
    for (label, p) in &pairs {
        let name = label.split(' ').next().expect("nonempty");
        let fp = algebra(name, p).invariant_fingerprint();
        println!(
            "{label:<22} center {}  derived {:?}  unimodular {}  killing {:?}",
            fp.center_dim, fp.derived_dims, fp.unimodular, fp.killing_signature
        );
    }

    let sl2 = algebra("sl2_aff", &Params::new()).invariant_fingerprint();
    let su2 = algebra("su2_aff", &Params::new()).invariant_fingerprint();
    println!(
        "\nsl(2,R) x aff(R) vs su(2) x aff(R): distinguished by Killing signature? {}",
        sl2.killing_signature != su2.killing_signature
    );
}
