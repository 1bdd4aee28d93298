//! The full certification pipeline on the catalog fixture.
//!
//! Loads the non-Euclidean chirotope from catalog/, finds its cycle,
//! classifies each pivot against the transition tables, assembles the
//! biquadratic final polynomial, and verifies it from scratch. Run from the
//! workspace root.

use std::path::Path;

use omcert::bfp::certify;
use omcert::io::{certificate_to_json, load_chirotope};
use omcert::verify_certificate;

fn main() {
    let path = Path::new("catalog/noneuclidean_8_4.chi");
    let chi = match load_chirotope(path) {
        Ok(chi) => chi,
        Err(e) => {
            eprintln!("cannot load {} ({e}); run from the workspace root", path.display());
            std::process::exit(2);
        }
    };
    println!("loaded {}: n={} r={}", path.display(), chi.n(), chi.r());
    assert!(chi.check_axioms().all_ok(), "catalog fixtures satisfy the axioms");

    let outcome = certify(&chi).expect("the fixture is non-Euclidean");
    println!(
        "cycle at f={} g={} with {} pivots:",
        outcome.f,
        outcome.g,
        outcome.cycle.len()
    );
    print!("{}", outcome.cycle.dump(outcome.f, outcome.g));

    println!("\npivot row types (group {}):", outcome.certification.group.as_str());
    for (pivot, gp_type) in outcome.cycle.pivots.iter().zip(&outcome.certification.types) {
        println!(
            "  a={} b={} kind={} -> {gp_type}",
            pivot.leaving,
            pivot.entering,
            pivot.kind.letter()
        );
    }

    let certificate = &outcome.certification.certificate;
    println!("\ncertificate members:");
    for (q, times) in &certificate.inequalities {
        println!("  {times} x {q}");
    }
    for (u, times) in &certificate.equations {
        let direction = if u.reversed { "right-to-left" } else { "left-to-right" };
        println!("  {times} x {} ({direction})", u.equation);
    }

    let report = verify_certificate(&chi, certificate).unwrap();
    println!("\nverification: {report}");
    assert!(report.valid);

    // The JSON form binds the certificate to the chirotope digest.
    let json = certificate_to_json(&chi, certificate);
    println!("serialized certificate: {} bytes", json.len());
}
