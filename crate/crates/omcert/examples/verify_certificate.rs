//! Certificate verification, honest and adversarial.
//!
//! A certificate is only as good as its verifier: this example checks the
//! catalog certificate against a fresh enumeration of the system, then
//! tampers with it in every way the verifier guards against — dropping all
//! inequalities, bumping a multiplicity, flipping an orientation, and
//! editing the digest — and shows each tamper being caught.

use std::path::Path;

use omcert::bfp::VerifyFailure;
use omcert::io::{certificate_from_json, certificate_to_json, load_certificate, IoError};
use omcert::sign::Sign;
use omcert::verify_certificate;

fn main() {
    let chi = omcert::io::load_chirotope(Path::new("catalog/noneuclidean_8_4.chi"))
        .unwrap_or_else(|e| {
            eprintln!("cannot load catalog fixture ({e}); run from the workspace root");
            std::process::exit(2);
        });
    let certificate =
        load_certificate(&chi, Path::new("catalog/noneuclidean_8_4.cert.json")).unwrap();

    let report = verify_certificate(&chi, &certificate).unwrap();
    println!("genuine certificate: {report}");
    assert!(report.valid);

    // Tamper 1: no inequalities at all. Equations alone prove nothing.
    let mut empty = certificate.clone();
    empty.inequalities.clear();
    let report = verify_certificate(&chi, &empty).unwrap();
    println!("without inequalities: {report}");
    assert!(report.failures.contains(&VerifyFailure::NonEmptyRequired));

    // Tamper 2: bump one multiplicity; the bracket multisets go off balance.
    let mut bumped = certificate.clone();
    bumped.inequalities[0].1 += 1;
    let report = verify_certificate(&chi, &bumped).unwrap();
    println!("with a bumped multiplicity: {report}");
    assert!(report.failures.contains(&VerifyFailure::MultisetMismatch));

    // Tamper 3: flip one stored orientation; the multisets still match but
    // the side orientations no longer do, and the member is foreign now.
    let mut flipped = certificate.clone();
    flipped.inequalities[0].0.lhs[0].orientation =
        -flipped.inequalities[0].0.lhs[0].orientation;
    let report = verify_certificate(&chi, &flipped).unwrap();
    println!("with a flipped orientation: {report}");
    assert!(report.failures.contains(&VerifyFailure::SignMismatch));
    assert!(report.failures.iter().any(|f| matches!(f, VerifyFailure::NotInSystem(_))));

    // Tamper 4: a certificate for a different chirotope is refused at load.
    let other = chi.with_sign(1, Sign::Minus).unwrap();
    let json = certificate_to_json(&chi, &certificate);
    match certificate_from_json(&other, &json) {
        Err(IoError::DigestMismatch { .. }) => println!("digest tamper: refused at load"),
        other => panic!("expected a digest mismatch, got {other:?}"),
    }
}
