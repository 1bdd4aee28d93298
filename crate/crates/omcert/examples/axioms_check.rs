//! Axiom checking: exact determinants in, sign map out, violations located.
//!
//! Builds a chirotope from a rational configuration, confirms it satisfies
//! the axioms, then damages it twice — once breaking three-term consistency,
//! once breaking basis exchange — and prints the located witnesses.

use omcert::chirotope::{AxiomViolation, Chirotope};
use omcert::generate::moment_curve;
use omcert::sign::{ElementId, Sign};

fn ids(v: &[ElementId]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() {
    let config = moment_curve(6, 3);
    let chi = Chirotope::from_configuration(&config).unwrap();
    println!("moment curve n=6 r=3: {}", chi.sign_string());

    let report = chi.check_axioms();
    println!(
        "alternating={} nonzero={} exchange={} three-term={}",
        report.alternating_ok, report.nonzero_ok, report.exchange_ok, report.gp_ok
    );
    assert!(report.all_ok());

    // Flip the interior triangle {1,3,5}: all six points are in convex
    // position, so this sign pattern fits no point configuration.
    let broken = chi.with_sign(5, Sign::Minus).unwrap();
    let report = broken.check_axioms();
    assert!(!report.gp_ok);
    println!("\nafter flipping [1 3 5]:");
    for v in report.violations.iter().take(3) {
        match v {
            AxiomViolation::GpSignFailure { tau, lambda, products } => {
                println!(
                    "  three-term failure at tau=[{}] lambda=[{}] products=({},{},{})",
                    ids(tau),
                    ids(lambda),
                    products.0.as_char(),
                    products.1.as_char(),
                    products.2.as_char()
                );
            }
            other => println!("  {other:?}"),
        }
    }

    // Zeroing brackets can break the exchange property: support {12, 34}
    // is not the basis family of any matroid.
    let bad_support = Chirotope::from_sign_string(4, 2, "+0000+").unwrap();
    let report = bad_support.check_axioms();
    assert!(!report.exchange_ok);
    println!("\nsupport {{12, 34}}:");
    for v in &report.violations {
        if let AxiomViolation::ExchangeFailure { basis_a, basis_b, removed } = v {
            println!(
                "  no exchange for [{}] vs [{}] removing {removed}",
                ids(basis_a),
                ids(basis_b)
            );
        }
    }
}
