//! The inequality system a realization would have to satisfy.
//!
//! Every three-term site of a chirotope, brought to its normal form, tells a
//! would-be realization something about products of brackets: strict
//! inequalities where all six brackets are nonzero, equations where the site
//! degenerates. This example prints the full system of a small uniform
//! chirotope, then shows a degenerate site contributing an equation.

use omcert::biquadratic::{enumerate_system, normalize_pair};
use omcert::chirotope::Chirotope;
use omcert::generate::{moment_curve, unit_cube};
use omcert::sign::ElementId;

fn main() {
    let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
    let system = enumerate_system(&chi).unwrap();
    println!(
        "moment curve n=5 r=3: {} inequalities, {} equations",
        system.inequalities.len(),
        system.equations.len()
    );
    print!("{}", system.dump());
    assert_eq!(system.inequalities.len(), 10);
    assert!(system.equations.is_empty(), "uniform chirotopes have no equations");

    // One site in detail: tau={1}, lambda=(2,3,4,5).
    let site = normalize_pair(
        &chi,
        &[ElementId(1)],
        &[ElementId(2), ElementId(3), ElementId(4), ElementId(5)],
    )
    .unwrap();
    println!(
        "\nsite tau=[{}]: products ab={} cd={} ef={}",
        site.tau().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        site.product_ab().as_char(),
        site.product_cd().as_char(),
        site.product_ef().as_char()
    );

    // The cube's flat quadruples turn sites into equations.
    let cube = Chirotope::from_configuration(&unit_cube()).unwrap();
    let system = enumerate_system(&cube).unwrap();
    println!(
        "\ncube n=8 r=4: {} inequalities, {} equations, e.g.",
        system.inequalities.len(),
        system.equations.len()
    );
    for eq in system.equations.iter().take(3) {
        println!("  {eq}");
    }
    assert!(!system.equations.is_empty());
}
