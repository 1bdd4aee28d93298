//! The exact rational feasibility oracle.
//!
//! Taking logarithms of the biquadratic system turns products of brackets
//! into sums: each strict inequality becomes a row `sum(lhs) - sum(rhs) <=
//! -1`, each equation a row `= 0`, over one unbounded variable per bracket.
//! Phase-one simplex over exact rationals then either exhibits a solution
//! (as for every realizable chirotope) or returns Farkas multipliers, which
//! scale back into an integer-multiplicity certificate.

use num_traits::{ToPrimitive, Zero};

use omcert::chirotope::Chirotope;
use omcert::generate::{moment_curve, unit_cube};
use omcert::lp::{bfp_from_farkas, dump_lp, encode_system, solve_feasibility, SolveOutcome};
use omcert::verify_certificate;
use omcert::{enumerate_system, Sign};

fn main() {
    // Realizable input: the solver finds bracket logarithms.
    let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
    let system = enumerate_system(&chi).unwrap();
    let ls = encode_system(&chi, &system).unwrap();
    println!(
        "moment curve n=6 r=3: {} variables, {} inequality rows",
        ls.variables.len(),
        ls.inequality_rows.len()
    );
    match solve_feasibility(&ls) {
        SolveOutcome::Feasible(x) => {
            let shown: Vec<f64> = x.iter().take(4).filter_map(|v| v.to_f64()).collect();
            println!("feasible; first coordinates ~ {shown:?}");
        }
        SolveOutcome::Infeasible(_) => unreachable!("realizable systems are feasible"),
    }

    // Non-realizable input: Farkas multipliers come back instead.
    let resolved = Chirotope::from_configuration(&unit_cube())
        .unwrap()
        .with_sign(0, Sign::Plus)
        .unwrap();
    let system = enumerate_system(&resolved).unwrap();
    let ls = encode_system(&resolved, &system).unwrap();
    println!(
        "\nresolved cube n=8 r=4: {} variables, {} inequalities, {} equations",
        ls.variables.len(),
        ls.inequality_rows.len(),
        ls.equation_rows.len()
    );
    let model = dump_lp(&ls);
    println!("LP model: {} lines (showing 3)", model.lines().count());
    for line in model.lines().skip(ls.variables.len() + 1).take(3) {
        println!("  {line}");
    }
    match solve_feasibility(&ls) {
        SolveOutcome::Feasible(_) => unreachable!("this chirotope has a final polynomial"),
        SolveOutcome::Infeasible(farkas) => {
            let support =
                farkas.inequality_multipliers.iter().filter(|v| !v.is_zero()).count();
            println!("infeasible; {support} inequality multipliers are nonzero");
            let certificate = bfp_from_farkas(&system, &farkas).unwrap();
            let report = verify_certificate(&resolved, &certificate).unwrap();
            println!("rebuilt certificate: {report}");
            assert!(report.valid);
        }
    }
}
