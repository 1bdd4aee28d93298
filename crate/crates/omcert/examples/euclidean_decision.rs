//! Pivot graphs and the Euclidean decision.
//!
//! A program fixes an objective f and a reference g; its nodes are the
//! affine bases, its edges the one-element pivots, each classified as
//! strictly increasing, strictly decreasing, horizontal, or degenerate. The
//! chirotope is Euclidean when no program admits a monotone cycle. This
//! example prints pivot statistics for a realizable chirotope (always
//! Euclidean) and for the catalog's non-Euclidean one, including the cycle
//! witness.

use omcert::chirotope::Chirotope;
use omcert::generate::unit_cube;
use omcert::omp::{decide_euclidean, EuclideanDecision, OMProgram, PivotKind};
use omcert::sign::ElementId;

fn pivot_census(program: &OMProgram) {
    let graph = program.pivot_graph();
    let mut counts = [0usize; 4];
    for pivot in &graph.pivots {
        counts[match pivot.kind {
            PivotKind::StrictlyIncreasing => 0,
            PivotKind::StrictlyDecreasing => 1,
            PivotKind::Horizontal => 2,
            PivotKind::Degenerate => 3,
        }] += 1;
    }
    println!(
        "  f={} g={}: {} bases, {} increasing / {} decreasing / {} horizontal / {} degenerate",
        program.objective(),
        program.reference(),
        graph.nodes.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    );
}

fn main() {
    let cube = Chirotope::from_configuration(&unit_cube()).unwrap();
    println!("cube (realizable):");
    pivot_census(&OMProgram::new(&cube, ElementId(1), ElementId(2)).unwrap());
    pivot_census(&OMProgram::new(&cube, ElementId(7), ElementId(3)).unwrap());
    assert!(decide_euclidean(&cube).is_euclidean());
    println!("  euclidean: yes\n");

    let resolved = cube.with_sign(0, omcert::Sign::Plus).unwrap();
    println!("cube with [1 2 3 4] resolved:");
    pivot_census(&OMProgram::new(&resolved, ElementId(1), ElementId(2)).unwrap());
    match decide_euclidean(&resolved) {
        EuclideanDecision::Euclidean => unreachable!("this chirotope cycles"),
        EuclideanDecision::NonEuclidean { f, g, cycle } => {
            println!("  euclidean: no; witness:");
            print!("{}", cycle.dump(f, g));
            let program = OMProgram::new(&resolved, f, g).unwrap();
            program.check_cycle(&cycle).unwrap();
            println!("  (witness re-checked pivot by pivot)");
        }
    }
}
