//! Searches for a non-Euclidean chirotope by mutating realizable seeds.
//!
//! Strategy: start from the cube chirotope (rank 4, eight elements, twelve
//! planar quadruples). Its zero brackets are what make programs interesting:
//! a quadruple containing both the objective and the reference contributes
//! horizontal pivots, and cycles need those to close. The search therefore
//! mutates both kinds of entries: sign flips that keep the support, and
//! resolutions of a zero bracket into + or - (a combinatorial perturbation
//! that no point motion may be able to realize). Deterministic shallow
//! neighborhoods are tried first, then a seeded random walk. Every
//! axiom-clean candidate is screened with the cycle search, and a hit is
//! accepted only when the full pipeline goes through: certificate
//! extraction, independent verification, and the exact linear-programming
//! oracle agreeing that the biquadratic system is infeasible.
//!
//! Usage: search_noneuclidean [OUT_DIR] [SEED] [STEPS]
//!
//! Writes OUT_DIR/noneuclidean_<n>_<r>.chi and a matching .cert.json on
//! success.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use omcert::bfp::certify;
use omcert::chirotope::Chirotope;
use omcert::generate::{moment_curve, unit_cube};
use omcert::io::{certificate_to_json, write_chirotope};
use omcert::lp::{solve_chirotope, SolveOutcome};
use omcert::omp::{decide_euclidean, EuclideanDecision};
use omcert::sign::Sign;
use omcert::verify_certificate;

#[derive(Default)]
struct Stats {
    candidates: u64,
    axiom_clean: u64,
    cycles: u64,
}

/// Runs the whole pipeline on an axiom-clean candidate; returns the
/// certificate JSON if everything checks out.
fn try_candidate(chi: &Chirotope, stats: &mut Stats) -> Option<String> {
    let (f, g) = match decide_euclidean(chi) {
        EuclideanDecision::Euclidean => return None,
        EuclideanDecision::NonEuclidean { f, g, .. } => (f, g),
    };
    stats.cycles += 1;
    println!("  cycle found at f={f} g={g}; extracting certificate");
    let outcome = match certify(chi) {
        Ok(outcome) => outcome,
        Err(e) => {
            println!("  certification failed ({e}); continuing search");
            return None;
        }
    };
    let report = verify_certificate(chi, &outcome.certification.certificate)
        .expect("candidate passed the axiom check");
    if !report.valid {
        println!("  verification failed ({report}); continuing search");
        return None;
    }
    match solve_chirotope(chi) {
        Ok(SolveOutcome::Infeasible(_)) => {}
        Ok(SolveOutcome::Feasible(_)) => {
            println!("  oracle disagrees (system feasible); continuing search");
            return None;
        }
        Err(e) => {
            println!("  oracle failed ({e}); continuing search");
            return None;
        }
    }
    let types: Vec<String> =
        outcome.certification.types.iter().map(ToString::to_string).collect();
    println!(
        "  accepted: {}-pivot cycle at f={} g={}, types [{}], group {}, {}",
        outcome.cycle.len(),
        outcome.f,
        outcome.g,
        types.join(" "),
        outcome.certification.group.as_str(),
        report,
    );
    Some(certificate_to_json(chi, &outcome.certification.certificate))
}

fn screen(candidate: Chirotope, stats: &mut Stats) -> Option<(Chirotope, String)> {
    stats.candidates += 1;
    if !candidate.check_axioms().all_ok() {
        return None;
    }
    stats.axiom_clean += 1;
    let json = try_candidate(&candidate, stats)?;
    Some((candidate, json))
}

/// All single-entry rewrites of one bracket: a flip for nonzero signs, the
/// two resolutions for a zero.
fn rewrites(chi: &Chirotope, rank: usize) -> Vec<Chirotope> {
    let targets: &[Sign] = match chi.sign_at_rank(rank) {
        Sign::Zero => &[Sign::Plus, Sign::Minus],
        Sign::Plus => &[Sign::Minus],
        Sign::Minus => &[Sign::Plus],
    };
    targets.iter().filter_map(|&s| chi.with_sign(rank, s).ok()).collect()
}

fn report(phase: &str, stats: &Stats) {
    println!(
        "{phase}: {} candidates, {} axiom-clean, {} with cycles",
        stats.candidates, stats.axiom_clean, stats.cycles
    );
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out_dir = args.get(1).map_or("catalog", String::as_str);
    let seed: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let steps: u64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(20_000);

    let cube = Chirotope::from_configuration(&unit_cube()).unwrap();
    let seeds = [
        ("cube", cube.clone()),
        ("moment84", Chirotope::from_configuration(&moment_curve(8, 4)).unwrap()),
    ];

    let mut found: Option<(Chirotope, String)> = None;

    // Phase 1: single rewrites of each seed.
    'phase1: for (name, chi) in &seeds {
        let mut stats = Stats::default();
        for rank in 0..chi.num_subsets() {
            for candidate in rewrites(chi, rank) {
                if let Some(hit) = screen(candidate, &mut stats) {
                    found = Some(hit);
                    report(&format!("phase 1 ({name})"), &stats);
                    break 'phase1;
                }
            }
        }
        report(&format!("phase 1 ({name})"), &stats);
    }

    // Phase 2: pairs of rewrites of the cube, zero resolutions first. A flat
    // quadruple resolved the wrong way around is the classic way to leave
    // the realizable world without breaking the axioms.
    if found.is_none() {
        let mut stats = Stats::default();
        let chi = &seeds[0].1;
        let zero_ranks: Vec<usize> =
            (0..chi.num_subsets()).filter(|&k| chi.sign_at_rank(k).is_zero()).collect();
        'phase2: for &z in &zero_ranks {
            for first in rewrites(chi, z) {
                for rank in 0..first.num_subsets() {
                    if rank == z {
                        continue;
                    }
                    for candidate in rewrites(&first, rank) {
                        if let Some(hit) = screen(candidate, &mut stats) {
                            found = Some(hit);
                            break 'phase2;
                        }
                    }
                }
            }
        }
        report("phase 2 (cube pairs)", &stats);
    }

    // Phase 3: random walk with mixed moves.
    if found.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        'phase3: for (name, chi) in &seeds {
            let mut stats = Stats::default();
            let mut state = chi.clone();
            for _ in 0..steps {
                let rank = rng.gen_range(0..state.num_subsets());
                let options = rewrites(&state, rank);
                if options.is_empty() {
                    continue;
                }
                let candidate = options[rng.gen_range(0..options.len())].clone();
                stats.candidates += 1;
                if !candidate.check_axioms().all_ok() {
                    continue;
                }
                stats.axiom_clean += 1;
                state = candidate;
                if let Some(json) = try_candidate(&state, &mut stats) {
                    found = Some((state.clone(), json));
                    report(&format!("phase 3 ({name})"), &stats);
                    break 'phase3;
                }
            }
            report(&format!("phase 3 ({name})"), &stats);
        }
    }

    let Some((chi, json)) = found else {
        println!("no certifiable non-Euclidean chirotope found; try another seed");
        std::process::exit(1);
    };
    // Sanity: the certified object is a chirotope, not realizably so.
    assert!(chi.check_axioms().all_ok());
    assert!(!decide_euclidean(&chi).is_euclidean());

    let dir = Path::new(out_dir);
    std::fs::create_dir_all(dir).unwrap();
    let base = format!("noneuclidean_{}_{}", chi.n(), chi.r());
    let chi_path = dir.join(format!("{base}.chi"));
    let cert_path = dir.join(format!("{base}.cert.json"));
    std::fs::write(&chi_path, write_chirotope(&chi)).unwrap();
    std::fs::write(&cert_path, json).unwrap();
    println!("wrote {} and {}", chi_path.display(), cert_path.display());
    println!("sign string: {}", chi.sign_string());
}
