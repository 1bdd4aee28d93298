//! Shared corpus and independent oracles for the integration tests.
//!
//! The oracles here deliberately re-derive everything from first principles
//! (ordered tuples, vertex cocircuits) rather than calling the optimized
//! scans they are checking.

// Each integration test target compiles its own copy; not all use every helper.
#![allow(dead_code)]

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use omcert::chirotope::{Chirotope, VectorConfiguration};
use omcert::combinatorics::{sorted_subsets, subsets_of};
use omcert::generate::{moment_curve, random_chirotope, unit_cube};
use omcert::omp::{OMProgram, PivotKind};
use omcert::sign::{ElementId, Sign};

pub struct CorpusEntry {
    pub name: String,
    pub config: VectorConfiguration,
    pub chi: Chirotope,
}

/// Fifty seeded random rational configurations with r in {3,4}, n in {6,7,8}.
pub fn random_corpus() -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    (0..50)
        .map(|i| {
            let r = 3 + (i % 2) as u32;
            let n = 6 + ((i / 2) % 3) as u32;
            let (chi, config) = random_chirotope(&mut rng, n, r);
            CorpusEntry { name: format!("random{i}_n{n}_r{r}"), config, chi }
        })
        .collect()
}

/// The full corpus: named realizable configurations plus the random batch.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut entries: Vec<CorpusEntry> = [(5, 3), (6, 3), (7, 3), (8, 3), (6, 4), (7, 4), (8, 4)]
        .into_iter()
        .map(|(n, r)| {
            let config = moment_curve(n, r);
            let chi = Chirotope::from_configuration(&config).unwrap();
            CorpusEntry { name: format!("moment_{n}_{r}"), config, chi }
        })
        .collect();
    let cube = unit_cube();
    entries.push(CorpusEntry {
        name: "cube_8_4".into(),
        chi: Chirotope::from_configuration(&cube).unwrap(),
        config: cube,
    });
    entries.extend(random_corpus());
    entries
}

/// Three-term sign violation on raw products: (a, -c, e) uniformly
/// nonnegative or nonpositive with a strict entry.
pub fn violates(a: i8, c: i8, e: i8) -> bool {
    let terms = [a, -c, e];
    let pos = terms.iter().any(|&t| t > 0);
    let neg = terms.iter().any(|&t| t < 0);
    (pos && !neg) || (neg && !pos)
}

/// Brute-force three-term scan over *ordered* lambda tuples: every
/// permutation of every four-element choice, not just the sorted
/// representative the library scan uses.
pub fn brute_force_gp_ok(chi: &Chirotope) -> bool {
    let all: Vec<ElementId> = chi.ground_set();
    for tau in sorted_subsets(chi.n(), chi.r() - 2) {
        let rest: Vec<ElementId> = all.iter().copied().filter(|e| !tau.contains(e)).collect();
        for lam in subsets_of(&rest, 4) {
            for perm in lam.iter().copied().permutations(4) {
                let ev = |i: usize, j: usize| -> i8 {
                    let mut t = tau.clone();
                    t.push(perm[i]);
                    t.push(perm[j]);
                    chi.evaluate(&t).unwrap().as_i8()
                };
                let a = ev(0, 1) * ev(2, 3);
                let c = ev(0, 2) * ev(1, 3);
                let e = ev(0, 3) * ev(1, 2);
                if violates(a, c, e) {
                    return false;
                }
            }
        }
    }
    true
}

/// First single-sign rewrite of `chi` that the brute-force scan flags as
/// inconsistent.
pub fn gp_breaking_mutation(chi: &Chirotope) -> Option<Chirotope> {
    for rank in 0..chi.num_subsets() {
        let targets: &[Sign] = match chi.sign_at_rank(rank) {
            Sign::Zero => &[Sign::Plus, Sign::Minus],
            Sign::Plus => &[Sign::Minus],
            Sign::Minus => &[Sign::Plus],
        };
        for &s in targets {
            if let Ok(candidate) = chi.with_sign(rank, s) {
                if !brute_force_gp_ok(&candidate) {
                    return Some(candidate);
                }
            }
        }
    }
    None
}

/// Classification straight from the definitions: degenerate when the two
/// vertices coincide as sign vectors, otherwise read the pivot direction off
/// the objective.
pub fn direction_oracle(
    program: &OMProgram,
    from: &[ElementId],
    to: &[ElementId],
) -> PivotKind {
    let v1 = program.vertex(from).unwrap();
    let v2 = program.vertex(to).unwrap();
    if v1.signs() == v2.signs() {
        return PivotKind::Degenerate;
    }
    let direction = program.pivot_direction(from, to).unwrap();
    match direction.sign(program.objective()) {
        Sign::Zero => PivotKind::Horizontal,
        Sign::Plus => PivotKind::StrictlyIncreasing,
        Sign::Minus => PivotKind::StrictlyDecreasing,
    }
}

/// Ordered pairs of adjacent affine bases of a program.
pub fn adjacent_basis_pairs(program: &OMProgram) -> Vec<(Vec<ElementId>, Vec<ElementId>)> {
    let bases = program.affine_bases();
    let mut pairs = Vec::new();
    for b1 in &bases {
        for b2 in &bases {
            if b1 == b2 {
                continue;
            }
            let shared = b1.iter().filter(|e| b2.contains(e)).count();
            if shared + 1 == b1.len() {
                pairs.push((b1.clone(), b2.clone()));
            }
        }
    }
    pairs
}

/// All ordered (f, g) programs of a chirotope.
pub fn all_programs(chi: &Chirotope) -> Vec<(ElementId, ElementId)> {
    let ground = chi.ground_set();
    let mut out = Vec::new();
    for &f in &ground {
        for &g in &ground {
            if f != g {
                out.push((f, g));
            }
        }
    }
    out
}
