//! Turning monotone pivot cycles into bracket-product certificates.
//!
//! Every pivot of a cycle sits in a three-term site: with shared set L,
//! objective f, reference g, leaving element a and entering element b, the
//! six brackets are A = (L g f), B = (L a b), C = (L g a), D = (L f b),
//! E = (L g b), F = (L f a). The sign pattern (chi(A)chi(B), chi(C), chi(D),
//! chi(E), chi(F)) of a cycle pivot falls into twenty admissible rows: twelve
//! with a nonzero leading product (strictly increasing pivots) and eight with
//! a vanishing one (degenerate or horizontal pivots). Each row selects one
//! inequality or equation of the biquadratic system whose sides are built
//! from the two bracket pairs {B_i + g, B_{i+1} + f} and {B_{i+1} + g,
//! B_i + f}. Multiplying the selected relations around the cycle makes every
//! bracket appear once on each side, so the product telescopes to an exact
//! equality, while at least one factor is strict: no realization can exist.
//! The assembled certificate is re-verified before it is returned.

use std::fmt;

use thiserror::Error;

use crate::biquadratic::{
    enumerate_system, members_for_site, normalize_pair, pair_orientation, BiquadraticEquation,
    BiquadraticError, BiquadraticInequality, BracketMonomial, InequalitySide,
};
use crate::chirotope::Chirotope;
use crate::omp::{CyclePivot, NonDegenerateCycle, OMProgram};
use crate::sign::{ElementId, Sign};

/// Sign pattern of a pivot site: (chi(A)chi(B), chi(C), chi(D), chi(E), chi(F)).
pub type GpPattern = (Sign, Sign, Sign, Sign, Sign);

/// The twelve admissible rows with a nonzero leading product. A row appears
/// here exactly when the product of its first, second, and fourth entries is
/// positive and the three pairing products satisfy the three-term sign
/// condition.
pub const PLAIN_ROWS: [GpPattern; 12] = {
    use Sign::{Minus as M, Plus as P};
    [
        (P, P, P, P, P),
        (P, P, P, P, M),
        (P, P, M, P, M),
        (P, M, M, M, M),
        (P, M, M, M, P),
        (P, M, P, M, P),
        (M, P, M, M, P),
        (M, P, M, M, M),
        (M, P, P, M, M),
        (M, M, P, P, M),
        (M, M, P, P, P),
        (M, M, M, P, P),
    ]
};

/// The eight admissible rows with a vanishing leading product, as
/// (chi(C), chi(D), chi(E), chi(F)). A row appears exactly when
/// chi(C)chi(D) = chi(E)chi(F) with all four entries nonzero.
pub const PRIMED_ROWS: [(Sign, Sign, Sign, Sign); 8] = {
    use Sign::{Minus as M, Plus as P};
    [
        (P, P, P, P),
        (P, P, M, M),
        (P, M, P, M),
        (P, M, M, P),
        (M, P, P, M),
        (M, P, M, P),
        (M, M, P, P),
        (M, M, M, M),
    ]
};

/// Row index into the transition tables: `Plain(1..=12)` for strict pivots,
/// `Primed(1..=8)` for degenerate and horizontal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GPType {
    Plain(u8),
    Primed(u8),
}

impl GPType {
    /// The telescoping group of the row, when it belongs to a closed cycle.
    /// Plain rows 2, 5, 8, and 11 flip the cycle state and can only appear
    /// on open walks, so they carry no group.
    pub fn group(self) -> Option<TransitionGroup> {
        match self {
            GPType::Plain(t) => match t {
                1 | 4 | 7 | 10 => Some(TransitionGroup::Plus),
                3 | 6 | 9 | 12 => Some(TransitionGroup::Minus),
                _ => None,
            },
            GPType::Primed(t) => match t {
                1 | 4 | 5 | 8 => Some(TransitionGroup::Plus),
                _ => Some(TransitionGroup::Minus),
            },
        }
    }
}

impl fmt::Display for GPType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GPType::Plain(t) => write!(f, "type {t}"),
            GPType::Primed(t) => write!(f, "type {t}'"),
        }
    }
}

/// Sign of the cycle state carried through every basis of a closed walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitionGroup {
    Plus,
    Minus,
}

impl TransitionGroup {
    pub fn as_str(self) -> &'static str {
        match self {
            TransitionGroup::Plus => "plus",
            TransitionGroup::Minus => "minus",
        }
    }
}

/// The six brackets of a pivot site with their signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPRelation {
    pub tuples: [Vec<ElementId>; 6],
    pub signs: [Sign; 6],
    pub pattern: GpPattern,
}

/// Builds the three-term relation attached to a pivot of the program (f, g).
pub fn gp_relation_for_pivot(
    chi: &Chirotope,
    f: ElementId,
    g: ElementId,
    pivot: &CyclePivot,
) -> GPRelation {
    let make = |x: ElementId, y: ElementId| {
        let mut t = pivot.shared.clone();
        t.push(x);
        t.push(y);
        t
    };
    let (a, b) = (pivot.leaving, pivot.entering);
    let tuples = [make(g, f), make(a, b), make(g, a), make(f, b), make(g, b), make(f, a)];
    let signs = [
        chi.chi(&tuples[0]),
        chi.chi(&tuples[1]),
        chi.chi(&tuples[2]),
        chi.chi(&tuples[3]),
        chi.chi(&tuples[4]),
        chi.chi(&tuples[5]),
    ];
    let pattern = (signs[0] * signs[1], signs[2], signs[3], signs[4], signs[5]);
    GPRelation { tuples, signs, pattern }
}

/// Product linking a pivot to its successor through the shared basis:
/// chi(D_i) chi(E_i) chi(C_next) chi(F_next). Positive whenever the shared
/// basis stays independent with the objective, zero otherwise.
pub fn successor_product(rel: &GPRelation, next: &GPRelation) -> Sign {
    rel.signs[3] * rel.signs[4] * next.signs[2] * next.signs[5]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BfpError {
    #[error("pivot {index} has sign pattern {pattern:?} outside the transition tables")]
    UnlistedPattern { index: usize, pattern: GpPattern },
    #[error("pivot {index} selects a relation its site does not contain")]
    MemberNotFound { index: usize },
    #[error("assembled certificate does not cancel: {report}")]
    CancellationFailed { report: VerificationReport },
}

/// Classifies a pivot sign pattern against the transition tables.
pub fn classify_gp(pattern: GpPattern) -> Result<GPType, BfpError> {
    let (ab, c, d, e, f) = pattern;
    if ab == Sign::Zero {
        if let Some(row) = PRIMED_ROWS.iter().position(|&r| r == (c, d, e, f)) {
            return Ok(GPType::Primed(row as u8 + 1));
        }
    } else if let Some(row) = PLAIN_ROWS.iter().position(|&r| r == pattern) {
        return Ok(GPType::Plain(row as u8 + 1));
    }
    Err(BfpError::UnlistedPattern { index: 0, pattern })
}

/// An equation applied in a chosen direction: `reversed` uses it right to
/// left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationUse {
    pub equation: BiquadraticEquation,
    pub reversed: bool,
}

/// A combination of system members with positive multiplicities whose
/// product telescopes: every bracket occurs equally often on both sides with
/// balanced orientation, while at least one factor is a strict inequality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BfpCertificate {
    pub inequalities: Vec<(BiquadraticInequality, u64)>,
    pub equations: Vec<(EquationUse, u64)>,
}

impl BfpCertificate {
    pub fn total_inequality_uses(&self) -> u64 {
        self.inequalities.iter().map(|(_, m)| m).sum()
    }

    fn push_inequality(&mut self, q: BiquadraticInequality) {
        if let Some(entry) = self.inequalities.iter_mut().find(|(have, _)| *have == q) {
            entry.1 += 1;
        } else {
            self.inequalities.push((q, 1));
        }
    }

    fn push_equation(&mut self, u: EquationUse) {
        if let Some(entry) = self.equations.iter_mut().find(|(have, _)| *have == u) {
            entry.1 += 1;
        } else {
            self.equations.push((u, 1));
        }
    }
}

/// A certified cycle: the row types of its pivots, their common group, and
/// the verified certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCertification {
    pub types: Vec<GPType>,
    pub group: TransitionGroup,
    pub certificate: BfpCertificate,
}

fn sorted_union(base: &[ElementId], x: ElementId, y: ElementId) -> Vec<ElementId> {
    let mut v = base.to_vec();
    v.push(x);
    v.push(y);
    v.sort();
    v
}

fn side_key(pair: &[BracketMonomial; 2]) -> [Vec<ElementId>; 2] {
    [pair[0].subset.clone(), pair[1].subset.clone()]
}

fn pairing_key(s1: Vec<ElementId>, s2: Vec<ElementId>) -> [Vec<ElementId>; 2] {
    let mut k = [s1, s2];
    if k[1] < k[0] {
        k.swap(0, 1);
    }
    k
}

/// Converts a monotone cycle of the program (f, g) into a certificate.
///
/// Each pivot is classified against the transition tables and mapped to the
/// member of its site whose left side pairs `B_next + g` with `B_i + f` (plus
/// group) or `B_i + g` with `B_next + f` (minus group). The result is
/// re-verified; a verification failure here means the cycle was not produced
/// by this chirotope.
pub fn cycle_to_bfp(
    chi: &Chirotope,
    f: ElementId,
    g: ElementId,
    cycle: &NonDegenerateCycle,
) -> Result<CycleCertification, BfpError> {
    let mut types = Vec::with_capacity(cycle.len());
    let mut relations = Vec::with_capacity(cycle.len());
    for (index, pivot) in cycle.pivots.iter().enumerate() {
        let rel = gp_relation_for_pivot(chi, f, g, pivot);
        let gp_type = classify_gp(rel.pattern)
            .map_err(|_| BfpError::UnlistedPattern { index, pattern: rel.pattern })?;
        types.push(gp_type);
        relations.push(rel);
    }

    let group = types
        .iter()
        .find_map(|t| t.group())
        .unwrap_or(TransitionGroup::Plus);

    let mut certificate = BfpCertificate::default();
    for (index, (pivot, gp_type)) in cycle.pivots.iter().zip(&types).enumerate() {
        let lambda = [f, g, pivot.leaving, pivot.entering];
        let site = normalize_pair(chi, &pivot.shared, &lambda)
            .expect("listed patterns are always normalizable");
        let members = members_for_site(&site);

        // Raw pairings of this pivot, as unordered pairs of sorted brackets.
        let ef_key = pairing_key(
            sorted_union(&pivot.shared, g, pivot.entering),
            sorted_union(&pivot.shared, f, pivot.leaving),
        );
        let cd_key = pairing_key(
            sorted_union(&pivot.shared, g, pivot.leaving),
            sorted_union(&pivot.shared, f, pivot.entering),
        );

        match gp_type {
            GPType::Plain(_) if gp_type.group().is_some() => {
                let (left, right) = match group {
                    TransitionGroup::Plus => (&ef_key, &cd_key),
                    TransitionGroup::Minus => (&cd_key, &ef_key),
                };
                let member = members
                    .inequalities
                    .iter()
                    .find(|q| side_key(&q.lhs) == *left && side_key(&q.rhs) == *right)
                    .ok_or(BfpError::MemberNotFound { index })?;
                certificate.push_inequality(member.clone());
            }
            GPType::Plain(_) => {
                // State-flipping rows cannot close a cycle; contribute the
                // site's second inequality anyway and let verification rule.
                let member = members
                    .inequalities
                    .iter()
                    .find(|q| q.side == InequalitySide::EfLtCd)
                    .ok_or(BfpError::MemberNotFound { index })?;
                certificate.push_inequality(member.clone());
            }
            GPType::Primed(_) => {
                let needed_left = match group {
                    TransitionGroup::Plus => &ef_key,
                    TransitionGroup::Minus => &cd_key,
                };
                let member = members
                    .equations
                    .iter()
                    .find(|eq| {
                        let have =
                            [pairing_key(eq.lhs[0].subset.clone(), eq.lhs[1].subset.clone()),
                             pairing_key(eq.rhs[0].subset.clone(), eq.rhs[1].subset.clone())];
                        (have[0] == ef_key && have[1] == cd_key)
                            || (have[0] == cd_key && have[1] == ef_key)
                    })
                    .ok_or(BfpError::MemberNotFound { index })?;
                let reversed = side_key(&member.lhs) != *needed_left;
                certificate.push_equation(EquationUse { equation: member.clone(), reversed });
            }
        }
    }

    let report = verify_certificate(chi, &certificate)
        .expect("system of a cycle-bearing chirotope enumerates");
    if !report.valid {
        return Err(BfpError::CancellationFailed { report });
    }
    Ok(CycleCertification { types, group, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    /// A certificate must use at least one strict inequality.
    NonEmptyRequired,
    /// An item is not a member of the recomputed system.
    NotInSystem(String),
    /// Bracket multisets of the two sides differ.
    MultisetMismatch,
    /// Orientation products of the two sides differ.
    SignMismatch,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NonEmptyRequired => write!(f, "no strict inequality used"),
            VerifyFailure::NotInSystem(item) => write!(f, "not in system: {item}"),
            VerifyFailure::MultisetMismatch => write!(f, "bracket multisets differ"),
            VerifyFailure::SignMismatch => write!(f, "orientation products differ"),
        }
    }
}

/// Outcome of checking a certificate against a chirotope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub lhs_multiset: Vec<Vec<ElementId>>,
    pub rhs_multiset: Vec<Vec<ElementId>>,
    pub lhs_orientation: Sign,
    pub rhs_orientation: Sign,
    pub failures: Vec<VerifyFailure>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            write!(f, "valid ({} brackets per side)", self.lhs_multiset.len())
        } else {
            let reasons: Vec<String> = self.failures.iter().map(|x| x.to_string()).collect();
            write!(f, "invalid: {}", reasons.join("; "))
        }
    }
}

/// Checks a certificate against a chirotope from scratch: at least one
/// strict inequality, every item a member of the freshly enumerated system,
/// equal bracket multisets on both sides, and balanced orientations. All
/// failures are collected, not just the first.
pub fn verify_certificate(
    chi: &Chirotope,
    certificate: &BfpCertificate,
) -> Result<VerificationReport, BiquadraticError> {
    let system = enumerate_system(chi)?;
    let mut failures = Vec::new();

    if certificate.total_inequality_uses() == 0 {
        failures.push(VerifyFailure::NonEmptyRequired);
    }

    for (q, _) in &certificate.inequalities {
        if !system.inequalities.contains(q) {
            failures.push(VerifyFailure::NotInSystem(q.to_string()));
        }
    }
    for (u, _) in &certificate.equations {
        if !system.equations.contains(&u.equation) {
            failures.push(VerifyFailure::NotInSystem(u.equation.to_string()));
        }
    }

    let mut lhs_multiset: Vec<Vec<ElementId>> = Vec::new();
    let mut rhs_multiset: Vec<Vec<ElementId>> = Vec::new();
    let mut lhs_orientation = Sign::Plus;
    let mut rhs_orientation = Sign::Plus;
    let absorb = |pair: &[BracketMonomial; 2],
                      times: u64,
                      multiset: &mut Vec<Vec<ElementId>>,
                      orientation: &mut Sign| {
        for m in pair {
            for _ in 0..times {
                multiset.push(m.subset.clone());
            }
        }
        if times % 2 == 1 {
            *orientation = *orientation * pair_orientation(pair);
        }
    };

    for (q, times) in &certificate.inequalities {
        absorb(&q.lhs, *times, &mut lhs_multiset, &mut lhs_orientation);
        absorb(&q.rhs, *times, &mut rhs_multiset, &mut rhs_orientation);
    }
    for (u, times) in &certificate.equations {
        let (left, right) = if u.reversed {
            (&u.equation.rhs, &u.equation.lhs)
        } else {
            (&u.equation.lhs, &u.equation.rhs)
        };
        absorb(left, *times, &mut lhs_multiset, &mut lhs_orientation);
        absorb(right, *times, &mut rhs_multiset, &mut rhs_orientation);
    }

    lhs_multiset.sort();
    rhs_multiset.sort();
    if lhs_multiset != rhs_multiset {
        failures.push(VerifyFailure::MultisetMismatch);
    }
    if lhs_orientation != rhs_orientation {
        failures.push(VerifyFailure::SignMismatch);
    }

    Ok(VerificationReport {
        valid: failures.is_empty(),
        lhs_multiset,
        rhs_multiset,
        lhs_orientation,
        rhs_orientation,
        failures,
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("no program of the chirotope has a monotone cycle")]
    NoCycle,
    #[error("monotone cycles exist (first at f={f}, g={g}) but none is classifiable")]
    Unclassifiable { f: ElementId, g: ElementId },
}

/// A successful certification: the program, its cycle, and the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOutcome {
    pub f: ElementId,
    pub g: ElementId,
    pub cycle: NonDegenerateCycle,
    pub certification: CycleCertification,
}

/// Searches all programs for a monotone cycle whose bases stay independent
/// with the objective, and converts the first into a verified certificate.
/// Programs are scanned in lexicographic (f, g) order.
pub fn certify(chi: &Chirotope) -> Result<CertifyOutcome, CertifyError> {
    let mut unclassified: Option<(ElementId, ElementId)> = None;
    for f in chi.ground_set() {
        for g in chi.ground_set() {
            if f == g {
                continue;
            }
            let program = OMProgram::new(chi, f, g).expect("ground set elements are valid");
            let keep = |basis: &[ElementId]| {
                let mut t = basis.to_vec();
                t.push(f);
                !chi.chi(&t).is_zero()
            };
            if let Some(cycle) = program.find_cycle_with_filter(keep) {
                match cycle_to_bfp(chi, f, g, &cycle) {
                    Ok(certification) => {
                        return Ok(CertifyOutcome { f, g, cycle, certification })
                    }
                    Err(_) => continue,
                }
            }
            if unclassified.is_none() && program.find_cycle().is_some() {
                unclassified = Some((f, g));
            }
        }
    }
    match unclassified {
        Some((f, g)) => Err(CertifyError::Unclassifiable { f, g }),
        None => Err(CertifyError::NoCycle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::gp_inconsistent;
    use crate::generate::moment_curve;
    use crate::omp::PivotKind;

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    #[test]
    fn tables_cover_exactly_the_admissible_patterns() {
        let signs = [Sign::Minus, Sign::Plus];
        // Strict rows: nonzero entries, positive classification product
        // chi(A)chi(B) chi(C) chi(E), and consistent pairing products.
        let mut strict = Vec::new();
        for &ab in &signs {
            for &c in &signs {
                for &d in &signs {
                    for &e in &signs {
                        for &f in &signs {
                            if ab * c * e != Sign::Plus {
                                continue;
                            }
                            if gp_inconsistent(ab, c * d, e * f) {
                                continue;
                            }
                            strict.push((ab, c, d, e, f));
                        }
                    }
                }
            }
        }
        assert_eq!(strict.len(), 12);
        for row in &strict {
            assert!(PLAIN_ROWS.contains(row), "{row:?} missing from the strict table");
        }

        // Flat rows: vanishing leading product forces equal pairing products.
        let mut flat = Vec::new();
        for &c in &signs {
            for &d in &signs {
                for &e in &signs {
                    for &f in &signs {
                        if c * d == e * f {
                            flat.push((c, d, e, f));
                        }
                    }
                }
            }
        }
        assert_eq!(flat.len(), 8);
        for row in &flat {
            assert!(PRIMED_ROWS.contains(row), "{row:?} missing from the flat table");
        }
    }

    #[test]
    fn classify_round_trips_the_tables() {
        for (i, row) in PLAIN_ROWS.iter().enumerate() {
            assert_eq!(classify_gp(*row).unwrap(), GPType::Plain(i as u8 + 1));
        }
        for (i, &(c, d, e, f)) in PRIMED_ROWS.iter().enumerate() {
            let pattern = (Sign::Zero, c, d, e, f);
            assert_eq!(classify_gp(pattern).unwrap(), GPType::Primed(i as u8 + 1));
        }
    }

    #[test]
    fn inadmissible_patterns_are_unlisted() {
        use Sign::{Minus as M, Plus as P, Zero as Z};
        for pattern in [
            (P, P, M, P, P), // inconsistent pairing products
            (Z, P, P, P, M), // unequal pairing products under a zero lead
            (P, Z, P, P, P), // zero bracket that no cycle pivot can have
            (P, P, Z, P, P), // basis dependent with the objective
        ] {
            assert!(matches!(
                classify_gp(pattern),
                Err(BfpError::UnlistedPattern { .. })
            ));
        }
    }

    #[test]
    fn groups_split_the_tables() {
        use GPType::{Plain, Primed};
        for t in [1u8, 4, 7, 10] {
            assert_eq!(Plain(t).group(), Some(TransitionGroup::Plus));
        }
        for t in [3u8, 6, 9, 12] {
            assert_eq!(Plain(t).group(), Some(TransitionGroup::Minus));
        }
        for t in [2u8, 5, 8, 11] {
            assert_eq!(Plain(t).group(), None);
        }
        for t in [1u8, 4, 5, 8] {
            assert_eq!(Primed(t).group(), Some(TransitionGroup::Plus));
        }
        for t in [2u8, 3, 6, 7] {
            assert_eq!(Primed(t).group(), Some(TransitionGroup::Minus));
        }
    }

    #[test]
    fn successor_product_is_positive_through_independent_bases() {
        let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        let (f, g) = (ElementId(1), ElementId(2));
        let step = |a: u32, b: u32| CyclePivot {
            shared: ids(&[3]),
            leaving: ElementId(a),
            entering: ElementId(b),
            kind: PivotKind::StrictlyIncreasing,
        };
        let first = gp_relation_for_pivot(&chi, f, g, &step(4, 5));
        let second = gp_relation_for_pivot(&chi, f, g, &step(5, 6));
        assert_eq!(successor_product(&first, &second), Sign::Plus);
    }

    #[test]
    fn single_inequality_certificate_fails_verification() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let system = enumerate_system(&chi).unwrap();
        let mut certificate = BfpCertificate::default();
        certificate.inequalities.push((system.inequalities[0].clone(), 1));
        let report = verify_certificate(&chi, &certificate).unwrap();
        assert!(!report.valid);
        assert!(report.failures.contains(&VerifyFailure::MultisetMismatch));
        assert!(!report.failures.contains(&VerifyFailure::NonEmptyRequired));
    }

    #[test]
    fn empty_certificate_reports_missing_inequality() {
        let chi = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let report = verify_certificate(&chi, &BfpCertificate::default()).unwrap();
        assert!(!report.valid);
        assert!(report.failures.contains(&VerifyFailure::NonEmptyRequired));
    }

    #[test]
    fn foreign_inequality_reports_not_in_system() {
        let chi5 = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let chi6 = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        let foreign = enumerate_system(&chi6)
            .unwrap()
            .inequalities
            .iter()
            .find(|q| q.origin.tau == ids(&[6]))
            .unwrap()
            .clone();
        let mut certificate = BfpCertificate::default();
        certificate.inequalities.push((foreign, 1));
        let report = verify_certificate(&chi5, &certificate);
        // Brackets mention element 6, which chi5 does not have.
        assert!(report.is_err() || !report.unwrap().valid);
    }

    #[test]
    fn realizable_chirotopes_do_not_certify() {
        let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        assert_eq!(certify(&chi).unwrap_err(), CertifyError::NoCycle);
    }

    /// Cube chirotope with the flat quadruple {1,2,3,4} resolved positively,
    /// as discovered by the search example and frozen in the catalog.
    const RESOLVED_CUBE: &str =
        "+++++++++0----0----+0+-0++-0--+++------+++0+++0+-0+++--0----0++--++--0";

    #[test]
    fn resolved_cube_certifies_end_to_end() {
        let chi = Chirotope::from_sign_string(8, 4, RESOLVED_CUBE).unwrap();
        assert!(chi.check_axioms().all_ok());
        let outcome = certify(&chi).unwrap();
        assert_eq!((outcome.f, outcome.g), (ElementId(1), ElementId(2)));
        assert_eq!(outcome.cycle.len(), 6);
        assert_eq!(outcome.certification.group, TransitionGroup::Plus);
        let report = verify_certificate(&chi, &outcome.certification.certificate).unwrap();
        assert!(report.valid);
        assert_eq!(report.lhs_multiset.len(), 12);
    }

    #[test]
    fn resolved_cube_is_one_resolution_from_the_cube() {
        let cube = Chirotope::from_configuration(&crate::generate::unit_cube()).unwrap();
        assert_eq!(cube.sign_of_sorted(&ids(&[1, 2, 3, 4])), Sign::Zero);
        let resolved = cube.with_sign(0, Sign::Plus).unwrap();
        assert_eq!(resolved.sign_string(), RESOLVED_CUBE);
    }
}
