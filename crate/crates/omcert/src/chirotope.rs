//! Chirotopes: alternating sign maps on r-tuples over a ground set 1..=n.
//!
//! A chirotope stores one sign per sorted r-subset (lexicographic order) and
//! extends to arbitrary tuples by the alternating rule. Construction from a
//! rational vector configuration takes exact determinant signs. `check_axioms`
//! tests the combinatorial axioms: a nonzero entry, basis exchange on the
//! support, and three-term sign consistency for every disjoint pair of an
//! (r-2)-subset and a 4-subset.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::combinatorics::{binomial, rank_of_sorted, sorted_subsets, subsets_of};
use crate::sign::{ElementId, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChirotopeError {
    #[error("invalid rank: need 2 <= r <= n, got n={n} r={r}")]
    InvalidRank { n: u32, r: u32 },
    #[error("sign string length {got} does not match C({n},{r}) = {expected}")]
    LengthMismatch { n: u32, r: u32, expected: usize, got: usize },
    #[error("invalid sign character {found:?} at position {position}")]
    BadCharacter { position: usize, found: char },
    #[error("all signs are zero")]
    AllZero,
    #[error("configuration has rank below r: every r-subset determinant vanishes")]
    RankDeficient,
    #[error("element {index} outside ground set 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("tuple length {got} does not match rank {r}")]
    TupleLength { r: u32, got: usize },
}

/// A rank-r configuration of n rational column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    r: u32,
    columns: Vec<Vec<BigRational>>,
}

impl VectorConfiguration {
    pub fn new(r: u32, columns: Vec<Vec<BigRational>>) -> Result<Self, ChirotopeError> {
        let n = columns.len() as u32;
        if r < 2 || r > n {
            return Err(ChirotopeError::InvalidRank { n, r });
        }
        for col in &columns {
            if col.len() != r as usize {
                return Err(ChirotopeError::TupleLength { r, got: col.len() });
            }
        }
        Ok(VectorConfiguration { r, columns })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.columns.len() as u32
    }

    pub fn column(&self, e: ElementId) -> &[BigRational] {
        &self.columns[e.index0()]
    }

    pub fn columns(&self) -> &[Vec<BigRational>] {
        &self.columns
    }

    /// Exact determinant of the r columns selected by `tuple`, in tuple order.
    pub fn determinant(&self, tuple: &[ElementId]) -> BigRational {
        let r = self.r as usize;
        assert_eq!(tuple.len(), r, "determinant needs exactly r columns");
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|row| tuple.iter().map(|e| self.columns[e.index0()][row].clone()).collect())
            .collect();
        determinant_in_place(&mut m)
    }
}

/// Exact determinant by fraction-full Gaussian elimination; consumes the matrix.
fn determinant_in_place(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let pivot_row = match (col..n).find(|&row| !m[row][col].is_zero()) {
            Some(row) => row,
            None => return BigRational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pivot;
            for k in col..n {
                let sub = &factor * &m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    det
}

/// Axiom check outcome with witnesses for each failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub alternating_ok: bool,
    pub nonzero_ok: bool,
    pub exchange_ok: bool,
    pub gp_ok: bool,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.alternating_ok && self.nonzero_ok && self.exchange_ok && self.gp_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    AllZero,
    /// No element of `basis_b - basis_a` restores a basis after removing
    /// `removed` from `basis_a`.
    ExchangeFailure {
        basis_a: Vec<ElementId>,
        basis_b: Vec<ElementId>,
        removed: ElementId,
    },
    /// The term products (a, c, e) for this (tau, lambda) make (a, -c, e)
    /// uniformly nonnegative or nonpositive with at least one strict entry.
    GpSignFailure {
        tau: Vec<ElementId>,
        lambda: [ElementId; 4],
        products: (Sign, Sign, Sign),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    n: u32,
    r: u32,
    signs: Vec<Sign>,
}

impl Chirotope {
    /// Parse a chirotope from its canonical sign string over sorted r-subsets
    /// in lexicographic order.
    pub fn from_sign_string(n: u32, r: u32, text: &str) -> Result<Self, ChirotopeError> {
        if r < 2 || r > n {
            return Err(ChirotopeError::InvalidRank { n, r });
        }
        let expected = binomial(n, r) as usize;
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != expected {
            return Err(ChirotopeError::LengthMismatch { n, r, expected, got: chars.len() });
        }
        let mut signs = Vec::with_capacity(expected);
        for (position, &c) in chars.iter().enumerate() {
            match Sign::from_char(c) {
                Some(s) => signs.push(s),
                None => return Err(ChirotopeError::BadCharacter { position, found: c }),
            }
        }
        if signs.iter().all(|s| s.is_zero()) {
            return Err(ChirotopeError::AllZero);
        }
        Ok(Chirotope { n, r, signs })
    }

    /// Build the chirotope of a rational vector configuration from exact
    /// determinant signs.
    pub fn from_configuration(config: &VectorConfiguration) -> Result<Self, ChirotopeError> {
        let n = config.n();
        let r = config.r();
        let mut signs = Vec::with_capacity(binomial(n, r) as usize);
        for subset in sorted_subsets(n, r) {
            let det = config.determinant(&subset);
            signs.push(rational_sign(&det));
        }
        if signs.iter().all(|s| s.is_zero()) {
            return Err(ChirotopeError::RankDeficient);
        }
        Ok(Chirotope { n, r, signs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn ground_set(&self) -> Vec<ElementId> {
        (1..=self.n).map(ElementId).collect()
    }

    pub fn num_subsets(&self) -> usize {
        self.signs.len()
    }

    pub fn sign_at_rank(&self, rank: usize) -> Sign {
        self.signs[rank]
    }

    /// Sign on a sorted r-subset.
    pub fn sign_of_sorted(&self, subset: &[ElementId]) -> Sign {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        self.signs[rank_of_sorted(self.n, subset)]
    }

    /// Alternating evaluation on an arbitrary r-tuple. Tuples with repeats map
    /// to zero; out-of-range elements are an error.
    pub fn evaluate(&self, tuple: &[ElementId]) -> Result<Sign, ChirotopeError> {
        if tuple.len() != self.r as usize {
            return Err(ChirotopeError::TupleLength { r: self.r, got: tuple.len() });
        }
        for e in tuple {
            if e.0 < 1 || e.0 > self.n {
                return Err(ChirotopeError::IndexOutOfRange { index: e.0, n: self.n });
            }
        }
        Ok(self.chi(tuple))
    }

    /// Alternating evaluation without range checks (callers validate ids).
    pub(crate) fn chi(&self, tuple: &[ElementId]) -> Sign {
        debug_assert_eq!(tuple.len(), self.r as usize);
        let mut buf = [ElementId(0); 16];
        assert!(tuple.len() <= buf.len(), "rank above 16 unsupported");
        let buf = &mut buf[..tuple.len()];
        buf.copy_from_slice(tuple);
        // insertion sort, counting swaps for the parity
        let mut inversions = 0u32;
        for i in 1..buf.len() {
            let mut j = i;
            while j > 0 && buf[j - 1] > buf[j] {
                buf.swap(j - 1, j);
                inversions += 1;
                j -= 1;
            }
        }
        for w in buf.windows(2) {
            if w[0] == w[1] {
                return Sign::Zero;
            }
        }
        let s = self.signs[rank_of_sorted(self.n, buf)];
        if inversions % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.signs.iter().all(|s| !s.is_zero())
    }

    /// Sorted r-subsets with nonzero sign (the bases of the support).
    pub fn bases(&self) -> Vec<Vec<ElementId>> {
        sorted_subsets(self.n, self.r)
            .into_iter()
            .zip(&self.signs)
            .filter(|(_, s)| !s.is_zero())
            .map(|(b, _)| b)
            .collect()
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    /// Copy with the sign at `rank` replaced; rejects the all-zero result.
    pub fn with_sign(&self, rank: usize, sign: Sign) -> Result<Chirotope, ChirotopeError> {
        let mut signs = self.signs.clone();
        signs[rank] = sign;
        if signs.iter().all(|s| s.is_zero()) {
            return Err(ChirotopeError::AllZero);
        }
        Ok(Chirotope { n: self.n, r: self.r, signs })
    }

    /// Check the combinatorial axioms and report witnesses for every failure.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();

        // Alternating holds by construction: signs are stored per sorted
        // subset and evaluation applies the sorting parity.
        let alternating_ok = true;

        let nonzero_ok = self.signs.iter().any(|s| !s.is_zero());
        if !nonzero_ok {
            violations.push(AxiomViolation::AllZero);
        }

        let exchange_ok = self.scan_exchange(&mut violations);
        let gp_ok = self.scan_gp(&mut violations);

        AxiomReport { alternating_ok, nonzero_ok, exchange_ok, gp_ok, violations }
    }

    fn scan_exchange(&self, violations: &mut Vec<AxiomViolation>) -> bool {
        let bases = self.bases();
        let index: std::collections::HashSet<&[ElementId]> =
            bases.iter().map(|b| b.as_slice()).collect();
        let mut ok = true;
        for ba in &bases {
            for bb in &bases {
                for &x in ba.iter() {
                    if bb.contains(&x) {
                        continue;
                    }
                    let mut found = false;
                    for &y in bb.iter() {
                        if ba.contains(&y) {
                            continue;
                        }
                        let mut candidate: Vec<ElementId> =
                            ba.iter().copied().filter(|&e| e != x).collect();
                        candidate.push(y);
                        candidate.sort();
                        if index.contains(candidate.as_slice()) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        ok = false;
                        violations.push(AxiomViolation::ExchangeFailure {
                            basis_a: ba.clone(),
                            basis_b: bb.clone(),
                            removed: x,
                        });
                    }
                }
            }
        }
        ok
    }

    fn scan_gp(&self, violations: &mut Vec<AxiomViolation>) -> bool {
        let mut ok = true;
        let all: Vec<ElementId> = self.ground_set();
        for tau in sorted_subsets(self.n, self.r - 2) {
            let rest: Vec<ElementId> = all.iter().copied().filter(|e| !tau.contains(e)).collect();
            for lam in subsets_of(&rest, 4) {
                let lambda = [lam[0], lam[1], lam[2], lam[3]];
                let (a, c, e) = self.gp_products(&tau, &lambda);
                if gp_inconsistent(a, c, e) {
                    ok = false;
                    violations.push(AxiomViolation::GpSignFailure {
                        tau: tau.clone(),
                        lambda,
                        products: (a, c, e),
                    });
                }
            }
        }
        ok
    }

    /// Term products (a, c, e) of the three-term identity for (tau, lambda):
    /// a = chi(tau,l1,l2) chi(tau,l3,l4), c = chi(tau,l1,l3) chi(tau,l2,l4),
    /// e = chi(tau,l1,l4) chi(tau,l2,l3).
    pub(crate) fn gp_products(&self, tau: &[ElementId], lambda: &[ElementId; 4]) -> (Sign, Sign, Sign) {
        let mut t = Vec::with_capacity(self.r as usize);
        let mut pair = |i: usize, j: usize, k: usize, l: usize| {
            t.clear();
            t.extend_from_slice(tau);
            t.push(lambda[i]);
            t.push(lambda[j]);
            let s1 = self.chi(&t);
            t.truncate(tau.len());
            t.push(lambda[k]);
            t.push(lambda[l]);
            let s2 = self.chi(&t);
            s1 * s2
        };
        let a = pair(0, 1, 2, 3);
        let c = pair(0, 2, 1, 3);
        let e = pair(0, 3, 1, 2);
        (a, c, e)
    }
}

/// The three-term sign condition fails when the terms (a, -c, e) are all >= 0
/// with one > 0, or all <= 0 with one < 0.
pub(crate) fn gp_inconsistent(a: Sign, c: Sign, e: Sign) -> bool {
    let terms = [a.as_i8(), -c.as_i8(), e.as_i8()];
    let any_pos = terms.iter().any(|&t| t > 0);
    let any_neg = terms.iter().any(|&t| t < 0);
    (any_pos && !any_neg) || (any_neg && !any_pos)
}

pub fn rational_sign(x: &BigRational) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x > &BigRational::zero() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{moment_curve, unit_cube};
    use num_bigint::BigInt;

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn from_sign_string_round_trip() {
        let chi = Chirotope::from_sign_string(5, 3, "++++++++++").unwrap();
        assert_eq!(chi.num_subsets(), 10);
        assert_eq!(chi.sign_string(), "++++++++++");
    }

    #[test]
    fn from_sign_string_length_mismatch() {
        let err = Chirotope::from_sign_string(5, 3, "+++").unwrap_err();
        assert_eq!(err, ChirotopeError::LengthMismatch { n: 5, r: 3, expected: 10, got: 3 });
    }

    #[test]
    fn from_sign_string_bad_character() {
        let err = Chirotope::from_sign_string(4, 2, "++x+++").unwrap_err();
        assert_eq!(err, ChirotopeError::BadCharacter { position: 2, found: 'x' });
    }

    #[test]
    fn from_sign_string_all_zero_rejected() {
        let err = Chirotope::from_sign_string(4, 2, "000000").unwrap_err();
        assert_eq!(err, ChirotopeError::AllZero);
    }

    #[test]
    fn evaluate_is_alternating() {
        let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        assert_eq!(chi.evaluate(&ids(&[1, 2, 3])).unwrap(), Sign::Plus);
        assert_eq!(chi.evaluate(&ids(&[2, 1, 3])).unwrap(), Sign::Minus);
        assert_eq!(chi.evaluate(&ids(&[3, 1, 2])).unwrap(), Sign::Plus);
        assert_eq!(chi.evaluate(&ids(&[2, 2, 3])).unwrap(), Sign::Zero);
        assert!(matches!(
            chi.evaluate(&ids(&[1, 2, 9])),
            Err(ChirotopeError::IndexOutOfRange { index: 9, n: 6 })
        ));
    }

    #[test]
    fn configuration_identity_plus_column() {
        // e1, e2, e3 and (1,1,1): all triples independent except none.
        let cols = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1), rat(1, 1)],
        ];
        let config = VectorConfiguration::new(3, cols).unwrap();
        let chi = Chirotope::from_configuration(&config).unwrap();
        assert_eq!(chi.sign_of_sorted(&ids(&[1, 2, 3])), Sign::Plus);
        assert_eq!(chi.sign_of_sorted(&ids(&[1, 2, 4])), Sign::Plus);
        assert!(chi.is_uniform());
        assert!(chi.check_axioms().all_ok());
    }

    #[test]
    fn configuration_rank_deficient() {
        let cols = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(2, 1), rat(0, 1)],
            vec![rat(3, 1), rat(0, 1)],
        ];
        let config = VectorConfiguration::new(2, cols).unwrap();
        assert_eq!(Chirotope::from_configuration(&config), Err(ChirotopeError::RankDeficient));
    }

    #[test]
    fn moment_curve_is_uniform_and_sound() {
        for (n, r) in [(6u32, 3u32), (7, 4), (5, 2)] {
            let chi = Chirotope::from_configuration(&moment_curve(n, r)).unwrap();
            assert!(chi.is_uniform());
            let report = chi.check_axioms();
            assert!(report.all_ok(), "n={n} r={r}: {:?}", report.violations);
        }
    }

    #[test]
    fn collinear_points_are_not_uniform() {
        // 1, 2, 3 on a line inside a rank-3 configuration.
        let cols = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1), rat(2, 1)],
        ];
        let config = VectorConfiguration::new(3, cols).unwrap();
        let chi = Chirotope::from_configuration(&config).unwrap();
        assert!(!chi.is_uniform());
        assert_eq!(chi.sign_of_sorted(&ids(&[1, 2, 3])), Sign::Zero);
        assert!(chi.check_axioms().all_ok());
    }

    #[test]
    fn cube_chirotope_passes_axioms() {
        let chi = Chirotope::from_configuration(&unit_cube()).unwrap();
        assert!(!chi.is_uniform());
        assert!(chi.check_axioms().all_ok());
    }

    #[test]
    fn gp_scan_vacuous_when_too_few_elements() {
        // With n = 4 and r = 3 no disjoint (tau, lambda) pair exists, so the
        // three-term scan has nothing to check and this sign map is a valid
        // chirotope (it is realizable).
        let chi = Chirotope::from_sign_string(4, 3, "+++-").unwrap();
        let report = chi.check_axioms();
        assert!(report.gp_ok);
        assert!(report.all_ok(), "{:?}", report.violations);
    }

    #[test]
    fn rank_two_zero_sign_breaks_gp_but_not_exchange() {
        // Over {12,13,14,23,24,34}: chi(24) = 0, all others +.
        let chi = Chirotope::from_sign_string(4, 2, "+++"
            .to_owned()
            .chars()
            .chain("+0+".chars())
            .collect::<String>()
            .as_str())
        .unwrap();
        assert_eq!(chi.sign_string(), "++++0+");
        let report = chi.check_axioms();
        assert!(report.exchange_ok);
        assert!(!report.gp_ok);
        assert!(matches!(
            report.violations.first(),
            Some(AxiomViolation::GpSignFailure { .. })
        ));
    }

    #[test]
    fn mutation_of_uniform_chirotope_usually_breaks_gp() {
        let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        // Six points in convex position: flipping the inner triangle {1,3,5}
        // (rank 5) makes tau={1}, lambda=(2,3,4,5) uniformly positive.
        let bad = chi.with_sign(5, Sign::Minus).unwrap();
        let report = bad.check_axioms();
        assert!(!report.gp_ok);
        // Flipping {1,2,3} instead is a legal single-basis mutation: the
        // result is still a chirotope.
        let mutated = chi.with_sign(0, Sign::Minus).unwrap();
        assert!(mutated.check_axioms().all_ok());
    }

    #[test]
    fn exchange_failure_detected() {
        // Support {12, 34} is not a matroid basis family.
        let chi = Chirotope::from_sign_string(4, 2, "+0000+").unwrap();
        let report = chi.check_axioms();
        assert!(!report.exchange_ok);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::ExchangeFailure { .. })));
    }
}
