//! Bracket inequalities and equations extracted from three-term sign patterns.
//!
//! For each disjoint pair of a sorted (r-2)-subset tau and a 4-subset lambda,
//! the three-term identity couples the three pairings of lambda. After
//! reordering lambda so that all three pairing products are nonnegative
//! (a "normalized pair"), strict products yield strict inequalities between
//! bracket products that must hold in every realization, and a single zero
//! product yields an equation. The full collection over all sites is the
//! biquadratic system of the chirotope.
//!
//! Sides are stored in a canonical positively oriented form: each side is a
//! pair of sorted brackets plus orientation signs, normalized so the side
//! evaluates to a positive number under any realization.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::chirotope::{gp_inconsistent, Chirotope};
use crate::combinatorics::{sort_parity, sorted_subsets, subsets_of};
use crate::sign::{ElementId, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiquadraticError {
    #[error("no reordering of lambda {lambda:?} over tau {tau:?} makes all pairing products nonnegative")]
    NoNormalization { tau: Vec<ElementId>, lambda: [ElementId; 4] },
    #[error("three-term sign condition fails at tau {tau:?}, lambda {lambda:?}")]
    InconsistentSigns { tau: Vec<ElementId>, lambda: [ElementId; 4] },
}

/// A bracket variable in normal form: sorted index set plus the sign picked
/// up while sorting the original tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketMonomial {
    pub subset: Vec<ElementId>,
    pub orientation: Sign,
}

impl BracketMonomial {
    /// Normal form of a bracket over a tuple; `None` when an index repeats
    /// (the bracket is identically zero).
    pub fn from_tuple(tuple: &[ElementId]) -> Option<BracketMonomial> {
        let parity = sort_parity(tuple)?;
        let mut subset = tuple.to_vec();
        subset.sort();
        Some(BracketMonomial { subset, orientation: Sign::from_i8(parity) })
    }
}

impl fmt::Display for BracketMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.subset.iter().map(|e| e.to_string()).join(" "))
    }
}

/// Canonical product of two brackets: monomials sorted by index set, and both
/// orientations flipped if needed so the first is positive. The product of
/// the two orientations is preserved.
pub fn pair_normal_form(t1: &[ElementId], t2: &[ElementId]) -> Option<[BracketMonomial; 2]> {
    let mut m1 = BracketMonomial::from_tuple(t1)?;
    let mut m2 = BracketMonomial::from_tuple(t2)?;
    if m2.subset < m1.subset {
        std::mem::swap(&mut m1, &mut m2);
    }
    if m1.orientation == Sign::Minus {
        m1.orientation = -m1.orientation;
        m2.orientation = -m2.orientation;
    }
    Some([m1, m2])
}

pub fn pair_orientation(pair: &[BracketMonomial; 2]) -> Sign {
    pair[0].orientation * pair[1].orientation
}

/// Renders a side as `[..][..]`, with a leading `-` when the orientation
/// product is negative.
pub fn format_pair(pair: &[BracketMonomial; 2]) -> String {
    let sign = if pair_orientation(pair) == Sign::Minus { "-" } else { "" };
    format!("{sign}{}{}", pair[0], pair[1])
}

/// The site a system element was derived from: tau plus lambda in the
/// normalized order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairOrigin {
    pub tau: Vec<ElementId>,
    pub lambda: [ElementId; 4],
}

/// A reordering of a 4-subset over tau with all three pairing products
/// nonnegative. Tuple roles follow the identity
/// `[t l1 l2][t l3 l4] - [t l1 l3][t l2 l4] + [t l1 l4][t l2 l3] = 0`:
/// the pairings are AB = (l1 l2 | l3 l4), CD = (l1 l3 | l2 l4),
/// EF = (l1 l4 | l2 l3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedPair {
    tau: Vec<ElementId>,
    lambda: [ElementId; 4],
    tuples: [Vec<ElementId>; 6],
    signs: [Sign; 6],
    products: [Sign; 3],
}

impl NormalizedPair {
    pub fn tau(&self) -> &[ElementId] {
        &self.tau
    }

    /// Lambda in the normalized order.
    pub fn lambda(&self) -> &[ElementId; 4] {
        &self.lambda
    }

    pub fn origin(&self) -> PairOrigin {
        PairOrigin { tau: self.tau.clone(), lambda: self.lambda }
    }

    pub fn product_ab(&self) -> Sign {
        self.products[0]
    }

    pub fn product_cd(&self) -> Sign {
        self.products[1]
    }

    pub fn product_ef(&self) -> Sign {
        self.products[2]
    }

    pub fn side_ab(&self) -> [BracketMonomial; 2] {
        pair_normal_form(&self.tuples[0], &self.tuples[1]).expect("pair tuples have no repeats")
    }

    pub fn side_cd(&self) -> [BracketMonomial; 2] {
        pair_normal_form(&self.tuples[2], &self.tuples[3]).expect("pair tuples have no repeats")
    }

    pub fn side_ef(&self) -> [BracketMonomial; 2] {
        pair_normal_form(&self.tuples[4], &self.tuples[5]).expect("pair tuples have no repeats")
    }

    pub fn is_consistent(&self) -> bool {
        !gp_inconsistent(self.products[0], self.products[1], self.products[2])
    }
}

/// Finds the lexicographically least reordering of `lambda` whose three
/// pairing products over `tau` are all nonnegative.
pub fn normalize_pair(
    chi: &Chirotope,
    tau: &[ElementId],
    lambda: &[ElementId; 4],
) -> Result<NormalizedPair, BiquadraticError> {
    assert_eq!(tau.len() + 2, chi.r() as usize, "tau must have r-2 elements");
    let mut sorted = *lambda;
    sorted.sort();
    assert!(sorted.windows(2).all(|w| w[0] < w[1]), "lambda elements must be distinct");
    assert!(sorted.iter().all(|e| !tau.contains(e)), "lambda must avoid tau");

    for perm in sorted.iter().copied().permutations(4) {
        let lam = [perm[0], perm[1], perm[2], perm[3]];
        let (tuples, signs, products) = pair_data(chi, tau, &lam);
        if products.iter().all(|p| *p != Sign::Minus) {
            return Ok(NormalizedPair { tau: tau.to_vec(), lambda: lam, tuples, signs, products });
        }
    }
    Err(BiquadraticError::NoNormalization { tau: tau.to_vec(), lambda: sorted })
}

fn pair_data(
    chi: &Chirotope,
    tau: &[ElementId],
    lam: &[ElementId; 4],
) -> ([Vec<ElementId>; 6], [Sign; 6], [Sign; 3]) {
    let tuple = |i: usize, j: usize| {
        let mut t = Vec::with_capacity(tau.len() + 2);
        t.extend_from_slice(tau);
        t.push(lam[i]);
        t.push(lam[j]);
        t
    };
    let tuples = [tuple(0, 1), tuple(2, 3), tuple(0, 2), tuple(1, 3), tuple(0, 3), tuple(1, 2)];
    let signs = [
        chi.chi(&tuples[0]),
        chi.chi(&tuples[1]),
        chi.chi(&tuples[2]),
        chi.chi(&tuples[3]),
        chi.chi(&tuples[4]),
        chi.chi(&tuples[5]),
    ];
    let products = [signs[0] * signs[1], signs[2] * signs[3], signs[4] * signs[5]];
    (tuples, signs, products)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InequalitySide {
    /// `[A][B] < [C][D]`
    AbLtCd,
    /// `[E][F] < [C][D]`
    EfLtCd,
}

impl InequalitySide {
    pub fn as_str(self) -> &'static str {
        match self {
            InequalitySide::AbLtCd => "AB<CD",
            InequalitySide::EfLtCd => "EF<CD",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "AB<CD" => Some(InequalitySide::AbLtCd),
            "EF<CD" => Some(InequalitySide::EfLtCd),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquationForm {
    /// `[E][F] = [C][D]`, from a vanishing AB product.
    EfEqCd,
    /// `[A][B] = [C][D]`, from a vanishing EF product.
    AbEqCd,
}

impl EquationForm {
    pub fn as_str(self) -> &'static str {
        match self {
            EquationForm::EfEqCd => "EF=CD",
            EquationForm::AbEqCd => "AB=CD",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "EF=CD" => Some(EquationForm::EfEqCd),
            "AB=CD" => Some(EquationForm::AbEqCd),
            _ => None,
        }
    }
}

/// A strict bracket-product inequality valid in every realization:
/// `lhs < rhs` with both sides positively oriented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiquadraticInequality {
    pub lhs: [BracketMonomial; 2],
    pub rhs: [BracketMonomial; 2],
    pub side: InequalitySide,
    pub origin: PairOrigin,
}

impl fmt::Display for BiquadraticInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "INEQ {} < {}", format_pair(&self.lhs), format_pair(&self.rhs))
    }
}

/// A bracket-product equation valid in every realization: `lhs = rhs` with
/// both sides positively oriented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiquadraticEquation {
    pub lhs: [BracketMonomial; 2],
    pub rhs: [BracketMonomial; 2],
    pub form: EquationForm,
    pub origin: PairOrigin,
}

impl fmt::Display for BiquadraticEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EQ {} = {}", format_pair(&self.lhs), format_pair(&self.rhs))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiquadraticSystem {
    pub inequalities: Vec<BiquadraticInequality>,
    pub equations: Vec<BiquadraticEquation>,
}

impl BiquadraticSystem {
    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty() && self.equations.is_empty()
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        for ineq in &self.inequalities {
            out.push_str(&ineq.to_string());
            out.push('\n');
        }
        for eq in &self.equations {
            out.push_str(&eq.to_string());
            out.push('\n');
        }
        out
    }
}

/// The members contributed by one normalized pair, as a standalone system.
pub fn members_for_site(site: &NormalizedPair) -> BiquadraticSystem {
    let mut system = BiquadraticSystem::default();
    contribute(site, &mut system);
    system
}

/// Builds the members contributed by one normalized pair. Strict products on
/// both outer pairings give the two inequalities bounded by the middle
/// pairing; a single vanishing outer product gives one equation.
fn contribute(site: &NormalizedPair, system: &mut BiquadraticSystem) {
    let origin = site.origin();
    match (site.product_ab(), site.product_cd(), site.product_ef()) {
        (Sign::Plus, _, Sign::Plus) => {
            system.inequalities.push(BiquadraticInequality {
                lhs: site.side_ab(),
                rhs: site.side_cd(),
                side: InequalitySide::AbLtCd,
                origin: origin.clone(),
            });
            system.inequalities.push(BiquadraticInequality {
                lhs: site.side_ef(),
                rhs: site.side_cd(),
                side: InequalitySide::EfLtCd,
                origin,
            });
        }
        (Sign::Zero, Sign::Plus, Sign::Plus) => {
            system.equations.push(BiquadraticEquation {
                lhs: site.side_ef(),
                rhs: site.side_cd(),
                form: EquationForm::EfEqCd,
                origin,
            });
        }
        (Sign::Plus, Sign::Plus, Sign::Zero) => {
            system.equations.push(BiquadraticEquation {
                lhs: site.side_ab(),
                rhs: site.side_cd(),
                form: EquationForm::AbEqCd,
                origin,
            });
        }
        // All products zero: the identity is trivial here. Other patterns are
        // ruled out by the consistency check before this call.
        (Sign::Zero, Sign::Zero, Sign::Zero) => {}
        other => unreachable!("inconsistent normalized products {other:?} reached contribute"),
    }
}

/// All sites (tau, lambda) of a chirotope: sorted (r-2)-subsets tau and
/// 4-subsets lambda of the remaining elements.
pub fn pair_sites(chi: &Chirotope) -> Vec<(Vec<ElementId>, [ElementId; 4])> {
    let all = chi.ground_set();
    let mut sites = Vec::new();
    for tau in sorted_subsets(chi.n(), chi.r() - 2) {
        let rest: Vec<ElementId> = all.iter().copied().filter(|e| !tau.contains(e)).collect();
        for lam in subsets_of(&rest, 4) {
            sites.push((tau.clone(), [lam[0], lam[1], lam[2], lam[3]]));
        }
    }
    sites
}

/// Enumerates the biquadratic system of a chirotope. Fails when some site
/// violates three-term sign consistency, in which case no realization exists
/// for trivial reasons and the system is not defined.
pub fn enumerate_system(chi: &Chirotope) -> Result<BiquadraticSystem, BiquadraticError> {
    let mut system = BiquadraticSystem::default();
    for (tau, lambda) in pair_sites(chi) {
        let site = normalize_pair(chi, &tau, &lambda)?;
        if !site.is_consistent() {
            return Err(BiquadraticError::InconsistentSigns { tau, lambda });
        }
        contribute(&site, &mut system);
    }
    Ok(system)
}
