//! Exact linear feasibility oracle for biquadratic systems.
//!
//! Taking logarithms of bracket magnitudes turns every product inequality
//! into a linear one: `[A][B] < [C][D]` with positively oriented sides
//! becomes `xA + xB - xC - xD <= -1` in the free variables `x = log |det|`
//! (the gap normalizes scaling), and every equation becomes `= 0`. The
//! resulting system is feasible whenever the chirotope is realizable, so an
//! exact infeasibility witness — nonnegative multipliers combining the rows
//! into `0 <= -1` — rules realizability out. The witness search runs on the
//! Farkas alternative system, which has one row per bracket, and either
//! outcome is substituted back before being returned.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bfp::{BfpCertificate, EquationUse};
use crate::biquadratic::{enumerate_system, BiquadraticError, BiquadraticSystem, BracketMonomial};
use crate::chirotope::Chirotope;
use crate::sign::ElementId;
use crate::simplex::{phase_one, PhaseOneOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("bracket [{0}] has zero sign; the logarithmic encoding needs nonzero brackets")]
    ZeroBracket(String),
    #[error("multiplier vector uses no inequality")]
    EmptyInequalitySupport,
    #[error("scaled multiplier does not fit a 64-bit count")]
    MultiplierOverflow,
}

/// Linear feasibility system over one variable per bracket subset: rows
/// `inequalities * x <= -1` and `equations * x = 0`, aligned index for index
/// with the biquadratic system they were encoded from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub variables: Vec<Vec<ElementId>>,
    pub inequality_rows: Vec<Vec<BigRational>>,
    pub equation_rows: Vec<Vec<BigRational>>,
}

/// Nonnegative inequality multipliers and signed equation multipliers whose
/// row combination is identically zero on every variable: the inequality
/// rows then sum to `0 <= -(sum of multipliers)`, which is absurd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub inequality_multipliers: Vec<BigRational>,
    pub equation_multipliers: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Exact point satisfying every row, aligned with `variables`.
    Feasible(Vec<BigRational>),
    Infeasible(FarkasCertificate),
}

/// Encodes a biquadratic system over the chirotope's brackets. Every bracket
/// mentioned must carry a nonzero sign.
pub fn encode_system(
    chi: &Chirotope,
    system: &BiquadraticSystem,
) -> Result<LinearSystem, LpError> {
    let mut index: BTreeMap<Vec<ElementId>, usize> = BTreeMap::new();
    let check_and_insert = |pair: &[BracketMonomial; 2],
                                index: &mut BTreeMap<Vec<ElementId>, usize>|
     -> Result<(), LpError> {
        for m in pair {
            if chi.sign_of_sorted(&m.subset).is_zero() {
                let text =
                    m.subset.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
                return Err(LpError::ZeroBracket(text));
            }
            let next = index.len();
            index.entry(m.subset.clone()).or_insert(next);
        }
        Ok(())
    };
    for q in &system.inequalities {
        check_and_insert(&q.lhs, &mut index)?;
        check_and_insert(&q.rhs, &mut index)?;
    }
    for eq in &system.equations {
        check_and_insert(&eq.lhs, &mut index)?;
        check_and_insert(&eq.rhs, &mut index)?;
    }

    // Re-index in sorted subset order for a deterministic layout.
    let variables: Vec<Vec<ElementId>> = index.keys().cloned().collect();
    let position: BTreeMap<&Vec<ElementId>, usize> =
        variables.iter().enumerate().map(|(i, v)| (v, i)).collect();

    let encode_row = |lhs: &[BracketMonomial; 2], rhs: &[BracketMonomial; 2]| {
        let mut row = vec![BigRational::zero(); variables.len()];
        for m in lhs {
            row[position[&m.subset]] += BigRational::one();
        }
        for m in rhs {
            row[position[&m.subset]] -= BigRational::one();
        }
        row
    };
    let inequality_rows =
        system.inequalities.iter().map(|q| encode_row(&q.lhs, &q.rhs)).collect();
    let equation_rows = system.equations.iter().map(|eq| encode_row(&eq.lhs, &eq.rhs)).collect();
    Ok(LinearSystem { variables, inequality_rows, equation_rows })
}

/// Decides the system exactly via its Farkas alternative: multipliers
/// y >= 0, z with sum_i y_i A_i + sum_j z_j C_j = 0 and sum_i y_i = 1 exist
/// precisely when no x satisfies A x <= -1, C x = 0.
pub fn solve_feasibility(ls: &LinearSystem) -> SolveOutcome {
    let vars = ls.variables.len();
    let ni = ls.inequality_rows.len();
    let ne = ls.equation_rows.len();
    let cols = ni + 2 * ne;

    // Alternative system rows: one per variable, plus the normalization row.
    let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(vars + 1);
    for k in 0..vars {
        let mut row = Vec::with_capacity(cols);
        for a in &ls.inequality_rows {
            row.push(a[k].clone());
        }
        for c in &ls.equation_rows {
            row.push(c[k].clone());
        }
        for c in &ls.equation_rows {
            row.push(-&c[k]);
        }
        matrix.push(row);
    }
    let mut norm = vec![BigRational::zero(); cols];
    for v in norm.iter_mut().take(ni) {
        *v = BigRational::one();
    }
    matrix.push(norm);
    let mut rhs = vec![BigRational::zero(); vars];
    rhs.push(BigRational::one());

    match phase_one(&matrix, &rhs) {
        PhaseOneOutcome::Feasible { x } => {
            let y: Vec<BigRational> = x[..ni].to_vec();
            let z: Vec<BigRational> =
                (0..ne).map(|j| &x[ni + j] - &x[ni + ne + j]).collect();
            for k in 0..vars {
                let mut total = BigRational::zero();
                for (i, a) in ls.inequality_rows.iter().enumerate() {
                    total += &y[i] * &a[k];
                }
                for (j, c) in ls.equation_rows.iter().enumerate() {
                    total += &z[j] * &c[k];
                }
                assert!(total.is_zero(), "multipliers do not cancel variable {k}");
            }
            assert!(y.iter().sum::<BigRational>().is_one(), "multipliers are not normalized");
            SolveOutcome::Infeasible(FarkasCertificate {
                inequality_multipliers: y,
                equation_multipliers: z,
            })
        }
        PhaseOneOutcome::Infeasible { dual } => {
            // dual = (u, beta) with u A_i + beta <= 0, u C_j = 0, beta > 0;
            // x = u / beta satisfies the original system.
            let beta = dual[vars].clone();
            assert!(beta.is_positive(), "alternative dual must weight the normalization row");
            let x: Vec<BigRational> = (0..vars).map(|k| &dual[k] / &beta).collect();
            for a in &ls.inequality_rows {
                let v: BigRational = a.iter().zip(&x).map(|(c, xi)| c * xi).sum();
                assert!(v <= -BigRational::one(), "inequality row not satisfied with gap");
            }
            for c in &ls.equation_rows {
                let v: BigRational = c.iter().zip(&x).map(|(cc, xi)| cc * xi).sum();
                assert!(v.is_zero(), "equation row not satisfied");
            }
            SolveOutcome::Feasible(x)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    System(#[from] BiquadraticError),
    #[error(transparent)]
    Encode(#[from] LpError),
}

/// Enumerates, encodes, and solves the system of a chirotope in one step.
pub fn solve_chirotope(chi: &Chirotope) -> Result<SolveOutcome, OracleError> {
    let system = enumerate_system(chi)?;
    let ls = encode_system(chi, &system)?;
    Ok(solve_feasibility(&ls))
}

/// Clears denominators of a Farkas certificate and rebuilds it as a
/// combination of system members with integer multiplicities: inequalities
/// with positive weight, equations with nonzero weight (negative weight uses
/// the equation right to left).
pub fn bfp_from_farkas(
    system: &BiquadraticSystem,
    farkas: &FarkasCertificate,
) -> Result<BfpCertificate, LpError> {
    let mut scale = BigInt::one();
    for v in farkas
        .inequality_multipliers
        .iter()
        .chain(&farkas.equation_multipliers)
    {
        scale = scale.lcm(v.denom());
    }
    let scaled = |v: &BigRational| -> Result<i128, LpError> {
        let exact = (v * BigRational::from_integer(scale.clone())).to_integer();
        exact.to_i128().ok_or(LpError::MultiplierOverflow)
    };

    let mut certificate = BfpCertificate::default();
    for (i, v) in farkas.inequality_multipliers.iter().enumerate() {
        let m = scaled(v)?;
        if m < 0 {
            return Err(LpError::EmptyInequalitySupport);
        }
        if m > 0 {
            let times = u64::try_from(m).map_err(|_| LpError::MultiplierOverflow)?;
            certificate.inequalities.push((system.inequalities[i].clone(), times));
        }
    }
    if certificate.inequalities.is_empty() {
        return Err(LpError::EmptyInequalitySupport);
    }
    for (j, v) in farkas.equation_multipliers.iter().enumerate() {
        let m = scaled(v)?;
        if m != 0 {
            let times = u64::try_from(m.unsigned_abs()).map_err(|_| LpError::MultiplierOverflow)?;
            certificate.equations.push((
                EquationUse { equation: system.equations[j].clone(), reversed: m < 0 },
                times,
            ));
        }
    }
    Ok(certificate)
}

/// Serializes a linear system in LP model format, annotating each variable
/// with its bracket.
pub fn dump_lp(ls: &LinearSystem) -> String {
    let mut out = String::from("\\ bracket-logarithm feasibility system\n");
    for (k, subset) in ls.variables.iter().enumerate() {
        let text = subset.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
        out.push_str(&format!("\\ x{} = [{}]\n", k + 1, text));
    }
    out.push_str("Minimize\n obj: 0\nSubject To\n");
    let term = |row: &[BigRational]| {
        let mut text = String::new();
        for (k, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag.is_one() {
                text.push_str(&format!(" {} x{}", sign, k + 1));
            } else {
                text.push_str(&format!(" {} {} x{}", sign, mag, k + 1));
            }
        }
        text
    };
    for (i, row) in ls.inequality_rows.iter().enumerate() {
        out.push_str(&format!(" ineq{}:{} <= -1\n", i + 1, term(row)));
    }
    for (j, row) in ls.equation_rows.iter().enumerate() {
        out.push_str(&format!(" eq{}:{} = 0\n", j + 1, term(row)));
    }
    out.push_str("Bounds\n");
    for k in 0..ls.variables.len() {
        out.push_str(&format!(" x{} free\n", k + 1));
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::moment_curve;
    use num_traits::FromPrimitive;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn contradictory_pair_of_inequalities_is_infeasible() {
        // x <= -1 and -x <= -1 cannot both hold.
        let ls = LinearSystem {
            variables: vec![vec![ElementId(1), ElementId(2)]],
            inequality_rows: vec![
                vec![BigRational::one()],
                vec![-BigRational::one()],
            ],
            equation_rows: vec![],
        };
        match solve_feasibility(&ls) {
            SolveOutcome::Infeasible(farkas) => {
                assert_eq!(
                    farkas.inequality_multipliers,
                    vec![rat(1, 2), rat(1, 2)]
                );
                assert!(farkas.equation_multipliers.is_empty());
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn realizable_system_is_feasible() {
        let chi = Chirotope::from_configuration(&moment_curve(6, 3)).unwrap();
        match solve_chirotope(&chi).unwrap() {
            SolveOutcome::Feasible(x) => {
                assert_eq!(x.len(), 20);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn equation_bearing_system_is_feasible() {
        let chi = Chirotope::from_sign_string(4, 2, "0+++++").unwrap();
        let system = enumerate_system(&chi).unwrap();
        assert_eq!(system.equations.len(), 1);
        let ls = encode_system(&chi, &system).unwrap();
        assert!(matches!(solve_feasibility(&ls), SolveOutcome::Feasible(_)));
    }

    #[test]
    fn zero_bracket_is_rejected_by_the_encoder() {
        let good = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let system = enumerate_system(&good).unwrap();
        // Same bracket names over a chirotope where [1 2 x] signs vanish.
        let degenerate = {
            let mut signs = String::new();
            for (i, c) in good.sign_string().chars().enumerate() {
                signs.push(if i < 3 { '0' } else { c });
            }
            Chirotope::from_sign_string(5, 3, &signs).unwrap()
        };
        assert!(matches!(
            encode_system(&degenerate, &system),
            Err(LpError::ZeroBracket(_))
        ));
    }

    #[test]
    fn farkas_scaling_produces_integer_multiplicities() {
        let chi5 = Chirotope::from_configuration(&moment_curve(5, 3)).unwrap();
        let ineqs = enumerate_system(&chi5).unwrap().inequalities;
        let eq_system = enumerate_system(
            &Chirotope::from_sign_string(4, 2, "0+++++").unwrap(),
        )
        .unwrap();
        let system = BiquadraticSystem {
            inequalities: vec![ineqs[0].clone(), ineqs[1].clone()],
            equations: eq_system.equations.clone(),
        };
        let farkas = FarkasCertificate {
            inequality_multipliers: vec![rat(1, 6), rat(1, 3)],
            equation_multipliers: vec![rat(-1, 2)],
        };
        let certificate = bfp_from_farkas(&system, &farkas).unwrap();
        assert_eq!(certificate.inequalities[0].1, 1);
        assert_eq!(certificate.inequalities[1].1, 2);
        assert_eq!(certificate.equations[0].1, 3);
        assert!(certificate.equations[0].0.reversed);
    }

    #[test]
    fn farkas_without_inequalities_is_rejected() {
        let system = BiquadraticSystem::default();
        let farkas = FarkasCertificate {
            inequality_multipliers: vec![],
            equation_multipliers: vec![],
        };
        assert_eq!(
            bfp_from_farkas(&system, &farkas).unwrap_err(),
            LpError::EmptyInequalitySupport
        );
    }

    #[test]
    fn lp_dump_lists_rows_and_free_bounds() {
        let ls = LinearSystem {
            variables: vec![
                vec![ElementId(1), ElementId(2)],
                vec![ElementId(1), ElementId(3)],
            ],
            inequality_rows: vec![vec![BigRational::one(), -BigRational::one()]],
            equation_rows: vec![vec![
                BigRational::from_i64(2).unwrap(),
                BigRational::zero(),
            ]],
        };
        let text = dump_lp(&ls);
        assert!(text.contains("\\ x1 = [1 2]"));
        assert!(text.contains(" ineq1: + x1 - x2 <= -1"));
        assert!(text.contains(" eq1: + 2 x1 = 0"));
        assert!(text.contains(" x2 free"));
        assert!(text.ends_with("End\n"));
    }
}
