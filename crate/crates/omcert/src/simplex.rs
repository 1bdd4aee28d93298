//! Exact phase-1 simplex over arbitrary-precision rationals.
//!
//! Solves "find x >= 0 with M x = b" by minimizing the sum of one artificial
//! variable per row. A zero optimum yields a feasible point; a positive
//! optimum yields the simplex multipliers, which form a dual vector w with
//! w M <= 0 componentwise and w b > 0 — an exact witness that no
//! nonnegative solution exists. Both outcomes are substituted back into the
//! system before they are returned.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhaseOneOutcome {
    /// A nonnegative solution of M x = b.
    Feasible { x: Vec<BigRational> },
    /// A vector w with w M <= 0 and w b > 0.
    Infeasible { dual: Vec<BigRational> },
}

/// Iterations without objective progress before switching the entering rule
/// from steepest reduced cost to smallest index, which cannot cycle.
const STALL_LIMIT: u32 = 30;

pub fn phase_one(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> PhaseOneOutcome {
    let m = matrix.len();
    assert_eq!(m, rhs.len(), "matrix and right-hand side disagree on row count");
    let n = matrix.first().map_or(0, |row| row.len());
    let total = n + m;

    // Tableau rows [structural | artificial | rhs], with rows flipped so the
    // right-hand side is nonnegative and the artificial basis is feasible.
    let mut flipped = vec![false; m];
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(matrix[i].len(), n, "ragged matrix row {i}");
        let flip = rhs[i].is_negative();
        flipped[i] = flip;
        let mut row: Vec<BigRational> = Vec::with_capacity(total + 1);
        for v in &matrix[i] {
            row.push(if flip { -v } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(if flip { -&rhs[i] } else { rhs[i].clone() });
        tab.push(row);
    }

    // Reduced costs for the artificial objective; the last entry carries the
    // negated objective value and is updated by the same eliminations.
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); total + 1];
    for j in 0..=total {
        let mut s = BigRational::zero();
        for row in &tab {
            s += &row[j];
        }
        let direct = if (n..total).contains(&j) { BigRational::one() } else { BigRational::zero() };
        cost[j] = direct - s;
    }

    let mut basis: Vec<usize> = (n..total).collect();
    let mut stalls = 0u32;
    let mut bland = false;

    loop {
        let entering = if bland {
            (0..total).find(|&j| cost[j].is_negative())
        } else {
            let mut best: Option<usize> = None;
            for j in 0..total {
                if cost[j].is_negative() && best.is_none_or(|b| cost[j] < cost[b]) {
                    best = Some(j);
                }
            }
            best
        };
        let Some(pc) = entering else { break };

        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !tab[i][pc].is_positive() {
                continue;
            }
            let ratio = &tab[i][total] / &tab[i][pc];
            let better = match &leaving {
                None => true,
                Some((row, best)) => {
                    ratio < *best || (ratio == *best && basis[i] < basis[*row])
                }
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        let (pr, _) = leaving.expect("artificial objective is bounded below by zero");

        let before = cost[total].clone();
        pivot(&mut tab, &mut cost, pr, pc);
        basis[pr] = pc;
        if cost[total] == before {
            stalls += 1;
            if stalls > STALL_LIMIT {
                bland = true;
            }
        } else {
            stalls = 0;
        }
    }

    let objective = -cost[total].clone();
    debug_assert!(!objective.is_negative());
    if objective.is_zero() {
        let mut x = vec![BigRational::zero(); n];
        for (i, &col) in basis.iter().enumerate() {
            if col < n {
                x[col] = tab[i][total].clone();
            }
        }
        for v in &x {
            assert!(!v.is_negative(), "solution has a negative coordinate");
        }
        for i in 0..m {
            let lhs: BigRational = (0..n).map(|j| &matrix[i][j] * &x[j]).sum();
            assert_eq!(lhs, rhs[i], "solution violates row {i}");
        }
        PhaseOneOutcome::Feasible { x }
    } else {
        // Multiplier of row i is one minus the reduced cost of its
        // artificial column, negated again where the row was flipped.
        let mut dual = Vec::with_capacity(m);
        for i in 0..m {
            let y = BigRational::one() - &cost[n + i];
            dual.push(if flipped[i] { -y } else { y });
        }
        for j in 0..n {
            let wm: BigRational = (0..m).map(|i| &dual[i] * &matrix[i][j]).sum();
            assert!(!wm.is_positive(), "dual fails on column {j}");
        }
        let wb: BigRational = (0..m).map(|i| &dual[i] * &rhs[i]).sum();
        assert!(wb.is_positive(), "dual does not separate the right-hand side");
        PhaseOneOutcome::Infeasible { dual }
    }
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let p = tab[pr][pc].clone();
    for v in tab[pr].iter_mut() {
        *v = &*v / &p;
    }
    let prow = tab[pr].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            let t = &f * pv;
            *v -= t;
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            let t = &f * pv;
            *v -= t;
        }
    }
}
