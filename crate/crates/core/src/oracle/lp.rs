//! Exact phase-one simplex for systems `M z ≥ 1` with free `z`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::RatVec;

/// Finds `z` with `rows[i] · z ≥ 1` for every row, or `None` if the system is
/// infeasible. Bland's rule rules out cycling, so this always terminates.
pub fn feasible_point(rows: &[RatVec], width: usize) -> Option<RatVec> {
    let r = rows.len();
    if r == 0 {
        return Some(vec![BigRational::zero(); width]);
    }
    // Columns: z⁺ (width), z⁻ (width), surplus (r), artificial (r), rhs.
    let surplus = 2 * width;
    let artificial = surplus + r;
    let cols = artificial + r;
    let mut tab: Vec<RatVec> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = vec![BigRational::zero(); cols + 1];
            for (j, a) in row.iter().enumerate() {
                t[j] = a.clone();
                t[width + j] = -a.clone();
            }
            t[surplus + i] = -BigRational::one();
            t[artificial + i] = BigRational::one();
            t[cols] = BigRational::one();
            t
        })
        .collect();
    let mut basis: Vec<usize> = (artificial..cols).collect();

    // Reduced costs of "minimise the sum of artificials"; the last entry is
    // minus the objective value.
    let mut cost = vec![BigRational::zero(); cols + 1];
    for t in &tab {
        for (c, x) in cost.iter_mut().zip(t) {
            *c -= x;
        }
    }
    for c in cost.iter_mut().take(cols).skip(artificial) {
        *c = BigRational::zero();
    }

    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if !t[enter].is_positive() {
                continue;
            }
            let ratio = &t[cols] / &t[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so some row always blocks.
        let (pivot_row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    if !cost[cols].is_zero() {
        return None;
    }
    let mut value = vec![BigRational::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        value[b] = tab[i][cols].clone();
    }
    Some((0..width).map(|j| &value[j] - &value[width + j]).collect())
}

fn pivot(tab: &mut [RatVec], cost: &mut RatVec, row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for x in tab[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tab[row].clone();
    let eliminate = |target: &mut RatVec| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for (x, p) in target.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    };
    for (i, t) in tab.iter_mut().enumerate() {
        if i != row {
            eliminate(t);
        }
    }
    eliminate(cost);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dot, rat};

    fn rows(m: &[&[i64]]) -> Vec<RatVec> {
        m.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    fn check(m: &[RatVec], z: &[BigRational]) {
        for row in m {
            assert!(dot(row, z) >= BigRational::one());
        }
    }

    #[test]
    fn feasible_systems() {
        let m = rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        check(&m, &feasible_point(&m, 2).unwrap());
        let m = rows(&[&[-1, 2], &[3, -1]]);
        check(&m, &feasible_point(&m, 2).unwrap());
        assert!(feasible_point(&[], 3).is_some());
    }

    #[test]
    fn infeasible_systems() {
        // z ≥ 1 and -z ≥ 1.
        assert!(feasible_point(&rows(&[&[1], &[-1]]), 1).is_none());
        // Three vectors summing to zero cannot all have positive products.
        assert!(feasible_point(&rows(&[&[1, 0], &[0, 1], &[-1, -1]]), 2).is_none());
        assert!(feasible_point(&rows(&[&[0, 0]]), 2).is_none());
    }
}
