//! Phase-one simplex: exact feasibility of `M x = b, x ≥ 0`.
//!
//! Dependent rows are removed first. Pivots follow Dantzig's rule until a
//! degenerate pivot occurs, after which Bland's rule guarantees termination.

use crate::scalar::Scalar;

use super::linalg::row_reduce;

/// A non-negative solution of `m x = b`, or `None` if there is none.
pub fn feasible_point<T: Scalar>(m: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut augmented: Vec<Vec<T>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let rank = row_reduce(&mut augmented);
    augmented.truncate(rank);
    if augmented
        .iter()
        .any(|r| r[..cols].iter().all(T::is_zero))
    {
        return None;
    }
    let rows = augmented.len();
    let width = cols + rows;
    let mut tableau: Vec<Vec<T>> = Vec::with_capacity(rows);
    let mut rhs: Vec<T> = Vec::with_capacity(rows);
    for (i, mut row) in augmented.into_iter().enumerate() {
        let bi = row.pop().expect("augmented column");
        let flip = bi.is_negative();
        if flip {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row.extend((0..rows).map(|k| if k == i { T::one() } else { T::zero() }));
        tableau.push(row);
        rhs.push(if flip { -bi } else { bi });
    }
    let mut basis: Vec<usize> = (cols..width).collect();
    // negated reduced costs of the phase-one objective
    let mut cost: Vec<T> = (0..width)
        .map(|j| {
            if j < cols {
                tableau.iter().fold(T::zero(), |acc, r| acc + r[j].clone())
            } else {
                T::zero()
            }
        })
        .collect();
    let mut objective = rhs.iter().fold(T::zero(), |acc, x| acc + x.clone());
    let mut bland = false;

    loop {
        let enter = if bland {
            (0..width).find(|&j| cost[j].is_positive())
        } else {
            (0..width)
                .filter(|&j| cost[j].is_positive())
                .fold(None, |best: Option<usize>, j| match best {
                    Some(b) if cost[b] >= cost[j] => Some(b),
                    _ => Some(j),
                })
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<(usize, T)> = None;
        for i in 0..rows {
            if tableau[i][enter].is_positive() {
                let ratio = rhs[i].clone() / tableau[i][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, ratio)) = leave else {
            break;
        };
        if ratio.is_zero() {
            bland = true;
        }
        let inv = T::one() / tableau[r][enter].clone();
        for x in tableau[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        rhs[r] = rhs[r].clone() * inv;
        let pivot_row = tableau[r].clone();
        let pivot_rhs = rhs[r].clone();
        let support: Vec<usize> = (0..width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..rows {
            if i != r && !tableau[i][enter].is_zero() {
                let f = tableau[i][enter].clone();
                for &j in &support {
                    let d = f.clone() * pivot_row[j].clone();
                    tableau[i][j] = tableau[i][j].clone() - d;
                }
                rhs[i] = rhs[i].clone() - f * pivot_rhs.clone();
            }
        }
        let f = cost[enter].clone();
        for &j in &support {
            cost[j] = cost[j].clone() - f.clone() * pivot_row[j].clone();
        }
        objective = objective - f * pivot_rhs;
        basis[r] = enter;
    }

    if !objective.is_zero() {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (i, &var) in basis.iter().enumerate() {
        if var < cols {
            x[var] = rhs[i].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    fn r(x: i64) -> Rational {
        int(x)
    }

    fn check(m: &[Vec<Rational>], b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, bi) in m.iter().zip(b) {
            let lhs = row.iter().zip(x).fold(r(0), |a, (p, q)| a + p * q);
            assert_eq!(&lhs, bi);
        }
    }

    #[test]
    fn finds_a_point() {
        let m = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let b = [r(2), r(0)];
        let x = feasible_point(&m, &b).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
    }

    #[test]
    fn detects_infeasibility() {
        let m = vec![vec![r(1), r(1)]];
        assert!(feasible_point(&m, &[r(-1)]).is_none());
        let m = vec![vec![r(1)], vec![r(1)]];
        assert!(feasible_point(&m, &[r(1), r(2)]).is_none());
    }

    #[test]
    fn dependent_rows_and_negative_right_hand_side() {
        let m = vec![vec![r(-1), r(0)], vec![r(0), r(1)], vec![r(-2), r(1)]];
        let b = [r(-3), r(0), r(-6)];
        assert_eq!(feasible_point(&m, &b).unwrap(), vec![r(3), r(0)]);
    }

    #[test]
    fn degenerate_system() {
        // a small transportation polytope
        let m = vec![
            vec![r(1), r(1), r(0), r(0)],
            vec![r(0), r(0), r(1), r(1)],
            vec![r(1), r(0), r(1), r(0)],
            vec![r(0), r(1), r(0), r(1)],
        ];
        let b = [r(1), r(0), r(1), r(0)];
        let x = feasible_point(&m, &b).unwrap();
        check(&m, &b, &x);
    }
}
