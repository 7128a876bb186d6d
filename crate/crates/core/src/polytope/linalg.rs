//! Dense exact linear algebra on small matrices.

use crate::scalar::Scalar;

/// Row-reduces `rows` in place and returns the rank.
pub fn row_reduce<T: Scalar>(rows: &mut [Vec<T>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = T::one() / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut copy = rows.to_vec();
    row_reduce(&mut copy)
}

/// The unique solution of the square system `a x = b`, if `a` is invertible.
pub fn solve_square<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = T::one() / aug[col][col].clone();
        for x in aug[col][col..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

/// Rank of the differences `p − points[0]`, i.e. the affine dimension.
pub fn affine_dimension<T: Scalar>(points: &[&Vec<T>]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<T>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect();
    rank(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn solves_and_detects_singular() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![int(5), int(10)];
        assert_eq!(solve_square(&a, &b).unwrap(), vec![int(1), int(3)]);
        let s = m(&[&[1, 2], &[2, 4]]);
        assert!(solve_square(&s, &b).is_none());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank::<Rational>(&[]), 0);
    }
}
