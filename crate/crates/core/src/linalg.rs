//! Minimal exact linear algebra over `Q`: just enough for rank computations.

use num_traits::Zero;

use crate::polyring::Rational;

/// Rank of the matrix given by `rows`, by fraction-free-ish Gaussian
/// elimination with exact rational arithmetic.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(pivot) = (row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot);
        let pivot_val = rows[row][col].clone();
        for r in row + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot_val;
            for c in col..ncols {
                let delta = &rows[row][c] * &factor;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// True when the columns of `matrix` (given row-major) are linearly
/// independent.
pub(crate) fn columns_independent(matrix: &[Vec<Rational>]) -> bool {
    let cols = matrix.first().map_or(0, |r| r.len());
    rank(matrix.to_vec()) == cols
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![q(0), q(0)]]), 0);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(0), q(3)]]), 2);
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(4), q(5), q(6)],
            vec![q(7), q(8), q(9)],
        ];
        assert_eq!(rank(m), 2);
    }

    #[test]
    fn column_independence() {
        let m = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]];
        assert!(columns_independent(&m));
        let d = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(!columns_independent(&d));
    }
}
