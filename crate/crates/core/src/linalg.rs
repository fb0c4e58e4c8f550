//! Exact integer linear algebra for small square systems.
//!
//! Everything here is fraction-free (Bareiss elimination), so intermediate
//! entries stay integral and are bounded by minors of the input matrix.

use crate::error::{Error, Result};

/// Fraction-free forward elimination of a row-major `rows x cols` matrix
/// over its first `pivot_cols` columns. Returns the sign of the row
/// permutation, or `None` when a pivot column is entirely zero.
fn bareiss(m: &mut [i128], rows: usize, cols: usize, pivot_cols: usize) -> Option<i128> {
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..pivot_cols.min(rows) {
        // prefer unit pivots; they keep the entries small
        let pivot_row = (k..rows)
            .filter(|&r| m[r * cols + k] != 0)
            .min_by_key(|&r| m[r * cols + k].abs())?;
        if pivot_row != k {
            for j in 0..cols {
                m.swap(pivot_row * cols + j, k * cols + j);
            }
            sign = -sign;
        }
        let pivot = m[k * cols + k];
        for i in k + 1..rows {
            let factor = m[i * cols + k];
            if factor == 0 && prev == pivot {
                continue;
            }
            for j in k + 1..cols {
                let v = m[i * cols + j] * pivot - factor * m[k * cols + j];
                m[i * cols + j] = match prev {
                    1 => v,
                    -1 => -v,
                    _ => v / prev,
                };
            }
            m[i * cols + k] = 0;
        }
        prev = pivot;
    }
    Some(sign)
}

/// Determinant of a square integer matrix given by rows.
pub fn determinant(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    let mut m: Vec<i128> = rows.iter().flat_map(|r| r.iter().map(|&x| x as i128)).collect();
    match bareiss(&mut m, n, n, n) {
        None => 0,
        Some(sign) => (sign * m[n * n - 1]) as i64,
    }
}

/// Solves `sum_k x_k * columns[k] = rhs` over the integers.
///
/// The matrix with the given columns must be square and nonsingular, and the
/// solution must be integral (always the case for a unimodular matrix);
/// otherwise an error is returned.
pub fn solve_integer(columns: &[Vec<i64>], rhs: &[i64]) -> Result<Vec<i64>> {
    let n = columns.len();
    if rhs.len() != n || columns.iter().any(|c| c.len() != n) {
        return Err(Error::Contract(format!(
            "solve_integer needs {n} columns of length {n} and a right-hand side of length {n}"
        )));
    }
    let mut m = vec![0i128; n * (n + 1)];
    for i in 0..n {
        for (k, c) in columns.iter().enumerate() {
            m[i * (n + 1) + k] = c[i] as i128;
        }
        m[i * (n + 1) + n] = rhs[i] as i128;
    }
    solve_augmented(&mut m, n)
}

/// Solves the system held in the row-major augmented matrix `[A | b]`
/// (`n` rows, `n + 1` columns), overwriting it.
pub fn solve_augmented(m: &mut [i128], n: usize) -> Result<Vec<i64>> {
    let cols = n + 1;
    assert_eq!(m.len(), n * cols, "augmented matrix has the wrong shape");
    if bareiss(m, n, cols, n).is_none() {
        return Err(Error::FanIntegrity("singular system in integer solve".into()));
    }
    let mut x = vec![0i128; n];
    for i in (0..n).rev() {
        let acc = m[i * cols + n] - (i + 1..n).map(|j| m[i * cols + j] * x[j]).sum::<i128>();
        let d = m[i * cols + i];
        if acc % d != 0 {
            return Err(Error::FanIntegrity(
                "integer system has no integral solution (basis is not unimodular)".into(),
            ));
        }
        x[i] = acc / d;
    }
    Ok(x.into_iter().map(|v| v as i64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_det(m: &[Vec<i64>]) -> i64 {
        // Laplace expansion along the first row
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * brute_det(&minor)
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&[]), 1);
        assert_eq!(determinant(&[vec![1, 0], vec![1, 1]]), 1);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]]), 0);
        assert_eq!(determinant(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, -1]]), -6);
    }

    #[test]
    fn solves_unimodular_system() {
        // e1+e2 = 1*(e1+e2) in basis {e1+e2, e1}
        let cols = vec![vec![1, 1], vec![1, 0]];
        assert_eq!(solve_integer(&cols, &[0, 1]).unwrap(), vec![1, -1]);
        assert!(solve_integer(&[vec![2, 0], vec![0, 1]], &[1, 0]).is_err());
        assert!(solve_integer(&[vec![1, 1], vec![1, 1]], &[1, 0]).is_err());
    }

    proptest! {
        #[test]
        fn determinant_matches_laplace(entries in proptest::collection::vec(-1i64..=1, 25)) {
            let m: Vec<Vec<i64>> = entries.chunks(5).map(|c| c.to_vec()).collect();
            prop_assert_eq!(determinant(&m), brute_det(&m));
        }

        #[test]
        fn solve_recovers_integer_solution(
            entries in proptest::collection::vec(-1i64..=1, 16),
            x in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let cols: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let rows: Vec<Vec<i64>> = (0..4).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
            prop_assume!(determinant(&rows).abs() == 1);
            let rhs: Vec<i64> = (0..4).map(|i| (0..4).map(|k| x[k] * cols[k][i]).sum()).collect();
            prop_assert_eq!(solve_integer(&cols, &rhs).unwrap(), x);
        }
    }
}
