//! Small exact linear algebra over [`Scalar`]: Gauss-Jordan elimination
//! and kernel bases, used by the conjugator solver and reducibility
//! comparisons.

use crate::algebra::Scalar;

/// Reduce the matrix in place to reduced row echelon form and return the
/// pivot columns. Pivots are chosen by magnitude, which is exact-safe and
/// float-stable.
pub(crate) fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivot_cols = vec![];
    let mut r = 0;
    for col in 0..ncols {
        // best pivot at or below row r
        let mut best: Option<(usize, f64)> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            let v = &row[col];
            if !v.is_zero() {
                let m = v.magnitude();
                if best.map_or(true, |(_, bm)| m > bm) {
                    best = Some((i, m));
                }
            }
        }
        let Some((pr, _)) = best else { continue };
        rows.swap(r, pr);
        let pivot = rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v = v.try_div(&pivot).expect("pivot is nonzero");
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for c in 0..ncols {
                let delta = rows[r][c].mul(&factor);
                rows[i][c] = rows[i][c].sub(&delta);
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivot_cols
}

/// A basis of the kernel of the linear map given by the rows.
pub(crate) fn kernel_basis(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let pivot_cols = rref(&mut rows, ncols);
    let mut basis = vec![];
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row_idx, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = rows[row_idx][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Rank of the integer matrix over the rationals.
pub(crate) fn integer_rank(matrix: &[Vec<i64>], ncols: usize) -> usize {
    let mut rows: Vec<Vec<Scalar>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
        .collect();
    rref(&mut rows, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one_system() {
        // x + y = 0 in 2 unknowns
        let rows = vec![vec![Scalar::from_int(1), Scalar::from_int(1)]];
        let k = kernel_basis(rows, 2);
        assert_eq!(k.len(), 1);
        assert!(k[0][0].add(&k[0][1]).is_zero());
    }

    #[test]
    fn full_rank_kernel_is_trivial() {
        let rows = vec![
            vec![Scalar::from_int(1), Scalar::from_int(2)],
            vec![Scalar::from_int(3), Scalar::from_int(4)],
        ];
        assert!(kernel_basis(rows, 2).is_empty());
    }

    #[test]
    fn integer_rank_counts() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(integer_rank(&m, 3), 2);
    }
}
