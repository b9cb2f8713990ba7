//! Exact Gaussian elimination over Q(parameters).

use crate::numeric::ParamFraction;

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<ParamFraction>>, ncols: usize) -> (Vec<Vec<ParamFraction>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|v| v * &inv).collect();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (dst, src) in rows[i].iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst = &*dst - &(&factor * src);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A basis of `{ v : M v = 0 }`, one vector per free column, each with a one
/// in its free column.
pub(crate) fn nullspace(rows: Vec<Vec<ParamFraction>>, ncols: usize, nparams: usize) -> Vec<Vec<ParamFraction>> {
    let (reduced, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ParamFraction::zero(nparams); ncols];
        v[free] = ParamFraction::one(nparams);
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    basis
}
