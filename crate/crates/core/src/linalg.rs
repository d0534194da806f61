//! Row reduction over `F_p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Coeff, PrimeField};

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(f: &PrimeField, rows: &mut Vec<Vec<Coeff>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right kernel `{v : M v = 0}` of an `m × ncols` matrix.
pub(crate) fn kernel(f: &PrimeField, m: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut rows = m.to_vec();
    let pivots = rref(f, &mut rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Incremental independence test. Feeds vectors one at a time; when a new
/// vector is a combination of the previous ones, returns the coefficients
/// `c_0..c_{k-1}` with `v_k = Σ c_i v_i`.
pub(crate) struct DependencyFinder {
    field: PrimeField,
    dim: usize,
    /// echelon rows, each paired with its expression in the input vectors
    rows: Vec<(usize, Vec<Coeff>, Vec<Coeff>)>,
    count: usize,
}

impl DependencyFinder {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        DependencyFinder { field, dim, rows: Vec::new(), count: 0 }
    }

    pub fn push(&mut self, v: Vec<Coeff>) -> Option<Vec<Coeff>> {
        let f = self.field;
        let k = self.count;
        self.count += 1;
        let mut v = v;
        // combo expresses the current v as Σ combo_i input_i
        let mut combo = vec![0; k + 1];
        combo[k] = 1;
        for (pc, row, rc) in &self.rows {
            let c = v[*pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (i, &y) in rc.iter().enumerate() {
                combo[i] = f.sub(combo[i], f.mul(c, y));
            }
        }
        match (0..self.dim).find(|&i| v[i] != 0) {
            Some(pc) => {
                let inv = f.inv(v[pc]);
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for x in combo.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for (_, row, rc) in self.rows.iter_mut() {
                    let c = row[pc];
                    if c == 0 {
                        continue;
                    }
                    for (x, &y) in row.iter_mut().zip(&v) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                    rc.resize(k + 1, 0);
                    for (x, &y) in rc.iter_mut().zip(&combo) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
                self.rows.push((pc, v, combo));
                None
            }
            None => {
                // 0 = combo·inputs, with combo[k] = 1
                Some(combo[..k].iter().map(|&c| f.neg(c)).collect())
            }
        }
    }
}
