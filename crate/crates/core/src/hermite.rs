//! Hermite bases and canonical representatives of right cosets `gH`, where
//! `H` is the group of integer upper unitriangular matrices.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::arith::{floor_div, Int};
use crate::matrix::UniMatrix;

/// Row-style Hermite normal form of the lattice spanned by `vectors`.
///
/// Rows are in echelon form with positive pivots; entries above each pivot
/// lie in `[0, pivot)`. Zero rows are dropped.
pub fn hermite_basis(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let Some(width) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<Int>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<(usize, Vec<Int>)> = Vec::new();
    for c in 0..width {
        loop {
            // smallest nonzero |entry| in column c
            let mut best: Option<usize> = None;
            for (i, r) in rows.iter().enumerate() {
                if r[c].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| r[c].abs() < rows[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            let pivot_row = rows.swap_remove(b);
            let mut done = true;
            for r in rows.iter_mut() {
                if r[c].is_zero() {
                    continue;
                }
                let q = floor_div(&r[c], &pivot_row[c]);
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !r[c].is_zero() {
                    done = false;
                }
            }
            if done {
                let mut p = pivot_row;
                if p[c].is_negative() {
                    for x in p.iter_mut() {
                        *x = -&*x;
                    }
                }
                rows.retain(|r| r.iter().any(|x| !x.is_zero()));
                out.push((c, p));
                break;
            }
            rows.push(pivot_row);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let (c, piv) = (out[k].0, out[k].1.clone());
        for row in out.iter_mut().take(k) {
            let q = floor_div(&row.1[c], &piv[c]);
            if !q.is_zero() {
                for (x, y) in row.1.iter_mut().zip(&piv) {
                    *x -= &q * y;
                }
            }
        }
    }
    out.into_iter().map(|(_, r)| r).collect()
}

/// Canonical residue of `v` modulo the lattice with Hermite basis `basis`.
pub fn hermite_residue(basis: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    let mut v = v.to_vec();
    for row in basis {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else { continue };
        let q = floor_div(&v[p], &row[p]);
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
    }
    v
}

/// Canonical representative of the coset `gH`.
///
/// Right multiplication by `H` adds integer combinations of earlier columns
/// to each column, so column `j` is reduced modulo the span of columns
/// `1..j-1` of `g`. The result is idempotent and constant on `gH`.
pub fn coset_reduce(g: &UniMatrix) -> UniMatrix {
    let n = g.dim();
    let mut out = g.clone();
    let mut span: Vec<Vec<Int>> = Vec::new();
    for j in 0..n {
        let col = g.column(j);
        if j > 0 {
            let basis = hermite_basis(&span);
            let r = hermite_residue(&basis, &col);
            for (i, v) in r.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        span.push(col);
    }
    debug_assert!(g.inv().mul(&out).is_upper_unitriangular());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> UniMatrix {
        UniMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn unitriangular_reduces_to_identity() {
        let h = m(&[&[1, 5, -2], &[0, 1, 7], &[0, 0, 1]]);
        assert!(coset_reduce(&h).is_identity());
    }

    #[test]
    fn same_coset_same_output() {
        let g = m(&[&[0, 1], &[1, 0]]);
        let h = m(&[&[1, 5], &[0, 1]]);
        assert_eq!(coset_reduce(&g), coset_reduce(&g.mul(&h)));
        let r = coset_reduce(&g);
        assert_eq!(coset_reduce(&r), r);
    }

    #[test]
    fn hermite_basis_shape() {
        let b = hermite_basis(&[vec![Int::from(4), Int::from(2)], vec![Int::from(6), Int::from(1)]]);
        // lattice with determinant 8
        assert_eq!(b.len(), 2);
        assert_eq!(&b[0][0] * &b[1][1], Int::from(8));
        assert!(b[1][0].is_zero());
    }
}
