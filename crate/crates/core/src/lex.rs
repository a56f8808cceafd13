//! Lexicographic signs on `Q^n` and the order-theoretic oracle on `GL(n, Z)`:
//! the preorder `a <~ c`, the partial product `a * b`, and the sign-flip sets
//! `M(g)` and `N(g)`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::arith::{int, rat_to_primitive, Int, Rat};
use crate::feasibility::find_point;
use crate::matrix::UniMatrix;

/// Sign of the first nonzero coordinate; 0 for the zero vector.
pub fn lex_sign(x: &[Int]) -> i8 {
    match x.iter().find(|v| !v.is_zero()) {
        None => 0,
        Some(v) if v.is_positive() => 1,
        Some(_) => -1,
    }
}

pub fn lex_sign_rat(x: &[Rat]) -> i8 {
    match x.iter().find(|v| !v.is_zero()) {
        None => 0,
        Some(v) if v.is_positive() => 1,
        Some(_) => -1,
    }
}

/// Membership in the order-preserving subgroup `H`.
pub fn is_in_h(g: &UniMatrix) -> bool {
    g.is_upper_unitriangular()
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = alloc::vec![Int::zero(); n];
    v[i] = int(1);
    v
}

fn neg(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

/// Decide `a <~ c`; on failure return an integer witness `x` with
/// `x > 0`, `x a < 0` and `x c > 0`.
pub fn precedes_witness(a: &UniMatrix, c: &UniMatrix) -> Option<Vec<Int>> {
    let n = a.dim();
    assert_eq!(n, c.dim(), "dimension mismatch");
    let acols: Vec<Vec<Int>> = (0..n).map(|j| a.column(j)).collect();
    let ccols: Vec<Vec<Int>> = (0..n).map(|j| c.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut eqs: Vec<Vec<Int>> = Vec::with_capacity(i + j + k);
                eqs.extend((0..i).map(|t| unit(n, t)));
                eqs.extend(acols[..j].iter().cloned());
                eqs.extend(ccols[..k].iter().cloned());
                let stricts = [unit(n, i), neg(&acols[j]), ccols[k].clone()];
                let p = find_point(n, &eqs, &stricts, &[]).expect("dimensions agree");
                if let Some(x) = p {
                    let w = rat_to_primitive(&x);
                    debug_assert!(lex_sign(&w) == 1 && lex_sign(&a.act(&w)) == -1 && lex_sign(&c.act(&w)) == 1);
                    return Some(w);
                }
            }
        }
    }
    None
}

/// `a <~ c`, i.e. `aH <= cH`: every `x > 0` with `x c < 0` also has `x a < 0`.
pub fn precedes(a: &UniMatrix, c: &UniMatrix) -> bool {
    precedes_witness(a, c).is_none()
}

/// The partial product: `a b` when `a <~ a b`.
pub fn star(a: &UniMatrix, b: &UniMatrix) -> Option<UniMatrix> {
    let ab = a.mul(b);
    precedes(a, &ab).then_some(ab)
}

/// `x > 0 > x g`.
pub fn in_m(g: &UniMatrix, x: &[Int]) -> bool {
    lex_sign(x) == 1 && lex_sign(&g.act(x)) == -1
}

/// `x != 0` and the signs of `x` and `x g` differ.
pub fn in_n(g: &UniMatrix, x: &[Int]) -> bool {
    let s = lex_sign(x);
    s != 0 && s != lex_sign(&g.act(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> UniMatrix {
        UniMatrix::from_i64(rows).unwrap()
    }
    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn lex_sign_examples() {
        assert_eq!(lex_sign(&v(&[0, 0, 0])), 0);
        assert_eq!(lex_sign(&v(&[0, 2, -5])), 1);
        assert_eq!(lex_sign(&v(&[-1, 100])), -1);
    }

    #[test]
    fn h_membership() {
        assert!(is_in_h(&UniMatrix::identity(3)));
        assert!(is_in_h(&m(&[&[1, 5], &[0, 1]])));
        assert!(!is_in_h(&UniMatrix::diag_signs(&[-1, 1])));
    }

    #[test]
    fn h_membership_agrees_with_sign_preservation() {
        // every vector in a box keeps its sign under h; diag(-1,1) flips e1
        let h = m(&[&[1, 5], &[0, 1]]);
        let d = UniMatrix::diag_signs(&[-1, 1]);
        let mut flipped = false;
        for a in -4..=4 {
            for b in -4..=4 {
                let x = v(&[a, b]);
                assert_eq!(lex_sign(&x), lex_sign(&h.act(&x)));
                flipped |= lex_sign(&x) != lex_sign(&d.act(&x));
            }
        }
        assert!(flipped);
    }

    #[test]
    fn precedes_examples() {
        let a = UniMatrix::diag_signs(&[-1, 1]);
        let b = UniMatrix::diag_signs(&[1, -1]);
        let w = precedes_witness(&a, &b).expect("not below");
        assert!(in_m(&a, &w) && !in_m(&b, &w));
        assert!(precedes(&UniMatrix::identity(2), &a));
        assert!(precedes(&a, &UniMatrix::neg_identity(2)));
        assert!(precedes(&a, &a));
    }

    #[test]
    fn star_of_sign_flips() {
        let a = UniMatrix::diag_signs(&[-1, 1]);
        let b = UniMatrix::diag_signs(&[1, -1]);
        assert_eq!(star(&a, &b), Some(UniMatrix::neg_identity(2)));
        assert_eq!(star(&b, &b), None);
    }

    #[test]
    fn m_and_n_sets() {
        let w0 = UniMatrix::neg_identity(2);
        assert!(in_m(&w0, &v(&[0, 3])));
        assert!(!in_m(&UniMatrix::identity(2), &v(&[0, 3])));
        assert!(in_n(&UniMatrix::diag_signs(&[-1, 1]), &v(&[1, 7])));
        assert!(!in_n(&w0, &v(&[0, 0])));
    }
}
