//! Unimodular integer matrices, rational matrices and small exact linear algebra.
//!
//! Matrices act on row vectors from the right: row `i` of `g` is the image of
//! the basis vector `e_i`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{int, rat_of, Int, Rat};
use crate::error::{Error, Result};

/// An `n x n` integer matrix with determinant `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniMatrix {
    n: usize,
    data: Vec<Int>,
}

impl UniMatrix {
    /// Build from rows, rejecting non-square or non-unimodular input.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            data.extend(r);
        }
        let m = UniMatrix { n, data };
        let d = m.det();
        if d.abs() != Int::one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Int::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Int::one();
        }
        UniMatrix { n, data }
    }

    /// `-I`, the longest element of the lexicographic germ.
    pub fn neg_identity(n: usize) -> Self {
        let mut m = Self::identity(n);
        for v in m.data.iter_mut() {
            *v = -&*v;
        }
        m
    }

    /// Diagonal matrix with the given signs.
    pub fn diag_signs(signs: &[i64]) -> Self {
        let n = signs.len();
        let mut m = Self::identity(n);
        for (i, &s) in signs.iter().enumerate() {
            m.data[i * n + i] = int(s);
        }
        m
    }

    /// The sign flip `s_i` (1-based), `e_i -> -e_i`.
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut m = Self::identity(n);
        m.data[(i - 1) * n + (i - 1)] = int(-1);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Column `j` as a covector: `x -> (x g)_j`.
    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// The diagonal of an upper triangular matrix.
    pub fn diagonal_part(&self) -> Option<UniMatrix> {
        if !self.is_upper_triangular() {
            return None;
        }
        let mut m = Self::identity(self.n);
        for i in 0..self.n {
            m.data[i * self.n + i] = self.get(i, i).clone();
        }
        Some(m)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &UniMatrix) -> UniMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch in product");
        let n = self.n;
        let mut data = vec![Int::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        data[i * n + j] += a * b;
                    }
                }
            }
        }
        UniMatrix { n, data }
    }

    pub fn checked_mul(&self, other: &UniMatrix) -> Result<UniMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(self.mul(other))
    }

    /// Integral inverse (exists since the determinant is a unit).
    pub fn inv(&self) -> UniMatrix {
        let r = self.to_rat().inv().expect("unimodular matrices are invertible");
        let data = r
            .data
            .into_iter()
            .map(|v| {
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        UniMatrix { n: self.n, data }
    }

    pub fn neg(&self) -> UniMatrix {
        UniMatrix { n: self.n, data: self.data.iter().map(|v| -v).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        int_det(self.n, &self.data)
    }

    /// Row-vector action `x g`.
    pub fn act(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|j| {
                let mut s = Int::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        s += xi * self.get(i, j);
                    }
                }
                s
            })
            .collect()
    }

    pub fn act_rat(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|j| {
                let mut s = Rat::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        s += xi * rat_of(self.get(i, j));
                    }
                }
                s
            })
            .collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix { n: self.n, data: self.data.iter().map(rat_of).collect() }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i).is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

fn int_det(n: usize, data: &[Int]) -> Int {
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Int> = data.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return Int::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
        }
        prev = m[k * n + k].clone();
    }
    sign * &m[(n - 1) * n + (n - 1)]
}

impl fmt::Display for UniMatrix {
    /// Text format `a b; c d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// A square rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            data.extend(r);
        }
        Ok(RatMatrix { n, data })
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Rat>]) -> Self {
        let n = cols.len();
        let mut data = vec![Rat::zero(); n * n];
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                data[i * n + j] = v.clone();
            }
        }
        RatMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rat::one();
        }
        RatMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.n + j]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        RatMatrix { n, data }
    }

    pub fn act(&self, x: &[Rat]) -> Vec<Rat> {
        (0..self.n)
            .map(|j| {
                let mut s = Rat::zero();
                for (i, xi) in x.iter().enumerate() {
                    s += xi * self.get(i, j);
                }
                s
            })
            .collect()
    }

    pub fn det(&self) -> Rat {
        let (_, _, d) = gauss_jordan(self.n, self.data.clone(), false);
        d
    }

    pub fn inv(&self) -> Result<RatMatrix> {
        let (inv, ok, _) = gauss_jordan(self.n, self.data.clone(), true);
        if !ok {
            return Err(Error::Singular);
        }
        Ok(RatMatrix { n: self.n, data: inv })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    /// Membership in `H_Q`: upper triangular with positive diagonal.
    pub fn is_order_preserving(&self) -> bool {
        self.is_upper_triangular() && (0..self.n).all(|i| self.get(i, i).is_positive())
    }

    /// Integral unimodular view, if every entry is an integer and det is +-1.
    pub fn to_unimodular(&self) -> Result<UniMatrix> {
        if self.data.iter().any(|v| !v.is_integer()) {
            return Err(Error::NotUnimodular("non-integral".to_string()));
        }
        let data: Vec<Int> = self.data.iter().map(|v| v.to_integer()).collect();
        let m = UniMatrix { n: self.n, data };
        let d = m.det();
        if d.abs() != Int::one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(m)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Gauss-Jordan on an `n x n` matrix; returns (inverse or garbage, invertible, det).
fn gauss_jordan(n: usize, mut a: Vec<Rat>, want_inverse: bool) -> (Vec<Rat>, bool, Rat) {
    let mut inv = if want_inverse { RatMatrix::identity(n).data } else { Vec::new() };
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return (inv, false, Rat::zero());
        };
        if p != col {
            for j in 0..n {
                a.swap(col * n + j, p * n + j);
                if want_inverse {
                    inv.swap(col * n + j, p * n + j);
                }
            }
            det = -det;
        }
        let piv = a[col * n + col].clone();
        det *= &piv;
        let pinv = piv.recip();
        for j in 0..n {
            a[col * n + j] *= &pinv;
            if want_inverse {
                inv[col * n + j] *= &pinv;
            }
        }
        for r in 0..n {
            if r == col || a[r * n + col].is_zero() {
                continue;
            }
            let f = a[r * n + col].clone();
            for j in 0..n {
                let t = &f * &a[col * n + j];
                a[r * n + j] -= t;
                if want_inverse {
                    let t = &f * &inv[col * n + j];
                    inv[r * n + j] -= t;
                }
            }
        }
    }
    (inv, true, det)
}

/// Reduced row echelon form of a rectangular rational matrix; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : r . x = 0 for all rows r}` in `Q^ncols`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    let mut s = Int::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_of).collect()
}

pub fn format_vec<T: fmt::Display>(v: &[T]) -> String {
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&x.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> UniMatrix {
        UniMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn identity_laws() {
        let g = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(UniMatrix::identity(2).mul(&g), g);
        let d = UniMatrix::diag_signs(&[-1, 1]);
        assert!(d.mul(&d).is_identity());
    }

    #[test]
    fn known_inverse() {
        let g = m(&[&[1, 0], &[1, -1]]);
        assert_eq!(g.inv(), g);
        let h = m(&[&[2, 3, 1], &[1, 2, 0], &[0, 0, 1]]);
        assert!(h.mul(&h.inv()).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(UniMatrix::from_i64(&[&[2, 0], &[0, 1]]), Err(Error::NotUnimodular(_))));
        assert!(matches!(
            UniMatrix::from_i64(&[&[1, 0], &[0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        let s = RatMatrix::from_rows(vec![vec![rat_of(&int(1)), rat_of(&int(2))], vec![rat_of(&int(2)), rat_of(&int(4))]]).unwrap();
        assert_eq!(s.inv(), Err(Error::Singular));
    }

    #[test]
    fn row_action() {
        let g = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(g.act(&[int(-1), int(1)]), vec![int(1), int(-1)]);
    }

    #[test]
    fn nullspace_dimension() {
        let r = vec![vec![rat_of(&int(1)), rat_of(&int(1)), Rat::zero()]];
        let ns = nullspace(&r, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&r[0], v).is_zero());
        }
    }
}
