//! Shapes, the subgroups `G_i`, `H_i`, the factorization step and the
//! decomposition of a matrix into a minimal word of block generators.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd_bezout, Int};
use crate::error::{Error, Result};
use crate::lex::{is_in_h, precedes};
use crate::matrix::UniMatrix;

use super::sword::{SLetter, SWord};

/// A set of positions `(i, j)` (1-based) containing the diagonal and closed
/// under moving up a row or right a column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    n: usize,
    cells: Vec<bool>,
}

impl Shape {
    /// `A0 = {(i, j) : i <= j}`.
    pub fn minimal(n: usize) -> Self {
        let mut s = Shape { n, cells: alloc::vec![false; n * n] };
        for i in 1..=n {
            for j in i..=n {
                s.set(i, j, true);
            }
        }
        s
    }

    /// Smallest shape containing the given positions.
    pub fn closure(n: usize, points: &[(usize, usize)]) -> Self {
        let mut s = Shape::minimal(n);
        for &(p, q) in points {
            for i in 1..=p {
                for j in q..=n {
                    s.set(i, j, true);
                }
            }
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        (1..=self.n).contains(&i) && (1..=self.n).contains(&j) && self.cells[(i - 1) * self.n + j - 1]
    }

    fn set(&mut self, i: usize, j: usize, v: bool) {
        self.cells[(i - 1) * self.n + j - 1] = v;
    }

    pub fn with(&self, i: usize, j: usize) -> Self {
        let mut s = self.clone();
        s.set(i, j, true);
        s
    }

    pub fn without(&self, i: usize, j: usize) -> Self {
        let mut s = self.clone();
        s.set(i, j, false);
        s
    }

    pub fn len(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Shape) -> bool {
        self.n == other.n && self.cells.iter().zip(&other.cells).all(|(a, b)| !a || *b)
    }

    /// The defining closure conditions hold.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| self.contains(i, i))
            && (1..=n).all(|i| {
                (1..=n).all(|j| self.contains(i, j) || (!self.contains(i + 1, j) && !self.contains(i, j.wrapping_sub(1))))
            })
    }

    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.contains(i, j) {
                    v.push((i, j));
                }
            }
        }
        v
    }
}

pub fn shape_of(g: &UniMatrix) -> Shape {
    let n = g.dim();
    let mut pts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !g.get(i, j).is_zero() {
                pts.push((i + 1, j + 1));
            }
        }
    }
    Shape::closure(n, &pts)
}

pub fn in_ga(g: &UniMatrix, a: &Shape) -> bool {
    shape_of(g).is_subset(a)
}

/// Embed a 2x2 block at rows and columns `i, i + 1` (1-based).
pub fn embed_block(n: usize, i: usize, block: [[Int; 2]; 2]) -> Result<UniMatrix> {
    if i == 0 || i >= n {
        return Err(Error::Precondition(format!("block index {i} out of range for n = {n}")));
    }
    let mut rows: Vec<Vec<Int>> = UniMatrix::identity(n).rows();
    for (a, row) in block.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            rows[i - 1 + a][i - 1 + b] = v.clone();
        }
    }
    UniMatrix::from_rows(rows)
}

pub fn block_of(g: &UniMatrix, i: usize) -> [[Int; 2]; 2] {
    let e = |a: usize, b: usize| g.get(i - 1 + a, i - 1 + b).clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `g` fixes every `e_k`, `k` outside `{i, i + 1}`, and preserves their span.
pub fn in_g_i(g: &UniMatrix, i: usize) -> bool {
    let n = g.dim();
    if i == 0 || i >= n {
        return false;
    }
    (0..n).all(|r| {
        (0..n).all(|c| {
            let inside = (r + 1 == i || r == i) && (c + 1 == i || c == i);
            inside || *g.get(r, c) == if r == c { Int::one() } else { Int::zero() }
        })
    })
}

/// `g` lies in the group generated by `G_i` and `H`.
pub fn in_h_i(g: &UniMatrix, i: usize) -> bool {
    let n = g.dim();
    if i == 0 || i >= n {
        return false;
    }
    (0..n).all(|r| {
        (0..=r).all(|c| {
            if r == c {
                r + 1 == i || r == i || g.get(r, c).is_one()
            } else {
                (r == i && c + 1 == i) || g.get(r, c).is_zero()
            }
        })
    })
}

/// For `g` in `H_i`: `g = a h` with `a` in `G_i` and `h` in `H`.
pub fn split_g_h(g: &UniMatrix, i: usize) -> Result<(UniMatrix, UniMatrix)> {
    if !in_h_i(g, i) {
        return Err(Error::Precondition(format!("letter not in H_{i}")));
    }
    let a = embed_block(g.dim(), i, block_of(g, i))?;
    let h = a.inv().mul(g);
    debug_assert!(is_in_h(&h));
    Ok((a, h))
}

/// For `g` in `H_i`: `g = h a` with `h` in `H` and `a` in `G_i`.
pub fn split_h_g(g: &UniMatrix, i: usize) -> Result<(UniMatrix, UniMatrix)> {
    let (a, _) = split_g_h(g, i)?;
    let h = g.mul(&a.inv());
    debug_assert!(is_in_h(&h));
    Ok((h, a))
}

/// The sign flip `s_i`: `e_i -> -e_i`.
pub fn sign_flip(n: usize, i: usize) -> UniMatrix {
    UniMatrix::sign_flip(n, i)
}

/// Factor `x = y * z` with `y` in `G_i` and `z` in `G(A)`, where `(i + 1, j)`
/// is the one position of `C = A + {(i + 1, j)}` outside `A`.
pub fn factor_step(x: &UniMatrix, i: usize, j: usize, a: &Shape) -> Result<(UniMatrix, UniMatrix)> {
    let n = x.dim();
    if a.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.dim() });
    }
    if i == 0 || i >= n || j == 0 || j > n {
        return Err(Error::Precondition(format!("indices ({i}, {j}) out of range")));
    }
    if !a.is_valid() {
        return Err(Error::Precondition("A is not a shape".into()));
    }
    if a.contains(i + 1, j) {
        return Err(Error::Precondition(format!("({}, {j}) already in A", i + 1)));
    }
    let c = a.with(i + 1, j);
    if !c.is_valid() {
        return Err(Error::Precondition(format!("A + ({}, {j}) is not a shape", i + 1)));
    }
    if a.contains(i, j.wrapping_sub(1)) {
        return Err(Error::Precondition(format!("({i}, {}) in A", j - 1)));
    }
    if a.contains(i + 2, j) {
        return Err(Error::Precondition(format!("({}, {j}) in A", i + 2)));
    }
    if !in_ga(x, &c) {
        return Err(Error::Precondition("shape of x not contained in C".into()));
    }
    let lower = x.get(i, j - 1);
    if lower.is_zero() {
        return Ok((UniMatrix::identity(n), x.clone()));
    }
    let upper = x.get(i - 1, j - 1);
    let u = upper.gcd(lower);
    let (av, bv) = (upper / &u, lower / &u);
    let (_, cv, dv) = ext_gcd_bezout(&av, &bv)?;
    let w = if bv.is_negative() { Int::one() } else { -Int::one() };
    let y = embed_block(n, i, [[av, &cv * &w], [bv, &dv * &w]])?;
    let z = y.inv().mul(x);
    if !in_ga(&z, a) || !precedes(&y, x) {
        return Err(Error::GermBreach("factorization postcondition"));
    }
    Ok((y, z))
}

/// A minimal word of `G_i` and `H` letters with product `x`.
pub fn decompose(x: &UniMatrix) -> Result<SWord> {
    let n = x.dim();
    if n < 2 {
        return Err(Error::Precondition("decomposition needs n >= 2".into()));
    }
    let mut letters = Vec::new();
    let mut cur = x.clone();
    loop {
        let c = shape_of(&cur);
        let a0 = Shape::minimal(n);
        let col = (1..=n).find(|&j| (1..=n).any(|i| c.contains(i, j) != a0.contains(i, j)));
        let Some(j) = col else { break };
        let i = (1..=n).rev().find(|&i| c.contains(i, j)).expect("diagonal");
        let (y, z) = factor_step(&cur, i - 1, j, &c.without(i, j))?;
        letters.push(SLetter::new(y, i - 1)?);
        cur = z;
    }
    // upper triangular: sign flips in increasing order, then the H part
    let mut d = UniMatrix::identity(n);
    for k in 1..=n {
        if cur.get(k - 1, k - 1).is_negative() {
            let s = sign_flip(n, k);
            d = d.mul(&s);
            letters.push(SLetter::new(s, k.min(n - 1))?);
        }
    }
    let h = d.mul(&cur);
    if !h.is_identity() {
        letters.push(SLetter::new(h, 1)?);
    }
    let w = SWord::new(n, letters)?;
    debug_assert!(w.is_minimal());
    Ok(w)
}
