//! Explicit (S0)-(S3) derivations between minimal words with equal product.
//!
//! Both words are normalized to a canonical word of their product and the
//! second derivation is reversed. Normalization follows the recursion on the
//! lowest nonzero row of the first column, after rewriting to standard type.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lex::precedes;
use crate::matrix::UniMatrix;

use super::shape::{factor_step, shape_of, split_g_h};
use super::smove::{SDeriv, SStep};
use super::sword::{SLetter, SWord};
use super::transport::transport_along;
use super::tword::{t_rewrite_to_d1, TStep};

/// Largest row `r >= lo` (1-based) with a nonzero entry in column `lo`.
fn lowest_row(x: &UniMatrix, lo: usize) -> usize {
    (lo..=x.dim()).rev().find(|&r| !x.get(r - 1, lo - 1).is_zero()).unwrap_or(lo)
}

/// The canonical letter killing `(j, lo)`: the smaller of `y` and `y s_j`.
fn leading_letter(x: &UniMatrix, j: usize, lo: usize) -> Result<UniMatrix> {
    let (y0, _) = factor_step(x, j - 1, lo, &shape_of(x).without(j, lo))?;
    let y1 = y0.mul(&UniMatrix::sign_flip(x.dim(), j));
    if precedes(&y1, &y0) {
        Ok(y1)
    } else if precedes(&y0, &y1) {
        Ok(y0)
    } else {
        Err(Error::GermBreach("y and y s_j are not comparable"))
    }
}

fn canon(x: &UniMatrix, lo: usize, out: &mut Vec<SLetter>) -> Result<()> {
    let n = x.dim();
    if lo + 1 >= n {
        if !x.is_identity() {
            out.push(SLetter::new(x.clone(), n - 1)?);
        }
        return Ok(());
    }
    let j = lowest_row(x, lo);
    if j == lo {
        if x.get(lo - 1, lo - 1).is_negative() {
            let s = UniMatrix::sign_flip(n, lo);
            out.push(SLetter::new(s.clone(), lo)?);
            return canon(&s.mul(x), lo + 1, out);
        }
        return canon(x, lo + 1, out);
    }
    let y = leading_letter(x, j, lo)?;
    let rest = y.inv().mul(x);
    out.push(SLetter::new(y, j - 1)?);
    canon(&rest, lo, out)
}

/// The canonical minimal word of `x` that `normalize` reaches.
pub fn canonical_word(x: &UniMatrix) -> Result<SWord> {
    let mut out = Vec::new();
    if x.dim() >= 2 {
        canon(x, 1, &mut out)?;
    }
    SWord::new(x.dim(), out)
}

struct Norm {
    d: SDeriv,
    depth: usize,
}

impl Norm {
    fn ty(&self, p: usize) -> usize {
        self.d.word.letters[p].ty
    }

    fn elem(&self, p: usize) -> &UniMatrix {
        &self.d.word.letters[p].elem
    }

    /// Make letters `from..to` lie in their `G_i`, collecting the `H` parts
    /// into the letter at `to`.
    fn push_h(&mut self, from: usize, to: usize) -> Result<()> {
        for p in from..to {
            let ty = self.ty(p);
            let (g, h) = split_g_h(self.elem(p), ty)?;
            if !h.is_identity() {
                self.d.split(p, g, (ty, ty))?;
                let next = self.ty(p + 2);
                self.d.merge(p + 1, next)?;
            }
        }
        Ok(())
    }

    /// The letter at `pos` is `s_m`, typed `m - 1` and followed by `count`
    /// letters of `G` with types below `m - 1`; move it past them.
    fn carry_sign_right(&mut self, pos: usize, m: usize, count: usize) -> Result<()> {
        let n = self.d.word.n;
        let mut first = 0;
        if m < n {
            self.d.insert_unit(pos + 1, m)?;
            self.d.merge(pos, m)?;
        } else if count > 0 {
            // s_n has no other type: braid it past y_(n-2) with a unit
            self.d.insert_unit(pos + 2, n - 1)?;
            let y = self.d.word.letters[pos + 1].clone();
            let after = alloc::vec![
                y,
                SLetter::new(UniMatrix::sign_flip(n, n), n - 1)?,
                SLetter::new(UniMatrix::identity(n), n - 2)?,
            ];
            self.d.braid(pos, after)?;
            self.d.remove_unit(pos + 2)?;
            first = 1;
        }
        for q in first..count {
            self.d.swap(pos + q)?;
        }
        Ok(())
    }

    /// Rewrite the subword `start..start + len` to standard type `D_lo`.
    fn to_standard(&mut self, start: usize, len: usize, lo: usize) -> Result<()> {
        let n = self.d.word.n;
        let sub = SWord { n, letters: self.d.word.letters[start..start + len].to_vec() };
        let t: Vec<usize> = sub.type_word().iter().map(|k| k + 1 - lo).collect();
        let steps: Vec<TStep> = t_rewrite_to_d1(n + 1 - lo, &t)?
            .into_iter()
            .map(|s| TStep { letter: s.letter + lo - 1, ..s })
            .collect();
        let moves = transport_along(&sub, &steps, self.depth)?.moves.ok_or(Error::DepthExceeded)?;
        let shifted: Vec<SStep> = moves.into_iter().map(|s| SStep { pos: s.pos + start, ..s }).collect();
        self.d.extend(&shifted)
    }

    /// Normalize the subword `start..start + len` (types `>= lo`) to its
    /// canonical word; returns the new length.
    fn run(&mut self, start: usize, len: usize, lo: usize) -> Result<usize> {
        let n = self.d.word.n;
        if len == 0 {
            return Ok(0);
        }
        let suffix = self.d.word.len() - start - len;
        let cur_len = |d: &SDeriv| d.word.len() - suffix - start;
        if lo + 1 >= n {
            for _ in 1..len {
                self.d.merge(start, n - 1)?;
            }
            if self.elem(start).is_identity() {
                self.d.remove_unit(start)?;
                return Ok(0);
            }
            return Ok(1);
        }
        self.to_standard(start, len, lo)?;
        let k = n - lo;
        self.push_h(start, start + k)?;
        let x = SWord { n, letters: self.d.word.letters[start..start + cur_len(&self.d)].to_vec() }.product();
        let j = lowest_row(&x, lo);
        if j == lo {
            // y_lo is diagonal up to H; braid its sign past y_(lo+1) to the front
            let p = start + k - 1;
            let a = self.elem(p).clone();
            let diag = a.diagonal_part().ok_or(Error::GermBreach("y_lo not triangular"))?;
            if diag != a {
                self.d.split(p, diag.clone(), (lo, lo))?;
                let next = self.ty(p + 2);
                self.d.merge(p + 1, next)?;
            }
            let sq = if diag.get(lo - 1, lo - 1).is_negative() { UniMatrix::sign_flip(n, lo) } else { UniMatrix::identity(n) };
            self.d.insert_unit(p + 1, lo + 1)?;
            let mid = sq.mul(self.elem(p - 1)).mul(&diag);
            let after = alloc::vec![
                SLetter::new(sq.clone(), lo)?,
                SLetter::new(mid, lo + 1)?,
                SLetter::new(UniMatrix::identity(n), lo)?,
            ];
            self.d.braid(p - 1, after)?;
            self.d.remove_unit(p + 1)?;
            for q in (start..p - 1).rev() {
                self.d.swap(q)?;
            }
            let mut rest = start;
            if sq.is_identity() {
                self.d.remove_unit(start)?;
            } else {
                rest += 1;
            }
            let tail = cur_len(&self.d) - (rest - start);
            let m = self.run(rest, tail, lo + 1)?;
            return Ok(rest - start + m);
        }
        let y_len = j - lo;
        let pk = n - j;
        if pk > 0 {
            // the letters of types >= j normalize to (s_j^q) R with R of types > j
            let mut newp = self.run(start, pk, j)?;
            if j + 1 == n && newp == 1 {
                // a single letter s_j^q s_n^p h: send h and s_n^p to the right
                let a = self.elem(start).clone();
                let diag = a.diagonal_part().ok_or(Error::GermBreach("y_j not triangular"))?;
                if diag != a {
                    self.d.split(start, diag.clone(), (j, j))?;
                    let next = self.ty(start + 2);
                    self.d.merge(start + 1, next)?;
                    self.push_h(start + 1, start + 1 + y_len)?;
                }
                let sn = UniMatrix::sign_flip(n, n);
                if diag.get(n - 1, n - 1).is_negative() {
                    self.d.split(start, diag.mul(&sn), (j, j))?;
                    self.carry_sign_right(start + 1, n, y_len)?;
                }
                if self.elem(start).is_identity() {
                    self.d.remove_unit(start)?;
                    newp = 0;
                }
            }
            let has_s = newp > 0 && self.ty(start) == j;
            let r_start = start + usize::from(has_s);
            let r_len = newp - usize::from(has_s);
            self.push_h(r_start, r_start + r_len + y_len)?;
            for a in (0..r_len).rev() {
                for s in 0..y_len {
                    self.d.swap(r_start + a + s)?;
                }
            }
            if has_s {
                self.d.merge(start, j - 1)?;
            }
        }
        let yc = leading_letter(&x, j, lo)?;
        let t = yc.inv().mul(self.elem(start));
        if !t.is_identity() {
            let s = UniMatrix::sign_flip(n, j);
            self.d.split(start, yc, (j - 1, j - 1))?;
            if t.is_upper_unitriangular() {
                let next = self.ty(start + 2);
                self.d.merge(start + 1, next)?;
            } else if s.mul(&t).is_upper_unitriangular() {
                self.d.split(start + 1, s.clone(), (j - 1, j - 1))?;
                let next = self.ty(start + 3);
                self.d.merge(start + 2, next)?;
                self.push_h(start + 2, start + y_len + 1)?;
                self.carry_sign_right(start + 1, j, y_len - 1)?;
            } else {
                return Err(Error::GermBreach("leading letter outside the expected coset"));
            }
        }
        let tail = cur_len(&self.d) - 1;
        let m = self.run(start + 1, tail, lo)?;
        Ok(1 + m)
    }
}

/// A derivation from the minimal word `w` to `canonical_word(w.product())`.
pub fn normalize(w: &SWord, depth: usize) -> Result<Vec<SStep>> {
    if !w.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let mut nm = Norm { d: SDeriv::new(w.clone()), depth };
    nm.run(0, w.len(), 1)?;
    Ok(nm.d.steps)
}

/// Largest dimension `connect` attempts; beyond it the result is
/// `DepthExceeded`.
pub const MAX_CONNECT_DIM: usize = 4;

/// A validated (S0)-(S3) derivation from `w1` to `w2`. `depth` bounds the
/// coefficients searched by the braid case of transport.
pub fn connect(w1: &SWord, w2: &SWord, depth: usize) -> Result<Vec<SStep>> {
    if w1.n != w2.n {
        return Err(Error::DimensionMismatch { expected: w1.n, found: w2.n });
    }
    if w1.product() != w2.product() {
        return Err(Error::ProductsDiffer);
    }
    if w1 == w2 {
        return Ok(Vec::new());
    }
    if w1.n > MAX_CONNECT_DIM {
        return Err(Error::DepthExceeded);
    }
    let mut steps = normalize(w1, depth)?;
    let back = normalize(w2, depth)?;
    steps.extend(back.iter().rev().map(SStep::reversed));
    let end = super::smove::replay_s(w1, &steps)?;
    if end.letters != w2.letters {
        return Err(Error::GermBreach("derivation does not end at the target word"));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::shape::{decompose, embed_block};
    use crate::Int;

    fn blk(n: usize, i: usize, m: [[i64; 2]; 2]) -> UniMatrix {
        embed_block(n, i, m.map(|r| r.map(Int::from))).unwrap()
    }

    #[test]
    fn identical_words_need_no_moves() {
        let x = blk(3, 1, [[2, 1], [1, 1]]).mul(&blk(3, 2, [[0, 1], [1, 0]]));
        let w = decompose(&x).unwrap();
        assert!(connect(&w, &w, 2).unwrap().is_empty());
    }

    #[test]
    fn canonical_word_is_minimal_with_product() {
        let x = blk(3, 2, [[1, 2], [1, 3]]).mul(&blk(3, 1, [[0, -1], [1, 3]])).mul(&blk(3, 2, [[-1, 0], [4, 1]]));
        let c = canonical_word(&x).unwrap();
        assert_eq!(c.product(), x);
        assert!(c.is_minimal());
        let steps = normalize(&c, 2).unwrap();
        assert_eq!(super::super::smove::replay_s(&c, &steps).unwrap(), c);
    }

    #[test]
    fn unequal_products_rejected() {
        let a = decompose(&blk(2, 1, [[1, 1], [0, 1]])).unwrap();
        let b = decompose(&blk(2, 1, [[0, 1], [1, 0]])).unwrap();
        assert_eq!(connect(&a, &b, 2), Err(Error::ProductsDiffer));
    }
}
