//! The lattice of cosets `G/H`, `G = GL(n, Z)`, `H` the upper unitriangular
//! integer matrices, ordered by `aH <= bH` iff `a` precedes `b`.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::arith::{Int, Rat};
use crate::cone::{flip_set, minkowski_sum, positivity_set, rat_to_int_factor, recover_lex_matrix, vrep_to_hrep, Covector, PLSet};
use crate::error::{Error, Result};
use crate::hermite::coset_reduce;
use crate::engine::Germ;
use crate::lex::{is_in_h, precedes};
use crate::matrix::{dot, nullspace, rank, to_rat_vec, RatMatrix, UniMatrix};

/// A coset `aH`, stored by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coset {
    rep: UniMatrix,
}

impl Coset {
    pub fn new(g: &UniMatrix) -> Self {
        Coset { rep: coset_reduce(g) }
    }

    /// `H`.
    pub fn bottom(n: usize) -> Self {
        Coset { rep: UniMatrix::identity(n) }
    }

    /// `w0 H` with `w0 = -I`.
    pub fn top(n: usize) -> Self {
        Coset::new(&UniMatrix::neg_identity(n))
    }

    pub fn rep(&self) -> &UniMatrix {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn is_bottom(&self) -> bool {
        self.rep.is_identity()
    }

    /// The coset of `-rep`.
    pub fn reversed(&self) -> Self {
        Coset::new(&self.rep.neg())
    }
}

fn same_dim(a: &Coset, b: &Coset) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(())
}

pub fn leq(a: &Coset, b: &Coset) -> Result<bool> {
    same_dim(a, b)?;
    Ok(precedes(&a.rep, &b.rep))
}

fn checked(a: &Coset, b: &Coset, out: Coset) -> Result<Coset> {
    if !precedes(&a.rep, &out.rep) || !precedes(&b.rep, &out.rep) {
        return Err(Error::LatticeBreach);
    }
    Ok(out)
}

/// Least upper bound.
///
/// The flip sets `M(s) = {x >lex 0, x s <lex 0}` are convex and
/// `M(a v b) = M(a) + M(b)` (origin included). The columns of the join are
/// read off one level at a time: on the current subspace `V` the closure of
/// `M(a v b)` is either lower dimensional, the half-space `{p >= 0}`, or the
/// wedge `{p >= 0, f <= 0}`, where `p` is the first coordinate not vanishing
/// on `V`. The next column is `p`, `-p` or `f` accordingly.
pub fn join(a: &Coset, b: &Coset) -> Result<Coset> {
    same_dim(a, b)?;
    if precedes(&a.rep, &b.rep) {
        return Ok(b.clone());
    }
    if precedes(&b.rep, &a.rep) {
        return Ok(a.clone());
    }
    let n = a.dim();
    let ma = flip_set(&a.rep);
    let mb = flip_set(&b.rep);
    let mut subspace: Vec<Covector> = Vec::new();
    let mut functionals: Vec<Vec<Rat>> = Vec::new();
    for level in 0..n {
        let dim_v = n - level;
        let basis_v = nullspace(&subspace.iter().map(|r| to_rat_vec(r)).collect::<Vec<_>>(), n);
        let p = (0..n)
            .find(|&i| basis_v.iter().any(|v| !v[i].is_zero()))
            .ok_or(Error::JoinRecoveryFailed("subspace collapsed"))?;
        let mut gens: Vec<Vec<Int>> = Vec::new();
        let mut lin: Vec<Vec<Int>> = Vec::new();
        for c in ma.cells.iter().chain(&mb.cells) {
            let r = c.with_equalities(&subspace);
            if r.is_empty() {
                continue;
            }
            let v = r.closure();
            gens.extend(v.generators);
            lin.extend(v.lineality);
        }
        let unit = {
            let mut e = alloc::vec![Int::zero(); n];
            e[p] = Int::from(1);
            e
        };
        let dim_u = {
            let rows: Vec<Vec<Rat>> = gens.iter().chain(&lin).map(|g| to_rat_vec(g)).collect();
            rank(&rows, n)
        };
        let f: Vec<Int> = if dim_u < dim_v {
            unit
        } else {
            let (_, facets) = vrep_to_hrep(n, &gens, &lin);
            // values on a basis of V identify functionals restricted to V
            let on_v = |g: &[Int]| -> Vec<Rat> { basis_v.iter().map(|v| dot(&to_rat_vec(g), v)).collect() };
            let pv = on_v(&unit);
            let is_p = |g: &[Int]| {
                let gv = on_v(g);
                let k = pv.iter().zip(&gv).find(|(a, _)| !a.is_zero()).map(|(a, b)| b / a);
                match k {
                    Some(k) if k.is_positive() => pv.iter().zip(&gv).all(|(a, b)| a * &k == *b),
                    _ => false,
                }
            };
            let others: Vec<&Covector> = facets.iter().filter(|g| !is_p(g)).collect();
            match (facets.len(), others.len()) {
                (1, 0) => unit.iter().map(|x| -x).collect(),
                (2, 1) => others[0].iter().map(|x| -x).collect(),
                _ => return Err(Error::JoinRecoveryFailed("unexpected facet structure")),
            }
        };
        functionals.push(to_rat_vec(&f));
        subspace.push(f);
    }
    let g = RatMatrix::from_columns(&functionals);
    let (x, _) = rat_to_int_factor(&g).map_err(|_| Error::JoinRecoveryFailed("singular functionals"))?;
    checked(a, b, Coset::new(&x))
}

/// Reference join through positivity sets:
/// `K(s) = (K(1) \ M) u -M` with `M = M(a) + M(b)`.
pub fn join_via_positivity(a: &Coset, b: &Coset) -> Result<Coset> {
    same_dim(a, b)?;
    let n = a.dim();
    let mut ua = flip_set(&a.rep);
    ua.include_origin = true;
    let mut ub = flip_set(&b.rep);
    ub.include_origin = true;
    let mut m: PLSet = minkowski_sum(&ua, &ub)?;
    m.include_origin = false;
    let k = positivity_set(&UniMatrix::identity(n)).minus(&m)?.union(&m.negate())?;
    let g = recover_lex_matrix(&k).map_err(|_| Error::JoinRecoveryFailed("positivity set not lexicographic"))?;
    let (x, _) = rat_to_int_factor(&g).map_err(|_| Error::JoinRecoveryFailed("singular functionals"))?;
    checked(a, b, Coset::new(&x))
}

/// Greatest lower bound, by reversing orderings: `a ^ b = -((-a) v (-b))`.
pub fn meet(a: &Coset, b: &Coset) -> Result<Coset> {
    same_dim(a, b)?;
    Ok(join(&a.reversed(), &b.reversed())?.reversed())
}

/// The germ on `GL(n, Z)` given by the lexicographic orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZnGerm {
    pub n: usize,
}

impl ZnGerm {
    pub fn new(n: usize) -> Self {
        ZnGerm { n }
    }
}

impl Germ for ZnGerm {
    type Elem = UniMatrix;

    fn identity(&self) -> UniMatrix {
        UniMatrix::identity(self.n)
    }
    fn w0(&self) -> UniMatrix {
        UniMatrix::neg_identity(self.n)
    }
    fn mul(&self, a: &UniMatrix, b: &UniMatrix) -> UniMatrix {
        a.mul(b)
    }
    fn inv(&self, a: &UniMatrix) -> UniMatrix {
        a.inv()
    }
    fn is_unit(&self, a: &UniMatrix) -> bool {
        is_in_h(a)
    }
    fn coset_key(&self, a: &UniMatrix) -> UniMatrix {
        coset_reduce(a)
    }
    fn precedes(&self, a: &UniMatrix, b: &UniMatrix) -> bool {
        precedes(a, b)
    }
    fn meet_coset(&self, a: &UniMatrix, b: &UniMatrix) -> Result<UniMatrix> {
        Ok(meet(&Coset::new(a), &Coset::new(b))?.rep)
    }
    fn join_coset(&self, a: &UniMatrix, b: &UniMatrix) -> Result<UniMatrix> {
        Ok(join(&Coset::new(a), &Coset::new(b))?.rep)
    }
    // -I is central
    fn tau(&self, a: &UniMatrix) -> UniMatrix {
        a.clone()
    }
    fn tau_inv(&self, a: &UniMatrix) -> UniMatrix {
        a.clone()
    }
    fn tau_pow(&self, a: &UniMatrix, _m: i64) -> UniMatrix {
        a.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(rows: &[&[i64]]) -> Coset {
        Coset::new(&UniMatrix::from_i64(rows).unwrap())
    }

    fn diag(signs: &[i64]) -> Coset {
        Coset::new(&UniMatrix::diag_signs(signs))
    }

    #[test]
    fn order_examples() {
        let a = diag(&[-1, 1]);
        let b = diag(&[1, -1]);
        assert!(!leq(&a, &b).unwrap());
        assert!(leq(&Coset::bottom(2), &a).unwrap());
        assert!(leq(&a, &Coset::top(2)).unwrap());
        assert!(leq(&a, &Coset::top(3)).is_err());
    }

    #[test]
    fn join_meet_examples() {
        let a = diag(&[-1, 1]);
        let b = diag(&[1, -1]);
        assert_eq!(join(&a, &b).unwrap(), Coset::top(2));
        assert_eq!(meet(&a, &b).unwrap(), Coset::bottom(2));
        assert_eq!(join(&a, &a).unwrap(), a);
        assert_eq!(meet(&Coset::top(2), &a).unwrap(), a);
        assert_eq!(join_via_positivity(&a, &b).unwrap(), Coset::top(2));
    }

    #[test]
    fn diagonal_joins_are_unions() {
        for n in 2..=3usize {
            let all: Vec<Vec<i64>> = (0..1u32 << n).map(|m| (0..n).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect()).collect();
            for x in &all {
                for y in &all {
                    let u: Vec<i64> = x.iter().zip(y).map(|(a, b)| if *a < 0 || *b < 0 { -1 } else { 1 }).collect();
                    let i: Vec<i64> = x.iter().zip(y).map(|(a, b)| if *a < 0 && *b < 0 { -1 } else { 1 }).collect();
                    assert_eq!(join(&diag(x), &diag(y)).unwrap(), diag(&u));
                    assert_eq!(meet(&diag(x), &diag(y)).unwrap(), diag(&i));
                }
            }
        }
    }

    #[test]
    fn two_routes_agree_in_dimension_two() {
        let samples = [
            c(&[&[1, 1], &[0, 1]]),
            c(&[&[2, 1], &[1, 1]]),
            c(&[&[0, 1], &[1, 0]]),
            c(&[&[1, 0], &[3, 1]]),
            c(&[&[1, 2], &[1, 3]]),
            c(&[&[-1, 2], &[1, -3]]),
            c(&[&[3, -1], &[-2, 1]]),
        ];
        for a in &samples {
            for b in &samples {
                let j = join(a, b).unwrap();
                assert_eq!(j, join_via_positivity(a, b).unwrap(), "{} {}", a.rep(), b.rep());
            }
        }
    }

    #[test]
    fn two_routes_agree_on_a_few_in_dimension_three() {
        let a = c(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let b = c(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let d = c(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 0]]);
        for (x, y) in [(&a, &b), (&a, &d)] {
            assert_eq!(join(x, y).unwrap(), join_via_positivity(x, y).unwrap());
        }
    }
}
