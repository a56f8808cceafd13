//! The symmetric group with the weak order: the germ `(S_m, {1})` whose
//! monoid is the positive braid monoid.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::engine::Germ;
use crate::error::{Error, Result};

/// A permutation acting on the right: `i . p = p(i)`. Stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

pub type InvSet = BTreeSet<(usize, usize)>;

impl Perm {
    /// From one-line notation on `1..=m`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = alloc::vec![false; m];
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[x - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|x| x - 1).collect() })
    }

    pub fn identity(m: usize) -> Self {
        Perm { images: (0..m).collect() }
    }

    /// The longest element `i -> m + 1 - i`.
    pub fn longest(m: usize) -> Self {
        Perm { images: (0..m).rev().collect() }
    }

    /// The transposition of `i` and `i + 1` (1-based).
    pub fn simple(m: usize, i: usize) -> Self {
        let mut p = Perm::identity(m);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `i . (self other) = (i . self) . other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All `m!` permutations in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        let mut used = alloc::vec![false; m];
        fn rec(m: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == m {
                out.push(Perm { images: cur.clone() });
                return;
            }
            for x in 0..m {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(m, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(m, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<alloc::string::String> = self.one_line().iter().map(|x| alloc::format!("{x}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Pairs `(i, j)`, `i < j`, 1-based, with `i . p > j . p`.
pub fn inversion_set(p: &Perm) -> InvSet {
    let m = p.degree();
    let mut s = InvSet::new();
    for i in 0..m {
        for j in i + 1..m {
            if p.images[i] > p.images[j] {
                s.insert((i + 1, j + 1));
            }
        }
    }
    s
}

pub fn weak_leq(p: &Perm, q: &Perm) -> bool {
    inversion_set(p).is_subset(&inversion_set(q))
}

fn check_degree(p: &Perm, q: &Perm) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DimensionMismatch { expected: p.degree(), found: q.degree() });
    }
    Ok(())
}

/// The permutation with the given inversion set, if there is one.
pub fn from_inversion_set(m: usize, inv: &InvSet) -> Result<Perm> {
    // position i lands at 1 + #{j < i not inverted with i} + #{j > i inverted with i}
    let mut images = alloc::vec![0; m];
    for i in 1..=m {
        let below = (1..i).filter(|&j| !inv.contains(&(j, i))).count() + (i + 1..=m).filter(|&j| inv.contains(&(i, j))).count();
        images[i - 1] = below;
    }
    let p = Perm { images };
    let valid = {
        let mut seen = alloc::vec![false; m];
        p.images.iter().all(|&x| x < m && !core::mem::replace(&mut seen[x], true))
    };
    if !valid || inversion_set(&p) != *inv {
        return Err(Error::LatticeBreach);
    }
    Ok(p)
}

/// Join: the transitive closure of the union of inversion sets.
pub fn bruhat_join(p: &Perm, q: &Perm) -> Result<Perm> {
    check_degree(p, q)?;
    let m = p.degree();
    let mut s: InvSet = inversion_set(p).union(&inversion_set(q)).cloned().collect();
    loop {
        let mut added = Vec::new();
        for &(i, j) in &s {
            for k in j + 1..=m {
                if s.contains(&(j, k)) && !s.contains(&(i, k)) {
                    added.push((i, k));
                }
            }
        }
        if added.is_empty() {
            break;
        }
        s.extend(added);
    }
    from_inversion_set(m, &s)
}

/// Meet, by reversing: `p ^ q = ((p w0) v (q w0)) w0`.
pub fn bruhat_meet(p: &Perm, q: &Perm) -> Result<Perm> {
    check_degree(p, q)?;
    let w0 = Perm::longest(p.degree());
    Ok(bruhat_join(&p.compose(&w0), &q.compose(&w0))?.compose(&w0))
}

/// The germ `(S_m, {1})` with the weak order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidGerm {
    pub m: usize,
}

impl BraidGerm {
    pub fn new(m: usize) -> Self {
        BraidGerm { m }
    }
}

impl Germ for BraidGerm {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.m)
    }
    fn w0(&self) -> Perm {
        Perm::longest(self.m)
    }
    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.compose(b)
    }
    fn inv(&self, a: &Perm) -> Perm {
        a.inverse()
    }
    fn is_unit(&self, a: &Perm) -> bool {
        a.is_identity()
    }
    fn coset_key(&self, a: &Perm) -> Perm {
        a.clone()
    }
    fn precedes(&self, a: &Perm, b: &Perm) -> bool {
        weak_leq(a, b)
    }
    fn meet_coset(&self, a: &Perm, b: &Perm) -> Result<Perm> {
        bruhat_meet(a, b)
    }
    fn join_coset(&self, a: &Perm, b: &Perm) -> Result<Perm> {
        bruhat_join(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::monoid_normal_form;
    use alloc::vec;

    fn p(xs: &[usize]) -> Perm {
        Perm::from_one_line(xs).unwrap()
    }

    #[test]
    fn inversion_examples() {
        assert!(inversion_set(&Perm::identity(3)).is_empty());
        assert_eq!(inversion_set(&Perm::longest(3)).len(), 3);
        assert_eq!(inversion_set(&p(&[2, 1, 3])), [(1, 2)].into_iter().collect());
        assert!(Perm::from_one_line(&[1, 1, 2]).is_err());
    }

    #[test]
    fn order_and_lattice_examples() {
        let a = p(&[2, 1, 3]);
        let b = p(&[1, 3, 2]);
        assert!(weak_leq(&Perm::identity(3), &a));
        assert!(weak_leq(&a, &p(&[3, 2, 1])));
        assert!(!weak_leq(&a, &b));
        assert_eq!(bruhat_join(&a, &b).unwrap(), p(&[3, 2, 1]));
        assert_eq!(bruhat_join(&a, &Perm::identity(3)).unwrap(), a);
        assert_eq!(bruhat_meet(&a, &b).unwrap(), Perm::identity(3));
    }

    #[test]
    fn germ_facts() {
        let g = BraidGerm::new(3);
        assert_eq!(Perm::all(3).len(), 6);
        for x in Perm::all(3) {
            assert_eq!(g.tau(&g.tau(&x)), x);
        }
        let s = Perm::simple(3, 1);
        let nf = monoid_normal_form(&g, &[s.clone(), s.clone()]).unwrap();
        assert_eq!(nf.letters, vec![s.clone(), s]);
    }
}
