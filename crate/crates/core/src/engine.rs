//! Pseudo-Garside machinery over an abstract germ: greedy and strongly greedy
//! normal forms, Delta-forms and the word problem.

use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use crate::error::{Error, Result};

/// A group `G` with subgroup `H` whose cosets form a lattice, together with
/// the partial product `a * b`, defined iff `a` precedes `ab`.
pub trait Germ {
    type Elem: Clone + Debug + Eq + Ord + Hash;

    fn identity(&self) -> Self::Elem;
    fn w0(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// `a` lies in `H`.
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Canonical representative of `aH`.
    fn coset_key(&self, a: &Self::Elem) -> Self::Elem;
    fn precedes(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// A representative of `aH ^ bH`.
    fn meet_coset(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    /// A representative of `aH v bH`.
    fn join_coset(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// `w0 a w0^-1`.
    fn tau(&self, a: &Self::Elem) -> Self::Elem {
        let w0 = self.w0();
        self.mul(&self.mul(&w0, a), &self.inv(&w0))
    }

    /// `w0^-1 a w0`.
    fn tau_inv(&self, a: &Self::Elem) -> Self::Elem {
        let w0 = self.w0();
        self.mul(&self.mul(&self.inv(&w0), a), &w0)
    }

    /// `tau^m`.
    fn tau_pow(&self, a: &Self::Elem, m: i64) -> Self::Elem {
        let mut x = a.clone();
        for _ in 0..m.unsigned_abs() {
            x = if m > 0 { self.tau(&x) } else { self.tau_inv(&x) };
        }
        x
    }

    /// `a * b`, when defined.
    fn star(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let ab = self.mul(a, b);
        self.precedes(a, &ab).then_some(ab)
    }

    fn same_coset(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.coset_key(a) == self.coset_key(b)
    }
}

pub fn word_product<G: Germ>(g: &G, w: &[G::Elem]) -> G::Elem {
    w.iter().fold(g.identity(), |acc, x| g.mul(&acc, x))
}

/// `x1 * ... * xk` is defined.
pub fn is_minimal<G: Germ>(g: &G, w: &[G::Elem]) -> bool {
    let Some(first) = w.first() else { return true };
    let mut acc = first.clone();
    for x in &w[1..] {
        match g.star(&acc, x) {
            Some(p) => acc = p,
            None => return false,
        }
    }
    true
}

fn greedy_factor<G: Germ>(g: &G, a: &G::Elem, b: &G::Elem) -> Result<G::Elem> {
    g.meet_coset(&g.mul(&g.inv(a), &g.w0()), b)
}

/// Move the largest possible prefix of `b` onto `a`.
pub fn pair_greedy_step<G: Germ>(g: &G, a: &G::Elem, b: &G::Elem) -> Result<(G::Elem, G::Elem)> {
    let x = greedy_factor(g, a, b)?;
    if g.is_unit(&x) {
        return Ok((a.clone(), b.clone()));
    }
    let xinv = g.inv(&x);
    let rest = g.mul(&xinv, b);
    let ax = g.star(a, &x).ok_or(Error::GermBreach("a * x undefined"))?;
    if g.star(&x, &rest).is_none() {
        return Err(Error::GermBreach("x * x^-1 b undefined"));
    }
    Ok((ax, rest))
}

pub fn is_pair_greedy<G: Germ>(g: &G, a: &G::Elem, b: &G::Elem) -> Result<bool> {
    Ok(g.is_unit(&greedy_factor(g, a, b)?))
}

/// Every adjacent pair is greedy. Non-minimal words are accepted.
pub fn is_greedy<G: Germ>(g: &G, w: &[G::Elem]) -> Result<bool> {
    for p in w.windows(2) {
        if !is_pair_greedy(g, &p[0], &p[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One left-to-right pass of pair steps; returns whether anything moved.
fn sweep<G: Germ>(g: &G, w: &mut [G::Elem], from: usize) -> Result<bool> {
    let mut changed = false;
    for i in from..w.len().saturating_sub(1) {
        let x = greedy_factor(g, &w[i], &w[i + 1])?;
        if g.is_unit(&x) {
            continue;
        }
        let (a, b) = pair_greedy_step(g, &w[i], &w[i + 1])?;
        w[i] = a;
        w[i + 1] = b;
        changed = true;
    }
    Ok(changed)
}

/// A greedy word reachable from `w` by relation moves.
///
/// Letters are inserted from the right; each insertion is followed by a
/// sweep that lets the displaced remainders travel right.
pub fn greedy_normal_form<G: Germ>(g: &G, w: &[G::Elem]) -> Result<Vec<G::Elem>> {
    let mut out: Vec<G::Elem> = Vec::with_capacity(w.len());
    for x in w.iter().rev() {
        out.insert(0, x.clone());
        sweep(g, &mut out, 0)?;
    }
    let cap = 4 * out.len() + 16;
    for _ in 0..cap {
        if is_greedy(g, &out)? {
            return Ok(out);
        }
        sweep(g, &mut out, 0)?;
    }
    Err(Error::NonTermination)
}

/// Strong-equivalence canonical form: coset keys left to right, the unit
/// residue carried into the last letter.
pub fn canonicalize<G: Germ>(g: &G, w: &[G::Elem]) -> Vec<G::Elem> {
    let mut out = w.to_vec();
    for i in 0..out.len().saturating_sub(1) {
        let k = g.coset_key(&out[i]);
        let h = g.mul(&g.inv(&k), &out[i]);
        out[i] = k;
        out[i + 1] = g.mul(&h, &out[i + 1]);
    }
    out
}

/// Words related by `(x1 h1^-1, h1 x2 h2^-1, ..., h_{n-1} xn)` with `hi` in `H`.
pub fn strongly_equivalent<G: Germ>(g: &G, u: &[G::Elem], v: &[G::Elem]) -> bool {
    u.len() == v.len() && canonicalize(g, u) == canonicalize(g, v)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidNF<E> {
    pub letters: Vec<E>,
}

/// Canonical strongly greedy word for the monoid element of `w`.
pub fn monoid_normal_form<G: Germ>(g: &G, w: &[G::Elem]) -> Result<MonoidNF<G::Elem>> {
    let id = g.identity();
    let w: Vec<G::Elem> = w.iter().filter(|x| **x != id).cloned().collect();
    let mut gw = greedy_normal_form(g, &w)?;
    match gw.iter().rposition(|x| !g.is_unit(x)) {
        None => {
            let p = word_product(g, &gw);
            let letters = if p == id { Vec::new() } else { alloc::vec![p] };
            return Ok(MonoidNF { letters });
        }
        Some(k) => {
            let tail = word_product(g, &gw[k + 1..]);
            gw.truncate(k + 1);
            gw[k] = g.mul(&gw[k], &tail);
        }
    }
    Ok(MonoidNF { letters: canonicalize(g, &gw) })
}

/// `Delta^k x1 ... xl`, with `x1` not in `w0 H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupNF<E> {
    pub k: i64,
    pub body: Vec<E>,
}

/// A letter of a group word: `r(a)` or `r(a)^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signed<E> {
    pub letter: E,
    pub inverse: bool,
}

impl<E> Signed<E> {
    pub fn pos(letter: E) -> Self {
        Signed { letter, inverse: false }
    }
    pub fn neg(letter: E) -> Self {
        Signed { letter, inverse: true }
    }
}

/// Normalize `Delta^k b1 ... bm`.
fn normalize_parts<G: Germ>(g: &G, mut k: i64, body: Vec<G::Elem>) -> Result<GroupNF<G::Elem>> {
    let w0 = g.w0();
    let w0inv = g.inv(&w0);
    let mut body = monoid_normal_form(g, &body)?.letters;
    let cap = body.len() + 2;
    for _ in 0..=cap {
        match body.first() {
            Some(x) if g.same_coset(x, &w0) => {
                // r(w0 h) = Delta r(h)
                body[0] = g.mul(&w0inv, x);
                k += 1;
                body = monoid_normal_form(g, &body)?.letters;
            }
            _ => return Ok(GroupNF { k, body }),
        }
    }
    Err(Error::NonTermination)
}

/// Group normal form of a signed word.
pub fn group_normal_form<G: Germ>(g: &G, w: &[Signed<G::Elem>]) -> Result<GroupNF<G::Elem>> {
    let w0 = g.w0();
    let mut k = 0i64;
    let mut body: Vec<G::Elem> = Vec::with_capacity(w.len());
    for s in w {
        if s.inverse {
            // r(a)^-1 = r(a^-1 w0) Delta^-1, and r(d) Delta^-1 = Delta^-1 r(tau d)
            body.push(g.mul(&g.inv(&s.letter), &w0));
            for x in body.iter_mut() {
                *x = g.tau(x);
            }
            k -= 1;
        } else {
            body.push(s.letter.clone());
        }
    }
    normalize_parts(g, k, body)
}

pub fn group_mul<G: Germ>(g: &G, a: &GroupNF<G::Elem>, b: &GroupNF<G::Elem>) -> Result<GroupNF<G::Elem>> {
    // body_a Delta^kb = Delta^kb tau^-kb(body_a)
    let mut body: Vec<G::Elem> = a.body.iter().map(|x| g.tau_pow(x, -b.k)).collect();
    body.extend(b.body.iter().cloned());
    normalize_parts(g, a.k + b.k, body)
}

pub fn group_inv<G: Germ>(g: &G, a: &GroupNF<G::Elem>) -> Result<GroupNF<G::Elem>> {
    let mut w: Vec<Signed<G::Elem>> = a.body.iter().rev().map(|x| Signed::neg(x.clone())).collect();
    let delta = if a.k > 0 { Signed::neg(g.w0()) } else { Signed::pos(g.w0()) };
    w.extend(core::iter::repeat_n(delta, a.k.unsigned_abs() as usize));
    group_normal_form(g, &w)
}

pub fn group_eq<G: Germ>(_g: &G, a: &GroupNF<G::Elem>, b: &GroupNF<G::Elem>) -> bool {
    a.k == b.k && a.body == b.body
}

/// Image in `G`: `w0^k x1 ... xl`.
pub fn group_nf_product<G: Germ>(g: &G, a: &GroupNF<G::Elem>) -> G::Elem {
    let w0 = g.w0();
    let d = if a.k >= 0 { w0 } else { g.inv(&w0) };
    let mut p = g.identity();
    for _ in 0..a.k.unsigned_abs() {
        p = g.mul(&p, &d);
    }
    g.mul(&p, &word_product(g, &a.body))
}

/// A relation move `(.., a, c*d, ..) -> (.., a*c, d, ..)` at `pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move<E> {
    pub pos: usize,
    pub c: E,
}

pub fn apply_move<G: Germ>(g: &G, w: &[G::Elem], mv: &Move<G::Elem>) -> Result<Vec<G::Elem>> {
    if mv.pos + 1 >= w.len() {
        return Err(Error::NotAMove("position out of range"));
    }
    let (a, b) = (&w[mv.pos], &w[mv.pos + 1]);
    let d = g.mul(&g.inv(&mv.c), b);
    if g.star(&mv.c, &d).is_none() {
        return Err(Error::NotAMove("c * d undefined"));
    }
    let ac = g.star(a, &mv.c).ok_or(Error::NotAMove("a * c undefined"))?;
    let mut out = w.to_vec();
    out[mv.pos] = ac;
    out[mv.pos + 1] = d;
    Ok(out)
}

/// A common target of two single moves out of `u`, built from the same
/// position, commuting and adjacent cases.
pub fn diamond_check<G: Germ>(g: &G, u: &[G::Elem], m1: &Move<G::Elem>, m2: &Move<G::Elem>) -> Result<Vec<G::Elem>> {
    let v = apply_move(g, u, m1)?;
    let w = apply_move(g, u, m2)?;
    let (i, j) = (m1.pos, m2.pos);
    let (from_v, from_w) = if i == j {
        let r = g.join_coset(&m1.c, &m2.c)?;
        (Move { pos: i, c: g.mul(&g.inv(&m1.c), &r) }, Move { pos: i, c: g.mul(&g.inv(&m2.c), &r) })
    } else if i + 1 == j || j + 1 == i {
        // (a, c1 d1, c2 d2) -> (a c1, d1 c2, d2) either way
        let (lo, hi) = if i < j { (m1, m2) } else { (m2, m1) };
        let via_lo = Move { pos: hi.pos, c: hi.c.clone() };
        let via_hi = Move { pos: lo.pos, c: lo.c.clone() };
        if i < j {
            (via_lo, via_hi)
        } else {
            (via_hi, via_lo)
        }
    } else {
        (m2.clone(), m1.clone())
    };
    let x1 = apply_move(g, &v, &from_v)?;
    let x2 = apply_move(g, &w, &from_w)?;
    if x1 != x2 {
        return Err(Error::GermBreach("diamond paths disagree"));
    }
    Ok(x1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ZnGerm;
    use crate::UniMatrix;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> UniMatrix {
        UniMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn products_and_minimality() {
        let g = ZnGerm::new(2);
        let a = UniMatrix::diag_signs(&[-1, 1]);
        let b = UniMatrix::diag_signs(&[1, -1]);
        assert_eq!(word_product(&g, &[]), g.identity());
        assert_eq!(word_product(&g, &[a.clone(), b.clone()]), g.w0());
        assert!(!is_minimal(&g, &[b.clone(), b.clone()]));
        let x = m(&[&[2, 1], &[1, 1]]);
        assert!(is_minimal(&g, &[x.clone(), x.inv().mul(&g.w0())]));
    }

    #[test]
    fn greedy_examples() {
        let g = ZnGerm::new(2);
        let a = UniMatrix::diag_signs(&[-1, 1]);
        let x = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(pair_greedy_step(&g, &g.identity(), &x).unwrap().1, g.identity());
        assert_eq!(pair_greedy_step(&g, &x, &g.identity()).unwrap(), (x.clone(), g.identity()));
        assert_eq!(pair_greedy_step(&g, &a, &a).unwrap(), (a.clone(), a.clone()));
        assert!(is_greedy(&g, &[a.clone(), a.clone()]).unwrap());
        assert!(!is_greedy(&g, &[g.identity(), x.clone()]).unwrap());
        let gw = greedy_normal_form(&g, &[g.identity(), x.clone(), g.identity()]).unwrap();
        assert!(!g.is_unit(&gw[0]) && g.is_unit(&gw[1]) && g.is_unit(&gw[2]));
    }

    #[test]
    fn monoid_examples() {
        let g = ZnGerm::new(2);
        let h = m(&[&[1, 3], &[0, 1]]);
        assert_eq!(monoid_normal_form(&g, &[h.clone()]).unwrap().letters, vec![h]);
        assert!(monoid_normal_form(&g, &[g.identity()]).unwrap().letters.is_empty());
        let nf = monoid_normal_form(&g, &[g.identity(), g.w0()]).unwrap();
        assert_eq!(nf.letters, vec![g.w0()]);
    }

    #[test]
    fn group_examples() {
        let g = ZnGerm::new(2);
        let w0 = g.w0();
        let nf = group_normal_form(&g, &[Signed::pos(w0.clone()), Signed::pos(w0.clone())]).unwrap();
        assert_eq!((nf.k, nf.body.len()), (2, 0));
        let nf = group_normal_form(&g, &[Signed::neg(w0.clone())]).unwrap();
        assert_eq!((nf.k, nf.body.len()), (-1, 0));
        let x = m(&[&[2, 1], &[1, 1]]);
        let nf = group_normal_form(&g, &[Signed::pos(x.clone()), Signed::neg(x.clone())]).unwrap();
        assert_eq!((nf.k, nf.body.len()), (0, 0));
        let a = group_normal_form(&g, &[Signed::pos(x.clone()), Signed::pos(m(&[&[0, 1], &[1, 0]]))]).unwrap();
        let ai = group_inv(&g, &a).unwrap();
        let one = group_mul(&g, &a, &ai).unwrap();
        assert_eq!((one.k, one.body.len()), (0, 0));
        assert_eq!(group_nf_product(&g, &a), x.mul(&m(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn diamond_cases() {
        let g = ZnGerm::new(2);
        let a = UniMatrix::diag_signs(&[-1, 1]);
        let b = UniMatrix::diag_signs(&[1, -1]);
        let u = vec![g.identity(), g.w0(), g.identity(), g.w0()];
        let same = diamond_check(&g, &u, &Move { pos: 0, c: a.clone() }, &Move { pos: 0, c: b.clone() }).unwrap();
        assert_eq!(same, vec![g.w0(), g.identity(), g.identity(), g.w0()]);
        let far = diamond_check(&g, &u, &Move { pos: 0, c: a.clone() }, &Move { pos: 2, c: b.clone() }).unwrap();
        assert_eq!(far[0], a);
        let near = diamond_check(&g, &u, &Move { pos: 0, c: a.clone() }, &Move { pos: 1, c: g.identity() });
        assert!(near.is_ok());
        assert!(apply_move(&g, &u, &Move { pos: 3, c: a }).is_err());
    }
}
