//! The relations (S0)-(S3) on words over `S`, as validated, reversible
//! replacement steps.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lex::precedes;
use crate::matrix::UniMatrix;

use super::shape::{in_g_i, in_h_i};
use super::sword::{SLetter, SWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SRule {
    /// `(1) ~ ()`
    S0,
    /// `(x, y) ~ (xy)` for `x, y` in one `H_i` with `x * y` defined
    S1,
    /// `(x, y) ~ (y, x)` for `x` in `G_i`, `y` in `G_j`, `|i - j| > 1`
    S2,
    /// `(x1, y1, x2) ~ (y2, x3, y3)` for `x` in `G_i`, `y` in `G_{i+1}`,
    /// both star products defined and equal
    S3,
}

impl SRule {
    pub fn name(self) -> &'static str {
        match self {
            SRule::S0 => "S0",
            SRule::S1 => "S1",
            SRule::S2 => "S2",
            SRule::S3 => "S3",
        }
    }
}

/// Replace `before` (found at `pos`) by `after`; either side of the relation
/// may be the one removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SStep {
    pub rule: SRule,
    pub pos: usize,
    pub before: Vec<SLetter>,
    pub after: Vec<SLetter>,
}

impl SStep {
    pub fn reversed(&self) -> SStep {
        SStep { rule: self.rule, pos: self.pos, before: self.after.clone(), after: self.before.clone() }
    }
}

fn star_chain(xs: &[&UniMatrix]) -> Option<UniMatrix> {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        let p = acc.mul(x);
        if !precedes(&acc, &p) {
            return None;
        }
        acc = p;
    }
    Some(acc)
}

fn check_s1(n: usize, pair: &[SLetter], single: &SLetter) -> core::result::Result<(), &'static str> {
    let (x, y) = (&pair[0].elem, &pair[1].elem);
    if !(1..n).any(|i| in_h_i(x, i) && in_h_i(y, i)) {
        return Err("letters not in a common H_i");
    }
    let xy = star_chain(&[x, y]).ok_or("x * y undefined")?;
    if xy != single.elem {
        return Err("merged letter is not the product");
    }
    Ok(())
}

fn check_s3(n: usize, l: &[SLetter], r: &[SLetter]) -> core::result::Result<(), &'static str> {
    let ok = (1..n.saturating_sub(1)).any(|i| {
        in_g_i(&l[0].elem, i)
            && in_g_i(&l[2].elem, i)
            && in_g_i(&r[1].elem, i)
            && in_g_i(&l[1].elem, i + 1)
            && in_g_i(&r[0].elem, i + 1)
            && in_g_i(&r[2].elem, i + 1)
    });
    if !ok {
        return Err("letters not alternating in G_i, G_(i+1)");
    }
    let pl = star_chain(&[&l[0].elem, &l[1].elem, &l[2].elem]).ok_or("left star product undefined")?;
    let pr = star_chain(&[&r[0].elem, &r[1].elem, &r[2].elem]).ok_or("right star product undefined")?;
    if pl != pr {
        return Err("products differ");
    }
    Ok(())
}

/// Check that `lhs ~ rhs` is an instance of `rule`, in either orientation.
pub fn check_relation(n: usize, rule: SRule, lhs: &[SLetter], rhs: &[SLetter]) -> Result<()> {
    let fail = |why: &str| Err(Error::InapplicableMove(format!("{}: {why}", rule.name())));
    for l in lhs.iter().chain(rhs) {
        if !in_h_i(&l.elem, l.ty) {
            return fail("letter does not match its type");
        }
    }
    let res = match (rule, lhs.len(), rhs.len()) {
        (SRule::S0, 1, 0) => lhs[0].elem.is_identity().then_some(()).ok_or("letter is not 1"),
        (SRule::S0, 0, 1) => rhs[0].elem.is_identity().then_some(()).ok_or("letter is not 1"),
        (SRule::S1, 2, 1) => check_s1(n, lhs, &rhs[0]),
        (SRule::S1, 1, 2) => check_s1(n, rhs, &lhs[0]),
        (SRule::S2, 2, 2) => {
            if lhs[0].elem != rhs[1].elem || lhs[1].elem != rhs[0].elem {
                Err("not a transposition")
            } else if (1..n).any(|i| (1..n).any(|j| i.abs_diff(j) > 1 && in_g_i(&lhs[0].elem, i) && in_g_i(&lhs[1].elem, j))) {
                Ok(())
            } else {
                Err("letters not in distant G_i, G_j")
            }
        }
        (SRule::S3, 3, 3) => check_s3(n, lhs, rhs).or_else(|_| check_s3(n, rhs, lhs)),
        _ => Err("wrong number of letters"),
    };
    match res {
        Ok(()) => Ok(()),
        Err(why) => fail(why),
    }
}

/// Apply one step: the letters at `pos` must equal `before`.
pub fn s_move(w: &SWord, s: &SStep) -> Result<SWord> {
    let end = s.pos + s.before.len();
    if end > w.len() || w.letters[s.pos..end] != s.before[..] {
        return Err(Error::InapplicableMove(format!("{}: letters at {} do not match", s.rule.name(), s.pos)));
    }
    check_relation(w.n, s.rule, &s.before, &s.after)?;
    let mut letters = w.letters[..s.pos].to_vec();
    letters.extend(s.after.iter().cloned());
    letters.extend(w.letters[end..].iter().cloned());
    Ok(SWord { n: w.n, letters })
}

pub fn replay_s(w: &SWord, steps: &[SStep]) -> Result<SWord> {
    steps.iter().try_fold(w.clone(), |acc, s| s_move(&acc, s))
}

/// A derivation under construction; every step is validated as it is added.
#[derive(Clone, Debug)]
pub struct SDeriv {
    pub word: SWord,
    pub steps: Vec<SStep>,
}

impl SDeriv {
    pub fn new(word: SWord) -> Self {
        SDeriv { word, steps: Vec::new() }
    }

    pub fn push(&mut self, rule: SRule, pos: usize, len: usize, after: Vec<SLetter>) -> Result<()> {
        let before = self.word.letters.get(pos..pos + len).ok_or(Error::InapplicableMove("range".into()))?.to_vec();
        let s = SStep { rule, pos, before, after };
        self.word = s_move(&self.word, &s)?;
        self.steps.push(s);
        Ok(())
    }

    pub fn insert_unit(&mut self, pos: usize, ty: usize) -> Result<()> {
        let one = SLetter::new(UniMatrix::identity(self.word.n), ty)?;
        self.push(SRule::S0, pos, 0, alloc::vec![one])
    }

    pub fn remove_unit(&mut self, pos: usize) -> Result<()> {
        self.push(SRule::S0, pos, 1, Vec::new())
    }

    /// `(x, y) -> (xy)` tagged `ty`.
    pub fn merge(&mut self, pos: usize, ty: usize) -> Result<()> {
        let x = &self.word.letters[pos].elem;
        let y = &self.word.letters.get(pos + 1).ok_or(Error::InapplicableMove("S1: no right neighbour".into()))?.elem;
        let l = SLetter::new(x.mul(y), ty)?;
        self.push(SRule::S1, pos, 2, alloc::vec![l])
    }

    /// `(xy) -> (x, y)` with the given left factor and tags.
    pub fn split(&mut self, pos: usize, left: UniMatrix, tys: (usize, usize)) -> Result<()> {
        let w = &self.word.letters[pos].elem;
        let right = left.inv().mul(w);
        let after = alloc::vec![SLetter::new(left, tys.0)?, SLetter::new(right, tys.1)?];
        self.push(SRule::S1, pos, 1, after)
    }

    pub fn swap(&mut self, pos: usize) -> Result<()> {
        let l = &self.word.letters;
        let after = alloc::vec![l[pos + 1].clone(), l[pos].clone()];
        self.push(SRule::S2, pos, 2, after)
    }

    pub fn braid(&mut self, pos: usize, after: Vec<SLetter>) -> Result<()> {
        self.push(SRule::S3, pos, 3, after)
    }

    /// Append a derivation recorded from the current word.
    pub fn extend(&mut self, steps: &[SStep]) -> Result<()> {
        for s in steps {
            self.word = s_move(&self.word, s)?;
            self.steps.push(s.clone());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::shape::embed_block;
    use crate::Int;

    fn blk(n: usize, i: usize, m: [[i64; 2]; 2]) -> UniMatrix {
        embed_block(n, i, m.map(|r| r.map(Int::from))).unwrap()
    }

    fn letter(g: UniMatrix, ty: usize) -> SLetter {
        SLetter::new(g, ty).unwrap()
    }

    #[test]
    fn unit_insert_and_remove() {
        let w = SWord::new(3, alloc::vec![letter(blk(3, 1, [[0, 1], [1, 0]]), 1)]).unwrap();
        let mut d = SDeriv::new(w.clone());
        d.insert_unit(1, 2).unwrap();
        assert_eq!(d.word.len(), 2);
        d.remove_unit(1).unwrap();
        assert_eq!(d.word, w);
        assert!(d.remove_unit(0).is_err());
    }

    #[test]
    fn merge_of_h_parts() {
        let h1 = UniMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let h2 = UniMatrix::from_i64(&[&[1, 0, 5], &[0, 1, 1], &[0, 0, 1]]).unwrap();
        let w = SWord::new(3, alloc::vec![letter(h1.clone(), 1), letter(h2.clone(), 2)]).unwrap();
        let mut d = SDeriv::new(w.clone());
        d.merge(0, 2).unwrap();
        assert_eq!(d.word.letters[0].elem, h1.mul(&h2));
        assert_eq!(replay_s(&w, &d.steps).unwrap(), d.word);
        let back: Vec<SStep> = d.steps.iter().rev().map(SStep::reversed).collect();
        assert_eq!(replay_s(&d.word, &back).unwrap(), w);
    }

    #[test]
    fn distant_letters_commute() {
        let a = blk(4, 1, [[2, 1], [1, 1]]);
        let b = blk(4, 3, [[0, -1], [1, 0]]);
        let w = SWord::new(4, alloc::vec![letter(a.clone(), 1), letter(b.clone(), 3)]).unwrap();
        let mut d = SDeriv::new(w);
        d.swap(0).unwrap();
        assert_eq!(d.word.elems(), alloc::vec![b, a]);

        let c = blk(4, 2, [[0, 1], [1, 0]]);
        let w = SWord::new(4, alloc::vec![letter(c, 2), letter(blk(4, 3, [[1, 0], [0, -1]]), 3)]).unwrap();
        let err = SDeriv::new(w).swap(0).unwrap_err();
        assert!(format!("{err}").contains("S2"));
    }

    #[test]
    fn rejects_wrong_products() {
        let a = letter(blk(3, 1, [[0, 1], [1, 0]]), 1);
        let b = letter(blk(3, 1, [[1, 1], [0, 1]]), 1);
        let step = SStep { rule: SRule::S1, pos: 0, before: alloc::vec![a.clone(), b.clone()], after: alloc::vec![a.clone()] };
        let w = SWord::new(3, alloc::vec![a, b]).unwrap();
        assert!(s_move(&w, &step).is_err());
    }
}
